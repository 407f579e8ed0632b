#pragma once

// Binomial identities behind the closed-form expansions and the cocycle proof.
// Every identity is checked as an exact polynomial equality in the
// dilatation variables x, y (and z), not merely at sample points.

#include <jtwist/dpoly.hpp>
#include <jtwist/report.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace jtwist
{

struct IdentityInstance
{
    std::string chain;
    std::vector<std::pair<std::string, int>> parameters;
    DPoly lhs{3};
    DPoly rhs{3};
    bool equal = false;
    /// Point-evaluation agreement with the symbolic verdict (bigident only).
    bool samples_agree = true;
    std::string describe() const;
};

/// The identity reducing the cocycle condition, for fixed k, l, A, C:
///
///   binom(x, l-C) sum_{k1<=A} binom(y,k1) binom(x+y-k1+C-l, C) binom(k-k1, k-A) binom(z, k-k1)
/// = binom(z, k-A) sum_{l1<=C} binom(x,l-l1) binom(y,l1) binom(y+z-l1+A-k, A) binom(l-l1, l-C)
///
/// Also cross-checked at `samples` random integer points (seeded).
/// Throws std::invalid_argument unless 0 <= A <= k and 0 <= C <= l.
IdentityInstance verify_bigident(int k, int l, int a, int c, int samples = 20, std::uint64_t seed = 1);

/// Left side of the big identity after the index change k1 -> k - k1.
DPoly bigident_lhs_reindexed(int k, int l, int a, int c);
DPoly bigident_lhs(int k, int l, int a, int c);
DPoly bigident_rhs(int k, int l, int a, int c);

/// Exhaustive bigident run for k, l <= bound.
VerificationReport verify_bigident_suite(int bound);

enum class Chain
{
    L,
    R,
};

/// One named identity of a chain, evaluated for concrete indices: every
/// expression in `forms` must be the same polynomial.
struct ChainStep
{
    std::string name;
    std::vector<std::string> index_names;
    /// Enumerates admissible index tuples with all entries <= bound.
    std::vector<std::vector<int>> (*domain)(int bound);
    std::vector<DPoly> (*forms)(const std::vector<int> &indices);
};

const std::vector<ChainStep> &chain_steps(Chain chain);

VerificationReport verify_identity_chain(Chain chain, int bound);

/// Determinant of the change of basis from u^n, ..., 1 to (u-1)^k u^{n-k}.
Rational independence_det(int n);

} // namespace jtwist
