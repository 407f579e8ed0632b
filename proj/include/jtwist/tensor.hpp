#pragma once

#include <jtwist/dpoly.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jtwist
{

/// Momentum part of one tensor leg: P^p Q^q. P = v^a p_a carries one power of
/// 1/kappa; Q is a transverse momentum probe with grade zero.
struct LegMonomial
{
    std::uint16_t p = 0;
    std::uint16_t q = 0;

    friend auto operator<=>(const LegMonomial &, const LegMonomial &) = default;
};

using MomentumKey = std::array<LegMonomial, max_legs>;

int grade_of(const MomentumKey &key) noexcept;

/// Where the first difference between two elements sits.
struct TermDifference
{
    int grade = 0;
    MomentumKey momentum{};
    Exponents exponents{};
    UPoly lhs;
    UPoly rhs;

    std::string describe(int legs) const;
};

struct Comparison
{
    bool equal = true;
    std::optional<TermDifference> first_difference;
    /// Grades at which some coefficient differs, ascending.
    std::vector<int> failing_grades;

    explicit operator bool() const noexcept { return equal; }
};

// Truncated element of U(b)^{(x)L} for the Borel algebra [P,D] = P extended
// by [Q,D] = Q, [P,Q] = 0. Each term is stored in normal order
//
//     (P^{p_1} Q^{q_1} (x) ... (x) P^{p_L} Q^{q_L}) * d(x_1, ..., x_L)
//
// with all momenta on the left and the dilatation polynomial on the right.
// Terms whose total P-degree exceeds the truncation order are dropped
// eagerly, so every identity holds modulo kappa^{-(N+1)}.
class TensorElement
{
public:
    using map_type = std::map<MomentumKey, DPoly>;

    TensorElement(int legs, int truncation);

    /// 1 (x) ... (x) 1.
    static TensorElement one(int legs, int truncation);
    static TensorElement constant(int legs, int truncation, const UPoly &c);
    /// Single-leg generators.
    static TensorElement P(int truncation);
    static TensorElement Q(int truncation);
    static TensorElement D(int truncation);
    /// A single normal-ordered term; dropped when above truncation.
    static TensorElement term(int truncation, const MomentumKey &key, const DPoly &coeff);

    int legs() const noexcept { return legs_; }
    int truncation() const noexcept { return truncation_; }
    const map_type &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Lowest grade of a stored term; nullopt for zero.
    std::optional<int> min_grade() const;

    void add_term(const MomentumKey &key, const DPoly &coeff);

    TensorElement &operator+=(const TensorElement &other);
    TensorElement &operator-=(const TensorElement &other);
    TensorElement &operator*=(const UPoly &c);

    friend TensorElement operator+(TensorElement a, const TensorElement &b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement &b) { return a -= b; }
    friend TensorElement operator*(TensorElement a, const UPoly &c) { return a *= c; }
    friend TensorElement operator*(const UPoly &c, TensorElement a) { return a *= c; }
    TensorElement operator-() const;

    /// Leg-wise product reordered via q(D) P^m Q^n = P^m Q^n q(D - m - n).
    friend TensorElement operator*(const TensorElement &a, const TensorElement &b);

    friend bool operator==(const TensorElement &a, const TensorElement &b)
    {
        return a.legs_ == b.legs_ && a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
    }

    /// Sub-element of exact grade n (the coefficient of kappa^{-n}).
    TensorElement grade_slice(int n) const;
    /// Same element with a lower truncation order.
    TensorElement truncated(int n) const;
    TensorElement specialize_u(const Rational &u) const;

    std::string to_string() const;

private:
    int legs_;
    int truncation_;
    map_type terms_;
};

/// Tensor product a (x) b (legs concatenate). Truncations must match.
TensorElement tensor(const TensorElement &a, const TensorElement &b);

/// sum_k c_k a^k, truncated. a must have no term of grade 0.
TensorElement series_apply(const std::vector<UPoly> &coeffs, const TensorElement &a);
/// Coefficient sequences for series_apply, c_0 .. c_n.
std::vector<UPoly> exp_coefficients(int n);
std::vector<UPoly> log1p_coefficients(int n);
std::vector<UPoly> geometric_coefficients(int n);

TensorElement exp(const TensorElement &a);
/// log(1 + a).
TensorElement log1p(const TensorElement &a);
/// Two-sided inverse of an element whose grade-0 part is exactly 1.
TensorElement inverse(const TensorElement &e);

/// Undeformed coproduct applied to leg `slot` (0-based); adds one leg.
TensorElement coproduct(const TensorElement &e, int slot);
/// Undeformed counit applied to leg `slot`; removes one leg.
TensorElement counit_contract(const TensorElement &e, int slot);
/// Counit of a single-leg element: its constant coefficient.
UPoly counit(const TensorElement &e);
/// Undeformed antipode on a single-leg element (anti-automorphism).
TensorElement antipode(const TensorElement &e);

enum class FoldSide
{
    left,  ///< sum S(f1) f2
    right, ///< sum f1 S(f2)
};

/// Applies S to one leg of a 2-leg element then multiplies the legs in order.
TensorElement fold_mul_antipode(const TensorElement &e, FoldSide side);

/// F * Delta(x) * f_inv. Throws std::domain_error when F * f_inv != 1.
TensorElement conjugate(const TensorElement &f, const TensorElement &x, const TensorElement &f_inv);

/// Exact canonical comparison, reporting the lowest-grade differing term.
Comparison compare(const TensorElement &a, const TensorElement &b);

} // namespace jtwist
