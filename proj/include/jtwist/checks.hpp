#pragma once

// Verification suite for the twist families. Every check returns a report
// instead of throwing on mathematical failure; exceptions are reserved for
// malformed requests.

#include <jtwist/report.hpp>
#include <jtwist/twists.hpp>

#include <optional>

namespace jtwist
{

enum class Generator
{
    P,
    Q,
    D,
};

std::string to_string(Generator g);

/// 2-cocycle condition (F (x) 1)(Delta (x) id)F = (1 (x) F)(id (x) Delta)F,
/// plus the grade-by-grade decomposition into products of slices f_{n-i}, f_i.
/// For an inverse spec the equivalent condition on F^{-1} is checked.
VerificationReport check_cocycle(const TwistSpec &spec);
VerificationReport check_cocycle_element(const TensorElement &f, Direction direction, const std::string &label);

/// (eps (x) id)F = 1 = (id (x) eps)F.
VerificationReport check_normalization(const TwistSpec &spec);
VerificationReport check_normalization_element(const TensorElement &f, const std::string &label);

VerificationReport check_inverse_pair(Family family, int order, const std::optional<Rational> &u = {});
VerificationReport check_endpoints(Family family, int order);
VerificationReport check_form_equality(Family family, int order, const std::optional<Rational> &u = {});
VerificationReport check_hopf_data(Family family, Generator generator, int order,
                                   const std::optional<Rational> &u = {});
VerificationReport check_lr_relation(int order, const std::optional<Rational> &u = {});
VerificationReport check_v_family(const Rational &v, int order);

/// (Delta^F (x) id) Delta^F g = (id (x) Delta^F) Delta^F g.
VerificationReport check_twisted_coassociativity(Family family, Generator generator, int order,
                                                 const std::optional<Rational> &u = {});
/// (eps (x) id) Delta^F g = g = (id (x) eps) Delta^F g.
VerificationReport check_deformed_counit(Family family, Generator generator, int order,
                                         const std::optional<Rational> &u = {});

/// F and F^{-1} of a family in closed form (the closed side is built
/// directly, the other by series inversion).
std::pair<TensorElement, TensorElement> closed_twist_pair(Family family, int order, const UPoly &u);

/// The twisted antipode element chi = sum f1 S(f2).
TensorElement twisted_antipode_element(const TensorElement &f);

} // namespace jtwist
