#pragma once

// Jordanian twist families on the Borel algebra [P, D] = P.
//
//   F_0 = exp(-ln(1 - P/k) (x) D)         F_1 = exp(-D (x) ln(1 + P/k))
//
// and the two one-parameter families obtained from F_0 by the 1-cochains
// exp(-(u/k) DP) (family L) and exp(-(u/k) PD) (family R). Every element is
// a TensorElement in which each power of P carries one power of 1/kappa.

#include <jtwist/tensor.hpp>

#include <optional>
#include <string>

namespace jtwist
{

enum class Family
{
    zero,
    one,
    L,
    R,
};

enum class Direction
{
    twist,
    inverse,
};

enum class Form
{
    /// Three-exponential product through a 1-cochain.
    product,
    /// Explicit double sum (L twist, R inverse, F_0 and F_1 both ways).
    closed,
    /// Series inverse of the closed form of the opposite direction.
    inverted_closed,
};

struct TwistSpec
{
    Family family = Family::L;
    Direction direction = Direction::twist;
    Form form = Form::closed;
    int order = 0;
    /// nullopt: u stays symbolic. Otherwise u is fixed to this value while
    /// the element is built, not substituted afterwards.
    std::optional<Rational> u;
};

std::string to_string(Family f);
std::string to_string(Direction d);
std::string to_string(Form f);
std::string describe(const TwistSpec &spec);

/// The interpolation parameter as a coefficient: u itself or a constant.
UPoly u_parameter(const std::optional<Rational> &u);

/// Throws std::invalid_argument for unsupported (family, form) combinations.
TensorElement build_twist(const TwistSpec &spec);

// Individual constructors, exposed for the checks and tests.
TensorElement jordanian_zero_closed(int order, Direction direction);
TensorElement jordanian_one_closed(int order, Direction direction);
/// F_0^{+-1} assembled as exp(-+ log(1 - P) (x) D).
TensorElement jordanian_zero_exponential(int order, Direction direction);
/// F_1^{+-1} assembled as exp(-+ D (x) log(1 + P)).
TensorElement jordanian_one_exponential(int order, Direction direction);

/// F_{L,u} = sum_{k,l} k^{-k-l} binom(-D, l) (u-1)^k P^k (x) binom(-D, k) (uP)^l.
TensorElement family_l_closed(int order, const UPoly &u);
/// F_{R,u}^{-1} = sum_{k,l} (u-1)^k P^k binom(D, l) (x) (uP)^l binom(D, k).
TensorElement family_r_inverse_closed(int order, const UPoly &u);

/// exp(G (x) 1 + 1 (x) G) F_0 exp(-Delta G) for a single-leg generator G of
/// grade 1, or its inverse exp(Delta G) F_0^{-1} exp(-(G (x) 1 + 1 (x) G)).
TensorElement cochain_twist(const TensorElement &generator, Direction direction);

/// Cochain generators: u DP (family L), u PD (family R), DP + vP (at u = 1).
TensorElement generator_l(int order, const UPoly &u);
TensorElement generator_r(int order, const UPoly &u);
TensorElement generator_v(int order, const Rational &v);

enum class Momentum
{
    P,
    Q,
};

enum class Target
{
    delta_l_p,
    delta_l_d,
    antipode_l_p,
    antipode_l_d,
    delta_r_p,
    delta_r_d,
    /// Delta^{F_R}(D) with "(x) D" restored in the second summand.
    delta_r_d_amended,
    antipode_r_p,
    antipode_r_d,
    lr_factor,
};

std::string to_string(Target t);

/// Closed-form deformed Hopf data expanded as a truncated series: numerators
/// multiplied by geometric inverses of their denominators, in printed order.
/// `momentum` picks the p_mu the *_p targets are written for.
TensorElement build_target(Target id, int order, const UPoly &u, Momentum momentum = Momentum::Q);

} // namespace jtwist
