#include <jtwist/twists.hpp>

#include <stdexcept>

namespace jtwist
{

std::string to_string(Family f)
{
    switch (f) {
        case Family::zero:
            return "0";
        case Family::one:
            return "1";
        case Family::L:
            return "L";
        case Family::R:
            return "R";
    }
    return "?";
}

std::string to_string(Direction d)
{
    return d == Direction::twist ? "twist" : "inverse";
}

std::string to_string(Form f)
{
    switch (f) {
        case Form::product:
            return "product";
        case Form::closed:
            return "closed";
        case Form::inverted_closed:
            return "inverted-closed";
    }
    return "?";
}

std::string describe(const TwistSpec &spec)
{
    return "F_" + to_string(spec.family) + (spec.direction == Direction::inverse ? "^-1" : "") + " ["
           + to_string(spec.form) + ", N=" + std::to_string(spec.order)
           + ", u=" + (spec.u ? to_short_string(*spec.u) : std::string("symbolic")) + "]";
}

UPoly u_parameter(const std::optional<Rational> &u)
{
    return u ? UPoly(*u) : UPoly::u();
}

namespace
{

MomentumKey p_powers(unsigned first, unsigned second)
{
    return MomentumKey{LegMonomial{static_cast<std::uint16_t>(first), 0},
                       LegMonomial{static_cast<std::uint16_t>(second), 0}};
}

Rational sign_power(unsigned k)
{
    return k % 2 == 0 ? 1 : -1;
}

} // namespace

TensorElement jordanian_zero_closed(int order, Direction direction)
{
    // sum_k (-P)^k (x) binom(-+D, k)
    TensorElement r(2, order);
    const long s = direction == Direction::twist ? -1 : 1;
    for (int k = 0; k <= order; ++k) {
        const auto uk = static_cast<unsigned>(k);
        r.add_term(p_powers(uk, 0), binom_poly(affine(2, {0, s, 0}, 0), uk) * UPoly(sign_power(uk)));
    }
    return r;
}

TensorElement jordanian_one_closed(int order, Direction direction)
{
    // sum_l binom(-+D, l) (x) P^l
    TensorElement r(2, order);
    const long s = direction == Direction::twist ? -1 : 1;
    for (int l = 0; l <= order; ++l) {
        const auto ul = static_cast<unsigned>(l);
        r.add_term(p_powers(0, ul), binom_poly(affine(2, {s, 0, 0}, 0), ul));
    }
    return r;
}

TensorElement jordanian_zero_exponential(int order, Direction direction)
{
    const TensorElement log_one_minus_p = log1p(-TensorElement::P(order));
    const TensorElement exponent = tensor(log_one_minus_p, TensorElement::D(order));
    return exp(direction == Direction::twist ? -exponent : exponent);
}

TensorElement jordanian_one_exponential(int order, Direction direction)
{
    const TensorElement exponent = tensor(TensorElement::D(order), log1p(TensorElement::P(order)));
    return exp(direction == Direction::twist ? -exponent : exponent);
}

TensorElement family_l_closed(int order, const UPoly &u)
{
    TensorElement r(2, order);
    const UPoly u_minus_one = u - UPoly(1);
    for (int k = 0; k <= order; ++k) {
        for (int l = 0; k + l <= order; ++l) {
            const auto uk = static_cast<unsigned>(k);
            const auto ul = static_cast<unsigned>(l);
            // binom(-D, l) P^k = P^k binom(-D + k, l); binom(-D, k) P^l = P^l binom(-D + l, k)
            const DPoly d = binom_poly(affine(2, {-1, 0, 0}, k), ul) * binom_poly(affine(2, {0, -1, 0}, l), uk);
            r.add_term(p_powers(uk, ul), d * (u_minus_one.pow(uk) * u.pow(ul)));
        }
    }
    return r;
}

TensorElement family_r_inverse_closed(int order, const UPoly &u)
{
    TensorElement r(2, order);
    const UPoly u_minus_one = u - UPoly(1);
    for (int k = 0; k <= order; ++k) {
        for (int l = 0; k + l <= order; ++l) {
            const auto uk = static_cast<unsigned>(k);
            const auto ul = static_cast<unsigned>(l);
            const DPoly d = binom_poly(DPoly::variable(2, 0), ul) * binom_poly(DPoly::variable(2, 1), uk);
            r.add_term(p_powers(uk, ul), d * (u_minus_one.pow(uk) * u.pow(ul)));
        }
    }
    return r;
}

TensorElement cochain_twist(const TensorElement &generator, Direction direction)
{
    if (generator.legs() != 1) {
        throw std::invalid_argument("cochain_twist: generator must be a single-leg element");
    }
    const int n = generator.truncation();
    const TensorElement one = TensorElement::one(1, n);
    const TensorElement both_legs = tensor(generator, one) + tensor(one, generator);
    const TensorElement split = coproduct(generator, 0);
    if (direction == Direction::twist) {
        return exp(both_legs) * jordanian_zero_exponential(n, Direction::twist) * exp(-split);
    }
    return exp(split) * jordanian_zero_exponential(n, Direction::inverse) * exp(-both_legs);
}

TensorElement generator_l(int order, const UPoly &u)
{
    return (TensorElement::D(order) * TensorElement::P(order)) * u;
}

TensorElement generator_r(int order, const UPoly &u)
{
    return (TensorElement::P(order) * TensorElement::D(order)) * u;
}

TensorElement generator_v(int order, const Rational &v)
{
    return TensorElement::D(order) * TensorElement::P(order) + TensorElement::P(order) * UPoly(v);
}

TensorElement build_twist(const TwistSpec &spec)
{
    if (spec.order < 0) {
        throw std::invalid_argument("build_twist: order must be >= 0");
    }
    const int n = spec.order;
    const UPoly u = u_parameter(spec.u);
    const bool twist = spec.direction == Direction::twist;
    auto unsupported = [&]() -> TensorElement {
        throw std::invalid_argument("unsupported twist construction: " + describe(spec));
    };

    switch (spec.family) {
        case Family::zero:
            return spec.form == Form::closed ? jordanian_zero_closed(n, spec.direction) : unsupported();
        case Family::one:
            return spec.form == Form::closed ? jordanian_one_closed(n, spec.direction) : unsupported();
        case Family::L:
            switch (spec.form) {
                case Form::product:
                    return cochain_twist(generator_l(n, u), spec.direction);
                case Form::closed:
                    return twist ? family_l_closed(n, u) : unsupported();
                case Form::inverted_closed:
                    return twist ? unsupported() : inverse(family_l_closed(n, u));
            }
            break;
        case Family::R:
            switch (spec.form) {
                case Form::product:
                    return cochain_twist(generator_r(n, u), spec.direction);
                case Form::closed:
                    return twist ? unsupported() : family_r_inverse_closed(n, u);
                case Form::inverted_closed:
                    return twist ? inverse(family_r_inverse_closed(n, u)) : unsupported();
            }
            break;
    }
    return unsupported();
}

} // namespace jtwist
