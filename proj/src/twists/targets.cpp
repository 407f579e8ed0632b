#include <jtwist/twists.hpp>

#include <stdexcept>

namespace jtwist
{

std::string to_string(Target t)
{
    switch (t) {
        case Target::delta_l_p:
            return "DeltaL_p";
        case Target::delta_l_d:
            return "DeltaL_D";
        case Target::antipode_l_p:
            return "SL_p";
        case Target::antipode_l_d:
            return "SL_D";
        case Target::delta_r_p:
            return "DeltaR_p";
        case Target::delta_r_d:
            return "DeltaR_D";
        case Target::delta_r_d_amended:
            return "DeltaR_D_amended";
        case Target::antipode_r_p:
            return "SR_p";
        case Target::antipode_r_d:
            return "SR_D";
        case Target::lr_factor:
            return "LRfactor";
    }
    return "?";
}

TensorElement build_target(Target id, int order, const UPoly &u, Momentum momentum)
{
    using T = TensorElement;
    const T one = T::one(1, order);
    const T one2 = T::one(2, order);
    const T P = T::P(order);
    const T D = T::D(order);
    const T p = momentum == Momentum::P ? P : T::Q(order);
    const UPoly one_minus_u = UPoly(1) - u;

    // 1 (x) 1 + u(1-u) P (x) P
    const T pp_factor = one2 + tensor(P, P) * (u * one_minus_u);
    const T one_plus_u_p = one + P * u;
    const T one_minus_1mu_p = one - P * one_minus_u;
    const T one_minus_1m2u_p = one - P * (UPoly(1) - u * UPoly(2));

    switch (id) {
        case Target::delta_l_p:
        case Target::delta_r_p:
            return (tensor(p, one_plus_u_p) + tensor(one_minus_1mu_p, p)) * inverse(pp_factor);
        case Target::delta_l_d:
            return (tensor(D, inverse(one_plus_u_p)) + tensor(inverse(one_minus_1mu_p), D)) * pp_factor;
        case Target::antipode_l_p:
            return p * inverse(one_minus_1m2u_p);
        case Target::antipode_l_d:
            return -(one_minus_1m2u_p * inverse(one_plus_u_p)) * D * one_plus_u_p;
        case Target::delta_r_d:
            return pp_factor * (tensor(D, inverse(one_plus_u_p)) + tensor(inverse(one_minus_1mu_p), one));
        case Target::delta_r_d_amended:
            return pp_factor * (tensor(D, inverse(one_plus_u_p)) + tensor(inverse(one_minus_1mu_p), D));
        case Target::antipode_r_p:
            return -(p * inverse(one_minus_1m2u_p));
        case Target::antipode_r_d:
            return -one_minus_1mu_p * D * (one_minus_1m2u_p * inverse(one_minus_1mu_p));
        case Target::lr_factor:
            return inverse(pp_factor);
    }
    throw std::invalid_argument("build_target: unknown target id");
}

} // namespace jtwist
