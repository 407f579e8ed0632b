#pragma once

#include <jtwist/upoly.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>

namespace jtwist
{

inline constexpr int max_legs = 3;

/// Exponents of the dilatation variables x, y, z (one per tensor leg).
/// Entries past the leg count are always zero.
using Exponents = std::array<std::uint16_t, max_legs>;

// Commutative polynomial in up to three dilatation variables with UPoly
// coefficients. Variable i stands for D acting in tensor leg i; the names
// x, y, z follow leg order. Slots are 0-based throughout the C++ API.
class DPoly
{
public:
    using map_type = std::map<Exponents, UPoly>;

    explicit DPoly(int legs = 1);

    static DPoly constant(int legs, const UPoly &c);
    /// The variable of leg `slot`.
    static DPoly variable(int legs, int slot);

    int legs() const noexcept { return legs_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const map_type &terms() const noexcept { return terms_; }
    /// Total degree in the dilatation variables; -1 for zero.
    int degree() const noexcept;
    /// The coefficient of the constant monomial.
    UPoly constant_term() const;

    DPoly &operator+=(const DPoly &other);
    DPoly &operator-=(const DPoly &other);
    DPoly &operator*=(const UPoly &c);

    friend DPoly operator+(DPoly a, const DPoly &b) { return a += b; }
    friend DPoly operator-(DPoly a, const DPoly &b) { return a -= b; }
    friend DPoly operator*(const DPoly &a, const DPoly &b);
    friend DPoly operator*(DPoly a, const UPoly &c) { return a *= c; }
    friend DPoly operator*(const UPoly &c, DPoly a) { return a *= c; }
    DPoly operator-() const;

    friend bool operator==(const DPoly &a, const DPoly &b)
    {
        return a.legs_ == b.legs_ && a.terms_ == b.terms_;
    }

    /// Adds c * monomial(e) in place.
    void add_term(const Exponents &e, const UPoly &c);

    /// Substitutes x_i -> sign_i * x_i + offset_i for every leg, sign_i = +-1.
    DPoly substitute_affine(const std::array<int, max_legs> &sign,
                            const std::array<long, max_legs> &offset) const;
    /// Substitutes x_i -> x_i + offset_i.
    DPoly shift(const std::array<long, max_legs> &offset) const;

    /// Replaces the variable of `slot` by the sum of two adjacent fresh
    /// variables (the coproduct on the dilatation part). Result has one more
    /// leg. Throws std::invalid_argument if legs() == 3 or slot is out of range.
    DPoly split_variable(int slot) const;

    /// Sets the variable of `slot` to zero and removes it. Requires legs() >= 2.
    DPoly drop_variable(int slot) const;

    /// Appends the variables of `other` after our own (tensor product of
    /// D-parts). legs() + other.legs() must not exceed 3.
    DPoly concatenate(const DPoly &other) const;

    /// Replaces every UPoly coefficient by its value at u.
    DPoly specialize_u(const Rational &u) const;

    /// Exact value at the given point; vars.size() must equal legs().
    Rational evaluate(std::span<const Rational> vars, const Rational &u) const;

    /// Rendering with variables x, y, z, e.g. "(1-u)*y - u*x".
    std::string to_string() const;

private:
    int legs_;
    map_type terms_;
};

/// The binomial symbol T(T-1)...(T-k+1)/k! with polynomial argument T.
DPoly binom_poly(const DPoly &t, unsigned k);

/// Convenience: the affine polynomial sum_i coeff_i * x_i + constant.
DPoly affine(int legs, const std::array<long, max_legs> &coeff, long constant);

} // namespace jtwist
