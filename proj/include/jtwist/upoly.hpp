#pragma once

#include <jtwist/rational.hpp>

#include <climits>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace jtwist
{

// Polynomial in the interpolation parameter u with exact rational
// coefficients. Stored sparse, sorted by degree, with no zero entries.
class UPoly
{
public:
    using term_type = std::pair<std::uint32_t, Rational>;

    static constexpr int zero_degree = INT_MIN;

    UPoly() = default;
    UPoly(const Rational &c);
    UPoly(long c) : UPoly(Rational(c)) {}

    /// The polynomial u.
    static UPoly u();
    static UPoly monomial(std::uint32_t degree, const Rational &c);

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// zero_degree for the zero polynomial.
    int degree() const noexcept;
    Rational coefficient(std::uint32_t degree) const;
    const std::vector<term_type> &terms() const noexcept { return terms_; }

    Rational evaluate(const Rational &u) const;

    UPoly &operator+=(const UPoly &other);
    UPoly &operator-=(const UPoly &other);
    UPoly &operator*=(const UPoly &other);
    UPoly &operator*=(const Rational &c);

    friend UPoly operator+(UPoly a, const UPoly &b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly &b) { return a -= b; }
    friend UPoly operator*(const UPoly &a, const UPoly &b);
    friend UPoly operator*(UPoly a, const Rational &c) { return a *= c; }
    UPoly operator-() const;

    friend bool operator==(const UPoly &a, const UPoly &b) { return a.terms_ == b.terms_; }

    UPoly pow(unsigned n) const;

    /// Ascending-degree rendering, e.g. "1-u", "-1/2u^2+u".
    std::string to_string() const;

private:
    void add_scaled(const UPoly &other, int sign);

    std::vector<term_type> terms_;
};

} // namespace jtwist
