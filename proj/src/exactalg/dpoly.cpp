#include <jtwist/dpoly.hpp>

#include <sstream>
#include <stdexcept>
#include <vector>

namespace jtwist
{

namespace
{

void check_legs(int legs)
{
    if (legs < 1 || legs > max_legs) {
        throw std::invalid_argument("DPoly leg count must be in [1, 3], got " + std::to_string(legs));
    }
}

void check_same_legs(const DPoly &a, const DPoly &b)
{
    if (a.legs() != b.legs()) {
        throw std::invalid_argument("DPoly leg-count mismatch: " + std::to_string(a.legs()) + " vs "
                                    + std::to_string(b.legs()));
    }
}

// Coefficients of (sign*x + offset)^e in ascending powers of x.
std::vector<Integer> affine_power(int sign, long offset, unsigned e)
{
    std::vector<Integer> out(e + 1);
    Integer off_pow = 1;
    for (unsigned j = e + 1; j-- > 0;) {
        // term x^j carries binom(e, j) * sign^j * offset^(e-j)
        Integer c = binomial(e, j) * off_pow;
        if (sign < 0 && (j % 2 == 1)) {
            c = -c;
        }
        out[j] = c;
        off_pow *= offset;
    }
    return out;
}

} // namespace

DPoly::DPoly(int legs) : legs_(legs)
{
    check_legs(legs);
}

DPoly DPoly::constant(int legs, const UPoly &c)
{
    DPoly r(legs);
    r.add_term(Exponents{}, c);
    return r;
}

DPoly DPoly::variable(int legs, int slot)
{
    DPoly r(legs);
    if (slot < 0 || slot >= legs) {
        throw std::invalid_argument("DPoly variable slot out of range");
    }
    Exponents e{};
    e[static_cast<std::size_t>(slot)] = 1;
    r.add_term(e, UPoly(1));
    return r;
}

int DPoly::degree() const noexcept
{
    int d = -1;
    for (const auto &[e, c] : terms_) {
        d = std::max(d, static_cast<int>(e[0]) + e[1] + e[2]);
    }
    return d;
}

UPoly DPoly::constant_term() const
{
    auto it = terms_.find(Exponents{});
    return it == terms_.end() ? UPoly() : it->second;
}

void DPoly::add_term(const Exponents &e, const UPoly &c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

DPoly &DPoly::operator+=(const DPoly &other)
{
    check_same_legs(*this, other);
    for (const auto &[e, c] : other.terms_) {
        add_term(e, c);
    }
    return *this;
}

DPoly &DPoly::operator-=(const DPoly &other)
{
    check_same_legs(*this, other);
    for (const auto &[e, c] : other.terms_) {
        add_term(e, -c);
    }
    return *this;
}

DPoly &DPoly::operator*=(const UPoly &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, v] : terms_) {
        v *= c;
    }
    return *this;
}

DPoly operator*(const DPoly &a, const DPoly &b)
{
    check_same_legs(a, b);
    DPoly r(a.legs_);
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            Exponents e{};
            for (std::size_t i = 0; i < max_legs; ++i) {
                e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

DPoly DPoly::operator-() const
{
    DPoly r(*this);
    for (auto &[e, c] : r.terms_) {
        c = -c;
    }
    return r;
}

DPoly DPoly::substitute_affine(const std::array<int, max_legs> &sign,
                               const std::array<long, max_legs> &offset) const
{
    bool identity = true;
    for (int i = 0; i < legs_; ++i) {
        identity = identity && sign[static_cast<std::size_t>(i)] == 1 && offset[static_cast<std::size_t>(i)] == 0;
    }
    if (identity) {
        return *this;
    }
    // expansions[i][e] = coefficients of (sign_i x_i + offset_i)^e
    std::array<std::vector<std::vector<Integer>>, max_legs> expansions;
    auto expansion = [&](std::size_t leg, unsigned e) -> const std::vector<Integer> & {
        auto &cache = expansions[leg];
        while (cache.size() <= e) {
            cache.push_back(affine_power(sign[leg], offset[leg], static_cast<unsigned>(cache.size())));
        }
        return cache[e];
    };

    DPoly r(legs_);
    for (const auto &[e, c] : terms_) {
        const auto &e0 = expansion(0, e[0]);
        const auto &e1 = expansion(1, e[1]);
        const auto &e2 = expansion(2, e[2]);
        for (std::size_t j0 = 0; j0 < e0.size(); ++j0) {
            if (e0[j0] == 0) {
                continue;
            }
            for (std::size_t j1 = 0; j1 < e1.size(); ++j1) {
                if (e1[j1] == 0) {
                    continue;
                }
                for (std::size_t j2 = 0; j2 < e2.size(); ++j2) {
                    if (e2[j2] == 0) {
                        continue;
                    }
                    Integer m = e0[j0] * e1[j1] * e2[j2];
                    Exponents out{static_cast<std::uint16_t>(j0), static_cast<std::uint16_t>(j1),
                                  static_cast<std::uint16_t>(j2)};
                    r.add_term(out, c * Rational(m));
                }
            }
        }
    }
    return r;
}

DPoly DPoly::shift(const std::array<long, max_legs> &offset) const
{
    return substitute_affine({1, 1, 1}, offset);
}

DPoly DPoly::split_variable(int slot) const
{
    if (legs_ >= max_legs) {
        throw std::invalid_argument("split_variable: input already has 3 legs");
    }
    if (slot < 0 || slot >= legs_) {
        throw std::invalid_argument("split_variable: slot out of range");
    }
    const auto s = static_cast<std::size_t>(slot);
    DPoly r(legs_ + 1);
    for (const auto &[e, c] : terms_) {
        const unsigned n = e[s];
        for (unsigned j = 0; j <= n; ++j) {
            Exponents out{};
            for (std::size_t i = 0; i < s; ++i) {
                out[i] = e[i];
            }
            out[s] = static_cast<std::uint16_t>(j);
            out[s + 1] = static_cast<std::uint16_t>(n - j);
            for (std::size_t i = s + 1; i < static_cast<std::size_t>(legs_); ++i) {
                out[i + 1] = e[i];
            }
            r.add_term(out, c * Rational(binomial(n, j)));
        }
    }
    return r;
}

DPoly DPoly::drop_variable(int slot) const
{
    if (legs_ < 2) {
        throw std::invalid_argument("drop_variable: need at least 2 legs");
    }
    if (slot < 0 || slot >= legs_) {
        throw std::invalid_argument("drop_variable: slot out of range");
    }
    const auto s = static_cast<std::size_t>(slot);
    DPoly r(legs_ - 1);
    for (const auto &[e, c] : terms_) {
        if (e[s] != 0) {
            continue;
        }
        Exponents out{};
        for (std::size_t i = 0, j = 0; i < static_cast<std::size_t>(legs_); ++i) {
            if (i != s) {
                out[j++] = e[i];
            }
        }
        r.add_term(out, c);
    }
    return r;
}

DPoly DPoly::concatenate(const DPoly &other) const
{
    if (legs_ + other.legs_ > max_legs) {
        throw std::invalid_argument("concatenate: more than 3 legs");
    }
    DPoly r(legs_ + other.legs_);
    for (const auto &[ea, ca] : terms_) {
        for (const auto &[eb, cb] : other.terms_) {
            Exponents e = ea;
            for (std::size_t i = 0; i < static_cast<std::size_t>(other.legs_); ++i) {
                e[static_cast<std::size_t>(legs_) + i] = eb[i];
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

DPoly DPoly::specialize_u(const Rational &u) const
{
    DPoly r(legs_);
    for (const auto &[e, c] : terms_) {
        r.add_term(e, UPoly(c.evaluate(u)));
    }
    return r;
}

Rational DPoly::evaluate(std::span<const Rational> vars, const Rational &u) const
{
    if (vars.size() != static_cast<std::size_t>(legs_)) {
        throw std::invalid_argument("evaluate: expected " + std::to_string(legs_) + " variable values, got "
                                    + std::to_string(vars.size()));
    }
    Rational total = 0;
    for (const auto &[e, c] : terms_) {
        Rational m = c.evaluate(u);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            for (unsigned k = 0; k < e[i]; ++k) {
                m *= vars[i];
            }
        }
        total += m;
    }
    return total;
}

std::string DPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    static constexpr char names[max_legs] = {'x', 'y', 'z'};
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << c.to_string() << ")";
        for (std::size_t i = 0; i < static_cast<std::size_t>(legs_); ++i) {
            if (e[i] > 0) {
                os << "*" << names[i];
                if (e[i] > 1) {
                    os << "^" << e[i];
                }
            }
        }
    }
    return os.str();
}

DPoly binom_poly(const DPoly &t, unsigned k)
{
    DPoly r = DPoly::constant(t.legs(), UPoly(1));
    for (unsigned i = 0; i < k; ++i) {
        r = r * (t - DPoly::constant(t.legs(), UPoly(static_cast<long>(i))));
    }
    return r * UPoly(Rational(1, 1) / Rational(factorial(k)));
}

DPoly affine(int legs, const std::array<long, max_legs> &coeff, long constant)
{
    DPoly r = DPoly::constant(legs, UPoly(constant));
    for (int i = 0; i < legs; ++i) {
        if (coeff[static_cast<std::size_t>(i)] != 0) {
            r += DPoly::variable(legs, i) * UPoly(coeff[static_cast<std::size_t>(i)]);
        }
    }
    return r;
}

} // namespace jtwist
