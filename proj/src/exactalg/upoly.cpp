#include <jtwist/upoly.hpp>

#include <algorithm>
#include <sstream>

namespace jtwist
{

UPoly::UPoly(const Rational &c)
{
    if (c != 0) {
        terms_.emplace_back(0, c);
        terms_.back().second.canonicalize();
    }
}

UPoly UPoly::u()
{
    return monomial(1, 1);
}

UPoly UPoly::monomial(std::uint32_t degree, const Rational &c)
{
    UPoly r;
    if (c != 0) {
        r.terms_.emplace_back(degree, c);
        r.terms_.back().second.canonicalize();
    }
    return r;
}

bool UPoly::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 0);
}

int UPoly::degree() const noexcept
{
    return terms_.empty() ? zero_degree : static_cast<int>(terms_.back().first);
}

Rational UPoly::coefficient(std::uint32_t degree) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), degree,
                               [](const term_type &t, std::uint32_t d) { return t.first < d; });
    return (it != terms_.end() && it->first == degree) ? it->second : Rational(0);
}

Rational UPoly::evaluate(const Rational &u) const
{
    // Horner over the sparse representation.
    Rational acc = 0;
    std::uint32_t prev = terms_.empty() ? 0 : terms_.back().first;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (std::uint32_t d = it->first; d < prev; ++d) {
            acc *= u;
        }
        acc += it->second;
        prev = it->first;
    }
    for (std::uint32_t d = 0; d < prev; ++d) {
        acc *= u;
    }
    return acc;
}

void UPoly::add_scaled(const UPoly &other, int sign)
{
    if (other.terms_.empty()) {
        return;
    }
    std::vector<term_type> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            out.emplace_back(b->first, sign > 0 ? b->second : Rational(-b->second));
            ++b;
        } else {
            Rational c = sign > 0 ? Rational(a->second + b->second) : Rational(a->second - b->second);
            if (c != 0) {
                out.emplace_back(a->first, std::move(c));
            }
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

UPoly &UPoly::operator+=(const UPoly &other)
{
    add_scaled(other, 1);
    return *this;
}

UPoly &UPoly::operator-=(const UPoly &other)
{
    add_scaled(other, -1);
    return *this;
}

UPoly operator*(const UPoly &a, const UPoly &b)
{
    UPoly r;
    if (a.is_zero() || b.is_zero()) {
        return r;
    }
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
        r.terms_.emplace_back(a.terms_[0].first + b.terms_[0].first, a.terms_[0].second * b.terms_[0].second);
        return r;
    }
    const auto deg = static_cast<std::size_t>(a.degree() + b.degree());
    std::vector<Rational> dense(deg + 1);
    for (const auto &[da, ca] : a.terms_) {
        for (const auto &[db, cb] : b.terms_) {
            dense[da + db] += ca * cb;
        }
    }
    for (std::size_t d = 0; d <= deg; ++d) {
        if (dense[d] != 0) {
            r.terms_.emplace_back(static_cast<std::uint32_t>(d), std::move(dense[d]));
        }
    }
    return r;
}

UPoly &UPoly::operator*=(const UPoly &other)
{
    *this = *this * other;
    return *this;
}

UPoly &UPoly::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto &t : terms_) {
            t.second *= c;
        }
    }
    return *this;
}

UPoly UPoly::operator-() const
{
    UPoly r(*this);
    for (auto &t : r.terms_) {
        t.second = -t.second;
    }
    return r;
}

UPoly UPoly::pow(unsigned n) const
{
    UPoly r(1);
    for (unsigned i = 0; i < n; ++i) {
        r *= *this;
    }
    return r;
}

std::string UPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[d, c] : terms_) {
        Rational mag = abs(c);
        if (c < 0) {
            os << "-";
        } else if (!first) {
            os << "+";
        }
        first = false;
        if (d == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) {
            os << mag.get_str();
        }
        os << "u";
        if (d > 1) {
            os << "^" << d;
        }
    }
    return os.str();
}

} // namespace jtwist
