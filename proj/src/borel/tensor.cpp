#include <jtwist/tensor.hpp>

#include <sstream>
#include <stdexcept>

namespace jtwist
{

namespace
{

void check_compatible(const TensorElement &a, const TensorElement &b, const char *what)
{
    if (a.legs() != b.legs() || a.truncation() != b.truncation()) {
        throw std::invalid_argument(std::string(what) + ": shape mismatch (legs " + std::to_string(a.legs()) + "/"
                                    + std::to_string(b.legs()) + ", truncation " + std::to_string(a.truncation())
                                    + "/" + std::to_string(b.truncation()) + ")");
    }
}

std::string leg_string(const LegMonomial &m, unsigned dexp)
{
    std::string s;
    auto factor = [&s](const char *name, unsigned e) {
        if (e == 0) {
            return;
        }
        if (!s.empty()) {
            s += "*";
        }
        s += name;
        if (e > 1) {
            s += "^" + std::to_string(e);
        }
    };
    factor("P", m.p);
    factor("Q", m.q);
    factor("D", dexp);
    return s.empty() ? "1" : s;
}

} // namespace

int grade_of(const MomentumKey &key) noexcept
{
    int g = 0;
    for (const auto &m : key) {
        g += m.p;
    }
    return g;
}

std::string TermDifference::describe(int legs) const
{
    std::string mono;
    for (int i = 0; i < legs; ++i) {
        if (i > 0) {
            mono += "(x)";
        }
        mono += leg_string(momentum[static_cast<std::size_t>(i)], exponents[static_cast<std::size_t>(i)]);
    }
    return "grade " + std::to_string(grade) + ", term " + mono + ": " + lhs.to_string() + " vs " + rhs.to_string();
}

TensorElement::TensorElement(int legs, int truncation) : legs_(legs), truncation_(truncation)
{
    if (legs < 1 || legs > max_legs) {
        throw std::invalid_argument("TensorElement leg count must be in [1, 3]");
    }
    if (truncation < 0) {
        throw std::invalid_argument("TensorElement truncation must be >= 0");
    }
}

TensorElement TensorElement::one(int legs, int truncation)
{
    return constant(legs, truncation, UPoly(1));
}

TensorElement TensorElement::constant(int legs, int truncation, const UPoly &c)
{
    TensorElement r(legs, truncation);
    r.add_term(MomentumKey{}, DPoly::constant(legs, c));
    return r;
}

TensorElement TensorElement::P(int truncation)
{
    return term(truncation, MomentumKey{LegMonomial{1, 0}}, DPoly::constant(1, UPoly(1)));
}

TensorElement TensorElement::Q(int truncation)
{
    return term(truncation, MomentumKey{LegMonomial{0, 1}}, DPoly::constant(1, UPoly(1)));
}

TensorElement TensorElement::D(int truncation)
{
    return term(truncation, MomentumKey{}, DPoly::variable(1, 0));
}

TensorElement TensorElement::term(int truncation, const MomentumKey &key, const DPoly &coeff)
{
    TensorElement r(coeff.legs(), truncation);
    r.add_term(key, coeff);
    return r;
}

std::optional<int> TensorElement::min_grade() const
{
    std::optional<int> g;
    for (const auto &[k, d] : terms_) {
        const int kg = grade_of(k);
        if (!g || kg < *g) {
            g = kg;
        }
    }
    return g;
}

void TensorElement::add_term(const MomentumKey &key, const DPoly &coeff)
{
    if (coeff.legs() != legs_) {
        throw std::invalid_argument("add_term: DPoly leg count does not match element");
    }
    for (std::size_t i = static_cast<std::size_t>(legs_); i < max_legs; ++i) {
        if (key[i] != LegMonomial{}) {
            throw std::invalid_argument("add_term: momentum in unused leg");
        }
    }
    if (coeff.is_zero() || grade_of(key) > truncation_) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

TensorElement &TensorElement::operator+=(const TensorElement &other)
{
    check_compatible(*this, other, "add");
    for (const auto &[k, d] : other.terms_) {
        add_term(k, d);
    }
    return *this;
}

TensorElement &TensorElement::operator-=(const TensorElement &other)
{
    check_compatible(*this, other, "subtract");
    for (const auto &[k, d] : other.terms_) {
        add_term(k, -d);
    }
    return *this;
}

TensorElement &TensorElement::operator*=(const UPoly &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[k, d] : terms_) {
        d *= c;
    }
    return *this;
}

TensorElement TensorElement::operator-() const
{
    TensorElement r(*this);
    for (auto &[k, d] : r.terms_) {
        d = -d;
    }
    return r;
}

TensorElement operator*(const TensorElement &a, const TensorElement &b)
{
    check_compatible(a, b, "normal_mul");
    TensorElement r(a.legs_, a.truncation_);
    const auto legs = static_cast<std::size_t>(a.legs_);
    for (const auto &[ka, da] : a.terms_) {
        const int ga = grade_of(ka);
        // Shifted copies of da, keyed by the momentum degrees they move past.
        std::map<std::array<long, max_legs>, DPoly> shifted;
        for (const auto &[kb, db] : b.terms_) {
            if (ga + grade_of(kb) > a.truncation_) {
                continue;
            }
            std::array<long, max_legs> offset{};
            MomentumKey key{};
            for (std::size_t i = 0; i < legs; ++i) {
                offset[i] = -static_cast<long>(kb[i].p + kb[i].q);
                key[i] = LegMonomial{static_cast<std::uint16_t>(ka[i].p + kb[i].p),
                                     static_cast<std::uint16_t>(ka[i].q + kb[i].q)};
            }
            auto it = shifted.find(offset);
            if (it == shifted.end()) {
                it = shifted.emplace(offset, da.shift(offset)).first;
            }
            r.add_term(key, it->second * db);
        }
    }
    return r;
}

TensorElement TensorElement::grade_slice(int n) const
{
    if (n < 0 || n > truncation_) {
        throw std::out_of_range("grade_slice: grade " + std::to_string(n) + " outside [0, "
                                + std::to_string(truncation_) + "]");
    }
    TensorElement r(legs_, truncation_);
    for (const auto &[k, d] : terms_) {
        if (grade_of(k) == n) {
            r.terms_.emplace(k, d);
        }
    }
    return r;
}

TensorElement TensorElement::truncated(int n) const
{
    if (n < 0 || n > truncation_) {
        throw std::out_of_range("truncated: order must be in [0, " + std::to_string(truncation_) + "]");
    }
    TensorElement r(legs_, n);
    for (const auto &[k, d] : terms_) {
        r.add_term(k, d);
    }
    return r;
}

TensorElement TensorElement::specialize_u(const Rational &u) const
{
    TensorElement r(legs_, truncation_);
    for (const auto &[k, d] : terms_) {
        r.add_term(k, d.specialize_u(u));
    }
    return r;
}

std::string TensorElement::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    for (const auto &[k, d] : terms_) {
        os << "[";
        for (int i = 0; i < legs_; ++i) {
            if (i > 0) {
                os << "(x)";
            }
            os << leg_string(k[static_cast<std::size_t>(i)], 0);
        }
        os << "] * {" << d.to_string() << "}\n";
    }
    return os.str();
}

TensorElement tensor(const TensorElement &a, const TensorElement &b)
{
    if (a.truncation() != b.truncation()) {
        throw std::invalid_argument("tensor: truncation mismatch");
    }
    if (a.legs() + b.legs() > max_legs) {
        throw std::invalid_argument("tensor: more than 3 legs");
    }
    TensorElement r(a.legs() + b.legs(), a.truncation());
    for (const auto &[ka, da] : a.terms()) {
        for (const auto &[kb, db] : b.terms()) {
            if (grade_of(ka) + grade_of(kb) > a.truncation()) {
                continue;
            }
            MomentumKey key = ka;
            for (std::size_t i = 0; i < static_cast<std::size_t>(b.legs()); ++i) {
                key[static_cast<std::size_t>(a.legs()) + i] = kb[i];
            }
            r.add_term(key, da.concatenate(db));
        }
    }
    return r;
}

TensorElement series_apply(const std::vector<UPoly> &coeffs, const TensorElement &a)
{
    if (auto g = a.min_grade(); g && *g == 0) {
        throw std::invalid_argument("series_apply: argument has a grade-0 term");
    }
    TensorElement result(a.legs(), a.truncation());
    TensorElement power = TensorElement::one(a.legs(), a.truncation());
    for (std::size_t k = 0; k < coeffs.size() && !power.is_zero(); ++k) {
        result += power * coeffs[k];
        if (k + 1 < coeffs.size()) {
            power = power * a;
        }
    }
    return result;
}

std::vector<UPoly> exp_coefficients(int n)
{
    std::vector<UPoly> c;
    for (int k = 0; k <= n; ++k) {
        c.emplace_back(Rational(1) / Rational(factorial(static_cast<unsigned>(k))));
    }
    return c;
}

std::vector<UPoly> log1p_coefficients(int n)
{
    std::vector<UPoly> c{UPoly()};
    for (int k = 1; k <= n; ++k) {
        c.emplace_back(Rational(k % 2 == 1 ? 1 : -1, k));
    }
    return c;
}

std::vector<UPoly> geometric_coefficients(int n)
{
    std::vector<UPoly> c;
    for (int k = 0; k <= n; ++k) {
        c.emplace_back(k % 2 == 0 ? 1 : -1);
    }
    return c;
}

TensorElement exp(const TensorElement &a)
{
    return series_apply(exp_coefficients(a.truncation()), a);
}

TensorElement log1p(const TensorElement &a)
{
    return series_apply(log1p_coefficients(a.truncation()), a);
}

TensorElement inverse(const TensorElement &e)
{
    const auto one = TensorElement::one(e.legs(), e.truncation());
    TensorElement rest = e - one;
    if (auto g = rest.min_grade(); g && *g == 0) {
        throw std::domain_error("inverse: grade-0 part is not 1");
    }
    return series_apply(geometric_coefficients(e.truncation()), rest);
}

TensorElement coproduct(const TensorElement &e, int slot)
{
    if (e.legs() >= max_legs) {
        throw std::invalid_argument("coproduct: element already has 3 legs");
    }
    if (slot < 0 || slot >= e.legs()) {
        throw std::invalid_argument("coproduct: slot out of range");
    }
    const auto s = static_cast<std::size_t>(slot);
    TensorElement r(e.legs() + 1, e.truncation());
    for (const auto &[k, d] : e.terms()) {
        const DPoly split = d.split_variable(slot);
        const LegMonomial m = k[s];
        for (unsigned i = 0; i <= m.p; ++i) {
            for (unsigned j = 0; j <= m.q; ++j) {
                MomentumKey key{};
                for (std::size_t t = 0; t < s; ++t) {
                    key[t] = k[t];
                }
                key[s] = LegMonomial{static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j)};
                key[s + 1] = LegMonomial{static_cast<std::uint16_t>(m.p - i), static_cast<std::uint16_t>(m.q - j)};
                for (std::size_t t = s + 1; t < static_cast<std::size_t>(e.legs()); ++t) {
                    key[t + 1] = k[t];
                }
                r.add_term(key, split * UPoly(Rational(binomial(m.p, i) * binomial(m.q, j))));
            }
        }
    }
    return r;
}

TensorElement counit_contract(const TensorElement &e, int slot)
{
    if (e.legs() < 2) {
        throw std::invalid_argument("counit_contract: need at least 2 legs");
    }
    if (slot < 0 || slot >= e.legs()) {
        throw std::invalid_argument("counit_contract: slot out of range");
    }
    const auto s = static_cast<std::size_t>(slot);
    TensorElement r(e.legs() - 1, e.truncation());
    for (const auto &[k, d] : e.terms()) {
        if (k[s] != LegMonomial{}) {
            continue;
        }
        MomentumKey key{};
        for (std::size_t i = 0, j = 0; i < static_cast<std::size_t>(e.legs()); ++i) {
            if (i != s) {
                key[j++] = k[i];
            }
        }
        r.add_term(key, d.drop_variable(slot));
    }
    return r;
}

UPoly counit(const TensorElement &e)
{
    if (e.legs() != 1) {
        throw std::invalid_argument("counit: single-leg element required");
    }
    auto it = e.terms().find(MomentumKey{});
    return it == e.terms().end() ? UPoly() : it->second.constant_term();
}

TensorElement antipode(const TensorElement &e)
{
    if (e.legs() != 1) {
        throw std::invalid_argument("antipode: single-leg element required");
    }
    TensorElement r(1, e.truncation());
    for (const auto &[k, d] : e.terms()) {
        // S(P^a Q^b q(D)) = q(-D) (-Q)^b (-P)^a = (-1)^{a+b} P^a Q^b q(-D + a + b)
        const long n = k[0].p + k[0].q;
        DPoly image = d.substitute_affine({-1, 1, 1}, {n, 0, 0});
        r.add_term(k, n % 2 == 0 ? image : -image);
    }
    return r;
}

namespace
{

// One leg of a normal-ordered term, as a single-leg element P^p Q^q D^e.
TensorElement leg_factor(int truncation, const LegMonomial &m, std::uint16_t dexp)
{
    Exponents e{};
    e[0] = dexp;
    DPoly d(1);
    d.add_term(e, UPoly(1));
    return TensorElement::term(truncation, MomentumKey{m}, d);
}

} // namespace

TensorElement fold_mul_antipode(const TensorElement &e, FoldSide side)
{
    if (e.legs() != 2) {
        throw std::invalid_argument("fold_mul_antipode: two-leg element required");
    }
    const int n = e.truncation();
    TensorElement r(1, n);
    for (const auto &[k, d] : e.terms()) {
        for (const auto &[exps, c] : d.terms()) {
            TensorElement first = leg_factor(n, k[0], exps[0]);
            TensorElement second = leg_factor(n, k[1], exps[1]);
            if (side == FoldSide::right) {
                second = antipode(second);
            } else {
                first = antipode(first);
            }
            r += (first * second) * c;
        }
    }
    return r;
}

TensorElement conjugate(const TensorElement &f, const TensorElement &x, const TensorElement &f_inv)
{
    if (x.legs() != 1 || f.legs() != 2 || f_inv.legs() != 2) {
        throw std::invalid_argument("conjugate: expects 2-leg twists and a 1-leg generator");
    }
    if (!(f * f_inv == TensorElement::one(2, f.truncation()))) {
        throw std::domain_error("conjugate: F * F^-1 != 1 (x) 1 modulo truncation");
    }
    return f * coproduct(x, 0) * f_inv;
}

Comparison compare(const TensorElement &a, const TensorElement &b)
{
    check_compatible(a, b, "compare");
    Comparison c;
    const TensorElement diff = a - b;
    if (diff.is_zero()) {
        return c;
    }
    c.equal = false;
    std::map<int, bool> grades;
    for (const auto &[k, d] : diff.terms()) {
        grades[grade_of(k)] = true;
    }
    for (const auto &[g, unused] : grades) {
        c.failing_grades.push_back(g);
    }
    const int lowest = c.failing_grades.front();
    for (const auto &[k, d] : diff.terms()) {
        if (grade_of(k) != lowest) {
            continue;
        }
        const auto &[exps, unused] = *d.terms().begin();
        auto coefficient_in = [&](const TensorElement &t) {
            auto it = t.terms().find(k);
            if (it == t.terms().end()) {
                return UPoly();
            }
            auto jt = it->second.terms().find(exps);
            return jt == it->second.terms().end() ? UPoly() : jt->second;
        };
        c.first_difference = TermDifference{lowest, k, exps, coefficient_in(a), coefficient_in(b)};
        break;
    }
    return c;
}

} // namespace jtwist
