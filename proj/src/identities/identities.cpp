#include <jtwist/identities.hpp>

#include <random>
#include <sstream>
#include <stdexcept>

namespace jtwist
{

namespace
{

// Polynomials in (x, y, z); chains use only x, y.
DPoly var(int slot)
{
    return DPoly::variable(3, slot);
}

DPoly num(long c)
{
    return DPoly::constant(3, UPoly(c));
}

DPoly B(const DPoly &t, int k)
{
    return k < 0 ? DPoly(3) : binom_poly(t, static_cast<unsigned>(k));
}

UPoly ib(int n, int k)
{
    return UPoly(Rational(binomial(n, k)));
}

UPoly sign(int e)
{
    return UPoly(e % 2 == 0 ? 1 : -1);
}

const DPoly x = var(0);
const DPoly y = var(1);
const DPoly z = var(2);

// All tuples in [0, bound]^arity accepted by `keep`.
template <typename Keep>
std::vector<std::vector<int>> tuples(int arity, int bound, Keep keep)
{
    std::vector<std::vector<int>> out;
    std::vector<int> t(static_cast<std::size_t>(arity), 0);
    while (true) {
        if (keep(t)) {
            out.push_back(t);
        }
        int i = 0;
        while (i < arity && t[static_cast<std::size_t>(i)] == bound) {
            t[static_cast<std::size_t>(i++)] = 0;
        }
        if (i == arity) {
            break;
        }
        ++t[static_cast<std::size_t>(i)];
    }
    return out;
}

std::vector<std::vector<int>> any2(int b)
{
    return tuples(2, b, [](const auto &) { return true; });
}

std::vector<std::vector<int>> any3(int b)
{
    return tuples(3, b, [](const auto &) { return true; });
}

// (k, k', ...) with k' <= k.
std::vector<std::vector<int>> kprime3(int b)
{
    return tuples(3, b, [](const auto &t) { return t[1] <= t[0]; });
}

std::vector<std::vector<int>> kprime4(int b)
{
    return tuples(4, b, [](const auto &t) { return t[1] <= t[0]; });
}

// Chain of identities used to collapse the fivefold sum for F_L.
const std::vector<ChainStep> l_chain = {
    {"id1: binom(y-1-l2, l1) = (-1)^l1 binom(-y+l2+l1, l1) = (-1)^l1 binom(-y+l, l1)",
     {"l1", "l2"},
     any2,
     [](const std::vector<int> &i) {
         const int l1 = i[0], l2 = i[1], l = l1 + l2;
         return std::vector<DPoly>{B(y - num(1 + l2), l1), B(-y + num(l2 + l1), l1) * sign(l1),
                                   B(-y + num(l), l1) * sign(l1)};
     }},
    {"id2: binom(x+y-1, k2+l2) = (-1)^(k2+l2) binom(-x-y+k2+l2, k2+l2)",
     {"k2", "l2"},
     any2,
     [](const std::vector<int> &i) {
         const int k2 = i[0], l2 = i[1];
         return std::vector<DPoly>{B(x + y - num(1), k2 + l2), B(-x - y + num(k2 + l2), k2 + l2) * sign(k2 + l2)};
     }},
    {"id3: binom(-x-y+k2+l2, k2+l2) binom(k2+l2, k2) = binom(-x-y+k2+l2, k2) binom(-x-y+l2, l2)",
     {"k2", "l2"},
     any2,
     [](const std::vector<int> &i) {
         const int k2 = i[0], l2 = i[1];
         const DPoly t = -x - y + num(k2 + l2);
         return std::vector<DPoly>{B(t, k2 + l2) * ib(k2 + l2, k2), B(t, k2) * B(-x - y + num(l2), l2)};
     }},
    {"id4: sum_{k1+k2=k-k'} binom(x-1-k+k1, k1) binom(-x-y+k2+l2, k2) = binom(-y-k'+l2, k-k') "
     "= sum (-1)^k1 binom(-x+k, k1) binom(-x-y+k2+l2, k2)",
     {"k", "k'", "l2"},
     kprime3,
     [](const std::vector<int> &i) {
         const int k = i[0], kp = i[1], l2 = i[2];
         DPoly first(3), third(3);
         for (int k1 = 0; k1 <= k - kp; ++k1) {
             const int k2 = k - kp - k1;
             first += B(x - num(1 + k - k1), k1) * B(-x - y + num(k2 + l2), k - kp - k1);
             third += B(-x + num(k), k1) * B(-x - y + num(k2 + l2), k - kp - k1) * sign(k1);
         }
         return std::vector<DPoly>{first, B(-y + num(l2 - kp), k - kp), third};
     }},
    {"id5: binom(-y+l, l1) binom(-y+l2, k') = binom(-y+l, k') binom(-y+l-k', l1)",
     {"l1", "l2", "k'"},
     any3,
     [](const std::vector<int> &i) {
         const int l1 = i[0], l2 = i[1], kp = i[2], l = l1 + l2;
         return std::vector<DPoly>{B(-y + num(l), l1) * B(-y + num(l2), kp),
                                   B(-y + num(l), kp) * B(-y + num(l - kp), l1)};
     }},
    {"id6: binom(-y-k'+l2, k-k') binom(-y+l-k', l1) = binom(-y+l-k', k-k') binom(-y+l-k, l1)",
     {"k", "k'", "l1", "l2"},
     kprime4,
     [](const std::vector<int> &i) {
         const int k = i[0], kp = i[1], l1 = i[2], l2 = i[3], l = l1 + l2;
         return std::vector<DPoly>{B(-y + num(l2 - kp), k - kp) * B(-y + num(l - kp), l1),
                                   B(-y + num(l - kp), k - kp) * B(-y + num(l - k), l1)};
     }},
    {"id7: sum_{l1+l2=l} (-1)^l1 binom(-y+l-k, l1) binom(-x-y+l2, l2) = binom(-x+k, l)",
     {"k", "l"},
     any2,
     [](const std::vector<int> &i) {
         const int k = i[0], l = i[1];
         DPoly sum(3);
         for (int l1 = 0; l1 <= l; ++l1) {
             const int l2 = l - l1;
             sum += B(-y + num(l - k), l1) * B(-x - y + num(l2), l2) * sign(l1);
         }
         return std::vector<DPoly>{sum, B(-x + num(k), l)};
     }},
    {"idz: binom(-y+l-k', k-k') binom(-y+l, k') = binom(k, k') binom(-y+l, k)",
     {"k", "k'", "l"},
     kprime3,
     [](const std::vector<int> &i) {
         const int k = i[0], kp = i[1], l = i[2];
         return std::vector<DPoly>{B(-y + num(l - kp), k - kp) * B(-y + num(l), kp), B(-y + num(l), k) * ib(k, kp)};
     }},
};

// Only the first and last members of the chain for F_R^{-1} are transcribed.
const std::vector<ChainStep> r_chain = {
    {"R end-to-end: sum (-1)^(k1+l1) binom(x,k1) binom(y,l1) binom(y-l1,k') binom(x+y-(k'+k1+l1), k2+l2) "
     "binom(k2+l2, k2) = binom(k,k') binom(x,l) binom(y,k)",
     {"k", "k'", "l"},
     kprime3,
     [](const std::vector<int> &i) {
         const int k = i[0], kp = i[1], l = i[2];
         DPoly sum(3);
         for (int k1 = 0; k1 <= k - kp; ++k1) {
             const int k2 = k - kp - k1;
             for (int l1 = 0; l1 <= l; ++l1) {
                 const int l2 = l - l1;
                 sum += B(x, k1) * B(y, l1) * B(y - num(l1), kp) * B(x + y - num(kp + k1 + l1), k2 + l2)
                        * (ib(k2 + l2, k2) * sign(k1 + l1));
             }
         }
         return std::vector<DPoly>{sum, B(x, l) * B(y, k) * ib(k, kp)};
     }},
};

std::string format_parameters(const std::vector<std::string> &names, const std::vector<int> &values)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < names.size(); ++i) {
        os << (i ? ", " : "") << names[i] << "=" << values[i];
    }
    return os.str();
}

} // namespace

std::string IdentityInstance::describe() const
{
    std::ostringstream os;
    os << chain << "(";
    for (std::size_t i = 0; i < parameters.size(); ++i) {
        os << (i ? ", " : "") << parameters[i].first << "=" << parameters[i].second;
    }
    os << "): " << (equal ? "equal" : "DIFFERENT");
    return os.str();
}

DPoly bigident_lhs(int k, int l, int a, int c)
{
    DPoly sum(3);
    for (int k1 = 0; k1 <= a; ++k1) {
        sum += B(y, k1) * B(x + y - num(k1 - c + l), c) * B(z, k - k1) * ib(k - k1, k - a);
    }
    return B(x, l - c) * sum;
}

DPoly bigident_lhs_reindexed(int k, int l, int a, int c)
{
    // j = k - k1 runs over [k - A, k]
    DPoly sum(3);
    for (int j = k - a; j <= k; ++j) {
        sum += B(y, k - j) * B(x + y - num(k - j - c + l), c) * B(z, j) * ib(j, k - a);
    }
    return B(x, l - c) * sum;
}

DPoly bigident_rhs(int k, int l, int a, int c)
{
    DPoly sum(3);
    for (int l1 = 0; l1 <= c; ++l1) {
        sum += B(x, l - l1) * B(y, l1) * B(y + z - num(l1 - a + k), a) * ib(l - l1, l - c);
    }
    return B(z, k - a) * sum;
}

IdentityInstance verify_bigident(int k, int l, int a, int c, int samples, std::uint64_t seed)
{
    if (k < 0 || l < 0 || a < 0 || a > k || c < 0 || c > l) {
        throw std::invalid_argument("verify_bigident: need 0 <= A <= k and 0 <= C <= l");
    }
    IdentityInstance inst;
    inst.chain = "bigident";
    inst.parameters = {{"k", k}, {"l", l}, {"A", a}, {"C", c}};
    inst.lhs = bigident_lhs(k, l, a, c);
    inst.rhs = bigident_rhs(k, l, a, c);
    inst.equal = inst.lhs == inst.rhs;

    std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(k) << 48) ^ (static_cast<std::uint64_t>(l) << 32)
                        ^ (static_cast<std::uint64_t>(a) << 16) ^ static_cast<std::uint64_t>(c));
    std::uniform_int_distribution<long> dist(-12, 12);
    for (int s = 0; s < samples; ++s) {
        const std::vector<Rational> point{dist(rng), dist(rng), dist(rng)};
        const bool same = inst.lhs.evaluate(point, 0) == inst.rhs.evaluate(point, 0);
        if (inst.equal && !same) {
            inst.samples_agree = false;
        }
    }
    return inst;
}

VerificationReport verify_bigident_suite(int bound)
{
    VerificationReport r("bigident", -1);
    r.parameter("bound", std::to_string(bound));
    int count = 0, failures = 0, disagreements = 0, reindex_failures = 0;
    for (int k = 0; k <= bound; ++k) {
        for (int l = 0; l <= bound; ++l) {
            for (int a = 0; a <= k; ++a) {
                for (int c = 0; c <= l; ++c) {
                    const IdentityInstance inst = verify_bigident(k, l, a, c);
                    ++count;
                    if (!inst.equal) {
                        ++failures;
                        r.record(inst.describe(), false, "lhs - rhs = " + (inst.lhs - inst.rhs).to_string());
                    }
                    if (!inst.samples_agree) {
                        ++disagreements;
                        r.record(inst.describe() + " point samples", false, "sampled values disagree");
                    }
                    if (!(bigident_lhs_reindexed(k, l, a, c) == inst.lhs)) {
                        ++reindex_failures;
                        r.record(inst.describe() + " reindexed", false, "k1 -> k-k1 form differs");
                    }
                }
            }
        }
    }
    r.record("symbolic equality over " + std::to_string(count) + " (k,l,A,C) tuples", failures == 0);
    r.record("random integer point samples agree", disagreements == 0);
    r.record("index change k1 -> k-k1 leaves the left side unchanged", reindex_failures == 0);
    r.finalize();
    return r;
}

const std::vector<ChainStep> &chain_steps(Chain chain)
{
    return chain == Chain::L ? l_chain : r_chain;
}

VerificationReport verify_identity_chain(Chain chain, int bound)
{
    VerificationReport r(chain == Chain::L ? "chain-L" : "chain-R", -1);
    r.parameter("bound", std::to_string(bound));
    for (const ChainStep &step : chain_steps(chain)) {
        int count = 0;
        std::string failure;
        for (const auto &indices : step.domain(bound)) {
            const auto forms = step.forms(indices);
            ++count;
            for (std::size_t i = 1; i < forms.size() && failure.empty(); ++i) {
                if (!(forms[i] == forms[0])) {
                    failure = "form " + std::to_string(i) + " differs at " + format_parameters(step.index_names, indices);
                }
            }
        }
        r.record(step.name + " [" + std::to_string(count) + " index tuples]", failure.empty(), failure);
    }
    r.finalize();
    return r;
}

Rational independence_det(int n)
{
    if (n < 0) {
        throw std::invalid_argument("independence_det: n must be >= 0");
    }
    const auto size = static_cast<std::size_t>(n + 1);
    // Row k holds (u-1)^k u^{n-k} in the basis u^n, u^{n-1}, ..., 1.
    std::vector<std::vector<Rational>> m(size, std::vector<Rational>(size));
    for (std::size_t k = 0; k < size; ++k) {
        for (std::size_t j = 0; j <= k; ++j) {
            m[k][j] = Rational(binomial(static_cast<long>(k), static_cast<long>(j))) * (j % 2 == 0 ? 1 : -1);
        }
    }
    Rational det = 1;
    for (std::size_t col = 0; col < size; ++col) {
        std::size_t pivot = col;
        while (pivot < size && m[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == size) {
            return 0;
        }
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < size; ++row) {
            if (m[row][col] == 0) {
                continue;
            }
            const Rational factor = m[row][col] / m[col][col];
            for (std::size_t j = col; j < size; ++j) {
                m[row][j] -= factor * m[col][j];
            }
        }
    }
    return det;
}

} // namespace jtwist
