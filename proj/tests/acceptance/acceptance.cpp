// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <jtwist/checks.hpp>
#include <jtwist/identities.hpp>

#include "../support/random_elements.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace jtwist;

namespace
{

using T = TensorElement;

struct Outcome
{
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what)
    {
        if (!ok) {
            pass = false;
            if (!detail.empty()) {
                detail += "; ";
            }
            detail += what;
        }
    }

    void require(const VerificationReport &r, const std::string &what)
    {
        require(r.pass, what + (r.first_failure ? " (" + *r.first_failure + ")" : std::string()));
    }
};

struct Criterion
{
    int id;
    std::string title;
    double limit_seconds; // <= 0: no limit
    std::function<Outcome()> run;
};

Outcome form_equality(int order, bool with_r)
{
    Outcome o;
    o.require(check_form_equality(Family::L, order), "L product != closed");
    if (with_r) {
        o.require(check_form_equality(Family::R, order), "R product != closed");
    }
    return o;
}

Outcome cocycle_l5()
{
    Outcome o;
    const VerificationReport r = check_cocycle(TwistSpec{Family::L, Direction::twist, Form::closed, 5, {}});
    o.require(r, "cocycle F_L");
    o.require(r.grades.size() == 6, "expected grades 0..5");
    const bool slices = std::any_of(r.items.begin(), r.items.end(),
                                    [](const ReportItem &i) { return i.label.find("slice") != std::string::npos; });
    o.require(slices, "no per-order slice items");
    return o;
}

Outcome endpoints8()
{
    Outcome o;
    o.require(check_endpoints(Family::L, 8), "L endpoints");
    o.require(check_endpoints(Family::R, 8), "R endpoints");
    return o;
}

Outcome hopf4()
{
    Outcome o;
    std::ostringstream signs;
    for (Family f : {Family::L, Family::R}) {
        for (Generator g : {Generator::P, Generator::Q, Generator::D}) {
            const VerificationReport r = check_hopf_data(f, g, 4);
            o.require(r, "hopf " + to_string(f) + "/" + to_string(g));
            for (const ReportItem &i : r.items) {
                if (i.label.find("sign") != std::string::npos) {
                    signs << " [" << to_string(f) << "/" << to_string(g) << ": " << i.label << "]";
                }
            }
        }
    }
    if (o.pass) {
        o.detail = "antipode signs:" + signs.str();
    }
    return o;
}

Outcome v_family5()
{
    Outcome o;
    for (const Rational &v : {Rational(-2), Rational(-1), Rational(0), Rational(1, 2), Rational(3)}) {
        o.require(check_v_family(v, 5), "v = " + to_short_string(v));
    }
    return o;
}

Outcome identities()
{
    Outcome o;
    o.require(verify_bigident_suite(4), "bigident k,l <= 4");
    o.require(verify_identity_chain(Chain::L, 4), "L-chain <= 4");
    o.require(verify_identity_chain(Chain::R, 3), "R-chain <= 3");
    return o;
}

// Brute-force Leibniz expansion over all permutations.
Rational leibniz_det(const std::vector<std::vector<Rational>> &m)
{
    std::vector<std::size_t> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            for (std::size_t j = i + 1; j < perm.size(); ++j) {
                inversions += perm[i] > perm[j] ? 1 : 0;
            }
        }
        Rational prod = inversions % 2 == 0 ? 1 : -1;
        for (std::size_t i = 0; i < perm.size() && prod != 0; ++i) {
            prod *= m[i][perm[i]];
        }
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Coefficient matrix of (u-1)^k u^{n-k} in the basis u^n, ..., 1, by expansion.
std::vector<std::vector<Rational>> basis_matrix(int n)
{
    std::vector<std::vector<Rational>> m;
    const UPoly u = UPoly::u();
    for (int k = 0; k <= n; ++k) {
        const UPoly row = (u - UPoly(1)).pow(static_cast<unsigned>(k)) * u.pow(static_cast<unsigned>(n - k));
        std::vector<Rational> r;
        for (int j = n; j >= 0; --j) {
            r.push_back(row.coefficient(static_cast<unsigned>(j)));
        }
        m.push_back(std::move(r));
    }
    return m;
}

Outcome determinants()
{
    Outcome o;
    std::ostringstream values;
    for (int n = 0; n <= 8; ++n) {
        const Rational det = independence_det(n);
        const Rational oracle = leibniz_det(basis_matrix(n));
        o.require(det == oracle, "n = " + std::to_string(n) + " disagrees with permutation expansion");
        o.require(abs(det) == 1, "n = " + std::to_string(n) + " |det| != 1");
        values << (n ? " " : "") << "n=" << n << ":" << to_short_string(det);
    }
    if (o.pass) {
        o.detail = values.str();
    }
    return o;
}

Outcome hopf_axioms()
{
    Outcome o;
    std::mt19937_64 rng(2024);
    const int n = 3;
    for (int trial = 0; trial < 100; ++trial) {
        const T e = testing::random_element(rng, 1, n, 3);
        const T f = testing::random_element(rng, 1, n, 3);
        const T de = coproduct(e, 0);
        const std::string at = " (element " + std::to_string(trial) + ")";
        o.require(coproduct(de, 0) == coproduct(de, 1), "coassociativity" + at);
        o.require(counit_contract(de, 0) == e && counit_contract(de, 1) == e, "counit" + at);
        const T unit = T::constant(1, n, counit(e));
        o.require(fold_mul_antipode(de, FoldSide::right) == unit, "m(id (x) S)Delta" + at);
        o.require(fold_mul_antipode(de, FoldSide::left) == unit, "m(S (x) id)Delta" + at);
        o.require(coproduct(e * f, 0) == de * coproduct(f, 0), "Delta multiplicative" + at);
        if (!o.pass) {
            break;
        }
    }
    return o;
}

// Adds 1 to one rational coefficient (momentum key, D-monomial, power of u).
Outcome mutation_sensitivity()
{
    Outcome o;
    const int order = 5;
    const T f = family_l_closed(order, UPoly::u());
    const T slice = f.grade_slice(2);
    int mutants = 0;
    std::vector<std::string> missed;
    for (const auto &[key, d] : slice.terms()) {
        for (const auto &[exps, coeff] : d.terms()) {
            for (const auto &term : coeff.terms()) {
                DPoly bump(2);
                bump.add_term(exps, UPoly::monomial(term.first, 1));
                T mutant = f;
                mutant.add_term(key, bump);
                const VerificationReport r = check_cocycle_element(mutant, Direction::twist, "mutant");
                ++mutants;
                if (r.grades.size() > 2 && !r.grades[2].pass && r.grades[1].pass) {
                    continue;
                }
                std::string where = T::term(order, key, bump).to_string();
                where.erase(std::remove(where.begin(), where.end(), '\n'), where.end());
                const auto first = std::find_if(r.grades.begin(), r.grades.end(),
                                                [](const GradeResult &g) { return !g.pass; });
                where += first == r.grades.end() ? " never fails" : " first fails at grade " + std::to_string(first->grade);
                missed.push_back(where);
            }
        }
    }
    o.require(mutants > 0, "no grade-2 coefficients");
    if (!missed.empty()) {
        std::string list;
        for (const std::string &m : missed) {
            list += (list.empty() ? "" : ", ") + m;
        }
        o.require(false, std::to_string(missed.size()) + " of " + std::to_string(mutants) +
                             " mutants pass at grade 2: " + list);
    } else {
        o.detail = std::to_string(mutants) + " mutants all caught at grade 2";
    }
    return o;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "product = closed F_L, symbolic u, N=3", 1, [] { return form_equality(3, false); }},
        {2, "product = closed F_L and F_R^-1, symbolic u, N=5", 60, [] { return form_equality(5, true); }},
        {3, "2-cocycle F_L, symbolic u, N=5, per-grade decomposition", 120, cocycle_l5},
        {4, "endpoints u=0,1 for L and R, F_L(1) = F_R(1), N=8", 10, endpoints8},
        {5, "deformed coproduct and antipode for P, Q, D, both families, N=4", 0, hopf4},
        {6, "L <-> R relation, N=6", 0, [] {
             Outcome o;
             o.require(check_lr_relation(6), "LR relation");
             return o;
         }},
        {7, "v-family at u=1 equals F_1, N=5", 0, v_family5},
        {8, "binomial identity suites", 60, identities},
        {9, "|det| = 1 for n <= 8", 0, determinants},
        {10, "Hopf axioms on 100 random elements of grade <= 3", 0, hopf_axioms},
        {11, "every grade-2 coefficient mutation of F_L fails the cocycle at grade 2", 0, mutation_sensitivity},
    };

    int failures = 0;
    for (const Criterion &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
            o.require(false, "exceeded " + std::to_string(static_cast<int>(c.limit_seconds)) + " s");
        }
        failures += o.pass ? 0 : 1;
        std::ostringstream time;
        time.precision(3);
        time << std::fixed << seconds;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << time.str()
                  << " s]";
        if (!o.detail.empty()) {
            std::cout << " -- " << o.detail;
        }
        std::cout << '\n';
    }
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
