#include <jtwist/tensor.hpp>
#include <jtwist/twists.hpp>

#include "support/random_elements.hpp"

#include <doctest.h>

#include <random>

using namespace jtwist;

namespace
{

using T = TensorElement;

MomentumKey key2(unsigned p1, unsigned p2)
{
    return MomentumKey{LegMonomial{static_cast<std::uint16_t>(p1), 0}, LegMonomial{static_cast<std::uint16_t>(p2), 0}};
}

DPoly xv(int legs, int slot = 0)
{
    return DPoly::variable(legs, slot);
}

DPoly k(int legs, long v)
{
    return DPoly::constant(legs, UPoly(v));
}

} // namespace

TEST_CASE("normal_mul reorders with DP = P(D-1)")
{
    const int n = 4;
    const T expected = T::term(n, MomentumKey{LegMonomial{1, 0}}, xv(1) - k(1, 1));
    CHECK(T::D(n) * T::P(n) == expected);
    // Q obeys the same rule
    CHECK(T::D(n) * T::Q(n) == T::term(n, MomentumKey{LegMonomial{0, 1}}, xv(1) - k(1, 1)));
    // P D is already normal
    CHECK(T::P(n) * T::D(n) == T::term(n, MomentumKey{LegMonomial{1, 0}}, xv(1)));

    // D^2 P = D (P (D-1)) = P (D-1)(D-1)
    const DPoly dm1 = xv(1) - k(1, 1);
    CHECK((T::D(n) * T::D(n)) * T::P(n) == T::term(n, MomentumKey{LegMonomial{1, 0}}, dm1 * dm1));

    const T f = family_l_closed(3, UPoly::u());
    CHECK(T::one(2, 3) * f == f);
    CHECK(f * T::one(2, 3) == f);

    CHECK_THROWS_AS(T::one(1, 3) * T::one(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(T::one(1, 3) * T::one(1, 2), std::invalid_argument);
}

TEST_CASE("truncation drops terms above order N")
{
    const T p = T::P(2);
    CHECK((p * p * p).is_zero());
    CHECK(!(p * p).is_zero());
    CHECK(T::P(0).is_zero());
    // Q carries no grade
    CHECK(!(T::Q(0) * T::Q(0)).is_zero());
}

TEST_CASE("series_apply")
{
    const int n = 5;
    CHECK(exp(T(2, n)) == T::one(2, n));

    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        const T a = testing::random_element(rng, 1, n, 3, 1);
        // geometric inverse of 1 + a
        const T inv = series_apply(geometric_coefficients(n), a);
        CHECK((T::one(1, n) + a) * inv == T::one(1, n));
        CHECK(inv * (T::one(1, n) + a) == T::one(1, n));
    }

    // exp(log(1 + (-P) (x) 1)) = 1 (x) 1 + (-P) (x) 1
    const T minus_p = tensor(-T::P(n), T::one(1, n));
    CHECK(exp(log1p(minus_p)) == T::one(2, n) + minus_p);

    CHECK_THROWS_AS(exp(T::D(n)), std::invalid_argument);
    CHECK_THROWS_AS(exp(T::Q(n)), std::invalid_argument);
}

TEST_CASE("coproduct")
{
    const int n = 4;
    CHECK(coproduct(T::P(n), 0) == tensor(T::P(n), T::one(1, n)) + tensor(T::one(1, n), T::P(n)));
    CHECK(coproduct(T::one(1, n), 0) == T::one(2, n));

    // binomial theorem on the primitive element P
    T expected(2, n);
    expected.add_term(key2(2, 0), k(2, 1));
    expected.add_term(key2(1, 1), k(2, 2));
    expected.add_term(key2(0, 2), k(2, 1));
    CHECK(coproduct(T::P(n) * T::P(n), 0) == expected);

    CHECK(coproduct(T::D(n), 0) == tensor(T::D(n), T::one(1, n)) + tensor(T::one(1, n), T::D(n)));
    CHECK_THROWS_AS(coproduct(T::one(3, n), 0), std::invalid_argument);
}

TEST_CASE("counit_contract")
{
    const int n = 4;
    CHECK(counit_contract(T::one(2, n), 0) == T::one(1, n));
    CHECK(counit_contract(tensor(T::P(n), T::D(n)), 0).is_zero());
    // only the k = l = 0 term of the closed form survives
    CHECK(counit_contract(family_l_closed(n, UPoly::u()), 0) == T::one(1, n));
    CHECK(counit_contract(family_l_closed(n, UPoly::u()), 1) == T::one(1, n));
    CHECK_THROWS_AS(counit_contract(T::one(1, n), 0), std::invalid_argument);
}

TEST_CASE("antipode")
{
    const int n = 4;
    CHECK(antipode(T::D(n)) == -T::D(n));
    CHECK(antipode(T::P(n)) == -T::P(n));
    // S(PD) = S(D) S(P) = DP = P(D-1)
    CHECK(antipode(T::P(n) * T::D(n)) == T::D(n) * T::P(n));
    const T pd2 = T::P(n) * T::D(n) * T::D(n);
    CHECK(antipode(antipode(pd2)) == pd2);
    CHECK_THROWS_AS(antipode(T::one(2, n)), std::invalid_argument);
}

TEST_CASE("fold_mul_antipode")
{
    const int n = 3;
    CHECK(fold_mul_antipode(T::one(2, n), FoldSide::right) == T::one(1, n));
    CHECK(fold_mul_antipode(tensor(T::P(n), T::D(n)), FoldSide::right) == -(T::P(n) * T::D(n)));
    CHECK(fold_mul_antipode(tensor(T::P(n), T::D(n)), FoldSide::left) == -(T::P(n) * T::D(n)));

    // chi S(D) chi^-1 for F_0 reproduces -(1 - P) D
    const T chi = fold_mul_antipode(jordanian_zero_closed(n, Direction::twist), FoldSide::right);
    const T s_d = chi * antipode(T::D(n)) * inverse(chi);
    CHECK(s_d == -((T::one(1, n) - T::P(n)) * T::D(n)));

    CHECK_THROWS_AS(fold_mul_antipode(T::one(1, n), FoldSide::right), std::invalid_argument);
}

TEST_CASE("conjugate")
{
    const T one2 = T::one(2, 3);
    CHECK(conjugate(one2, T::P(3), one2) == coproduct(T::P(3), 0));

    // first-order correction to Delta^F(P) is (2u-1) P (x) P
    const UPoly u = UPoly::u();
    const T f = family_l_closed(3, u);
    const T delta = conjugate(f, T::P(3), inverse(f));
    T expected(2, 3);
    expected.add_term(key2(1, 1), k(2, 1) * (u * UPoly(2) - UPoly(1)));
    CHECK(delta.grade_slice(1) == coproduct(T::P(3), 0));
    CHECK(delta.grade_slice(2) == expected);

    // Delta^{F_0}(D) = D (x) 1 + 1/(1-P) (x) D, so at N = 1: D(x)1 + 1(x)D + P(x)D
    const T f0 = jordanian_zero_closed(1, Direction::twist);
    const T d_conj = conjugate(f0, T::D(1), inverse(f0));
    T expected_d(2, 1);
    expected_d.add_term(key2(0, 0), xv(2, 0) + xv(2, 1));
    expected_d.add_term(key2(1, 0), xv(2, 1));
    CHECK(d_conj == expected_d);

    CHECK_THROWS_AS(conjugate(f, T::P(3), f), std::domain_error);
}

TEST_CASE("grade_slice and specialize_u")
{
    const UPoly u = UPoly::u();
    const T f = family_l_closed(4, u);
    CHECK(f.grade_slice(0) == T::one(2, 4));
    CHECK(T::one(2, 4).grade_slice(2).is_zero());

    T g1(2, 4);
    g1.add_term(key2(1, 0), xv(2, 1) * (UPoly(1) - u));
    g1.add_term(key2(0, 1), -xv(2, 0) * u);
    CHECK(f.grade_slice(1) == g1);

    T sum(2, 4);
    for (int n = 0; n <= 4; ++n) {
        sum += f.grade_slice(n);
    }
    CHECK(sum == f);
    CHECK_THROWS_AS(f.grade_slice(5), std::out_of_range);
    CHECK_THROWS_AS(f.grade_slice(-1), std::out_of_range);

    CHECK(f.specialize_u(0) == jordanian_zero_closed(4, Direction::twist));
    CHECK(T::one(2, 4).specialize_u(Rational(1, 2)) == T::one(2, 4));
    T g1_at_1(2, 4);
    g1_at_1.add_term(key2(0, 1), -xv(2, 0));
    CHECK(g1.specialize_u(1) == g1_at_1);
}

TEST_CASE("compare reports the lowest differing grade")
{
    const T f0 = jordanian_zero_closed(1, Direction::twist);
    const T f1 = jordanian_one_closed(1, Direction::twist);
    CHECK(compare(f0, f0).equal);
    CHECK(compare(f0, f0 + T(2, 1)).equal);
    const Comparison c = compare(f0, f1);
    CHECK_FALSE(c.equal);
    REQUIRE(c.first_difference);
    CHECK(c.first_difference->grade == 1);
    CHECK(c.failing_grades == std::vector<int>{1});
    CHECK_THROWS_AS(compare(f0, T::one(1, 1)), std::invalid_argument);
}

TEST_CASE("property: associativity and grading")
{
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        const int legs = 1 + trial % 3;
        const T a = testing::random_element(rng, legs, 3, 3);
        const T b = testing::random_element(rng, legs, 3, 3);
        const T c = testing::random_element(rng, legs, 3, 3);
        CHECK((a * b) * c == a * (b * c));
        const T ab = a * b;
        for (const auto &[key, d] : ab.terms()) {
            CHECK(grade_of(key) <= 3);
        }
    }
    // grades add exactly
    const T p2 = T::P(5) * T::P(5);
    CHECK((p2 * T::P(5)).grade_slice(3) == p2 * T::P(5));
}

TEST_CASE("property: Hopf structure of the undeformed algebra")
{
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 40; ++trial) {
        const T e = testing::random_element(rng, 1, 3, 3);
        const T f = testing::random_element(rng, 1, 3, 3);
        // coassociativity
        CHECK(coproduct(coproduct(e, 0), 0) == coproduct(coproduct(e, 0), 1));
        // counit
        CHECK(counit_contract(coproduct(e, 0), 0) == e);
        CHECK(counit_contract(coproduct(e, 0), 1) == e);
        // Delta is an algebra map
        CHECK(coproduct(e * f, 0) == coproduct(e, 0) * coproduct(f, 0));
        // antipode axiom both ways
        CHECK(fold_mul_antipode(coproduct(e, 0), FoldSide::right) == T::constant(1, 3, counit(e)));
        CHECK(fold_mul_antipode(coproduct(e, 0), FoldSide::left) == T::constant(1, 3, counit(e)));
        // S is an involutive anti-automorphism
        CHECK(antipode(antipode(e)) == e);
        CHECK(antipode(e * f) == antipode(f) * antipode(e));
    }
}

TEST_CASE("property: exp after log is the identity on grade >= 1")
{
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 20; ++trial) {
        const T a = testing::random_element(rng, 1 + trial % 2, 4, 4, 1);
        CHECK(exp(log1p(a)) == T::one(a.legs(), 4) + a);
        CHECK(log1p(exp(a) - T::one(a.legs(), 4)) == a);
    }
}
