#include "doctest.h"
#include "oracles.hpp"
#include "ribbonroots/descent.hpp"
#include "ribbonroots/errors.hpp"

using namespace ribbonroots;

namespace {

RationalPolynomial x_plus(long c) { return RationalPolynomial::linear(Rational(c)); }

// (N-5)(N-3)/360 * (27 N(N-1)(N-2) + 27 N(N-1) + 21 N + 24), assembled by hand.
RationalPolynomial displayed_d35() {
    const RationalPolynomial N = x_plus(0);
    RationalPolynomial inner = N * x_plus(-1) * x_plus(-2) * Rational(27);
    inner += N * x_plus(-1) * Rational(27);
    inner += N * Rational(21);
    inner += RationalPolynomial::constant(24);
    return x_plus(-5) * x_plus(-3) * inner * Rational(1, 360);
}

}  // namespace

TEST_CASE("worked example {3,5}") {
    const DescentSet I{3, 5};
    const SkewShape shape = ribbon_from_descent_set(I);
    const NewtonForm nf = excitation_factor(shape);
    CHECK(nf.alphas == std::vector<int>{5, 4, 3});
    CHECK(nf.coeffs == std::vector<BigInt>{27, 27, 21, 24});
    CHECK(lemma33_coefficients(shape) == nf.coeffs);
    // T(t) = t (t + 2) / 360
    CHECK(trivial_part(shape, I) == RationalPolynomial{Rational(0), Rational(2, 360), Rational(1, 360)});
    CHECK(descent_polynomial(I) == displayed_d35());
    for (int n = 6; n <= 9; ++n) CHECK(descent_polynomial(I)(Rational(n)) == oracle::permutations_with_descents({3, 5}, n));
    CHECK(lemma23_factor_set(shape) == std::vector<int>{0, 2});
}

TEST_CASE("empty descent set gives the constant 1") {
    CHECK(descent_polynomial(DescentSet()) == RationalPolynomial::constant(1));
    CHECK(ribbon_polynomial(DescentSet()) == RationalPolynomial::constant(1));
}

TEST_CASE("descent polynomials match permutation counts") {
    for (const DescentSet& I : nonempty_subsets(5)) {
        const RationalPolynomial d = descent_polynomial(I);
        CHECK(d.degree() == I.max());
        for (int n = I.max() + 1; n <= I.max() + 3 && n <= 8; ++n)
            CHECK(d(Rational(n)) == oracle::permutations_with_descents(I.elements(), n));
    }
}

TEST_CASE("brute force descent counts and histogram agree") {
    const auto hist = descent_set_histogram(6);
    long total = 0;
    for (const BigInt& c : hist) total += c.get_si();
    CHECK(total == 720);
    for (const DescentSet& I : nonempty_subsets(5)) {
        CHECK(hist[descent_mask(I)] == brute_force_descent_count(I, 6));
        CHECK(brute_force_descent_count(I, 6) == oracle::permutations_with_descents(I.elements(), 6));
    }
    CHECK(brute_force_descent_count({7}, 5) == 0);
    CHECK_THROWS_AS(brute_force_descent_count({1}, 11), ResourceError);
    CHECK_THROWS_AS(descent_set_histogram(11), ResourceError);
}

TEST_CASE("Naruse evaluation of the extended ribbon") {
    const SkewShape shape = ribbon_from_descent_set({2, 4});
    for (int t = 1; t <= 4; ++t) {
        const SkewShape ext{extend_first_row(shape.outer(), t), shape.inner()};
        CHECK(ribbon_count_via_hooks(shape, t) == oracle::syt_backtrack(ext));
    }
    CHECK_THROWS_AS(ribbon_count_via_hooks(shape, 0), DomainError);
}

TEST_CASE("shape preconditions") {
    CHECK_THROWS_AS(excitation_factor(SkewShape(Partition{3, 2}, Partition{1})), DomainError);
    CHECK_THROWS_AS(lemma33_coefficients(SkewShape(Partition{3, 3}, Partition{1})), DomainError);
    CHECK_THROWS_AS(trivial_part(ribbon_from_descent_set({2}), DescentSet{3}), DomainError);
}

TEST_CASE("first-row normalization") {
    const SkewShape s{Partition{6, 4, 3}, Partition{3, 2}};
    const NormalizedShape n = normalize_first_row(s);
    CHECK(n.shape.outer() == Partition{4, 4, 3});
    CHECK(n.u == 3);
    CHECK(normalize_first_row(ribbon_from_descent_set({3, 5})).u == 1);
    CHECK_THROWS_AS(normalize_first_row(SkewShape(Partition{6, 2}, Partition{3})), DomainError);
}

TEST_CASE("coefficient inequalities over small sets") {
    for (const DescentSet& I : nonempty_subsets(6)) {
        const SkewShape shape = ribbon_from_descent_set(I);
        const NewtonForm nf = excitation_factor(shape);
        CHECK(check_coefficient_monotonicity(nf).holds);
        CHECK(check_refined_corollaries(shape).holds);
        const PositivityVerdict p = check_shifted_positivity(I);
        CHECK(p.holds);
        CHECK(p.value_at_zero == (I.count() % 2 ? -1 : 1));
    }
    // I = {1}: the ribbon is a single column of two cells and E is constant.
    const NewtonForm one = excitation_factor(ribbon_from_descent_set({1}));
    CHECK(one.coeffs == std::vector<BigInt>{1});
    CHECK(descent_polynomial({1}) == RationalPolynomial{Rational(-1), Rational(1)});
}

TEST_CASE("monotonicity flags an increasing sequence") {
    NewtonForm nf{{2, 1}, {1, 5, 1}};
    CHECK_FALSE(check_coefficient_monotonicity(nf).holds);
    NewtonForm flat{{}, {3}};
    CHECK(check_coefficient_monotonicity(flat).vacuous);
}

TEST_CASE("Newton form expands to the monomial basis") {
    const NewtonForm nf{{5, 4, 3}, {27, 27, 21, 24}};
    const RationalPolynomial e = nf.to_monomial();
    for (int t = -3; t <= 3; ++t) {
        const long v = 27L * (t + 5) * (t + 4) * (t + 3) + 27L * (t + 5) * (t + 4) + 21L * (t + 5) + 24;
        CHECK(e(Rational(t)) == v);
    }
}
