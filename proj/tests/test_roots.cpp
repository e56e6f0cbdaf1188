#include <algorithm>
#include <random>

#include "doctest.h"
#include "ribbonroots/errors.hpp"
#include "ribbonroots/roots.hpp"

using namespace ribbonroots;

namespace {

using cd = std::complex<double>;

// Greedy nearest matching; returns the largest distance.
double match(std::vector<cd> got, const std::vector<cd>& want) {
    REQUIRE(got.size() == want.size());
    double worst = 0;
    for (const cd& w : want) {
        auto it = std::min_element(got.begin(), got.end(), [&](cd a, cd b) { return std::abs(a - w) < std::abs(b - w); });
        worst = std::max(worst, std::abs(*it - w));
        got.erase(it);
    }
    return worst;
}

}  // namespace

TEST_CASE("integer roots are found exactly") {
    const long shifts[] = {-1, -2, -3, 4};
    const RootReport r = find_roots(RationalPolynomial::product_of_shifts(shifts));
    REQUIRE(r.roots.size() == 4);
    CHECK(std::all_of(r.exact.begin(), r.exact.end(), [](bool b) { return b; }));
    CHECK(match(r.roots, {-4, 1, 2, 3}) == 0);
}

TEST_CASE("complex roots of x^2 + 1 and a cubic") {
    CHECK(match(find_roots(RationalPolynomial{Rational(1), Rational(0), Rational(1)}).roots, {{0, 1}, {0, -1}}) < 1e-12);
    // (x^2 - 2x + 5)(2x - 1)
    const RationalPolynomial p = RationalPolynomial{Rational(5), Rational(-2), Rational(1)} *
                                 RationalPolynomial{Rational(-1), Rational(2)};
    const RootReport r = find_roots(p);
    CHECK(match(r.roots, {{1, 2}, {1, -2}, {0.5, 0}}) < 1e-12);
    for (double e : r.error_bounds) CHECK(e < 1e-9);
}

TEST_CASE("random products with known roots") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> num(-40, 40);
    for (int trial = 0; trial < 40; ++trial) {
        RationalPolynomial p = RationalPolynomial::constant(1);
        std::vector<cd> want;
        for (int j = 0; j < 3; ++j) {
            // (x - a)^2 + b^2 with a, b quarter-integers.
            const Rational a(num(rng), 4), b(num(rng) | 1, 4);
            p *= RationalPolynomial{a * a + b * b, Rational(-2) * a, Rational(1)};
            want.emplace_back(a.get_d(), b.get_d());
            want.emplace_back(a.get_d(), -b.get_d());
        }
        CHECK(match(find_roots(p).roots, want) < 1e-8);
    }
}

TEST_CASE("root finding needs a positive degree") {
    CHECK_THROWS_AS(find_roots(RationalPolynomial::constant(3)), DomainError);
}

TEST_CASE("roots of d_{10} match the published plot") {
    const RootBoundsVerdict v = check_main_bounds({10});
    const std::vector<cd> plotted = {{-1, 0},          {0.123556, -2.080159}, {0.123556, 2.080159}, {2.852828, -3.469780},
                                     {2.852828, 3.469780}, {6.147172, -3.469780}, {6.147172, 3.469780}, {8.876444, -2.080159},
                                     {8.876444, 2.080159}, {10, 0}};
    CHECK(match(v.report.roots, plotted) <= 1e-4);
    CHECK(v.holds);
    for (const BoundCheck& c : v.checks) CHECK(c.margin == doctest::Approx(0).epsilon(1e-12));
}

TEST_CASE("root bounds on small sweeps") {
    for (const DescentSet& I : nonempty_subsets(6)) {
        CHECK(check_main_bounds(I).holds);
        CHECK(check_excitation_bounds(ribbon_from_descent_set(I)).holds);
        const BridgeVerdict b = check_root_bridge(I);
        CHECK(b.holds);
        CHECK(b.factor_set_matches);
    }
    CHECK(check_main_bounds(DescentSet()).vacuous);
}

TEST_CASE("factorial-shift polynomial") {
    // ((z+1)(z+2)(z+3) - 6) / z = z^2 + 6z + 11
    CHECK(appendix_a_polynomial(3) == RationalPolynomial{Rational(11), Rational(6), Rational(1)});
    for (int k = 2; k <= 12; ++k) {
        const LemmaA1Verdict v = check_lemma_a1(k);
        CHECK(v.holds);
        CHECK(v.margin_plus_one >= -1e-9);
        CHECK(v.margin_plus_k >= -1e-9);
    }
    for (int k = 1; k <= 8; ++k) CHECK(check_lemma_a2(k, 512).holds);
}

TEST_CASE("k = 7 interior estimate") {
    const InteriorBoundVerdict v = check_appendix_a_interior_bound(7, 5, 5, 1024);
    CHECK(v.shifted_coefficients == std::vector<BigInt>{1008, 192, 44, 20, -3, -2, 1});
    CHECK(v.triangle_bound == 1932);
    CHECK(v.min_sampled >= 1932);
    CHECK(v.holds);
}

TEST_CASE("perturbation lemma and its sharpness") {
    for (int k : {3, 5, 7}) {
        PerturbedPolynomial pp;
        for (int i = 1; i <= k; ++i) {
            pp.a.push_back(i);
            pp.g.emplace_back(i);
        }
        CHECK(in_sharpness_family(pp));
        CHECK(perturbed_polynomial(pp)(Rational(-k - 1)) == 0);
        const PerturbationVerdict v = check_perturbation_lemma(pp);
        CHECK(v.holds);
        CHECK(v.sharpness_root);
        CHECK(v.max_modulus == doctest::Approx(k + 1).epsilon(1e-9));
    }
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) CHECK(check_perturbation_lemma(random_perturbed(rng)).holds);

    PerturbedPolynomial bad{{2, 1}, {Rational(0), Rational(0)}};
    CHECK_THROWS_AS(bad.validate(), DomainError);
    PerturbedPolynomial big_g{{1}, {Rational(2)}};
    CHECK_THROWS_AS(big_g.validate(), DomainError);
}
