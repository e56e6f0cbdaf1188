#include "ribbonroots/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

#include "ribbonroots/errors.hpp"

namespace ribbonroots {

namespace {

using cld = std::complex<long double>;

constexpr long double kEps = std::numeric_limits<long double>::epsilon();
constexpr long kIntegerScanCap = 1000000;

struct Evaluation {
    cld value;
    cld derivative;
    long double magnitude_sum;  // sum |c_i| |z|^i, for rounding estimates
};

Evaluation evaluate(const std::vector<long double>& c, cld z) {
    cld p = 0, dp = 0;
    long double mag = 0;
    const long double az = std::abs(z);
    for (std::size_t i = c.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
        mag = mag * az + std::fabs(c[i]);
    }
    return {p, dp, mag};
}

// Fujiwara's bound on the moduli of the roots of a monic polynomial.
long double fujiwara_bound(const std::vector<long double>& monic) {
    const std::size_t n = monic.size() - 1;
    long double b = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        long double coef = std::fabs(monic[n - i]);
        if (i == n) coef /= 2;
        b = std::max(b, std::pow(coef, 1.0L / static_cast<long double>(i)));
    }
    return 2 * b;
}

std::vector<long double> monic_long_double(const RationalPolynomial& p) {
    // Normalizing by the exact leading coefficient first keeps large Newton-basis
    // products from overflowing before rounding.
    std::vector<long double> out;
    const Rational lead = p.leading();
    for (const Rational& c : p.coefficients()) out.push_back(to_long_double(c / lead));
    return out;
}

std::vector<cld> aberth(const std::vector<long double>& monic, int max_iterations) {
    const std::size_t n = monic.size() - 1;
    std::vector<cld> z(n);
    const long double radius = std::max(fujiwara_bound(monic), 1.0L);
    const cld center = -monic[n - 1] / static_cast<long double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        const long double theta = 2 * std::numbers::pi_v<long double> * static_cast<long double>(j) /
                                      static_cast<long double>(n) + 0.4L;
        z[j] = center + std::polar(radius, theta);
    }
    // A root stops moving once its value is at the rounding noise of the evaluation.
    std::vector<bool> settled(n, false);
    for (int iter = 0; iter < max_iterations; ++iter) {
        long double max_step = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (settled[i]) continue;
            const Evaluation e = evaluate(monic, z[i]);
            if (std::abs(e.value) <= 4 * static_cast<long double>(n) * kEps * e.magnitude_sum) {
                settled[i] = true;
                continue;
            }
            if (e.derivative == cld(0)) {
                z[i] += cld(1e-6L, 1e-6L);
                max_step = 1;
                continue;
            }
            const cld ratio = e.value / e.derivative;
            cld repulsion = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) repulsion += 1.0L / (z[i] - z[j]);
            const cld step = ratio / (1.0L - ratio * repulsion);
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step) / std::max(1.0L, std::abs(z[i])));
        }
        if (max_step < 64 * kEps) break;
    }
    return z;
}

void polish(const std::vector<long double>& monic, cld& z) {
    for (int iter = 0; iter < 8; ++iter) {
        const Evaluation e = evaluate(monic, z);
        if (e.derivative == cld(0) || e.value == cld(0)) return;
        const cld next = z - e.value / e.derivative;
        if (std::abs(evaluate(monic, next).value) >= std::abs(e.value)) return;
        z = next;
    }
}

}  // namespace

RootReport find_roots(const RationalPolynomial& p, const RootFinderOptions& options) {
    if (p.degree() < 1) throw DomainError("root finding needs degree >= 1");
    RootReport report;
    auto add_exact = [&](long r) {
        report.roots.emplace_back(static_cast<double>(r), 0.0);
        report.residuals.push_back(0.0);
        report.error_bounds.push_back(0.0);
        report.exact.push_back(true);
    };

    RationalPolynomial q = p;
    while (q.degree() >= 1 && q.coefficient(0) == 0) {
        q = q.deflate(Rational(0));
        add_exact(0);
    }
    if (q.degree() >= 1) {
        const long double bound = fujiwara_bound(monic_long_double(q));
        const long limit = static_cast<long>(std::min<long double>(std::ceil(bound), kIntegerScanCap));
        const BigInt c0 = integer_coefficients(q).front();
        for (long r = -limit; r <= limit && q.degree() >= 1; ++r) {
            if (r == 0 || c0 % BigInt(r) != 0) continue;
            while (q.degree() >= 1 && q(Rational(r)) == 0) {
                q = q.deflate(Rational(r));
                add_exact(r);
            }
        }
    }

    if (q.degree() >= 1) {
        const std::vector<long double> monic = monic_long_double(q);
        std::vector<cld> z = aberth(monic, options.max_iterations);
        const std::vector<long double> full = monic_long_double(p);
        const auto n = static_cast<long double>(q.degree());
        for (cld& root : z) {
            polish(monic, root);
            const Evaluation e = evaluate(monic, root);
            const long double noise = 2 * n * kEps * e.magnitude_sum;
            const long double err =
                std::abs(e.derivative) > 0 ? n * (std::abs(e.value) + noise) / std::abs(e.derivative)
                                           : std::numeric_limits<long double>::infinity();
            const Evaluation ef = evaluate(full, root);
            const long double scale = std::pow(std::max(1.0L, std::abs(root)), static_cast<long double>(p.degree()));
            const long double residual = std::abs(ef.value) / scale;
            if (!(residual <= options.residual_tolerance)) {
                std::ostringstream os;
                os << "root finder did not certify root (" << static_cast<double>(root.real()) << ", "
                   << static_cast<double>(root.imag()) << "): scaled residual " << static_cast<double>(residual)
                   << " for " << to_string(p);
                throw NumericalError(os.str());
            }
            report.roots.emplace_back(static_cast<double>(root.real()), static_cast<double>(root.imag()));
            report.residuals.push_back(static_cast<double>(residual));
            report.error_bounds.push_back(static_cast<double>(err));
            report.exact.push_back(false);
        }
    }

    std::vector<std::size_t> order(report.roots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& x = report.roots[a];
        const auto& y = report.roots[b];
        return std::pair(x.real(), x.imag()) < std::pair(y.real(), y.imag());
    });
    RootReport sorted;
    for (std::size_t i : order) {
        sorted.roots.push_back(report.roots[i]);
        sorted.residuals.push_back(report.residuals[i]);
        sorted.error_bounds.push_back(report.error_bounds[i]);
        sorted.exact.push_back(report.exact[i]);
    }
    return sorted;
}

namespace {

// Folds one root's margin into a named check. `slack` absorbs the root's error bound.
void record(BoundCheck& check, double margin, double slack) {
    check.margin = std::min(check.margin, margin);
    if (margin < -(kBoundSlack + slack)) check.holds = false;
}

BoundCheck fresh(std::string name) {
    return {std::move(name), true, std::numeric_limits<double>::infinity()};
}

}  // namespace

RootBoundsVerdict check_main_bounds(const DescentSet& I, const RootFinderOptions& options) {
    RootBoundsVerdict v;
    if (I.empty()) {
        v.vacuous = true;
        return v;
    }
    const double m = I.max();
    v.report = find_roots(descent_polynomial(I), options);
    BoundCheck modulus = fresh("|z|<=m"), real = fresh("Re(z)>=-1");
    for (std::size_t i = 0; i < v.report.roots.size(); ++i) {
        const auto z = v.report.roots[i];
        const double err = v.report.error_bounds[i];
        record(modulus, m - std::abs(z), err);
        record(real, z.real() + 1.0, err);
    }
    v.checks = {modulus, real};
    v.holds = modulus.holds && real.holds;
    return v;
}

RootBoundsVerdict check_excitation_bounds(const SkewShape& shape, const RootFinderOptions& options) {
    RootBoundsVerdict v;
    const NewtonForm nf = excitation_factor(shape);
    if (nf.s() == 0) {
        v.vacuous = true;
        return v;
    }
    const double m = alpha_vector(shape.outer()).front();
    v.report = find_roots(nf.to_monomial(), options);
    BoundCheck left = fresh("|z+m|<=m"), right = fresh("|z+1|<=m");
    for (std::size_t i = 0; i < v.report.roots.size(); ++i) {
        const auto z = v.report.roots[i];
        const double err = v.report.error_bounds[i];
        record(left, m - std::abs(z + m), err);
        record(right, m - std::abs(z + 1.0), err);
    }
    v.checks = {left, right};
    v.holds = left.holds && right.holds;
    return v;
}

BridgeVerdict check_root_bridge(const DescentSet& I, double tolerance) {
    BridgeVerdict v;
    if (I.empty()) return v;
    const SkewShape shape = ribbon_from_descent_set(I);
    const int m = I.max();

    std::set<int> from_factors;
    for (int beta : lemma23_factor_set(shape)) from_factors.insert(m - beta);
    v.factor_set_matches = from_factors == I.elements();

    std::vector<std::complex<double>> expected;
    for (int i : I.elements()) expected.emplace_back(i, 0.0);
    const NewtonForm nf = excitation_factor(shape);
    if (nf.s() > 0)
        for (auto z : find_roots(nf.to_monomial()).roots) expected.push_back(z + static_cast<double>(m));

    std::vector<std::complex<double>> actual = find_roots(descent_polynomial(I)).roots;
    if (actual.size() != expected.size()) {
        v.holds = false;
        v.max_mismatch = std::numeric_limits<double>::infinity();
        return v;
    }
    std::vector<bool> used(expected.size(), false);
    for (auto z : actual) {
        std::size_t best = expected.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < expected.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(z - expected[j]);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        used[best] = true;
        v.max_mismatch = std::max(v.max_mismatch, best_d);
    }
    v.holds = v.factor_set_matches && v.max_mismatch <= tolerance;
    return v;
}

RationalPolynomial appendix_a_polynomial(int k) {
    if (k < 1) throw DomainError("factorial-shift polynomial needs k >= 1");
    std::vector<long> shifts;
    for (int i = 1; i <= k; ++i) shifts.push_back(i);
    RationalPolynomial numerator =
        RationalPolynomial::product_of_shifts(shifts) + RationalPolynomial::constant(-Rational(factorial(k)));
    return numerator.deflate(Rational(0));
}

LemmaA1Verdict check_lemma_a1(int k, const RootFinderOptions& options) {
    LemmaA1Verdict v;
    const RationalPolynomial P = appendix_a_polynomial(k);
    v.margin_plus_one = v.margin_plus_k = std::numeric_limits<double>::infinity();
    if (P.degree() < 1) return v;
    const RootReport report = find_roots(P, options);
    const double kd = k;
    for (std::size_t i = 0; i < report.roots.size(); ++i) {
        const auto z = report.roots[i];
        const double err = report.error_bounds[i];
        const double m1 = kd - std::abs(z + 1.0);
        const double mk = kd - std::abs(z + kd);
        v.margin_plus_one = std::min(v.margin_plus_one, m1);
        v.margin_plus_k = std::min(v.margin_plus_k, mk);
        if (m1 < -(kBoundSlack + err) || mk < -(kBoundSlack + err)) v.holds = false;
        if (mk <= kStrictnessReviewMargin + err) {
            v.strict = false;
            v.flagged.push_back(z);
        }
    }
    return v;
}

namespace {

std::vector<long double> long_double_coefficients(const RationalPolynomial& p) {
    std::vector<long double> out;
    for (const Rational& c : p.coefficients()) out.push_back(to_long_double(c));
    return out;
}

}  // namespace

LemmaA2Verdict check_lemma_a2(int k, int samples, const std::vector<double>& radius_factors) {
    if (k < 1 || samples < 1) throw DomainError("boundary sampling needs k >= 1 and samples >= 1");
    const std::vector<long double> c = long_double_coefficients(appendix_a_polynomial(k));
    const long double floor_value = to_long_double(Rational(factorial(k - 1)));
    LemmaA2Verdict v;
    v.min_ratio = std::numeric_limits<double>::infinity();
    const long double center = -(k + 1);
    for (double f : radius_factors) {
        const long double radius = static_cast<long double>(k + 1) * f;
        for (int j = 0; j < samples; ++j) {
            const long double theta = 2 * std::numbers::pi_v<long double> * j / samples;
            const cld z = cld(center, 0) + std::polar(radius, theta);
            const long double ratio = std::abs(evaluate(c, z).value) / floor_value;
            ++v.samples_checked;
            if (ratio < v.min_ratio) {
                v.min_ratio = static_cast<double>(ratio);
                v.witness = {static_cast<double>(z.real()), static_cast<double>(z.imag())};
            }
        }
    }
    v.holds = v.min_ratio >= 1.0 - 1e-9;
    return v;
}

InteriorBoundVerdict check_appendix_a_interior_bound(int k, int shift, int radius, int samples) {
    InteriorBoundVerdict v;
    const RationalPolynomial Q = appendix_a_polynomial(k).shifted(Rational(-shift));
    v.shifted_coefficients = integer_coefficients(Q);
    const int d = Q.degree();
    BigInt bound = 0;
    BigInt power = 1;
    for (int i = 0; i <= d; ++i) {
        const BigInt& c = v.shifted_coefficients[static_cast<std::size_t>(i)];
        bound += (i == d ? BigInt(abs(c)) : BigInt(-abs(c))) * power;
        power *= radius;
    }
    v.triangle_bound = bound;
    const std::vector<long double> c = long_double_coefficients(Q);
    v.min_sampled = std::numeric_limits<double>::infinity();
    for (int j = 0; j < samples; ++j) {
        const long double theta = 2 * std::numbers::pi_v<long double> * j / samples;
        const long double value = std::abs(evaluate(c, std::polar(static_cast<long double>(radius), theta)).value);
        v.min_sampled = std::min(v.min_sampled, static_cast<double>(value));
    }
    v.holds = v.min_sampled >= bound.get_d() * (1 - 1e-12) && bound > factorial(k - 1);
    return v;
}

void PerturbedPolynomial::validate() const {
    if (a.empty()) throw DomainError("perturbed polynomial needs k >= 1");
    if (g.size() != a.size()) throw DomainError("a and g must have the same length");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 1) throw DomainError("a_i must be positive");
        if (i > 0 && a[i] <= a[i - 1]) throw DomainError("a must be strictly increasing");
        if (g[i] < 0 || g[i] > static_cast<long>(i + 1)) throw DomainError("g_i must lie in [0, i]");
    }
}

RationalPolynomial perturbed_polynomial(const PerturbedPolynomial& pp) {
    pp.validate();
    const std::size_t k = pp.a.size();
    RationalPolynomial out;
    Rational g_product = 1;
    for (std::size_t i = 0; i <= k; ++i) {
        std::vector<long> shifts(pp.a.begin() + static_cast<long>(i), pp.a.end());
        out += RationalPolynomial::product_of_shifts(shifts) * g_product;
        if (i < k) g_product *= pp.g[i];
    }
    return out;
}

bool in_sharpness_family(const PerturbedPolynomial& pp) {
    const std::size_t k = pp.a.size();
    if (k % 2 == 0) return false;
    for (std::size_t i = 0; i < k; ++i) {
        if (pp.g[i] != static_cast<long>(i + 1)) return false;
        if (i > 0 && pp.a[i] != pp.a[i - 1] + 1) return false;
    }
    return true;
}

PerturbationVerdict check_perturbation_lemma(const PerturbedPolynomial& pp, const RootFinderOptions& options) {
    PerturbationVerdict v;
    const RationalPolynomial P = perturbed_polynomial(pp);
    v.bound = pp.a.back() + 1;
    const RootReport report = find_roots(P, options);
    for (std::size_t i = 0; i < report.roots.size(); ++i) {
        const double mod = std::abs(report.roots[i]);
        v.max_modulus = std::max(v.max_modulus, mod);
        if (mod > v.bound + kPerturbationSlack + report.error_bounds[i]) v.holds = false;
    }
    v.sharpness_family = in_sharpness_family(pp);
    if (v.sharpness_family) {
        v.sharpness_root = P(Rational(-pp.a.back() - 1)) == 0;
        v.holds = v.holds && v.sharpness_root;
    }
    return v;
}

PerturbedPolynomial random_perturbed(std::mt19937_64& rng, int max_k, int max_a) {
    std::uniform_int_distribution<int> pick_k(1, std::min(max_k, max_a));
    const int k = pick_k(rng);
    std::vector<int> pool(static_cast<std::size_t>(max_a));
    for (int i = 0; i < max_a; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    PerturbedPolynomial pp;
    pp.a.assign(pool.begin(), pool.begin() + k);
    std::sort(pp.a.begin(), pp.a.end());
    for (int i = 1; i <= k; ++i) {
        std::uniform_int_distribution<int> pick_g(0, 1000 * i);
        pp.g.push_back(make_rational(pick_g(rng), 1000));
    }
    return pp;
}

}  // namespace ribbonroots
