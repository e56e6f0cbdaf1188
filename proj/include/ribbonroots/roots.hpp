#pragma once

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "ribbonroots/bigint.hpp"
#include "ribbonroots/descent.hpp"
#include "ribbonroots/polynomial.hpp"
#include "ribbonroots/shapes.hpp"

namespace ribbonroots {

struct RootFinderOptions {
    int max_iterations = 2000;
    // Bound on |p(z)| / (|lead| * max(1,|z|)^deg) after polishing.
    double residual_tolerance = 1e-10;
};

/// All complex roots with multiplicity. Integer roots are found and deflated exactly
/// first; the rest come from Aberth-Ehrlich iteration followed by Newton polishing.
struct RootReport {
    std::vector<std::complex<double>> roots;
    std::vector<double> residuals;
    // Radius of a disk around each root guaranteed (up to evaluation rounding) to
    // contain a true root: deg * |p| / |p'|. Zero for exact roots.
    std::vector<double> error_bounds;
    std::vector<bool> exact;
};

RootReport find_roots(const RationalPolynomial& p, const RootFinderOptions& options = {});

inline constexpr double kBoundSlack = 1e-9;

struct BoundCheck {
    std::string name;
    bool holds = true;
    double margin = 0.0;  // smallest (bound - value) over all roots; negative = outside
};

struct RootBoundsVerdict {
    bool holds = true;
    bool vacuous = false;
    RootReport report;
    std::vector<BoundCheck> checks;
};

/// Roots of d_I satisfy |z| <= m and Re(z) >= -1.
RootBoundsVerdict check_main_bounds(const DescentSet& I, const RootFinderOptions& options = {});

/// Roots of E(t) satisfy |z + m| <= m and |z + 1| <= m, m = alpha_1.
RootBoundsVerdict check_excitation_bounds(const SkewShape& shape, const RootFinderOptions& options = {});

struct BridgeVerdict {
    bool holds = true;
    double max_mismatch = 0.0;
    bool factor_set_matches = true;  // {m - beta} == I
};

/// Roots of d_I equal I together with the roots of E shifted by m.
BridgeVerdict check_root_bridge(const DescentSet& I, double tolerance = 1e-8);

/// ((z+1)(z+2)...(z+k) - k!) / z, divided exactly.
RationalPolynomial appendix_a_polynomial(int k);

struct LemmaA1Verdict {
    bool holds = true;
    bool strict = true;           // every |z+k| < k by more than the review margin
    double margin_plus_one = 0;   // min over roots of k - |z+1|
    double margin_plus_k = 0;     // min over roots of k - |z+k|
    std::vector<std::complex<double>> flagged;  // roots within the review margin of |z+k| = k
};

inline constexpr double kStrictnessReviewMargin = 1e-6;

LemmaA1Verdict check_lemma_a1(int k, const RootFinderOptions& options = {});

struct LemmaA2Verdict {
    bool holds = true;
    double min_ratio = 0;  // min |P(z)| / (k-1)! over all samples
    std::complex<double> witness;
    long samples_checked = 0;
};

inline const std::vector<double> kLemmaA2RadiusFactors = {1.0, 1.01, 1.1, 2.0, 10.0};

/// Samples |z + (k+1)| = (k+1) * f for each factor f, `samples` angles per circle.
LemmaA2Verdict check_lemma_a2(int k, int samples, const std::vector<double>& radius_factors = kLemmaA2RadiusFactors);

struct InteriorBoundVerdict {
    bool holds = true;
    std::vector<BigInt> shifted_coefficients;  // P(w - shift) in w, ascending
    BigInt triangle_bound;                     // |w|^d - sum |c_i| |w|^i at |w| = radius
    double min_sampled = 0;
};

/// Rewrites P in w = z + shift and bounds |P| from below on |w| = radius by the triangle
/// inequality; the bound and sampled values are reported.
InteriorBoundVerdict check_appendix_a_interior_bound(int k, int shift, int radius, int samples);

struct PerturbedPolynomial {
    std::vector<int> a;       // 0 < a_1 < ... < a_k
    std::vector<Rational> g;  // 0 <= g_i <= i

    void validate() const;
};

/// Main term (z+a_k)...(z+a_1) plus g_1...g_i (z+a_k)...(z+a_{i+1}) for i = 1..k.
RationalPolynomial perturbed_polynomial(const PerturbedPolynomial& pp);

struct PerturbationVerdict {
    bool holds = true;
    double bound = 0;          // a_k + 1
    double max_modulus = 0;
    bool sharpness_family = false;
    bool sharpness_root = false;  // P(-a_k - 1) == 0 exactly
};

inline constexpr double kPerturbationSlack = 1e-8;

/// Sharpness family: k odd, consecutive a, g_i = i.
bool in_sharpness_family(const PerturbedPolynomial& pp);

PerturbationVerdict check_perturbation_lemma(const PerturbedPolynomial& pp, const RootFinderOptions& options = {});

/// k uniform in [1, max_k], a a random k-subset of [1, max_a], g_i a multiple of 1/1000 in [0, i].
PerturbedPolynomial random_perturbed(std::mt19937_64& rng, int max_k = 8, int max_a = 20);

}  // namespace ribbonroots
