#pragma once

#include <string>
#include <vector>

#include "ribbonroots/bigint.hpp"
#include "ribbonroots/polynomial.hpp"
#include "ribbonroots/shapes.hpp"

namespace ribbonroots {

/// The excitation factor E(t) = sum_{d=0}^{s} C_{s-d} (t+alpha_1)...(t+alpha_d).
struct NewtonForm {
    std::vector<int> alphas;    // alpha_1 > ... > alpha_s
    std::vector<BigInt> coeffs;  // C_0, ..., C_s

    int s() const { return static_cast<int>(alphas.size()); }
    RationalPolynomial to_monomial() const;

    friend bool operator==(const NewtonForm&, const NewtonForm&) = default;
};

/// A connected shape with lambda_1 > lambda_2 rewritten as nu^{(u)}/mu with nu_1 = nu_2,
/// so that p(t; lambda/mu) = p(t + u - 1; nu/mu).
struct NormalizedShape {
    SkewShape shape;
    int u = 1;
};

NormalizedShape normalize_first_row(const SkewShape& shape);

/// Groups excited diagrams by their number d of first-row cells; C_{s-d} is the sum of the
/// hook products of their cells below row 1. Needs lambda_1 = lambda_2 and a connected shape.
NewtonForm excitation_factor(const SkewShape& shape);

/// The same coefficients computed from circle/square diagram weights, one slice per index.
/// Needs a ribbon with lambda_1 = lambda_2.
std::vector<BigInt> lemma33_coefficients(const SkewShape& shape);

/// T(t) = prod_{i in I} (t + alpha_1 - i) / (product of hooks below the first row).
/// Throws DomainError unless `shape` is the ribbon of I.
RationalPolynomial trivial_part(const SkewShape& shape, const DescentSet& I);

/// p(t) = T(t) E(t); counts standard fillings of lambda^{(t)}/mu for the ribbon of I.
RationalPolynomial ribbon_polynomial(const DescentSet& I);

/// d_I(N) = p(N - alpha_1). The empty set gives the constant 1.
RationalPolynomial descent_polynomial(const DescentSet& I);

/// p(t) evaluated through the full factorial/hook expression rather than T(t) E(t).
Rational ribbon_count_via_hooks(const SkewShape& shape, int t);

/// {beta in 0..n-1 : beta not an alpha_i}; the linear factors t + beta of p(t).
std::vector<int> lemma23_factor_set(const SkewShape& shape);

inline constexpr int kDefaultPermutationBudget = 10;

/// #{pi in S_n : Des(pi) = I} by scanning all of S_n.
BigInt brute_force_descent_count(const DescentSet& I, int n, int budget = kDefaultPermutationBudget);

/// Counts of every descent set over S_n in one scan; entry `mask` counts the permutations
/// whose descent set is {i : bit i-1 of mask set}.
std::vector<BigInt> descent_set_histogram(int n, int budget = kDefaultPermutationBudget);

/// Bitmask of I as used by descent_set_histogram.
unsigned long descent_mask(const DescentSet& I);

struct MonotonicityVerdict {
    bool holds = true;
    bool vacuous = false;
    std::vector<Rational> ratios;  // C_d / d!
};

MonotonicityVerdict check_coefficient_monotonicity(const NewtonForm& nf);

struct ChainCheck {
    std::string kind;  // "weakly-decreasing" or "equal"
    int index = 0;     // the i of the hypothesis
    std::vector<Rational> chain;
    bool holds = false;
};

struct CorollaryVerdict {
    bool holds = true;
    bool vacuous = true;
    std::vector<ChainCheck> chains;
};

/// For every i <= s with lambda'_{i+1} > lambda'_{i+2}: C_{s-i}/0! >= ... >= C_s/i!.
/// For every i <= s with lambda'_{i+1} = lambda'_{s+1} = 2: C_0/0! = ... = C_{s-i}/(s-i)!.
CorollaryVerdict check_refined_corollaries(const SkewShape& shape);

struct PositivityVerdict {
    bool holds = true;
    bool vacuous = false;
    std::vector<Rational> shifted_coefficients;  // d_I(x + alpha_1), ascending
    Rational value_at_zero;                       // d_I(0)
};

/// Coefficients of x^1..x^m in d_I(x + alpha_1) are positive, the constant term is
/// d_I(m) = 0, and d_I(0) = (-1)^{#I}.
PositivityVerdict check_shifted_positivity(const DescentSet& I);

}  // namespace ribbonroots
