#include "ribbonroots/descent.hpp"

#include <algorithm>
#include <numeric>

#include "ribbonroots/errors.hpp"
#include "ribbonroots/excited.hpp"
#include "ribbonroots/sqci.hpp"

namespace ribbonroots {

RationalPolynomial NewtonForm::to_monomial() const {
    RationalPolynomial out;
    RationalPolynomial basis = RationalPolynomial::constant(1);
    for (int d = 0; d <= s(); ++d) {
        out += basis * Rational(coeffs[static_cast<std::size_t>(s() - d)]);
        if (d < s()) basis *= RationalPolynomial::linear(Rational(alphas[static_cast<std::size_t>(d)]));
    }
    return out;
}

NormalizedShape normalize_first_row(const SkewShape& shape) {
    const Partition& lambda = shape.outer();
    if (lambda.row(1) == lambda.row(2)) return {shape, 1};
    if (lambda.length() < 2 || shape.inner().row(1) > lambda.row(2))
        throw DomainError("cannot normalize the first row of " + to_string(shape));
    std::vector<int> parts = lambda.parts();
    parts[0] = parts[1];
    return {SkewShape(Partition(parts), shape.inner()), lambda.row(1) - lambda.row(2) + 1};
}

namespace {

void require_normalized(const SkewShape& shape) {
    const Partition& lambda = shape.outer();
    if (lambda.empty() || lambda.row(1) != lambda.row(2))
        throw DomainError("shape " + to_string(shape) + " does not have lambda_1 = lambda_2");
    if (!shape.is_connected()) throw DomainError("shape " + to_string(shape) + " is not connected");
}

void require_normalized_ribbon(const SkewShape& shape) {
    require_normalized(shape);
    if (!shape.is_ribbon()) throw DomainError("shape " + to_string(shape) + " is not a ribbon");
}

}  // namespace

NewtonForm excitation_factor(const SkewShape& shape) {
    require_normalized(shape);
    const Partition& lambda = shape.outer();
    const int s = shape.inner().row(1);
    NewtonForm nf;
    const std::vector<int> alpha = alpha_vector(lambda);
    nf.alphas.assign(alpha.begin(), alpha.begin() + s);
    nf.coeffs.assign(static_cast<std::size_t>(s) + 1, 0);
    for (const ExcitedDiagram& d : enumerate_excited(shape)) {
        const int first_row = d.cells_in_row(1);
        BigInt w = 1;
        for (const Cell& c : d.cells)
            if (c.row >= 2) w *= hook_length(lambda, c);
        nf.coeffs[static_cast<std::size_t>(s - first_row)] += w;
    }
    for (const BigInt& c : nf.coeffs)
        if (c <= 0) throw ConsistencyError("non-positive Newton coefficient for " + to_string(shape));
    return nf;
}

std::vector<BigInt> lemma33_coefficients(const SkewShape& shape) {
    require_normalized_ribbon(shape);
    const Partition& lambda = shape.outer();
    const Partition lambda_conj = conjugate(lambda);
    const int s = shape.inner().row(1);
    const std::vector<Cell> below = slice(shape.inner().cells(), {SliceKind::BelowRows, 1});

    std::vector<BigInt> coeffs(static_cast<std::size_t>(s) + 1);
    for (int i = 0; i <= s; ++i) {
        std::vector<Cell> circles = slice(below, {SliceKind::LeftOfColumn, i});
        std::vector<Cell> squares = push(slice(below, {SliceKind::RightOfColumn, i}), PushDirection::Right);
        BigInt c = sqci_weight(SqciDiagram(lambda, std::move(circles), std::move(squares)));
        for (int j = 1; j <= s - i; ++j) {
            const int col = i + j + 1;
            c *= hook_length(lambda, {lambda_conj.row(col), col});
        }
        coeffs[static_cast<std::size_t>(s - i)] = c;
    }
    return coeffs;
}

RationalPolynomial trivial_part(const SkewShape& shape, const DescentSet& I) {
    if (!(shape == ribbon_from_descent_set(I)))
        throw DomainError("shape " + to_string(shape) + " is not the ribbon of " + to_string(I));
    if (I.empty()) return RationalPolynomial::constant(1);
    const int alpha1 = alpha_vector(shape.outer()).front();
    std::vector<long> shifts;
    for (int i : I.elements()) shifts.push_back(alpha1 - i);
    const std::vector<int> hooks = hook_multiset_below_first_row(shape.outer());
    return RationalPolynomial::product_of_shifts(shifts) * Rational(BigInt(1), product(hooks));
}

RationalPolynomial ribbon_polynomial(const DescentSet& I) {
    if (I.empty()) return RationalPolynomial::constant(1);
    const SkewShape shape = ribbon_from_descent_set(I);
    return trivial_part(shape, I) * excitation_factor(shape).to_monomial();
}

RationalPolynomial descent_polynomial(const DescentSet& I) {
    if (I.empty()) return RationalPolynomial::constant(1);
    const SkewShape shape = ribbon_from_descent_set(I);
    const int alpha1 = alpha_vector(shape.outer()).front();
    if (alpha1 != I.max()) throw ConsistencyError("alpha_1 differs from max(I) for " + to_string(I));
    return ribbon_polynomial(I).shifted(Rational(-alpha1));
}

Rational ribbon_count_via_hooks(const SkewShape& shape, int t) {
    if (t < 1) throw DomainError("t must be positive");
    const NewtonForm nf = excitation_factor(shape);
    const Partition& lambda = shape.outer();
    const int n = shape.size();
    Rational value(factorial(static_cast<unsigned long>(n + t - 1)), factorial(static_cast<unsigned long>(t - 1)));
    value /= Rational(product(hook_multiset_below_first_row(lambda)));
    for (int a : alpha_vector(lambda)) value /= Rational(t + a);
    value *= nf.to_monomial()(Rational(t));
    value.canonicalize();
    return value;
}

std::vector<int> lemma23_factor_set(const SkewShape& shape) {
    const std::vector<int> alpha = alpha_vector(shape.outer());
    std::vector<int> out;
    for (int beta = 0; beta < shape.size(); ++beta)
        if (std::find(alpha.begin(), alpha.end(), beta) == alpha.end()) out.push_back(beta);
    return out;
}

BigInt brute_force_descent_count(const DescentSet& I, int n, int budget) {
    if (n > budget)
        throw ResourceError("permutation scan of S_" + std::to_string(n) + " exceeds budget " + std::to_string(budget));
    if (n < 0) throw DomainError("n must be nonnegative");
    // Des(pi) is a subset of [n-1]; a descent position past n-1 can never occur.
    if (!I.empty() && I.max() >= std::max(n, 1)) return 0;
    std::vector<bool> wanted(static_cast<std::size_t>(std::max(n, 1)), false);
    for (int i : I.elements()) wanted[static_cast<std::size_t>(i)] = true;

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    unsigned long count = 0;
    do {
        bool ok = true;
        for (int i = 1; i < n && ok; ++i)
            ok = (perm[static_cast<std::size_t>(i - 1)] > perm[static_cast<std::size_t>(i)]) ==
                 wanted[static_cast<std::size_t>(i)];
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return BigInt(count);
}

std::vector<BigInt> descent_set_histogram(int n, int budget) {
    if (n > budget)
        throw ResourceError("permutation scan of S_" + std::to_string(n) + " exceeds budget " + std::to_string(budget));
    if (n < 1) throw DomainError("n must be positive");
    std::vector<unsigned long> counts(1ul << (n - 1), 0);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        unsigned long mask = 0;
        for (int i = 1; i < n; ++i)
            if (perm[static_cast<std::size_t>(i - 1)] > perm[static_cast<std::size_t>(i)]) mask |= 1ul << (i - 1);
        ++counts[mask];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::vector<BigInt>(counts.begin(), counts.end());
}

unsigned long descent_mask(const DescentSet& I) {
    unsigned long mask = 0;
    for (int i : I.elements()) mask |= 1ul << (i - 1);
    return mask;
}

MonotonicityVerdict check_coefficient_monotonicity(const NewtonForm& nf) {
    MonotonicityVerdict v;
    v.vacuous = nf.s() == 0;
    for (int d = 0; d <= nf.s(); ++d)
        v.ratios.push_back(make_rational(nf.coeffs[static_cast<std::size_t>(d)], factorial(static_cast<unsigned long>(d))));
    for (std::size_t d = 0; d + 1 < v.ratios.size(); ++d)
        if (v.ratios[d] < v.ratios[d + 1]) v.holds = false;
    return v;
}

CorollaryVerdict check_refined_corollaries(const SkewShape& shape) {
    const NewtonForm nf = excitation_factor(shape);
    if (!shape.is_ribbon()) throw DomainError("corollary checks need a ribbon");
    const Partition col = conjugate(shape.outer());
    const int s = nf.s();
    auto C = [&](int d) { return Rational(nf.coeffs[static_cast<std::size_t>(d)]); };
    auto fact = [](int d) { return Rational(factorial(static_cast<unsigned long>(d))); };

    CorollaryVerdict v;
    for (int i = 0; i <= s; ++i) {
        if (col.row(i + 1) > col.row(i + 2)) {
            ChainCheck chain{"weakly-decreasing", i, {}, true};
            for (int j = 0; j <= i; ++j) chain.chain.push_back(C(s - i + j) / fact(j));
            for (std::size_t j = 0; j + 1 < chain.chain.size(); ++j)
                if (chain.chain[j] < chain.chain[j + 1]) chain.holds = false;
            v.chains.push_back(std::move(chain));
        }
        if (col.row(i + 1) == 2 && col.row(s + 1) == 2) {
            ChainCheck chain{"equal", i, {}, true};
            for (int j = 0; j <= s - i; ++j) chain.chain.push_back(C(j) / fact(j));
            for (std::size_t j = 0; j + 1 < chain.chain.size(); ++j)
                if (chain.chain[j] != chain.chain[j + 1]) chain.holds = false;
            v.chains.push_back(std::move(chain));
        }
    }
    v.vacuous = v.chains.empty();
    v.holds = std::all_of(v.chains.begin(), v.chains.end(), [](const ChainCheck& c) { return c.holds; });
    return v;
}

PositivityVerdict check_shifted_positivity(const DescentSet& I) {
    PositivityVerdict v;
    const RationalPolynomial d = descent_polynomial(I);
    v.value_at_zero = d(Rational(0));
    if (I.empty()) {
        v.vacuous = true;
        v.shifted_coefficients = d.coefficients();
        return v;
    }
    const RationalPolynomial shifted = d.shifted(Rational(I.max()));
    v.shifted_coefficients.resize(static_cast<std::size_t>(I.max()) + 1);
    for (int i = 0; i <= I.max(); ++i) v.shifted_coefficients[static_cast<std::size_t>(i)] = shifted.coefficient(i);
    v.holds = shifted.degree() == I.max() && v.shifted_coefficients[0] == 0;
    for (int i = 1; i <= I.max(); ++i)
        if (v.shifted_coefficients[static_cast<std::size_t>(i)] <= 0) v.holds = false;
    const Rational expected = (I.count() % 2 == 0) ? Rational(1) : Rational(-1);
    if (v.value_at_zero != expected) v.holds = false;
    return v;
}

}  // namespace ribbonroots
