#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ribbonroots/bigint.hpp"

namespace ribbonroots {

/// Exact polynomial over Q in the monomial basis, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coefficients);
    RationalPolynomial(std::initializer_list<Rational> coefficients)
        : RationalPolynomial(std::vector<Rational>(coefficients)) {}

    static RationalPolynomial constant(const Rational& c) { return RationalPolynomial({c}); }
    // x + c
    static RationalPolynomial linear(const Rational& c) { return RationalPolynomial({c, Rational(1)}); }
    // prod (x + shift_i)
    static RationalPolynomial product_of_shifts(std::span<const long> shifts);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coefficient(int i) const;
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;
    std::complex<long double> evaluate(std::complex<long double> z) const;

    // p(x + c)
    RationalPolynomial shifted(const Rational& c) const;

    /// Divides by (x - root), which must divide exactly; throws DomainError otherwise.
    RationalPolynomial deflate(const Rational& root) const;

    RationalPolynomial& operator+=(const RationalPolynomial& other);
    RationalPolynomial& operator*=(const RationalPolynomial& other);
    RationalPolynomial& operator*=(const Rational& scalar);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Rounds an exact rational to extended precision (64-bit mantissa).
long double to_long_double(const Rational& q);

/// Human-readable form in the given variable, highest degree first.
std::string to_string(const RationalPolynomial& p, const std::string& var = "x");

/// Smallest positive integer L with L * p integral, and L * p.
BigInt common_denominator(const RationalPolynomial& p);
std::vector<BigInt> integer_coefficients(const RationalPolynomial& p);

}  // namespace ribbonroots
