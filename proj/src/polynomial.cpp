#include "ribbonroots/polynomial.hpp"

#include <cmath>
#include <sstream>

#include "ribbonroots/errors.hpp"

namespace ribbonroots {

namespace {

long double to_long_double(const BigInt& x) {
    BigInt a = abs(x);
    const long bits = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
    long shift = 0;
    if (bits > 64) {
        shift = bits - 64;
        a >>= static_cast<mp_bitcnt_t>(shift);
    }
    // a now fits in 64 bits; mpz_get_ui is 64-bit on LP64.
    const long double mant = static_cast<long double>(mpz_get_ui(a.get_mpz_t()));
    const long double v = std::ldexp(mant, static_cast<int>(shift));
    return sgn(x) < 0 ? -v : v;
}

}  // namespace

long double to_long_double(const Rational& q) { return to_long_double(q.get_num()) / to_long_double(q.get_den()); }

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

RationalPolynomial RationalPolynomial::product_of_shifts(std::span<const long> shifts) {
    RationalPolynomial p = constant(1);
    for (long s : shifts) p *= linear(Rational(s));
    return p;
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(i)] : Rational(0);
}

const Rational& RationalPolynomial::leading() const {
    if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<long double> RationalPolynomial::evaluate(std::complex<long double> z) const {
    std::complex<long double> acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + to_long_double(*it);
    }
    return acc;
}

RationalPolynomial RationalPolynomial::shifted(const Rational& c) const {
    // Repeated synthetic division (Taylor shift).
    std::vector<Rational> a = coeffs_;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) a[j - 1] += c * a[j];
    return RationalPolynomial(std::move(a));
}

RationalPolynomial RationalPolynomial::deflate(const Rational& root) const {
    if (coeffs_.empty()) return {};
    const std::size_t n = coeffs_.size();
    std::vector<Rational> q(n - 1);
    Rational carry = 0;
    for (std::size_t j = n; j-- > 1;) {
        carry = coeffs_[j] + carry * root;
        q[j - 1] = carry;
    }
    if (coeffs_[0] + carry * root != 0) throw DomainError("deflation by a non-root");
    return RationalPolynomial(std::move(q));
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& other) {
    if (coeffs_.empty() || other.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

std::string to_string(const RationalPolynomial& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coefficient(i);
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (i == 0 || a != 1) os << a.get_str() << (i > 0 ? "*" : "");
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

BigInt common_denominator(const RationalPolynomial& p) {
    BigInt l = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

std::vector<BigInt> integer_coefficients(const RationalPolynomial& p) {
    const BigInt l = common_denominator(p);
    std::vector<BigInt> out;
    for (const auto& c : p.coefficients()) out.push_back(c.get_num() * (l / c.get_den()));
    return out;
}

}  // namespace ribbonroots
