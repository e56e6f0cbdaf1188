#pragma once

#include <gmpxx.h>

#include <span>
#include <string>

namespace ribbonroots {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline BigInt product(std::span<const int> values) {
    BigInt out = 1;
    for (int v : values) out *= v;
    return out;
}

}  // namespace ribbonroots
