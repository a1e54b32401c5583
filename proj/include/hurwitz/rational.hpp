#pragma once
#include <gmpxx.h>

#include <string>

// Exact scalars.  All coefficient arithmetic in the library is arbitrary-
// precision rational; GMP's canonical form (lowest terms, positive
// denominator, 0/1 for zero) is exactly the invariant we need.
namespace hurwitz {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int factorial(int n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

// Integer power with exact rational result; exp may be negative.
inline Rat rat_pow(const Rat& base, long exp) {
    if (exp == 0) return 1;
    Rat b = exp > 0 ? base : Rat(1) / base;
    long e = exp > 0 ? exp : -exp;
    Rat out = 1;
    while (e > 0) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

// "p" or "p/q" in canonical form; JSON keeps numerator and denominator as
// separate decimal strings, assembled by the serialization layer.
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

} // namespace hurwitz
