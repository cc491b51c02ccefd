#ifndef TTLAB_RATIONAL_HPP
#define TTLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ttlab {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// mpq_class has no long long constructor; counts are always small enough
inline Rat to_rat(long long v) { return Rat(static_cast<long>(v)); }

inline Int factorial(int n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

// binomial(k, j) for integer k >= 0; zero outside 0 <= j <= k
inline Int binomial(int k, int j) {
    if (j < 0 || j > k) return Int(0);
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
    return b;
}

inline Rat rat_pow(const Rat& base, int e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    int n = e > 0 ? e : -e;
    Rat out(1);
    while (n > 0) {
        if (n & 1) out *= b;
        b *= b;
        n >>= 1;
    }
    return out;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline double rat_double(const Rat& q) { return q.get_d(); }

// Falling factorial g(g-1)...(g-k+1) as an integer for g >= 0.
inline Int falling(int g, int k) {
    Int out(1);
    for (int i = 0; i < k; ++i) out *= (g - i);
    return out;
}

}  // namespace ttlab

#endif
