#pragma once

// Exact arithmetic base layer: GMP integers and rationals plus the small
// number-theoretic helpers used across the library. Everything downstream
// works over Rat; no floating point appears anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "cyops/error.hpp"

namespace cyops {

using Int = mpz_class;
using Rat = mpq_class;

// num/den in lowest terms, den > 0 (mpq_class keeps results of arithmetic
// canonical; this constructor canonicalizes explicitly).
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw Error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline const Int& num(const Rat& r) { return r.get_num(); }
inline const Int& den(const Rat& r) { return r.get_den(); }
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int int_pow(const Int& base, unsigned long e);
Rat rat_pow(const Rat& base, long e);

Int factorial(unsigned long n);
Int binomial(const Int& n, const Int& k);  // 0 outside 0 <= k <= n
Int lcm(const Int& a, const Int& b);

// p-adic valuation of a nonzero integer.
unsigned long padic_val(const Int& v, const Int& p);

bool is_prime(const Int& n);

// Prime factorization by trial division plus Pollard rho; desk scale but
// robust to the occasional large factor in fitted-operator constants.
std::vector<std::pair<Int, unsigned long>> factor_integer(Int n);

// All positive divisors, from the factorization above.
std::vector<Int> divisors(const Int& n);

// Moebius function by trial factorization (spec caps d at 1e4 scale).
int moebius(unsigned long d);

// Bernoulli number B_n (B_1 = -1/2 convention), exact.
Rat bernoulli(unsigned long n);

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);  // "p/q" or "p"

}  // namespace cyops
