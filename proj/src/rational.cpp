#include "cyops/rational.hpp"

#include <algorithm>
#include <map>

namespace cyops {

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw Error("rat_pow: zero base, negative exponent");
        return Rat(0);
    }
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat r = make_rat(int_pow(num(base), a), int_pow(den(base), a));
    if (e < 0) r = 1 / r;
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(const Int& n, const Int& k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return r;
}

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

unsigned long padic_val(const Int& v, const Int& p) {
    if (v == 0) throw Error("padic_val: zero argument");
    Int q = abs(v);
    unsigned long k = 0;
    Int rem;
    while (true) {
        Int quo;
        mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
        if (rem != 0) break;
        q = quo;
        ++k;
    }
    return k;
}

bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

Int pollard_rho(const Int& n) {
    // n composite, odd, not a prime power of interest; returns a proper factor.
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEul);
    while (true) {
        Int c = rng.get_z_range(n - 3) + 1;
        Int x = rng.get_z_range(n - 2) + 2, y = x, d = 1;
        auto f = [&](const Int& v) { return (v * v + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            Int diff = x - y;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(const Int& n, std::map<Int, unsigned long>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, unsigned long>> factor_integer(Int n) {
    if (n == 0) throw Error("factor_integer: zero");
    n = abs(n);
    std::map<Int, unsigned long> acc;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        while (n % p == 0) {
            ++acc[Int(p)];
            n /= p;
        }
    }
    unsigned long p = 17;
    while (n > 1 && Int(p) * p <= n && p < 100000) {
        while (n % p == 0) {
            ++acc[Int(p)];
            n /= p;
        }
        p += 2;
    }
    if (n > 1) factor_rec(n, acc);
    return {acc.begin(), acc.end()};
}

std::vector<Int> divisors(const Int& n) {
    std::vector<Int> divs{1};
    for (const auto& [p, e] : factor_integer(n)) {
        size_t base = divs.size();
        Int pk = 1;
        for (unsigned long k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

int moebius(unsigned long d) {
    if (d == 0) throw Error("moebius: zero");
    int count = 0;
    for (unsigned long p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            d /= p;
            if (d % p == 0) return 0;
            ++count;
        }
    }
    if (d > 1) ++count;
    return (count % 2 == 0) ? 1 : -1;
}

Rat bernoulli(unsigned long n) {
    // B_m via the defining recurrence sum_{k<=m} C(m+1,k) B_k = 0.
    static std::vector<Rat> memo{Rat(1)};
    for (unsigned long m = memo.size(); m <= n; ++m) {
        Rat s(0);
        for (unsigned long k = 0; k < m; ++k)
            s += Rat(binomial(Int(m + 1), Int(k))) * memo[k];
        memo.push_back(-s / Rat(Int(m + 1)));
    }
    return memo[n];
}

std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return num(r).get_str();
    return num(r).get_str() + "/" + den(r).get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
    r.canonicalize();
    if (den(r) == 0) throw Error("bad rational literal: " + s);
    return r;
}

}  // namespace cyops
