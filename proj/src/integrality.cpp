#include "cyops/integrality.hpp"

#include <algorithm>
#include <map>

namespace cyops {

namespace {

// d[n] per prime: valuation of the denominator of a_n.
std::map<Int, std::vector<long>> denominator_profile(const QSeries& a) {
    std::map<Int, std::vector<long>> prof;
    int m = a.trunc();
    for (int n = 0; n <= m; ++n) {
        const Int& d = den(a[n]);
        if (d == 1) continue;
        for (const auto& [p, e] : factor_integer(d)) {
            auto& v = prof[p];
            if (v.empty()) v.assign(m + 1, 0);
            v[n] = static_cast<long>(e);
        }
    }
    return prof;
}

long max_residual(const std::vector<long>& d, int lo, int hi, long slope) {
    long best = std::numeric_limits<long>::min();
    for (int n = lo; n <= hi; ++n) best = std::max(best, d[n] - slope * n);
    return best;
}

}  // namespace

IntegralityReport n_integrality_scan(const QSeries& a, const IntegralityOptions& opt) {
    if (a.trunc() < opt.min_trunc)
        throw InsufficientTruncation("n_integrality_scan: truncation below decision floor");

    const int m = a.trunc();
    const int w0 = m / 2;          // window start
    const int mid = (w0 + m) / 2;  // window midpoint

    IntegralityReport rep;
    auto prof = denominator_profile(a);
    if (prof.empty()) {
        rep.integral = true;
        return rep;
    }

    int n_primes = 0;
    for (auto& [p, d] : prof) {
        // Slope fitted on the lower half of the window; superlinear growth in
        // the upper half is the wildness witness.
        long s_lo = 0;
        for (int n = w0; n <= mid; ++n)
            if (n > 0 && d[n] > 0) s_lo = std::max(s_lo, (d[n] + n - 1) / n);
        long c_lo = std::max(0l, max_residual(d, std::max(w0, 1), mid, s_lo));
        bool wild = false;
        for (int n = mid + 1; n <= m; ++n)
            if (d[n] > s_lo * n + c_lo + opt.residual_tolerance) wild = true;
        if (wild) {
            rep.wild_primes.push_back(p);
            continue;
        }
        // Minimal slope whose residuals do not grow into the upper half.
        long slope = s_lo;
        for (long s = 0; s <= s_lo; ++s) {
            long r_lo = std::max(0l, max_residual(d, std::max(w0, 1), mid, s));
            long r_hi = max_residual(d, mid + 1, m, s);
            if (r_hi <= r_lo + opt.residual_tolerance) {
                slope = s;
                break;
            }
        }
        ++n_primes;
        // Primes comparable to the window length are evidence of an unbounded
        // prime set (they cannot recur within the inspected range).
        if (p > std::max(50, m)) rep.excess_primes.push_back(p);
        if (slope > 0) rep.n_scale *= int_pow(p, static_cast<unsigned long>(slope));
        long c_exp = std::max(0l, max_residual(d, 0, m, slope));
        if (c_exp > 0) rep.c *= int_pow(p, static_cast<unsigned long>(c_exp));
    }

    if (!rep.wild_primes.empty() || !rep.excess_primes.empty() ||
        n_primes > opt.prime_count_cap) {
        if (n_primes > opt.prime_count_cap)
            for (const auto& [p, d] : prof) rep.excess_primes.push_back(p);
        rep.integral = false;
        rep.c = 1;
        rep.n_scale = 1;
        return rep;
    }
    rep.integral = true;
    return rep;
}

}  // namespace cyops
