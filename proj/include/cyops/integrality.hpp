#pragma once

// N-integrality analysis: decide from finitely many coefficients whether a
// series looks like c*phi(N t) in Z[[t]] for some positive integers c, N.
//
// Decision model (per prime p appearing in a denominator), over the window
// n in [trunc/2, trunc]:
//   * d_n = p-adic valuation of the denominator of a_n.
//   * p gets slope s in N (val_p N = s) where s is the minimal integer such
//     that the residuals d_n - s n stop growing across the window (max over
//     the upper half <= max over the lower half, up to a small tolerance
//     absorbed by c).
//   * p is "wild" when the slope fitted on the lower half is exceeded by
//     superlinear growth in the upper half; this is the failure witness.
//   * a failure is also declared when the prime set itself looks unbounded
//     (many distinct primes, or primes comparable to the window length, as
//     happens for log(1+t) and exp(t)).
// The verdict is a statement about the inspected window only, never a proof.

#include <optional>
#include <vector>

#include "cyops/qseries.hpp"

namespace cyops {

struct IntegralityReport {
    bool integral = false;  // success of the scan (possibly with c, N > 1)
    Int c = 1;
    Int n_scale = 1;
    // on failure:
    std::vector<Int> wild_primes;    // superlinear denominator growth
    std::vector<Int> excess_primes;  // unbounded-prime-set evidence
    bool failed() const { return !integral; }
};

struct IntegralityOptions {
    int min_trunc = 20;      // InsufficientTruncation below this
    int prime_count_cap = 7; // more N/c-primes than this: unbounded set
    int residual_tolerance = 5;
};

IntegralityReport n_integrality_scan(const QSeries& a,
                                     const IntegralityOptions& opt = {});

}  // namespace cyops
