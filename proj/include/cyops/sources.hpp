#pragma once

// Candidate period series from combinatorial sources, and the arithmetic
// verifiers that go with them: factorial ratios, binomial sums, constant
// terms of Laurent powers, diagonals of rational functions, algebraic
// series, the Furstenberg embedding, Borel/Laplace rescaling, Dwork
// congruences and Ramanujan-type partial sums.

#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "cyops/laurent.hpp"
#include "cyops/qseries.hpp"
#include "cyops/ratpoly.hpp"

namespace cyops {

// a_n = prod (u_i n)! / prod (v_j n)!
QSeries factorial_ratio_series(const std::vector<int>& numerators,
                               const std::vector<int>& denominators, int order);
bool factorial_ratio_balanced(const std::vector<int>& numerators,
                              const std::vector<int>& denominators);

// Affine form c0 + c_n*n + sum c_k * k over named summation indices.
struct AffineForm {
    Int constant;
    Int n_coeff;
    std::map<std::string, Int> index_coeff;

    static AffineForm of(long constant, long n_coeff = 0);
    AffineForm with(const std::string& index, long coeff) const;
    Int eval(const Int& n, const std::map<std::string, Int>& idx) const;
};

struct BinomialFactor {
    AffineForm top, bottom;
    int power = 1;
};

struct IndexRange {
    std::string name;
    AffineForm lo, hi;  // may reference n and earlier indices only
};

// a_n = sum over the lattice region of sign^(exponent) * prod binomial^power;
// binomials with arguments outside 0 <= k <= n evaluate to 0.
struct BinomialSumSpec {
    std::vector<IndexRange> indices;
    std::vector<BinomialFactor> factors;
    std::optional<AffineForm> sign_exponent;  // (-1)^form when present
};

QSeries binomial_sum_series(const BinomialSumSpec& spec, int order);

// a_n = [W^n]_0 by iterated sparse multiplication; supports are pruned to
// exponent vectors that can still return to 0 within the remaining factors.
QSeries constant_term_series(const LaurentPoly& w, int order,
                             size_t term_cap = 5'000'000);

// Diagonal of P/Q to order M (multivariate expansion to total degree dim*M).
QSeries diagonal_of_rational(const LaurentPoly& P, const LaurentPoly& Q, int order);

// Bivariate polynomial R(t, y) = sum y_coeffs[j](t) y^j.
struct BiPoly {
    std::vector<RatPoly> y_coeffs;
    RatPoly coeff(int j) const { return j < static_cast<int>(y_coeffs.size()) ? y_coeffs[j] : RatPoly(); }
    int y_degree() const { return static_cast<int>(y_coeffs.size()) - 1; }
    BiPoly dy() const;  // partial derivative in y
    QSeries eval(const QSeries& t, const QSeries& y) const;
    Rat eval00() const { return coeff(0).is_zero() ? Rat(0) : coeff(0).coeff(0); }
};

// Unique series root phi with phi(0) = 0 of R(t, phi) = 0; requires
// R(0,0) = 0 and d_y R(0,0) != 0 (SingularBranch). Exact Newton iteration.
QSeries algebraic_series_solve(const BiPoly& R, int order);

// Furstenberg: F(x,y) = y^2 d_yR(xy, y) / R(xy, y) with the common factor y
// cancelled, returned as a (numerator, denominator) pair with nonnegative
// exponents and Q(0,0) != 0; diagonal_of_rational(F) reproduces the root.
std::pair<LaurentPoly, LaurentPoly> furstenberg_embed(const BiPoly& R);

// b_m = m! a_m.
QSeries borel_laplace(const QSeries& a);

// Deterministic integer sequence with a memo; safe for concurrent reads.
class IntegerSequence {
public:
    IntegerSequence(std::string name, std::function<Rat(long)> gen)
        : name_(std::move(name)), gen_(std::move(gen)) {}

    const std::string& name() const { return name_; }
    Rat at(long n) const;

private:
    std::string name_;
    std::function<Rat(long)> gen_;
    mutable std::vector<Rat> memo_;
    mutable std::shared_mutex mutex_;
};

struct DworkReport {
    bool ok = true;
    long first_failure = -1;
};

// a_{n_0 + n_1 p + ...} == a_{n_0} a_{n_1} ... mod p for all n <= bound.
// NonIntegralSequence when a non-integer coefficient is encountered.
DworkReport dwork_check(const IntegerSequence& a, long p, int digits, long bound);

// sum_{n < terms} A_n (a + b n + c n^2) z0^n, exact.
Rat ramanujan_partial_sum(const IntegerSequence& A, const Rat& a, const Rat& b, const Rat& c,
                          const Rat& z0, int terms);

// pi * 10^digits as an integer, with absolute error below 10^-(digits-2)
// of the scale (Machin arctan series with guard terms; no floating point).
Int pi_scaled(int digits);

// |value - target_num / pi^2| < 10^-digits, decided in exact arithmetic.
bool agrees_with_over_pi_squared(const Rat& value, const Rat& target_num, int digits);

}  // namespace cyops
