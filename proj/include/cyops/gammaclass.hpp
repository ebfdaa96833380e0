#pragma once

// Symbolic zeta-value ring and the computable fragment of the Gamma-class
// story: Gamma-ratio expansions, predicted reflection vectors, the T0
// matrix, the symplectic pairing and the reflection action.
//
// Symbols: gammahat (Euler-Mascheroni over 2 pi i, weight 1) and lambda_k =
// zeta(k)/(2 pi i)^k (weight k). Series coefficients are weight-graded; the
// only evaluation rule ever applied is the Bernoulli reduction of the
// even-weight lambdas (lambda_2 = -1/24, lambda_4 = 1/720, ...); odd
// lambdas and gammahat stay free.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cyops/rational.hpp"

namespace cyops {

// Monomial: exponent per symbol id; id 1 = gammahat, id k>=2 = lambda_k.
using ZetaMono = std::map<int, int>;

class ZetaPoly {
public:
    explicit ZetaPoly(int weight_cap) : cap_(weight_cap) {}
    ZetaPoly(int weight_cap, const Rat& c) : cap_(weight_cap) { add(ZetaMono{}, c); }

    static ZetaPoly symbol(int weight_cap, int id, const Rat& coeff = Rat(1));
    static ZetaPoly gammahat(int weight_cap) { return symbol(weight_cap, 1); }
    static ZetaPoly lambda(int weight_cap, int k);

    int weight_cap() const { return cap_; }
    const std::map<ZetaMono, Rat>& terms() const { return terms_; }
    static int weight(const ZetaMono& m);

    void add(const ZetaMono& m, const Rat& c);
    Rat coeff(const ZetaMono& m) const;
    Rat rational_part() const { return coeff(ZetaMono{}); }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    // depends only on 1 and lambda_3
    bool in_q_lambda3() const;

    // Bernoulli reduction of even-weight lambdas.
    ZetaPoly reduce_even() const;

    friend ZetaPoly operator+(const ZetaPoly& a, const ZetaPoly& b);
    friend ZetaPoly operator-(const ZetaPoly& a, const ZetaPoly& b);
    friend ZetaPoly operator-(const ZetaPoly& a);
    friend ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b);
    friend ZetaPoly operator*(const Rat& s, const ZetaPoly& a);
    friend bool operator==(const ZetaPoly& a, const ZetaPoly& b);

    std::string to_string() const;

private:
    int cap_;
    std::map<ZetaMono, Rat> terms_;
};

// Series in x with ZetaPoly coefficients, truncated at x^cap.
using ZetaSeries = std::vector<ZetaPoly>;

ZetaSeries zeta_series_mul(const ZetaSeries& a, const ZetaSeries& b);
ZetaSeries zeta_series_exp(const ZetaSeries& a);  // a_0 must vanish

// log Gamma(1 + sign*x) in avatar form: -sign*gammahat*x +
// sum_{j>=2} (-1)^j lambda_j (sign*x)^j / j.
ZetaSeries gamma_factor_log(int sign, int weight_cap);

// Gamma(1+kx)/Gamma(1+x)^k; the gammahat terms cancel (asserted). The x^j
// coefficient is the weight-j avatar of the zeta-value coefficient, e.g.
// for k=5 the x^2 coefficient is 10 lambda_2 ("10 zeta(2)") and the x^3
// coefficient is -40 lambda_3.
ZetaSeries gamma_ratio_series(int k, int weight_cap);

// Vector in the scaled Frobenius basis u_0..u_3 over the symbol ring.
struct FrobVector {
    std::array<ZetaPoly, 4> coords;
    explicit FrobVector(int weight_cap = 3)
        : coords{ZetaPoly(weight_cap), ZetaPoly(weight_cap), ZetaPoly(weight_cap),
                 ZetaPoly(weight_cap)} {}
};

// Gamma class of a CY threefold with = 1 - lambda_2 c (H^2 slot)
// - lambda_3 e (H^3 slot), coordinates in the basis 1, H, H^2, H^3.
FrobVector gamma_class_cy3(long d, long c, long e, int weight_cap = 3);

// Predicted reflection vector S = (d, 0, c/24, e lambda_3) in u-coordinates;
// the c/24 entry arises from the evaluation rule -c lambda_2 = c/24
// (asserted). NonPositiveDegree for d <= 0.
FrobVector reflection_vector(long d, long c, long e);

using RatMat4 = std::array<std::array<Rat, 4>, 4>;

// Local monodromy at a MUM point on the scaled basis.
RatMat4 t0_matrix();

// Pairing <u_0,u_3> = -<u_1,u_2> = 1/d = <u_2,u_1> = -<u_3,u_0>.
RatMat4 symplectic_pairing(long d);

ZetaPoly pair(const FrobVector& a, const FrobVector& b, const RatMat4& J);

// v -> v - <v,S> S.
FrobVector apply_reflection(const FrobVector& v, const FrobVector& S, const RatMat4& J);

}  // namespace cyops
