#pragma once

// Linear differential operators in two interchangeable shapes:
//   * ThetaOperator — sum_i t^i P_i(Theta), Theta = t d/dt, the canonical
//     form for local analysis at 0 and for series recurrences;
//   * DiffOperator  — sum_i a_i(t) d^i/dt^i with rational-function
//     coefficients, the shape adjoints and the Fuchs criterion want.
// Canonical ThetaOperator form: integer coefficients, overall content 1,
// leading coefficient of the first nonzero P_i positive; operator equality
// in tests is syntactic equality of canonical forms.

#include <vector>

#include "cyops/qseries.hpp"
#include "cyops/ratfun.hpp"
#include "cyops/ratpoly.hpp"

namespace cyops {

class DiffOperator;

class ThetaOperator {
public:
    ThetaOperator() = default;
    explicit ThetaOperator(std::vector<RatPoly> polys);

    // P_0..P_r; trailing zero polynomials trimmed, so P_r != 0.
    const std::vector<RatPoly>& polys() const { return polys_; }
    const RatPoly& poly(int i) const { return polys_.at(i); }
    int degree() const { return static_cast<int>(polys_.size()) - 1; }
    int order() const;  // max degree of the P_i

    ThetaOperator canonical() const;
    friend bool operator==(const ThetaOperator& a, const ThetaOperator& b);

    std::string to_string() const;

private:
    std::vector<RatPoly> polys_;
};

class DiffOperator {
public:
    DiffOperator() = default;
    explicit DiffOperator(std::vector<RatFun> coeffs);

    // a_0..a_n with a_n != 0.
    const std::vector<RatFun>& coeffs() const { return coeffs_; }
    const RatFun& coeff(int i) const { return coeffs_.at(i); }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    DiffOperator monic() const;
    // Multiply through by the lcm of coefficient denominators and divide by
    // the polynomial gcd of the results: polynomial coefficients with no
    // common factor.
    DiffOperator primitive_polynomial() const;

    friend bool operator==(const DiffOperator& a, const DiffOperator& b);

    std::string to_string() const;

private:
    std::vector<RatFun> coeffs_;
};

// Conversions: theta_to_d expands Theta^k through Stirling numbers; the
// round trip d_to_theta(theta_to_d(op)) is the identity up to a unit.
DiffOperator theta_to_d(const ThetaOperator& op);
ThetaOperator d_to_theta(const DiffOperator& op);

// Apply to a truncated series. Result truncation s.trunc() - op.degree().
QSeries apply_operator(const ThetaOperator& op, const QSeries& s);

// Operator in the coordinate s = t - p, back in Theta-form.
ThetaOperator translate_point(const ThetaOperator& op, const Rat& p);

// Operator in the coordinate 1/t: reverse P_0..P_r and negate Theta.
ThetaOperator reciprocal_transform(const ThetaOperator& op);

// Operator annihilating y(t^k) for every solution y.
ThetaOperator power_pullback(const ThetaOperator& op, int k);

// Coordinate rescale t -> N t: P_i picks up N^i.
ThetaOperator rescale_coordinate(const ThetaOperator& op, const Rat& n);

// Conjugation by t^mu (solutions z = t^-mu y): P_i(Theta) -> P_i(Theta+mu).
// Used to normalize a non-zero common exponent, e.g. at a second MUM point.
ThetaOperator shift_exponents(const ThetaOperator& op, const Rat& mu);

// Formal adjoint sum (-d/dt)^i a_i(t); an involution.
DiffOperator adjoint(const DiffOperator& op);

// Compose op with multiplication by a rational function: op . (f*).
DiffOperator compose_mul(const DiffOperator& op, const RatFun& f);
// Multiplication on the left: (f*) . op.
DiffOperator mul_compose(const RatFun& f, const DiffOperator& op);

}  // namespace cyops
