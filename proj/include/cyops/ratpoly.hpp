#pragma once

// Dense univariate polynomials over Q. Leading coefficient is nonzero
// unless the polynomial is zero (represented by an empty coefficient list).

#include <string>
#include <vector>

#include "cyops/rational.hpp"

namespace cyops {

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    RatPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static RatPoly constant(const Rat& v);
    static RatPoly monomial(const Rat& v, int deg);
    static RatPoly variable();  // T

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rat& leading() const;
    Rat coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat operator()(const Rat& x) const;

    RatPoly derivative() const;
    RatPoly taylor_shift(const Rat& p) const;  // P(T + p)
    RatPoly scale_arg(const Rat& s) const;     // P(s*T)
    RatPoly negate_arg() const { return scale_arg(Rat(-1)); }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const Rat& s, const RatPoly& a);
    friend bool operator==(const RatPoly& a, const RatPoly& b);

    // Euclidean division; throws on zero divisor.
    static void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
    RatPoly quotient(const RatPoly& b) const;
    RatPoly remainder(const RatPoly& b) const;
    bool divides(const RatPoly& b) const;  // this | b exactly

    RatPoly monic() const;
    // content: positive rational c with (1/c)*P integer, content-1.
    Rat content() const;
    RatPoly primitive() const;  // integer coefficients, content 1, sign of leading kept

    std::string to_string(const std::string& var = "T") const;

private:
    void trim();
    std::vector<Rat> c_;
};

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);  // monic gcd
// Falling factorial T(T-1)...(T-k+1).
RatPoly falling_factorial(int k);

}  // namespace cyops
