#pragma once

// Rational functions over Q, kept in lowest terms with monic denominator.

#include "cyops/ratpoly.hpp"

namespace cyops {

class RatFun {
public:
    RatFun() : num_(RatPoly()), den_(RatPoly::constant(Rat(1))) {}
    RatFun(RatPoly num, RatPoly den);
    explicit RatFun(const RatPoly& p) : num_(p), den_(RatPoly::constant(Rat(1))) {}
    explicit RatFun(const Rat& v) : num_(RatPoly::constant(v)), den_(RatPoly::constant(Rat(1))) {}

    const RatPoly& num() const { return num_; }
    const RatPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFun derivative() const;
    Rat operator()(const Rat& x) const;  // throws on pole

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    friend bool operator==(const RatFun& a, const RatFun& b);

    std::string to_string(const std::string& var = "t") const;

private:
    void reduce();
    RatPoly num_, den_;
};

}  // namespace cyops
