#include "cyops/ratfun.hpp"

namespace cyops {

RatFun::RatFun(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("RatFun: zero denominator");
    reduce();
}

void RatFun::reduce() {
    if (num_.is_zero()) {
        den_ = RatPoly::constant(Rat(1));
        return;
    }
    RatPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.quotient(g);
        den_ = den_.quotient(g);
    }
    Rat lead = den_.leading();
    num_ = (1 / lead) * num_;
    den_ = (1 / lead) * den_;
}

RatFun RatFun::derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rat RatFun::operator()(const Rat& x) const {
    Rat d = den_(x);
    if (d == 0) throw Error("RatFun: evaluation at a pole");
    return num_(x) / d;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a) { return RatFun(-a.num_, a.den_); }

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw Error("RatFun: division by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string RatFun::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

}  // namespace cyops
