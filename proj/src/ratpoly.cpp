#include "cyops/ratpoly.hpp"

#include <sstream>

namespace cyops {

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::constant(const Rat& v) {
    return v == 0 ? RatPoly() : RatPoly({v});
}

RatPoly RatPoly::monomial(const Rat& v, int deg) {
    if (v == 0) return RatPoly();
    std::vector<Rat> c(deg + 1, Rat(0));
    c[deg] = v;
    return RatPoly(std::move(c));
}

RatPoly RatPoly::variable() { return monomial(Rat(1), 1); }

const Rat& RatPoly::leading() const {
    if (c_.empty()) throw Error("RatPoly::leading of zero polynomial");
    return c_.back();
}

Rat RatPoly::operator()(const Rat& x) const {
    Rat acc(0);
    for (int k = degree(); k >= 0; --k) acc = acc * x + c_[k];
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (degree() < 1) return RatPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rat(Int(k)) * c_[k];
    return RatPoly(std::move(d));
}

RatPoly RatPoly::taylor_shift(const Rat& p) const {
    RatPoly acc;
    for (int k = degree(); k >= 0; --k) {
        acc = acc * RatPoly{p, Rat(1)} + RatPoly::constant(c_[k]);
    }
    return acc;
}

RatPoly RatPoly::scale_arg(const Rat& s) const {
    std::vector<Rat> c(c_);
    Rat pw(1);
    for (auto& v : c) {
        v *= pw;
        pw *= s;
    }
    return RatPoly(std::move(c));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a) {
    std::vector<Rat> c(a.c_);
    for (auto& v : c) v = -v;
    return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(c));
}

RatPoly operator*(const Rat& s, const RatPoly& a) {
    std::vector<Rat> c(a.c_);
    for (auto& v : c) v *= s;
    return RatPoly(std::move(c));
}

bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

void RatPoly::divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.is_zero()) throw Error("RatPoly::divmod by zero");
    std::vector<Rat> rem(a.c_);
    int db = b.degree();
    std::vector<Rat> quot;
    if (static_cast<int>(rem.size()) - 1 >= db)
        quot.assign(rem.size() - db, Rat(0));
    for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
        if (rem[k] == 0) continue;
        Rat f = rem[k] / b.c_[db];
        quot[k - db] = f;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
    }
    q = RatPoly(std::move(quot));
    r = RatPoly(std::move(rem));
}

RatPoly RatPoly::quotient(const RatPoly& b) const {
    RatPoly q, r;
    divmod(*this, b, q, r);
    return q;
}

RatPoly RatPoly::remainder(const RatPoly& b) const {
    RatPoly q, r;
    divmod(*this, b, q, r);
    return r;
}

bool RatPoly::divides(const RatPoly& b) const {
    if (is_zero()) return b.is_zero();
    return b.remainder(*this).is_zero();
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    return (1 / leading()) * *this;
}

Rat RatPoly::content() const {
    if (is_zero()) return Rat(1);
    Int l(1);
    for (const auto& v : c_) l = lcm(l, den(v));
    // content of (p_i/q_i) list: gcd(p_i * (l/q_i)) / l
    Int gnum(0);
    for (const auto& v : c_) {
        Int scaled = num(v) * (l / den(v));
        Int gg;
        mpz_gcd(gg.get_mpz_t(), gnum.get_mpz_t(), scaled.get_mpz_t());
        gnum = gg;
    }
    return make_rat(gnum, l);
}

RatPoly RatPoly::primitive() const {
    if (is_zero()) return *this;
    return (1 / content()) * *this;
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        const Rat& v = c_[k];
        if (v == 0) continue;
        Rat a = abs(v);
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = x.remainder(y);
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

RatPoly falling_factorial(int k) {
    RatPoly r = RatPoly::constant(Rat(1));
    for (int i = 0; i < k; ++i) r = r * RatPoly{Rat(-i), Rat(1)};
    return r;
}

}  // namespace cyops
