#include "cyops/laurent.hpp"

#include <numeric>

namespace cyops {

namespace {
void check_dim(int a, int b, const char* who) {
    if (a != b) throw Error(std::string(who) + ": dimension mismatch");
}
int total_degree(const ExpVec& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}
}  // namespace

void LaurentPoly::add_term(const ExpVec& e, const Rat& c) {
    if (static_cast<int>(e.size()) != dim_) throw Error("LaurentPoly: bad exponent vector");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat LaurentPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool LaurentPoly::nonnegative() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return false;
    return true;
}

LaurentPoly LaurentPoly::constant(int dim, const Rat& c) {
    LaurentPoly p(dim);
    p.add_term(ExpVec(dim, 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(int dim, int index, int power) {
    LaurentPoly p(dim);
    ExpVec e(dim, 0);
    e.at(index) = power;
    p.add_term(e, Rat(1));
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    check_dim(a.dim_, b.dim_, "LaurentPoly::+");
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    check_dim(a.dim_, b.dim_, "LaurentPoly::-");
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_dim(a.dim_, b.dim_, "LaurentPoly::*");
    LaurentPoly r(a.dim_);
    ExpVec e(a.dim_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.dim_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) throw Error("LaurentPoly::pow: negative power");
    LaurentPoly r = constant(dim_, Rat(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

void MSeries::add_term(const ExpVec& e, const Rat& c) {
    if (static_cast<int>(e.size()) != dim_) throw Error("MSeries: bad exponent vector");
    for (int x : e)
        if (x < 0) throw Error("MSeries: negative exponent");
    if (total_degree(e) > deg_ || c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat MSeries::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

MSeries operator+(const MSeries& a, const MSeries& b) {
    check_dim(a.dim_, b.dim_, "MSeries::+");
    MSeries r(a.dim_, std::min(a.deg_, b.deg_));
    for (const auto& [e, c] : a.terms_) r.add_term(e, c);
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MSeries operator-(const MSeries& a, const MSeries& b) {
    check_dim(a.dim_, b.dim_, "MSeries::-");
    MSeries r(a.dim_, std::min(a.deg_, b.deg_));
    for (const auto& [e, c] : a.terms_) r.add_term(e, c);
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

MSeries operator*(const MSeries& a, const MSeries& b) {
    check_dim(a.dim_, b.dim_, "MSeries::*");
    MSeries r(a.dim_, std::min(a.deg_, b.deg_));
    ExpVec e(a.dim_);
    for (const auto& [ea, ca] : a.terms_) {
        int da = total_degree(ea);
        for (const auto& [eb, cb] : b.terms_) {
            if (da + total_degree(eb) > r.deg_) continue;
            for (int i = 0; i < a.dim_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool operator==(const MSeries& a, const MSeries& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
}

MSeries MSeries::from_poly(const LaurentPoly& p, int deg_bound) {
    if (!p.nonnegative()) throw Error("MSeries::from_poly: negative exponent");
    MSeries r(p.dim(), deg_bound);
    for (const auto& [e, c] : p.terms()) r.add_term(e, c);
    return r;
}

QSeries MSeries::diagonal() const {
    int order = dim_ > 0 ? deg_ / dim_ : 0;
    std::vector<Rat> c(order + 1, Rat(0));
    for (int k = 0; k <= order; ++k) c[k] = coeff(ExpVec(dim_, k));
    return QSeries(std::move(c));
}

MSeries mseries_expand_rational(const LaurentPoly& P, const LaurentPoly& Q, int D) {
    if (!P.nonnegative() || !Q.nonnegative())
        throw Error("mseries_expand_rational: exponents must be nonnegative");
    Rat q0 = Q.constant_term();
    if (q0 == 0) throw ZeroConstantDenominator();
    // P/Q = (P/q0) * sum_k R^k with R = (q0 - Q)/q0, which has no constant
    // term, so degree-D truncation needs k <= D only.
    MSeries R(Q.dim(), D);
    for (const auto& [e, c] : Q.terms()) {
        if (total_degree(e) == 0) continue;
        R.add_term(e, -c / q0);
    }
    MSeries base(P.dim(), D);
    for (const auto& [e, c] : P.terms()) base.add_term(e, c / q0);
    MSeries acc = base;
    MSeries term = base;
    for (int k = 1; k <= D; ++k) {
        term = term * R;
        if (term.terms().empty()) break;
        acc = acc + term;
    }
    return acc;
}

}  // namespace cyops
