#include "cyops/frobenius.hpp"

#include <algorithm>

namespace cyops {

bool RhoPoly::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& v) { return v == 0; });
}

RhoPoly RhoPoly::inverse() const {
    if (c_[0] == 0) throw Error("RhoPoly::inverse: non-unit");
    int n = modulus();
    RhoPoly inv(n);
    inv.c_[0] = 1 / c_[0];
    for (int k = 1; k < n; ++k) {
        Rat s(0);
        for (int j = 1; j <= k; ++j) s += c_[j] * inv.c_[k - j];
        inv.c_[k] = -s / c_[0];
    }
    return inv;
}

RhoPoly operator+(const RhoPoly& a, const RhoPoly& b) {
    RhoPoly r = a;
    for (int k = 0; k < r.modulus(); ++k) r.c_[k] += b.c_.at(k);
    return r;
}

RhoPoly operator-(const RhoPoly& a, const RhoPoly& b) {
    RhoPoly r = a;
    for (int k = 0; k < r.modulus(); ++k) r.c_[k] -= b.c_.at(k);
    return r;
}

RhoPoly operator*(const RhoPoly& a, const RhoPoly& b) {
    if (a.modulus() != b.modulus()) throw Error("RhoPoly: modulus mismatch");
    RhoPoly r(a.modulus());
    for (int i = 0; i < a.modulus(); ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; i + j < a.modulus(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

RhoPoly operator*(const Rat& s, const RhoPoly& a) {
    RhoPoly r = a;
    for (auto& v : r.c_) v *= s;
    return r;
}

bool operator==(const RhoPoly& a, const RhoPoly& b) { return a.c_ == b.c_; }

RhoPoly eval_at_shifted_rho(const RatPoly& p, const Rat& m, int n) {
    // Horner at (m + rho)
    RhoPoly x(n, m);
    if (n > 1) x.set(1, Rat(1));
    RhoPoly acc(n);
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * x;
        acc.set(0, acc[0] + p.coeff(k));
    }
    return acc;
}

bool mum_check(const ThetaOperator& op) {
    const RatPoly& p0 = op.poly(0);
    int n = op.order();
    if (p0.degree() != n) return false;
    for (int k = 0; k < n; ++k)
        if (p0.coeff(k) != 0) return false;
    return true;
}

QSeries holomorphic_solution(const ThetaOperator& op, int order) {
    if (!mum_check(op)) throw NotMUM();
    int r = op.degree();
    std::vector<Rat> a(order + 1, Rat(0));
    a[0] = 1;
    for (int m = 1; m <= order; ++m) {
        Rat rhs(0);
        for (int i = 1; i <= std::min(r, m); ++i)
            rhs -= op.poly(i)(Rat(m - i)) * a[m - i];
        Rat p0 = op.poly(0)(Rat(m));
        if (p0 == 0) throw ResonanceBreakdown("P_0 vanished at a positive integer");
        a[m] = rhs / p0;
    }
    return QSeries(std::move(a));
}

FrobeniusBasis frobenius_basis(const ThetaOperator& op, int order) {
    if (!mum_check(op)) throw NotMUM();
    int n = op.order();
    int r = op.degree();
    std::vector<RhoPoly> a;
    a.reserve(order + 1);
    a.emplace_back(n, Rat(1));
    for (int m = 1; m <= order; ++m) {
        RhoPoly rhs(n);
        for (int i = 1; i <= std::min(r, m); ++i)
            rhs = rhs - eval_at_shifted_rho(op.poly(i), Rat(m - i), n) * a[m - i];
        a.push_back(eval_at_shifted_rho(op.poly(0), Rat(m), n).inverse() * rhs);
    }
    FrobeniusBasis fb;
    fb.n = n;
    for (int k = 0; k < n; ++k) {
        std::vector<Rat> c(order + 1);
        for (int m = 0; m <= order; ++m) c[m] = a[m][k];
        fb.parts.emplace_back(std::move(c));
    }
    return fb;
}

bool LogSeries::is_zero() const {
    return std::all_of(comps.begin(), comps.end(), [](const QSeries& s) { return s.is_zero(); });
}

LogSeries LogSeries::theta() const {
    LogSeries out;
    out.comps.reserve(comps.size());
    for (size_t j = 0; j < comps.size(); ++j) {
        QSeries c = comps[j].theta();
        if (j + 1 < comps.size()) c = c + Rat(Int(j + 1)) * comps[j + 1];
        out.comps.push_back(std::move(c));
    }
    return out;
}

LogSeries LogSeries::shift(int k) const {
    LogSeries out;
    out.comps.reserve(comps.size());
    for (const auto& c : comps) out.comps.push_back(c.shift(k));
    return out;
}

LogSeries operator+(const LogSeries& a, const LogSeries& b) {
    LogSeries out;
    size_t n = std::max(a.comps.size(), b.comps.size());
    for (size_t j = 0; j < n; ++j) {
        if (j < a.comps.size() && j < b.comps.size())
            out.comps.push_back(a.comps[j] + b.comps[j]);
        else
            out.comps.push_back(j < a.comps.size() ? a.comps[j] : b.comps[j]);
    }
    return out;
}

LogSeries operator*(const Rat& s, const LogSeries& a) {
    LogSeries out;
    for (const auto& c : a.comps) out.comps.push_back(s * c);
    return out;
}

LogSeries basis_element(const FrobeniusBasis& fb, int k) {
    LogSeries y;
    Rat invfac(1);
    for (int j = 0; j <= k; ++j) {
        if (j > 0) invfac /= Rat(Int(j));
        y.comps.push_back(invfac * fb.part(k - j));
    }
    return y;
}

LogSeries apply_operator(const ThetaOperator& op, const LogSeries& s) {
    int n = op.order();
    // Theta powers of s, then Horner-free direct sum over all P_i coefficients.
    std::vector<LogSeries> pows{s};
    for (int k = 1; k <= n; ++k) pows.push_back(pows.back().theta());
    LogSeries acc;
    acc.comps.assign(s.comps.size(), QSeries::zero(s.comps.empty() ? 0 : s.comps[0].trunc()));
    for (int i = 0; i <= op.degree(); ++i) {
        const RatPoly& p = op.poly(i);
        if (p.is_zero()) continue;
        LogSeries term;
        term.comps.assign(acc.comps.size(), QSeries::zero(acc.comps[0].trunc()));
        for (int k = 0; k <= p.degree(); ++k) {
            if (p.coeff(k) == 0) continue;
            term = term + p.coeff(k) * pows[k];
        }
        acc = acc + term.shift(i);
    }
    return acc;
}

}  // namespace cyops
