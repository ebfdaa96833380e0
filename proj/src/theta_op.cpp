#include "cyops/theta_op.hpp"

#include <map>
#include <sstream>

namespace cyops {

ThetaOperator::ThetaOperator(std::vector<RatPoly> polys) : polys_(std::move(polys)) {
    while (!polys_.empty() && polys_.back().is_zero()) polys_.pop_back();
    if (polys_.empty()) throw Error("ThetaOperator: zero operator");
    if (order() < 1) throw Error("ThetaOperator: order must be >= 1");
}

int ThetaOperator::order() const {
    int n = 0;
    for (const auto& p : polys_) n = std::max(n, p.degree());
    return n;
}

ThetaOperator ThetaOperator::canonical() const {
    // overall rational content across all P_i
    Int l(1);
    for (const auto& p : polys_)
        for (const auto& v : p.coeffs()) l = lcm(l, den(v));
    Int g(0);
    for (const auto& p : polys_)
        for (const auto& v : p.coeffs()) {
            Int scaled = num(v) * (l / den(v));
            Int gg;
            mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), scaled.get_mpz_t());
            g = gg;
        }
    Rat scale = make_rat(l, g);
    // sign: leading coefficient of the first nonzero P_i positive
    for (const auto& p : polys_) {
        if (p.is_zero()) continue;
        if (p.leading() * scale < 0) scale = -scale;
        break;
    }
    std::vector<RatPoly> out;
    out.reserve(polys_.size());
    for (const auto& p : polys_) out.push_back(scale * p);
    // minimal clearing includes the left t-power: P_0 = 0 means the operator
    // is t times a smaller one, and the canonical form divides that unit off
    size_t lead = 0;
    while (lead + 1 < out.size() && out[lead].is_zero()) ++lead;
    if (lead > 0) out.erase(out.begin(), out.begin() + lead);
    return ThetaOperator(std::move(out));
}

bool operator==(const ThetaOperator& a, const ThetaOperator& b) {
    return a.polys_ == b.polys_;
}

std::string ThetaOperator::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        if (polys_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i > 0) os << "t^" << i << "*";
        os << "(" << polys_[i].to_string() << ")";
    }
    return os.str();
}

DiffOperator::DiffOperator(std::vector<RatFun> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) throw Error("DiffOperator: zero operator");
}

DiffOperator DiffOperator::monic() const {
    std::vector<RatFun> out;
    out.reserve(coeffs_.size());
    const RatFun& lead = coeffs_.back();
    for (const auto& a : coeffs_) out.push_back(a / lead);
    return DiffOperator(std::move(out));
}

DiffOperator DiffOperator::primitive_polynomial() const {
    RatPoly den_lcm = RatPoly::constant(Rat(1));
    for (const auto& a : coeffs_) {
        if (a.is_zero()) continue;
        RatPoly g = poly_gcd(den_lcm, a.den());
        den_lcm = den_lcm * a.den().quotient(g);
    }
    std::vector<RatPoly> polys;
    polys.reserve(coeffs_.size());
    RatPoly common;
    for (const auto& a : coeffs_) {
        RatPoly p = a.num() * den_lcm.quotient(a.den());
        if (!p.is_zero()) common = common.is_zero() ? p.monic() : poly_gcd(common, p);
        polys.push_back(std::move(p));
    }
    std::vector<RatFun> out;
    out.reserve(polys.size());
    for (auto& p : polys)
        out.emplace_back(common.degree() > 0 ? p.quotient(common) : p);
    return DiffOperator(std::move(out));
}

bool operator==(const DiffOperator& a, const DiffOperator& b) {
    return a.coeffs_ == b.coeffs_;
}

std::string DiffOperator::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = order(); i >= 0; --i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[i].to_string() << ")";
        if (i > 0) os << "*D^" << i;
    }
    return os.str();
}

namespace {

// Stirling numbers of the second kind, S(k, j): Theta^k = sum_j S(k,j) t^j D^j.
std::vector<std::vector<Int>> stirling2_table(int kmax) {
    std::vector<std::vector<Int>> s(kmax + 1, std::vector<Int>(kmax + 1, Int(0)));
    s[0][0] = 1;
    for (int k = 1; k <= kmax; ++k)
        for (int j = 1; j <= k; ++j) s[k][j] = s[k - 1][j - 1] + Int(j) * s[k - 1][j];
    return s;
}

}  // namespace

DiffOperator theta_to_d(const ThetaOperator& op) {
    int n = op.order();
    auto s2 = stirling2_table(n);
    // coefficient of D^j collects sum_i c_{i,k} S(k,j) t^{i+j}
    std::vector<RatPoly> a(n + 1);
    for (int i = 0; i <= op.degree(); ++i) {
        const RatPoly& p = op.poly(i);
        for (int k = 0; k <= p.degree(); ++k) {
            if (p.coeff(k) == 0) continue;
            for (int j = 0; j <= k; ++j) {
                if (s2[k][j] == 0) continue;
                a[j] = a[j] + RatPoly::monomial(p.coeff(k) * Rat(s2[k][j]), i + j);
            }
        }
    }
    std::vector<RatFun> coeffs;
    coeffs.reserve(a.size());
    for (auto& p : a) coeffs.emplace_back(std::move(p));
    return DiffOperator(std::move(coeffs));
}

ThetaOperator d_to_theta(const DiffOperator& op) {
    DiffOperator poly_op = op.primitive_polynomial();
    // t^m D^j = t^{m-j} [Theta]_j; gather by the power e = m - j, which may
    // be negative, then shift the whole operator left by t^{-e_min}.
    int n = poly_op.order();
    std::vector<RatPoly> falling(n + 1);
    for (int j = 0; j <= n; ++j) falling[j] = falling_factorial(j);
    std::map<int, RatPoly> by_power;
    for (int j = 0; j <= n; ++j) {
        const RatPoly& b = poly_op.coeff(j).num();
        for (int m = 0; m <= b.degree(); ++m) {
            if (b.coeff(m) == 0) continue;
            RatPoly& slot = by_power[m - j];
            slot = slot + b.coeff(m) * falling[j];
        }
    }
    int emin = 0, emax = 0;
    bool any = false;
    for (const auto& [e, p] : by_power) {
        if (p.is_zero()) continue;
        emin = any ? std::min(emin, e) : e;
        emax = any ? std::max(emax, e) : e;
        any = true;
    }
    if (!any) throw Error("d_to_theta: zero operator");
    std::vector<RatPoly> polys(emax - emin + 1);
    for (const auto& [e, p] : by_power)
        if (!p.is_zero()) polys[e - emin] = p;
    return ThetaOperator(std::move(polys)).canonical();
}

QSeries apply_operator(const ThetaOperator& op, const QSeries& s) {
    int r = op.degree();
    if (s.trunc() < r) throw InsufficientTruncation("apply_operator: series too short");
    int out_trunc = s.trunc() - r;
    std::vector<Rat> c(s.trunc() + 1, Rat(0));
    for (int i = 0; i <= r; ++i) {
        const RatPoly& p = op.poly(i);
        if (p.is_zero()) continue;
        for (int m = i; m <= s.trunc(); ++m) {
            if (s[m - i] == 0) continue;
            c[m] += p(Rat(m - i)) * s[m - i];
        }
    }
    c.resize(out_trunc + 1);
    return QSeries(std::move(c));
}

ThetaOperator translate_point(const ThetaOperator& op, const Rat& p) {
    if (p == 0) return op.canonical();
    DiffOperator d = theta_to_d(op);
    std::vector<RatFun> shifted;
    shifted.reserve(d.coeffs().size());
    for (const auto& a : d.coeffs())
        shifted.emplace_back(a.num().taylor_shift(p), a.den().taylor_shift(p));
    return d_to_theta(DiffOperator(std::move(shifted)));
}

ThetaOperator reciprocal_transform(const ThetaOperator& op) {
    std::vector<RatPoly> polys(op.polys().rbegin(), op.polys().rend());
    for (auto& p : polys) p = p.negate_arg();
    return ThetaOperator(std::move(polys)).canonical();
}

ThetaOperator power_pullback(const ThetaOperator& op, int k) {
    if (k < 1) throw Error("power_pullback: k must be >= 1");
    if (k == 1) return op.canonical();
    std::vector<RatPoly> polys(static_cast<size_t>(op.degree()) * k + 1);
    for (int i = 0; i <= op.degree(); ++i)
        polys[static_cast<size_t>(i) * k] = op.poly(i).scale_arg(make_rat(1, k));
    return ThetaOperator(std::move(polys)).canonical();
}

ThetaOperator rescale_coordinate(const ThetaOperator& op, const Rat& n) {
    if (n == 0) throw Error("rescale_coordinate: zero scale");
    std::vector<RatPoly> polys = op.polys();
    Rat pw(1);
    for (auto& p : polys) {
        p = pw * p;
        pw *= n;
    }
    return ThetaOperator(std::move(polys)).canonical();
}

ThetaOperator shift_exponents(const ThetaOperator& op, const Rat& mu) {
    std::vector<RatPoly> polys = op.polys();
    for (auto& p : polys) p = p.taylor_shift(mu);
    return ThetaOperator(std::move(polys)).canonical();
}

DiffOperator adjoint(const DiffOperator& op) {
    int n = op.order();
    // (-D)^i . a = sum_k (-1)^i C(i,k) a^{(k)} D^{i-k}
    std::vector<RatFun> out(n + 1);
    for (int i = 0; i <= n; ++i) {
        RatFun d = op.coeff(i);
        Rat sign = (i % 2 == 0) ? Rat(1) : Rat(-1);
        for (int k = 0; k <= i; ++k) {
            out[i - k] = out[i - k] + RatFun(sign * Rat(binomial(Int(i), Int(k)))) * d;
            if (k < i) d = d.derivative();
        }
    }
    return DiffOperator(std::move(out));
}

DiffOperator compose_mul(const DiffOperator& op, const RatFun& f) {
    int n = op.order();
    std::vector<RatFun> out(n + 1);
    // D^i . f = sum_k C(i,k) f^{(k)} D^{i-k}
    for (int i = 0; i <= n; ++i) {
        RatFun d = f;
        for (int k = 0; k <= i; ++k) {
            out[i - k] = out[i - k] + RatFun(Rat(binomial(Int(i), Int(k)))) * op.coeff(i) * d;
            if (k < i) d = d.derivative();
        }
    }
    return DiffOperator(std::move(out));
}

DiffOperator mul_compose(const RatFun& f, const DiffOperator& op) {
    std::vector<RatFun> out = op.coeffs();
    for (auto& a : out) a = f * a;
    return DiffOperator(std::move(out));
}

}  // namespace cyops
