#include "cyops/gammaclass.hpp"

#include <sstream>

namespace cyops {

int ZetaPoly::weight(const ZetaMono& m) {
    int w = 0;
    for (const auto& [id, e] : m) w += id * e;
    return w;
}

ZetaPoly ZetaPoly::symbol(int weight_cap, int id, const Rat& coeff) {
    ZetaPoly p(weight_cap);
    ZetaMono m;
    m[id] = 1;
    p.add(m, coeff);
    return p;
}

ZetaPoly ZetaPoly::lambda(int weight_cap, int k) {
    if (k < 2) throw Error("lambda_k needs k >= 2");
    return symbol(weight_cap, k);
}

void ZetaPoly::add(const ZetaMono& m, const Rat& c) {
    if (c == 0 || weight(m) > cap_) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat ZetaPoly::coeff(const ZetaMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool ZetaPoly::is_rational() const {
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (!m.empty()) return false;
    }
    return true;
}

bool ZetaPoly::in_q_lambda3() const {
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (m.empty()) continue;
        if (m.size() != 1) return false;
        const auto& [id, e] = *m.begin();
        if (id != 3 || e != 1) return false;
    }
    return true;
}

ZetaPoly ZetaPoly::reduce_even() const {
    ZetaPoly out(cap_);
    for (const auto& [m, c] : terms_) {
        Rat scale = c;
        ZetaMono rest;
        for (const auto& [id, e] : m) {
            if (id >= 2 && id % 2 == 0) {
                // lambda_{2k} = zeta(2k)/(2 pi i)^{2k} = -B_{2k}/(2 (2k)!)
                Rat val = -bernoulli(static_cast<unsigned long>(id)) /
                          Rat(2 * factorial(static_cast<unsigned long>(id)));
                scale *= rat_pow(val, e);
            } else {
                rest[id] = e;
            }
        }
        out.add(rest, scale);
    }
    return out;
}

ZetaPoly operator+(const ZetaPoly& a, const ZetaPoly& b) {
    ZetaPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add(m, c);
    return r;
}

ZetaPoly operator-(const ZetaPoly& a, const ZetaPoly& b) {
    ZetaPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add(m, -c);
    return r;
}

ZetaPoly operator-(const ZetaPoly& a) {
    ZetaPoly r(a.cap_);
    for (const auto& [m, c] : a.terms_) r.add(m, -c);
    return r;
}

ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b) {
    ZetaPoly r(std::min(a.cap_, b.cap_));
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            ZetaMono m = ma;
            for (const auto& [id, e] : mb) m[id] += e;
            r.add(m, ca * cb);
        }
    return r;
}

ZetaPoly operator*(const Rat& s, const ZetaPoly& a) {
    ZetaPoly r(a.cap_);
    for (const auto& [m, c] : a.terms_) r.add(m, s * c);
    return r;
}

bool operator==(const ZetaPoly& a, const ZetaPoly& b) { return a.terms_ == b.terms_; }

std::string ZetaPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_to_string(c);
        for (const auto& [id, e] : m) {
            os << "*" << (id == 1 ? std::string("g") : "L" + std::to_string(id));
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

ZetaSeries zeta_series_mul(const ZetaSeries& a, const ZetaSeries& b) {
    size_t n = std::min(a.size(), b.size());
    ZetaSeries r;
    r.reserve(n);
    for (size_t k = 0; k < n; ++k) r.emplace_back(a[0].weight_cap());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; i + j < n; ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

ZetaSeries zeta_series_exp(const ZetaSeries& a) {
    if (a.empty() || !a[0].is_zero()) throw Error("zeta_series_exp: constant term must vanish");
    size_t n = a.size();
    ZetaSeries e;
    e.reserve(n);
    for (size_t k = 0; k < n; ++k) e.emplace_back(a[0].weight_cap());
    e[0] = ZetaPoly(a[0].weight_cap(), Rat(1));
    for (size_t k = 1; k < n; ++k) {
        ZetaPoly s(a[0].weight_cap());
        for (size_t j = 1; j <= k; ++j) s = s + Rat(Int(j)) * (a[j] * e[k - j]);
        e[k] = make_rat(1, Int(k)) * s;
    }
    return e;
}

ZetaSeries gamma_factor_log(int sign, int weight_cap) {
    ZetaSeries log;
    log.reserve(weight_cap + 1);
    for (int j = 0; j <= weight_cap; ++j) log.emplace_back(weight_cap);
    if (weight_cap >= 1)
        log[1] = ZetaPoly::gammahat(weight_cap) * ZetaPoly(weight_cap, Rat(-sign));
    for (int j = 2; j <= weight_cap; ++j) {
        Rat c = make_rat((j % 2 == 0) ? 1 : -1, j);  // (-1)^j / j
        c *= rat_pow(Rat(sign), j);
        log[j] = c * ZetaPoly::lambda(weight_cap, j);
    }
    return log;
}

ZetaSeries gamma_ratio_series(int k, int weight_cap) {
    if (weight_cap < 2) throw Error("gamma_ratio_series: weight cap must be >= 2");
    // log Gamma(1+kx) - k log Gamma(1+x); x -> kx scales x^j by k^j
    ZetaSeries lk = gamma_factor_log(1, weight_cap);
    ZetaSeries l1 = gamma_factor_log(1, weight_cap);
    ZetaSeries diff;
    diff.reserve(weight_cap + 1);
    Rat kj(1);
    for (int j = 0; j <= weight_cap; ++j) {
        diff.push_back(kj * lk[j] - Rat(k) * l1[j]);
        kj *= Rat(k);
    }
    // the gammahat terms cancel in the ratio
    if (!diff[1].is_zero()) throw Error("gamma_ratio_series: gammahat terms did not cancel");
    return zeta_series_exp(diff);
}

FrobVector gamma_class_cy3(long d, long c, long e, int weight_cap) {
    (void)d;  // the degree enters through mir, not the class itself
    FrobVector v(weight_cap);
    v.coords[0] = ZetaPoly(weight_cap, Rat(1));
    v.coords[2] = Rat(-c) * ZetaPoly::lambda(weight_cap, 2);
    v.coords[3] = Rat(-e) * ZetaPoly::lambda(weight_cap, 3);
    return v;
}

FrobVector reflection_vector(long d, long c, long e) {
    if (d <= 0) throw NonPositiveDegree();
    const int w = 3;
    // the lambda_2 -> -1/24 evaluation turns -c lambda_2 into c/24
    ZetaPoly converted = (Rat(-c) * ZetaPoly::lambda(w, 2)).reduce_even();
    if (!(converted == ZetaPoly(w, Rat(c) / 24)))
        throw Error("reflection_vector: lambda_2 evaluation rule violated");
    FrobVector s(w);
    s.coords[0] = ZetaPoly(w, Rat(d));
    s.coords[2] = converted;
    s.coords[3] = Rat(e) * ZetaPoly::lambda(w, 3);
    return s;
}

RatMat4 t0_matrix() {
    RatMat4 m{};
    for (auto& row : m) row.fill(Rat(0));
    m[0][0] = m[1][1] = m[2][2] = m[3][3] = 1;
    m[1][0] = 1;
    m[2][0] = make_rat(1, 2);
    m[2][1] = 1;
    m[3][0] = make_rat(1, 6);
    m[3][1] = make_rat(1, 2);
    m[3][2] = 1;
    return m;
}

RatMat4 symplectic_pairing(long d) {
    if (d <= 0) throw NonPositiveDegree();
    RatMat4 j{};
    for (auto& row : j) row.fill(Rat(0));
    Rat v = make_rat(1, d);
    j[0][3] = v;
    j[1][2] = -v;
    j[2][1] = v;
    j[3][0] = -v;
    return j;
}

ZetaPoly pair(const FrobVector& a, const FrobVector& b, const RatMat4& J) {
    ZetaPoly acc(a.coords[0].weight_cap());
    for (int i = 0; i < 4; ++i) {
        if (a.coords[i].is_zero()) continue;
        for (int j = 0; j < 4; ++j) {
            if (J[i][j] == 0 || b.coords[j].is_zero()) continue;
            acc = acc + J[i][j] * (a.coords[i] * b.coords[j]);
        }
    }
    return acc;
}

FrobVector apply_reflection(const FrobVector& v, const FrobVector& S, const RatMat4& J) {
    ZetaPoly c = pair(v, S, J);
    FrobVector out = v;
    for (int i = 0; i < 4; ++i) out.coords[i] = out.coords[i] - c * S.coords[i];
    return out;
}

}  // namespace cyops
