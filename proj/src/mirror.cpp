#include "cyops/mirror.hpp"

#include <algorithm>

namespace cyops {

std::pair<QSeries, QSeries> mirror_map(const FrobeniusBasis& fb) {
    if (fb.n < 2) throw Error("mirror_map: basis order must be >= 2");
    QSeries g = fb.part(1) / fb.part(0);
    QSeries q = QSeries::identity(g.trunc()) * series_exp(g);
    return {q, series_revert(q)};
}

LogSeries to_q_coordinate(const LogSeries& s, const FrobeniusBasis& fb, const MirrorData& md) {
    // log t = log q - G(q) with G = (f1/f0)(t(q)).
    QSeries g = fb.part(1) / fb.part(0);
    QSeries G = series_compose(g, md.t_of_q);
    int top = s.log_degree();
    LogSeries out;
    out.comps.assign(top + 1, QSeries::zero(std::min(G.trunc(), s.comps[0].trunc())));
    std::vector<QSeries> negG_pow{QSeries::one(G.trunc())};
    for (int k = 1; k <= top; ++k) negG_pow.push_back(negG_pow.back() * (-G));
    for (int j = 0; j <= top; ++j) {
        QSeries cj_q = series_compose(s.comps[j], md.t_of_q);
        // (log q - G)^j = sum_i C(j,i) log(q)^i (-G)^{j-i}
        for (int i = 0; i <= j; ++i) {
            Rat bin(binomial(Int(j), Int(i)));
            out.comps[i] = out.comps[i] + bin * (cj_q * negG_pow[j - i]);
        }
    }
    return out;
}

namespace {

LogSeries log_divide(const LogSeries& s, const QSeries& k) {
    LogSeries out;
    for (const auto& c : s.comps) out.comps.push_back(c / k);
    return out;
}

LogSeries theta_q(const LogSeries& s) { return s.theta(); }

}  // namespace

QSeries yukawa_coupling(const FrobeniusBasis& fb, const MirrorData& md) {
    if (fb.n != 4) throw NotOrderFour();
    // y2/y0 in the t-coordinate: log-degree components (f2/f0, f1/f0, 1/2).
    LogSeries y2_over_y0;
    y2_over_y0.comps = {fb.part(2) / fb.part(0), fb.part(1) / fb.part(0),
                        make_rat(1, 2) * QSeries::one(fb.part(0).trunc())};
    LogSeries in_q = to_q_coordinate(y2_over_y0, fb, md);
    LogSeries k = theta_q(theta_q(in_q));
    // the log part must cancel exactly in the q-coordinate
    for (size_t j = 1; j < k.comps.size(); ++j)
        if (!k.comps[j].is_zero()) throw Error("yukawa_coupling: log part failed to cancel");
    QSeries K = k.comps[0];
    if (K[0] != 1) throw Error("yukawa_coupling: K(0) != 1");
    return K;
}

MirrorData compute_mirror(const FrobeniusBasis& fb, const Rat& scale) {
    MirrorData md;
    auto [q, t] = mirror_map(fb);
    md.q_of_t = q;
    md.t_of_q = t;
    md.scale = scale;
    if (fb.n == 4) md.K = yukawa_coupling(fb, md);
    return md;
}

Rat InstantonTable::at(long d) const {
    for (const auto& [dd, v] : entries)
        if (dd == d) return v;
    throw Error("InstantonTable: degree not tabulated");
}

InstantonTable instanton_numbers(const QSeries& K, int depth, const Rat& scale) {
    if (K[0] != 1) throw Error("instanton_numbers: K(0) != 1");
    if (depth > K.trunc()) throw Error("instanton_numbers: depth exceeds truncation");
    InstantonTable table;
    table.scale = scale;
    for (long d = 1; d <= depth; ++d) {
        Rat acc(0);
        for (long e = 1; e <= d; ++e) {
            if (d % e != 0) continue;
            int mu = moebius(static_cast<unsigned long>(d / e));
            if (mu == 0) continue;
            acc += Rat(mu) * K[static_cast<int>(e)];
        }
        table.entries.emplace_back(d, scale * acc / Rat(Int(d) * Int(d) * Int(d)));
    }
    return table;
}

QSeries lambert_series(const InstantonTable& table, int trunc) {
    QSeries K = QSeries::one(trunc);
    for (const auto& [d, nd] : table.entries) {
        if (d > trunc) continue;
        // n_d/scale * d^3 * q^d/(1-q^d)
        Rat c = nd / table.scale * Rat(Int(d) * Int(d) * Int(d));
        std::vector<Rat> geo(trunc + 1, Rat(0));
        for (long m = d; m <= trunc; m += d) geo[m] = c;
        K = K + QSeries(std::move(geo));
    }
    return K;
}

bool normal_form_check(const FrobeniusBasis& fb, const MirrorData& md) {
    if (fb.n != 4) throw NotOrderFour();
    LogSeries y3_over_y0;
    Rat half = make_rat(1, 2), sixth = make_rat(1, 6);
    y3_over_y0.comps = {fb.part(3) / fb.part(0), fb.part(2) / fb.part(0),
                        half * (fb.part(1) / fb.part(0)),
                        sixth * QSeries::one(fb.part(0).trunc())};
    LogSeries in_q = to_q_coordinate(y3_over_y0, fb, md);
    LogSeries w = log_divide(in_q.theta().theta(), md.K);
    LogSeries result = w.theta().theta();
    // ignore the top coefficients lost to the theta/compose bookkeeping: all
    // operations here preserve truncation, so a plain zero test is exact
    return result.is_zero();
}

}  // namespace cyops
