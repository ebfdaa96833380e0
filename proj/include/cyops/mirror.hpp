#pragma once

// The MUM-point pipeline: mirror map q = t exp(f1/f0), normalized Yukawa
// coupling K(q) = theta_q^2 (y2/y0) with K(0) = 1, instanton numbers by
// Moebius inversion of the Lambert expansion, and the theta^2 (1/K) theta^2
// normal-form witness.

#include <vector>

#include "cyops/frobenius.hpp"
#include "cyops/qseries.hpp"

namespace cyops {

struct MirrorData {
    QSeries q_of_t;  // q = t + ...
    QSeries t_of_q;  // compositional inverse
    QSeries K;       // normalized Yukawa coupling, K(0) = 1
    Rat scale = Rat(1);
};

// q(t) and t(q); requires basis order >= 2.
std::pair<QSeries, QSeries> mirror_map(const FrobeniusBasis& fb);

// K(q); requires order-4 basis (NotOrderFour). md must carry the maps.
QSeries yukawa_coupling(const FrobeniusBasis& fb, const MirrorData& md);

// Convenience: maps + coupling in one structure.
MirrorData compute_mirror(const FrobeniusBasis& fb, const Rat& scale = Rat(1));

struct InstantonTable {
    std::vector<std::pair<long, Rat>> entries;  // (d, n_d), d = 1..D
    Rat scale = Rat(1);
    Rat at(long d) const;
};

// n_d = scale * (sum_{e|d} mu(d/e) c_e) / d^3 with c_m = [q^m](K - 1).
InstantonTable instanton_numbers(const QSeries& K, int depth, const Rat& scale);

// Rebuild 1 + sum n_d/scale d^3 q^d/(1-q^d) for the Lambert round trip.
QSeries lambert_series(const InstantonTable& table, int trunc);

// theta^2((theta^2(y3/y0)) / K) == 0 as a log-graded series identity.
bool normal_form_check(const FrobeniusBasis& fb, const MirrorData& md);

// A log-graded series in the t-coordinate rewritten in the q-coordinate:
// components composed with t(q) and log t = log q - log(q/t) re-expanded.
LogSeries to_q_coordinate(const LogSeries& s, const FrobeniusBasis& fb, const MirrorData& md);

}  // namespace cyops
