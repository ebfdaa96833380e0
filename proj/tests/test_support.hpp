#pragma once

// Deterministic random generators shared by the property tests.

#include <random>

#include "cyops/qseries.hpp"
#include "cyops/ratpoly.hpp"

namespace cyops::testing {

struct Rng {
    std::mt19937 engine;
    explicit Rng(unsigned seed) : engine(seed) {}

    long int_in(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(engine);
    }

    Rat rat(long max_num = 9, long max_den = 9) {
        long n = int_in(-max_num, max_num);
        long d = int_in(1, max_den);
        return make_rat(Int(n), Int(d));
    }

    Rat nonzero_rat(long max_num = 9, long max_den = 9) {
        Rat r = rat(max_num, max_den);
        while (r == 0) r = rat(max_num, max_den);
        return r;
    }

    QSeries series(int trunc, long max_num = 9, long max_den = 9) {
        std::vector<Rat> c(trunc + 1);
        for (auto& v : c) v = rat(max_num, max_den);
        return QSeries(std::move(c));
    }

    RatPoly poly(int max_deg, long max_num = 9, long max_den = 1) {
        int d = static_cast<int>(int_in(0, max_deg));
        std::vector<Rat> c(d + 1);
        for (auto& v : c) v = rat(max_num, max_den);
        if (c.back() == 0) c.back() = Rat(1);
        return RatPoly(std::move(c));
    }
};

}  // namespace cyops::testing
