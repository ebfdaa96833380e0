#include "doctest.h"

#include "cyops/integrality.hpp"
#include "cyops/laurent.hpp"
#include "cyops/qseries.hpp"
#include "cyops/sources.hpp"
#include "test_support.hpp"

using namespace cyops;

TEST_CASE("series arithmetic basics") {
    QSeries one_plus = {Rat(1), Rat(1), Rat(0), Rat(0)};
    QSeries one_minus = {Rat(1), Rat(-1), Rat(0), Rat(0)};
    QSeries prod = one_plus * one_minus;
    CHECK(prod == QSeries{Rat(1), Rat(0), Rat(-1), Rat(0)});

    QSeries geo = QSeries::one(6) / QSeries{Rat(1), Rat(-1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
    CHECK(geo == QSeries::geometric(6));

    QSeries y0 = factorial_ratio_series({5}, {1, 1, 1, 1, 1}, 2);
    CHECK(y0 * QSeries::one(2) == QSeries{Rat(1), Rat(120), Rat(113400)});

    CHECK_THROWS_AS(QSeries::one(3) / QSeries::identity(3), DivisionByZeroConstantTerm);
}

TEST_CASE("series exp and log") {
    CHECK(series_exp(QSeries::zero(5)) == QSeries::one(5));

    QSeries mercator = series_log(QSeries::one(5) + QSeries::identity(5));
    CHECK(mercator[1] == 1);
    CHECK(mercator[2] == make_rat(-1, 2));
    CHECK(mercator[3] == make_rat(1, 3));
    CHECK(mercator[4] == make_rat(-1, 4));

    CHECK_THROWS_AS(series_exp(QSeries::one(4)), BadConstantTerm);
    CHECK_THROWS_AS(series_log(QSeries::identity(4)), BadConstantTerm);
}

TEST_CASE("series composition") {
    testing::Rng rng(101);
    QSeries f = rng.series(8);
    CHECK(series_compose(f, QSeries::identity(8)) == f);

    QSeries g = series_compose(QSeries::geometric(8), QSeries::identity(8) * QSeries::identity(8));
    for (int i = 0; i <= 8; ++i) CHECK(g[i] == (i % 2 == 0 ? 1 : 0));

    CHECK_THROWS_AS(series_compose(f, QSeries::one(8)), BadConstantTerm);
}

TEST_CASE("series reversion") {
    CHECK(series_revert(QSeries::identity(6)) == QSeries::identity(6));

    QSeries a = QSeries::identity(6);
    a.set(2, Rat(1));  // t + t^2
    QSeries b = series_revert(a);
    CHECK(b[1] == 1);
    CHECK(b[2] == -1);
    CHECK(b[3] == 2);
    CHECK(b[4] == -5);
    CHECK(b[5] == 14);
    CHECK(series_compose(a, b) == QSeries::identity(6));

    CHECK_THROWS_AS(series_revert(QSeries::zero(5)), NotInvertible);
}

TEST_CASE("hadamard product") {
    testing::Rng rng(102);
    QSeries f = rng.series(10);
    CHECK(hadamard_product(f, QSeries::geometric(10)) == f);

    // factorials cancel: sum t^n/n! * sum n! t^n = 1/(1-t)
    std::vector<Rat> inv_fact(9), fact(9);
    for (int n = 0; n <= 8; ++n) {
        fact[n] = Rat(factorial(n));
        inv_fact[n] = 1 / fact[n];
    }
    CHECK(hadamard_product(QSeries(inv_fact), QSeries(fact)) == QSeries::geometric(8));
}

TEST_CASE("ring axioms on random triples") {
    testing::Rng rng(103);
    for (int iter = 0; iter < 100; ++iter) {
        QSeries a = rng.series(30), b = rng.series(30), c = rng.series(30);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(hadamard_product(a, b) == hadamard_product(b, a));
        Rat s = rng.rat();
        CHECK(hadamard_product(s * a + b, c) ==
              s * hadamard_product(a, c) + hadamard_product(b, c));
    }
}

TEST_CASE("exp/log and reversion round trips") {
    testing::Rng rng(104);
    for (int iter = 0; iter < 100; ++iter) {
        QSeries f = rng.series(20);
        f.set(0, Rat(0));
        QSeries u = QSeries::one(20) + f;
        CHECK(series_exp(series_log(u)) == u);
        CHECK(series_log(series_exp(f)) == f);

        QSeries a = rng.series(20);
        a.set(0, Rat(0));
        a.set(1, rng.nonzero_rat());
        CHECK(series_compose(a, series_revert(a)) == QSeries::identity(20));
    }
}

TEST_CASE("mseries expansion of rational functions") {
    std::vector<std::string> xy{"x", "y"};
    LaurentPoly one = LaurentPoly::constant(2, Rat(1));
    LaurentPoly den(2);
    den.add_term({0, 0}, Rat(1));
    den.add_term({1, 0}, Rat(-1));
    den.add_term({0, 1}, Rat(-1));
    MSeries e = mseries_expand_rational(one, den, 2);
    CHECK(e.coeff({0, 0}) == 1);
    CHECK(e.coeff({1, 0}) == 1);
    CHECK(e.coeff({0, 1}) == 1);
    CHECK(e.coeff({2, 0}) == 1);
    CHECK(e.coeff({1, 1}) == 2);
    CHECK(e.coeff({0, 2}) == 1);

    LaurentPoly x = LaurentPoly::variable(2, 0);
    MSeries ex = mseries_expand_rational(x, one, 3);
    CHECK(ex == MSeries::from_poly(x, 3));

    LaurentPoly zero_const(2);
    zero_const.add_term({1, 0}, Rat(1));
    CHECK_THROWS_AS(mseries_expand_rational(one, zero_const, 2), ZeroConstantDenominator);
}

TEST_CASE("mseries expansion times denominator gives numerator") {
    testing::Rng rng(105);
    for (int iter = 0; iter < 40; ++iter) {
        LaurentPoly p(2), q(2);
        q.add_term({0, 0}, rng.nonzero_rat());
        for (int t = 0; t < 4; ++t) {
            ExpVec e{static_cast<int>(rng.int_in(0, 2)), static_cast<int>(rng.int_in(0, 2))};
            p.add_term(e, rng.rat());
            ExpVec e2{static_cast<int>(rng.int_in(0, 2)), static_cast<int>(rng.int_in(0, 2))};
            if (e2 != ExpVec{0, 0}) q.add_term(e2, rng.rat());
        }
        int D = 6;
        MSeries expansion = mseries_expand_rational(p, q, D);
        MSeries back = expansion * MSeries::from_poly(q, D);
        MSeries target = MSeries::from_poly(p, D);
        CHECK(back == target);
    }
}

TEST_CASE("n-integrality scan") {
    // sqrt(1+t): c = 1, N = 4
    {
        std::vector<Rat> c(31);
        Rat acc(1);
        c[0] = 1;
        for (int n = 1; n <= 30; ++n) {
            // binomial(1/2, n) recurrence
            acc *= (make_rat(1, 2) - Rat(n - 1)) / Rat(n);
            c[n] = acc;
        }
        auto rep = n_integrality_scan(QSeries(std::move(c)));
        CHECK(rep.integral);
        CHECK(rep.c == 1);
        CHECK(rep.n_scale == 4);
    }
    // log(1+t)/t: unbounded prime set
    {
        std::vector<Rat> c(41);
        for (int n = 0; n <= 40; ++n) c[n] = make_rat((n % 2 == 0) ? 1 : -1, n + 1);
        auto rep = n_integrality_scan(QSeries(std::move(c)));
        CHECK_FALSE(rep.integral);
        CHECK_FALSE(rep.excess_primes.empty());
    }
    // integer series: (1, 1)
    {
        auto rep = n_integrality_scan(factorial_ratio_series({5}, {1, 1, 1, 1, 1}, 24));
        CHECK(rep.integral);
        CHECK(rep.c == 1);
        CHECK(rep.n_scale == 1);
    }
    // exp(t): every prime needs a slope, unbounded
    {
        std::vector<Rat> c(41);
        for (int n = 0; n <= 40; ++n) c[n] = make_rat(1, factorial(n));
        auto rep = n_integrality_scan(QSeries(std::move(c)));
        CHECK_FALSE(rep.integral);
    }
    // superlinear denominator growth: 3^(n^2) witness
    {
        std::vector<Rat> c(41);
        for (int n = 0; n <= 40; ++n)
            c[n] = make_rat(1, int_pow(3, static_cast<unsigned long>(n) * n));
        auto rep = n_integrality_scan(QSeries(std::move(c)));
        CHECK_FALSE(rep.integral);
        REQUIRE(rep.wild_primes.size() == 1);
        CHECK(rep.wild_primes[0] == 3);
    }
    CHECK_THROWS_AS(n_integrality_scan(QSeries::one(10)), InsufficientTruncation);
}

TEST_CASE("n-integrality scan recovers planted (c, N) divisors") {
    testing::Rng rng(106);
    const long cs[] = {1, 2, 3, 5, 6, 10, 12};
    const long ns[] = {1, 2, 3, 4, 5, 8, 9, 12};
    for (int iter = 0; iter < 100; ++iter) {
        long c = cs[rng.int_in(0, 6)];
        long n = ns[rng.int_in(0, 7)];
        std::vector<Rat> coeffs(41);
        for (int m = 0; m <= 40; ++m) {
            Rat integer(Int(rng.int_in(-50, 50)));
            coeffs[m] = integer / (Rat(c) * rat_pow(Rat(n), m));
        }
        coeffs[0] = 1;
        auto rep = n_integrality_scan(QSeries(std::move(coeffs)));
        REQUIRE(rep.integral);
        CHECK(Int(c) % rep.c == 0);
        CHECK(Int(n) % rep.n_scale == 0);
        // the reported pair really works: c * phi(N t) integral on the window
        // is implied by val bookkeeping; spot-check a few coefficients
    }
}
