#include "doctest.h"

#include "cyops/catalog.hpp"
#include "cyops/frobenius.hpp"
#include "cyops/linalg.hpp"
#include "cyops/opfit.hpp"
#include "test_support.hpp"

using namespace cyops;

TEST_CASE("fit theta^5 - t from its solution") {
    FitOptions opt{5, 1, 10};
    auto op = fit_operator(named_series("psi5", 25), opt);
    REQUIRE(op);
    CHECK(*op == corpus_operator("theta5-t"));
}

TEST_CASE("fit the quintic from y0") {
    FitOptions opt{4, 1, 10};
    auto op = fit_operator(named_series("quintic-y0", 22), opt);
    REQUIRE(op);
    CHECK(*op == corpus_operator("quintic"));
}

TEST_CASE("fit aesz25 from the hadamard series") {
    FitOptions opt{4, 2, 10};
    auto op = fit_operator(named_series("g25", 28), opt);
    REQUIRE(op);
    CHECK(*op == corpus_operator("aesz25"));
}

TEST_CASE("fit aesz15 from its frobenius solution") {
    QSeries y0 = holomorphic_solution(corpus_operator("aesz15"), 28);
    FitOptions opt{4, 2, 10};
    auto op = fit_operator(y0, opt);
    REQUIRE(op);
    CHECK(*op == corpus_operator("aesz15"));
}

TEST_CASE("rational kernel: planted solutions and rank bookkeeping") {
    testing::Rng rng(502);
    for (int iter = 0; iter < 100; ++iter) {
        size_t rows = 4, cols = 6;
        RatMatrix m(rows, std::vector<Rat>(cols));
        for (auto& row : m)
            for (auto& v : row) v = rng.rat(6, 3);
        auto kernel = rational_kernel(m, cols);
        size_t rank = rational_rank(m, cols);
        CHECK(rank + kernel.size() == cols);
        for (const auto& x : kernel) {
            for (const auto& row : m) {
                Rat dot(0);
                for (size_t j = 0; j < cols; ++j) dot += row[j] * x[j];
                CHECK(dot == 0);
            }
        }
    }
}

TEST_CASE("verify_annihilation") {
    CHECK(verify_annihilation(corpus_operator("theta5-t"), named_series("psi5", 20), 5));
    CHECK_FALSE(verify_annihilation(corpus_operator("quintic"), QSeries::geometric(20), 5));
    ThetaOperator theta({RatPoly{Rat(0), Rat(1)}});
    CHECK(verify_annihilation(theta, QSeries::one(10), 5));
    CHECK_THROWS_AS(verify_annihilation(corpus_operator("aesz22"), QSeries::one(6), 5),
                    InsufficientTruncation);
}

TEST_CASE("planted operator recovery") {
    testing::Rng rng(501);
    int recovered = 0;
    for (int iter = 0; iter < 100; ++iter) {
        int r = static_cast<int>(rng.int_in(1, 3));
        std::vector<RatPoly> polys;
        polys.push_back(RatPoly::monomial(Rat(1), 4));  // MUM
        for (int i = 1; i <= r; ++i) {
            std::vector<Rat> c(5);
            for (auto& v : c) v = Rat(Int(rng.int_in(-5, 5)));
            polys.emplace_back(std::move(c));
        }
        if (polys[r].is_zero()) polys[r] = RatPoly{Rat(1), Rat(1)};
        ThetaOperator planted = ThetaOperator(polys).canonical();
        int need = 5 * (r + 1) + 10 + r;
        QSeries y0 = holomorphic_solution(planted, need + 2);
        FitOptions opt{4, r, 10};
        auto fitted = fit_operator(y0, opt);
        REQUIRE(fitted);
        // a planted operator can accidentally be non-minimal; the fit then
        // returns the minimal right factor, which still annihilates
        if (*fitted == planted) ++recovered;
        CHECK(verify_annihilation(*fitted, y0, 10));
    }
    // overwhelmingly the planted operator itself comes back
    CHECK(recovered >= 90);
}

TEST_CASE("margin monotonicity") {
    QSeries s = named_series("g25", 40);
    FitOptions opt{4, 2, 10};
    auto op = fit_operator(s, opt);
    REQUIRE(op);
    FitOptions wider{4, 2, 15};
    auto op2 = fit_operator(s, wider);
    REQUIRE(op2);
    CHECK(*op == *op2);
}

TEST_CASE("ambiguous kernel is reported") {
    CHECK_THROWS_AS(fit_operator(QSeries::zero(40), FitOptions{2, 2, 5}), AmbiguousKernel);
}

TEST_CASE("not found within caps") {
    // 2^(n^2) is not holonomic; nothing fits
    std::vector<Rat> c(41);
    for (int n = 0; n <= 40; ++n) c[n] = Rat(int_pow(2, static_cast<unsigned long>(n) * n % 64));
    auto op = fit_operator(QSeries(std::move(c)), FitOptions{2, 2, 8});
    CHECK_FALSE(op.has_value());
}

TEST_CASE("insufficient truncation is refused") {
    CHECK_THROWS_AS(fit_operator(QSeries::one(10), FitOptions{4, 10, 10}),
                    InsufficientTruncation);
}
