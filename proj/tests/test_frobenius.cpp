#include "doctest.h"

#include "cyops/catalog.hpp"
#include "cyops/frobenius.hpp"
#include "cyops/gammaclass.hpp"
#include "test_support.hpp"

using namespace cyops;

TEST_CASE("mum_check") {
    CHECK(mum_check(corpus_operator("quintic")));
    CHECK(mum_check(corpus_operator("euler")));
    CHECK_FALSE(mum_check(translate_point(corpus_operator("quintic"), make_rat(1, 3125))));
}

TEST_CASE("holomorphic solutions") {
    QSeries quintic = holomorphic_solution(corpus_operator("quintic"), 6);
    CHECK(quintic[0] == 1);
    CHECK(quintic[1] == 120);
    CHECK(quintic[2] == 113400);
    CHECK(quintic == named_series("quintic-y0", 6));

    QSeries bogner = holomorphic_solution(corpus_operator("bogner"), 4);
    CHECK(bogner == QSeries{Rat(1), Rat(16), Rat(576), Rat(25600), Rat(1220800)});

    // theta^4 alone: the constant solution
    ThetaOperator theta4({RatPoly::monomial(Rat(1), 4)});
    CHECK(holomorphic_solution(theta4, 8) == QSeries::one(8));

    // legendre-type pendulum series 1 + (1/2)^2 t^2 + (1.3/2.4)^2 t^4 + ...
    QSeries pend = holomorphic_solution(corpus_operator("legendre"), 6);
    CHECK(pend[0] == 1);
    CHECK(pend[1] == 0);
    CHECK(pend[2] == make_rat(1, 4));
    CHECK(pend[4] == make_rat(9, 64));
    CHECK(pend[6] == make_rat(225, 2304));

    CHECK_THROWS_AS(
        holomorphic_solution(translate_point(corpus_operator("quintic"), make_rat(1, 3125)), 5),
        NotMUM);
}

TEST_CASE("euler operator reproduces the ellipse circumference series") {
    // 1 - (1/2)^2 t^2 - (1.3/2.4)^2 t^4/3 - (1.3.5/2.4.6)^2 t^6/5 - ...
    QSeries i = holomorphic_solution(corpus_operator("euler"), 6);
    CHECK(i[0] == 1);
    CHECK(i[2] == make_rat(-1, 4));
    CHECK(i[4] == make_rat(-3, 64));
    CHECK(i[6] == make_rat(-5, 256));
    CHECK(apply_operator(corpus_operator("euler"), holomorphic_solution(corpus_operator("euler"), 22))
              .is_zero());
}

TEST_CASE("frobenius basis structure") {
    ThetaOperator quintic = corpus_operator("quintic");
    FrobeniusBasis fb = frobenius_basis(quintic, 10);
    REQUIRE(fb.n == 4);
    CHECK(fb.part(0) == holomorphic_solution(quintic, 10));
    for (int k = 1; k < 4; ++k) CHECK(fb.part(k)[0] == 0);
    CHECK(fb.part(1)[1] == 770);

    // theta^4: pure log basis, f_0 = 1, f_1 = f_2 = f_3 = 0
    ThetaOperator theta4({RatPoly::monomial(Rat(1), 4)});
    FrobeniusBasis pure = frobenius_basis(theta4, 6);
    CHECK(pure.part(0) == QSeries::one(6));
    for (int k = 1; k < 4; ++k) CHECK(pure.part(k).is_zero());
}

TEST_CASE("all log solutions are annihilated") {
    for (const std::string name : {"quintic", "aesz15", "aesz25", "aesz245", "bogner"}) {
        ThetaOperator op = corpus_operator(name);
        FrobeniusBasis fb = frobenius_basis(op, 14);
        for (int k = 0; k < fb.n; ++k) {
            LogSeries y = basis_element(fb, k);
            LogSeries image = apply_operator(op, y);
            for (const auto& comp : image.comps) {
                // the operator drops the top `degree` orders of validity
                CHECK(comp.truncated(14 - op.degree()).is_zero());
            }
        }
    }
}

TEST_CASE("uniqueness: scaling a_0 scales the whole solution") {
    ThetaOperator op = corpus_operator("aesz15");
    QSeries y0 = holomorphic_solution(op, 12);
    // the recurrence is linear: 3 * y0 solves the same recurrence with a_0 = 3
    QSeries tripled = Rat(3) * y0;
    CHECK(apply_operator(op, tripled).is_zero());
}

TEST_CASE("monodromy log t -> log t + tau realizes T0 on the scaled basis") {
    // Work over Q[tau]: each transformed y_k expands in the basis y_0..y_k
    // with coefficients tau^{k-l}/(k-l)!; in the scaled basis u_{3-k} =
    // y_k/(2 pi i)^k the taus cancel and the matrix is exactly T0.
    ThetaOperator op = corpus_operator("quintic");
    const int order = 10, n = 4;
    FrobeniusBasis fb = frobenius_basis(op, order);

    // y_k components by log degree, then tau-graded shift
    // new comps at tau-power d: C(j+d, d) * comps[j+d]
    std::vector<LogSeries> basis;
    for (int k = 0; k < n; ++k) basis.push_back(basis_element(fb, k));

    // M[k][l] as polynomial in tau: solve triangularly and verify exactly
    std::vector<std::vector<std::vector<Rat>>> M(
        n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, Rat(0))));
    for (int k = 0; k < n; ++k) {
        // residual[d] = tau^d-part of the transformed y_k, a LogSeries
        std::vector<LogSeries> residual(n);
        for (int d = 0; d < n; ++d) {
            LogSeries ls;
            for (int j = 0; j + d <= basis[k].log_degree(); ++j)
                ls.comps.push_back(Rat(binomial(Int(j + d), Int(d))) *
                                   basis[k].comps[j + d]);
            if (ls.comps.empty()) ls.comps.push_back(QSeries::zero(order));
            residual[d] = ls;
        }
        for (int l = k; l >= 0; --l) {
            for (int d = 0; d < n; ++d) {
                if (residual[d].log_degree() < l) continue;
                // coefficient of log^l must be mu * f_0 / l! + lower basis parts
                QSeries target = residual[d].comps[l];
                Rat mu = target[0] * Rat(factorial(l));
                M[k][l][d] = mu;
                LogSeries scaled = (mu)*basis[l];
                for (int j = 0; j <= scaled.log_degree(); ++j)
                    residual[d].comps[j] = residual[d].comps[j] - scaled.comps[j];
            }
        }
        for (int d = 0; d < n; ++d) CHECK(residual[d].is_zero());
    }
    // expected M[k][l] = tau^{k-l} / (k-l)!
    for (int k = 0; k < n; ++k)
        for (int l = 0; l <= k; ++l)
            for (int d = 0; d < n; ++d)
                CHECK(M[k][l][d] == (d == k - l ? 1 / Rat(factorial(d)) : Rat(0)));

    // scaled-basis statement: u_{3-k} = y_k / tau^k picks up exactly
    // M[k][l] with tau-power (k-l), i.e. entry 1/(k-l)! — the T0 matrix
    RatMat4 t0 = t0_matrix();
    for (int k = 0; k < n; ++k)
        for (int l = 0; l <= k; ++l) {
            // column u_{3-k}, row u_{3-l}
            CHECK(t0[3 - l][3 - k] == M[k][l][k - l]);
        }
    CHECK(t0[1][0] == 1);
    CHECK(t0[2][0] == make_rat(1, 2));
    CHECK(t0[3][0] == make_rat(1, 6));
}
