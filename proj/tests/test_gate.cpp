#include "doctest.h"

#include "cyops/catalog.hpp"
#include "cyops/gate.hpp"
#include "cyops/linalg.hpp"

using namespace cyops;

namespace {

// Symmetric cube of a second-order operator D^2 - p D - q (monic d-form):
// the order-4 operator annihilating y^3 for every solution y. Built from the
// derivation on the coefficient space spanned by y^3, y^2 y', y y'^2, y'^3.
DiffOperator symmetric_cube(const RatFun& p, const RatFun& q) {
    auto apply_D = [&](const std::array<RatFun, 4>& v) {
        std::array<RatFun, 4> out;
        // derivative of coefficients plus the connection matrix
        out[0] = v[0].derivative() + q * v[1];
        out[1] = v[1].derivative() + RatFun(Rat(3)) * v[0] + p * v[1] + RatFun(Rat(2)) * q * v[2];
        out[2] = v[2].derivative() + RatFun(Rat(2)) * v[1] + RatFun(Rat(2)) * p * v[2] + RatFun(Rat(3)) * q * v[3];
        out[3] = v[3].derivative() + v[2] + RatFun(Rat(3)) * p * v[3];
        return out;
    };
    std::vector<std::array<RatFun, 4>> derivs;
    std::array<RatFun, 4> v{RatFun(Rat(1)), RatFun(), RatFun(), RatFun()};
    derivs.push_back(v);
    for (int k = 1; k <= 4; ++k) {
        v = apply_D(v);
        derivs.push_back(v);
    }
    // solve sum_k c_k derivs[k] = 0 with c_4 = 1: 4 equations in c_0..c_3
    // over Q(t); plain Gaussian elimination on RatFun entries
    std::array<std::array<RatFun, 5>, 4> m;
    for (int row = 0; row < 4; ++row) {
        for (int k = 0; k < 4; ++k) m[row][k] = derivs[k][row];
        m[row][4] = -derivs[4][row];
    }
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        while (piv < 4 && m[piv][col].is_zero()) ++piv;
        REQUIRE(piv < 4);
        std::swap(m[col], m[piv]);
        for (int row = 0; row < 4; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            RatFun f = m[row][col] / m[col][col];
            for (int k = col; k <= 4; ++k) m[row][k] = m[row][k] - f * m[col][k];
        }
    }
    std::vector<RatFun> coeffs(5);
    coeffs[4] = RatFun(Rat(1));
    for (int k = 0; k < 4; ++k) coeffs[k] = m[k][4] / m[k][k];
    return DiffOperator(std::move(coeffs));
}

}  // namespace

TEST_CASE("gate accepts the quintic") {
    GateOptions opt;
    opt.truncation = 50;
    opt.depth = 6;
    opt.scale = Rat(5);
    GateReport rep = run_gate(corpus_operator("quintic"), opt);
    CHECK(rep.verdict == GateVerdict::CalabiYau);
    CHECK(rep.fuchsian);
    CHECK(rep.self_dual);
    CHECK(rep.mum_at_0);
    CHECK(rep.y0.report.integral);
    CHECK(rep.y0.report.c == 1);
    CHECK(rep.y0.report.n_scale == 1);
    CHECK(rep.q_coordinate.report.c == 1);
    CHECK(rep.q_coordinate.report.n_scale == 1);
    CHECK(rep.yukawa.report.c == 1);
    CHECK(rep.yukawa.report.n_scale == 1);
    CHECK(rep.instantons.integral);
    CHECK(rep.instantons.values[0].second == 2875);
}

TEST_CASE("gate reports bogner's instanton failure") {
    GateOptions opt;
    opt.truncation = 40;
    opt.depth = 8;
    GateReport rep = run_gate(corpus_operator("bogner"), opt);
    CHECK(rep.verdict == GateVerdict::Fails);
    CHECK(rep.fuchsian);
    CHECK(rep.self_dual);
    CHECK(rep.y0.report.integral);
    CHECK(rep.q_coordinate.report.integral);
    CHECK(rep.yukawa.report.integral);
    CHECK_FALSE(rep.instantons.integral);
    CHECK(rep.instantons.first_noninteger_d == 3);
    CHECK(rep.instantons.denominator == 9);
    REQUIRE(rep.failure_list.size() == 1);
    CHECK(rep.failure_list[0] == "instanton_integrality");
}

TEST_CASE("gate rejects a non-self-dual operator") {
    ThetaOperator bad({RatPoly::monomial(Rat(1), 4), RatPoly{Rat(0), Rat(1)}});
    GateOptions opt;
    opt.truncation = 30;
    opt.depth = 4;
    GateReport rep = run_gate(bad, opt);
    CHECK(rep.verdict == GateVerdict::Fails);
    bool self_dual_listed = false;
    for (const auto& f : rep.failure_list) self_dual_listed |= f == "self_dual";
    CHECK(self_dual_listed);
}

TEST_CASE("symmetric cubes pass self-duality and have trivial instantons") {
    // second-order MUM operator Theta^2 - 4t(2Theta+1)^2, solution sum C(2n,n)^2 t^n
    ThetaOperator second({RatPoly::monomial(Rat(1), 2),
                          Rat(-4) * (RatPoly{Rat(1), Rat(2)} * RatPoly{Rat(1), Rat(2)})});
    DiffOperator d2 = theta_to_d(second).primitive_polynomial().monic();
    // y'' = p y' + q y
    RatFun p = -d2.coeff(1), q = -d2.coeff(0);
    DiffOperator cube = symmetric_cube(p, q);
    ThetaOperator cube_theta = d_to_theta(cube);
    CHECK(mum_check(cube_theta));
    CHECK(q_quantity(cube).is_zero());
    // holomorphic solution is (sum C(2n,n)^2 t^n)^3
    QSeries base = holomorphic_solution(second, 16);
    CHECK(holomorphic_solution(cube_theta, 16) == base * base * base);
    GateOptions opt;
    opt.truncation = 30;
    opt.depth = 5;
    GateReport rep = run_gate(cube_theta, opt);
    CHECK(rep.self_dual);
    for (size_t i = 1; i < rep.instantons.values.size(); ++i)
        CHECK(rep.instantons.values[i].second == 0);
}

TEST_CASE("integer rescale preserves every gate stage except instanton extraction") {
    // Fuchsian/self-dual/MUM and the y0, q, K integrality stages are stable
    // under t -> Nt with integer N. The Lambert extraction is tied to the
    // q-scale, so instanton integrality can change: the N = 2 quintic is an
    // explicit witness (denominator 4 at d = 2), the same phenomenon as the
    // open scaling question for the Bogner operator.
    GateOptions opt;
    opt.truncation = 36;
    opt.depth = 4;
    opt.scale = Rat(5);
    GateReport base = run_gate(corpus_operator("quintic"), opt);
    GateReport scaled = run_gate(rescale_coordinate(corpus_operator("quintic"), Rat(2)), opt);
    CHECK(base.fuchsian == scaled.fuchsian);
    CHECK(base.self_dual == scaled.self_dual);
    CHECK(base.mum_at_0 == scaled.mum_at_0);
    CHECK(scaled.y0.report.integral);
    CHECK(scaled.y0.report.n_scale == 1);
    CHECK(scaled.q_coordinate.report.integral);
    CHECK(scaled.yukawa.report.integral);
    CHECK(base.verdict == GateVerdict::CalabiYau);
    CHECK_FALSE(scaled.instantons.integral);
    CHECK(scaled.instantons.first_noninteger_d == 2);
    CHECK(scaled.instantons.denominator == 4);

    GateReport bogner = run_gate(corpus_operator("bogner"), opt);
    GateReport bogner3 = run_gate(rescale_coordinate(corpus_operator("bogner"), Rat(3)), opt);
    CHECK(bogner.verdict == GateVerdict::Fails);
    CHECK(bogner3.verdict == GateVerdict::Fails);
}

TEST_CASE("aesz22 needs its geometric scale for integral instantons") {
    // normalized (scale 1) the n_d carry denominator 7; at the geometric
    // scale 35 they are integers starting 50, 325, 1475
    GateOptions opt;
    opt.truncation = 36;
    opt.depth = 4;
    GateReport at1 = run_gate(corpus_operator("aesz22"), opt);
    CHECK_FALSE(at1.instantons.integral);
    CHECK(at1.instantons.denominator == 7);
    opt.scale = Rat(35);
    GateReport at35 = run_gate(corpus_operator("aesz22"), opt);
    CHECK(at35.instantons.integral);
    CHECK(at35.instantons.values[0].second == 50);
    CHECK(at35.instantons.values[1].second == 325);
}

TEST_CASE("aesz22 has a second MUM point at infinity") {
    // the reciprocal coordinate has exponents 1,1,1,1; the exponent shift
    // normalizes it to a genuine MUM operator with an integral solution
    ThetaOperator rec = reciprocal_transform(corpus_operator("aesz22"));
    CHECK_FALSE(mum_check(rec));
    ThetaOperator far = shift_exponents(rec, Rat(1));
    CHECK(mum_check(far));
    QSeries y0 = holomorphic_solution(far, 24);
    auto scan = n_integrality_scan(y0);
    CHECK(scan.integral);
}

TEST_CASE("gate reports are deterministic") {
    GateOptions opt;
    opt.truncation = 30;
    opt.depth = 4;
    GateReport a = run_gate(corpus_operator("aesz15"), opt);
    GateReport b = run_gate(corpus_operator("aesz15"), opt);
    CHECK(a.to_text() == b.to_text());
    CHECK(a.to_json() == b.to_json());
}
