#include "doctest.h"

#include <algorithm>

#include "cyops/catalog.hpp"
#include "cyops/selfdual.hpp"

using namespace cyops;

namespace {

Rat exponent_of(const AlphaFunction& a, const RatPoly& factor) {
    for (const auto& f : a.factors)
        if (!f.at_infinity && f.factor == factor) return f.exponent;
    REQUIRE(false);
    throw Error("unreachable");
}

}  // namespace

TEST_CASE("alpha of D^4 is constant") {
    std::vector<RatFun> c(5);
    c[4] = RatFun(Rat(1));
    AlphaFunction a = alpha_dual_function(DiffOperator(c));
    for (const auto& f : a.factors)
        if (!f.at_infinity) CHECK(f.exponent == 0);
    CHECK(a.rational);
}

TEST_CASE("alpha of aesz245 matches the printed function") {
    AlphaFunction a = alpha_dual_function(corpus_operator("aesz245"));
    // alpha = t^-3 (1 - 108 t)^{-11/6} up to constant
    CHECK(exponent_of(a, RatPoly{Rat(0), Rat(1)}) == -3);
    CHECK(exponent_of(a, RatPoly{make_rat(-1, 108), Rat(1)}) == make_rat(-11, 6));
    CHECK_FALSE(a.rational);
    CHECK_FALSE(a.parity_ok);
    // the parity witness is the conifold column with non-even exponent sum
    REQUIRE_FALSE(a.parity_failures.empty());
    bool witness = false;
    for (const auto& [p, sum] : a.parity_failures)
        if (p == PointDescriptor::rational(make_rat(1, 108))) {
            witness = true;
            CHECK(sum == make_rat(7, 3));
        }
    CHECK(witness);
}

TEST_CASE("alpha of the quintic is rational and parity passes") {
    AlphaFunction a = alpha_dual_function(corpus_operator("quintic"));
    CHECK(a.rational);
    CHECK(a.parity_ok);
    CHECK(exponent_of(a, RatPoly{Rat(0), Rat(1)}) == -3);
    CHECK(exponent_of(a, RatPoly{make_rat(-1, 3125), Rat(1)}) == -1);
}

TEST_CASE("essential self-adjointness witness P alpha = alpha P*") {
    for (const std::string name : {"quintic", "aesz25", "bogner"}) {
        DiffOperator op = theta_to_d(corpus_operator(name)).primitive_polynomial().monic();
        AlphaFunction a = alpha_dual_function(op);
        REQUIRE(a.rational);
        RatFun alpha = alpha_as_ratfun(a);
        CHECK(essential_self_adjointness_witness(op, alpha));
    }
    // a non-self-dual (but Fuchsian) operator admits no such alpha
    RatPoly t1{Rat(1), Rat(1)};
    ThetaOperator bad({RatPoly::monomial(Rat(1), 4),
                       Rat(-1) * (t1 * t1 * t1 * RatPoly{Rat(2), Rat(1)})});
    REQUIRE_FALSE(q_quantity(bad).is_zero());
    DiffOperator bad_d = theta_to_d(bad).primitive_polynomial().monic();
    AlphaFunction a = alpha_dual_function(bad_d);
    if (a.rational) {
        RatFun alpha = alpha_as_ratfun(a);
        CHECK_FALSE(essential_self_adjointness_witness(bad_d, alpha));
    }
}

TEST_CASE("residue route and exponent-sum route agree") {
    // e_p = (2 sigma_p - n(n-1)) / n must reproduce the residue exponents
    for (const std::string name : {"quintic", "aesz25", "aesz245", "bogner"}) {
        ThetaOperator op = corpus_operator(name);
        AlphaFunction a = alpha_dual_function(op);
        RiemannSymbol sym = riemann_symbol(op);
        int n = op.order();
        for (const auto& col : sym.columns) {
            if (col.point.kind != PointDescriptor::Kind::Rational) continue;
            Rat expected = (2 * col.exponent_sum - Rat(Int(n) * (n - 1))) / Rat(n);
            RatPoly lin{-col.point.value, Rat(1)};
            bool found = false;
            for (const auto& f : a.factors)
                if (!f.at_infinity && f.factor == lin) {
                    CHECK(f.exponent == expected);
                    found = true;
                }
            if (expected != 0) CHECK(found);
        }
    }
}
