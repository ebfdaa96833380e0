#include "cyops/selfdual.hpp"

namespace cyops {

RatFun q_quantity(const DiffOperator& op) {
    if (op.order() != 4) throw WrongOrder("q_quantity requires order 4");
    DiffOperator m = op.monic();
    const RatFun& a1 = m.coeff(1);
    const RatFun& a2 = m.coeff(2);
    const RatFun& a3 = m.coeff(3);
    RatFun a2p = a2.derivative();
    RatFun a3p = a3.derivative();
    RatFun a3pp = a3p.derivative();
    RatFun half(make_rat(1, 2));
    RatFun eighth(make_rat(1, 8));
    RatFun threequarter(make_rat(3, 4));
    return half * a2 * a3 - a1 - eighth * a3 * a3 * a3 + a2p - threequarter * a3 * a3p -
           half * a3pp;
}

RatFun q_quantity(const ThetaOperator& op) { return q_quantity(theta_to_d(op)); }

AlphaFunction alpha_dual_function(const DiffOperator& op) {
    DiffOperator prim = op.primitive_polynomial();
    int n = prim.order();
    if (n < 1) throw Error("alpha_dual_function: order 0 operator");
    // subleading coefficient of the monic form
    RatFun sub = prim.coeff(n - 1) / prim.coeff(n);

    AlphaFunction out;
    const RatPoly& D = sub.den();  // monic
    if (!sub.is_zero() || D.degree() > 0) {
        for (const auto& [f, mult] : factor_poly(D).factors) {
            if (mult > 1) throw NonSimplePole("pole of order > 1 in the subleading ratio");
            // residue along f: num / ((D/f) f') mod f, demanded constant
            RatPoly cof = D.quotient(f);
            RatPoly prod = (cof * f.derivative()).remainder(f);
            Rat res;
            if (f.degree() == 1) {
                Rat at = -f.coeff(0);
                res = sub.num()(at) / prod(at);
            } else {
                auto field = std::make_shared<const NumberField>(f);
                NFElem alpha = NFElem::generator(field);
                NFElem nv = divide_by_linear(sub.num(), alpha).remainder;
                NFElem dv = divide_by_linear(prod, alpha).remainder;
                NFElem r = nv / dv;
                if (!r.is_rational())
                    throw Error("alpha_dual_function: non-rational residue along " +
                                f.to_string("t"));
                res = r.rational_value();
            }
            out.factors.push_back({false, f, -res * make_rat(2, n)});
        }
    }

    // The infinity exponent and the parity cross-check come from the
    // exponent-column sums: e_p = (2 sigma_p - n(n-1)) / n.
    ThetaOperator theta = d_to_theta(prim);
    RiemannSymbol sym = riemann_symbol(theta);
    Rat nn = Rat(Int(n) * Int(n - 1));
    out.parity_ok = true;
    for (const auto& col : sym.columns) {
        Rat e = (2 * col.exponent_sum - nn) / Rat(Int(n));
        if (col.point.kind == PointDescriptor::Kind::Infinity)
            out.factors.push_back({true, RatPoly(), e});
        bool even_sum = is_integer(col.exponent_sum) && num(col.exponent_sum) % 2 == 0;
        if (!even_sum) {
            out.parity_ok = false;
            out.parity_failures.emplace_back(col.point, col.exponent_sum);
        }
    }
    out.rational = true;
    for (const auto& f : out.factors)
        if (!is_integer(f.exponent)) out.rational = false;
    return out;
}

AlphaFunction alpha_dual_function(const ThetaOperator& op) {
    return alpha_dual_function(theta_to_d(op));
}

RatFun alpha_as_ratfun(const AlphaFunction& a) {
    RatPoly num = RatPoly::constant(Rat(1));
    RatPoly den = RatPoly::constant(Rat(1));
    for (const auto& f : a.factors) {
        if (f.at_infinity) continue;
        if (!is_integer(f.exponent)) throw Error("alpha_as_ratfun: non-integer exponent");
        long e = static_cast<long>(cyops::num(f.exponent).get_si());
        for (long i = 0; i < (e > 0 ? e : -e); ++i) {
            if (e > 0)
                num = num * f.factor;
            else
                den = den * f.factor;
        }
    }
    return RatFun(num, den);
}

bool essential_self_adjointness_witness(const DiffOperator& op, const RatFun& alpha) {
    DiffOperator lhs = compose_mul(op, alpha);
    DiffOperator rhs = mul_compose(alpha, adjoint(op));
    return lhs == rhs;
}

}  // namespace cyops
