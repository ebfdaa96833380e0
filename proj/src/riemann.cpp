#include "cyops/riemann.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace cyops {

PointDescriptor PointDescriptor::rational(const Rat& v) {
    PointDescriptor p;
    p.kind = Kind::Rational;
    p.value = v;
    return p;
}

PointDescriptor PointDescriptor::algebraic(const RatPoly& minpoly) {
    if (minpoly.degree() < 2) throw Error("PointDescriptor: algebraic locus needs degree >= 2");
    PointDescriptor p;
    p.kind = Kind::Algebraic;
    p.minpoly = minpoly.monic();
    return p;
}

PointDescriptor PointDescriptor::infinity() {
    PointDescriptor p;
    p.kind = Kind::Infinity;
    return p;
}

std::string PointDescriptor::to_string() const {
    switch (kind) {
        case Kind::Rational: return rat_to_string(value);
        case Kind::Algebraic: return "roots of " + minpoly.to_string("t");
        case Kind::Infinity: return "oo";
    }
    return "?";
}

bool operator==(const PointDescriptor& a, const PointDescriptor& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == PointDescriptor::Kind::Rational) return a.value == b.value;
    if (a.kind == PointDescriptor::Kind::Algebraic) return a.minpoly == b.minpoly;
    return true;
}

std::string ExponentEntry::to_string() const {
    std::string base = rational ? rat_to_string(value) : "root of " + minpoly.to_string("x");
    if (multiplicity > 1) base += " (x" + std::to_string(multiplicity) + ")";
    return base;
}

std::string RiemannSymbol::to_string() const {
    std::ostringstream os;
    for (const auto& col : columns) {
        os << col.point.to_string() << ": ";
        bool first = true;
        for (const auto& e : col.exponents) {
            for (int i = 0; i < e.multiplicity; ++i) {
                if (!first) os << ", ";
                first = false;
                os << (e.rational ? rat_to_string(e.value) : "root of " + e.minpoly.to_string("x"));
            }
        }
        if (col.candidate_apparent) os << "   [integer exponents: candidate apparent]";
        os << "\n";
    }
    return os.str();
}

namespace {

// Roots of a rational polynomial as exponent entries: exact rationals plus
// minimal polynomials for the irrational ones.
std::vector<ExponentEntry> poly_root_entries(const RatPoly& p) {
    std::vector<ExponentEntry> out;
    Factorization f = factor_poly(p);
    for (const auto& [fac, mult] : f.factors) {
        ExponentEntry e;
        e.multiplicity = mult;
        if (fac.degree() == 1) {
            e.rational = true;
            e.value = -fac.coeff(0);
        } else {
            e.rational = false;
            e.minpoly = fac;
        }
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const ExponentEntry& a, const ExponentEntry& b) {
        if (a.rational != b.rational) return a.rational;
        if (a.rational) return a.value < b.value;
        return a.minpoly.coeffs() < b.minpoly.coeffs();
    });
    return out;
}

int indicial_total_multiplicity(const std::vector<ExponentEntry>& es) {
    int m = 0;
    for (const auto& e : es) m += e.multiplicity * (e.rational ? 1 : e.minpoly.degree());
    return m;
}

// Indicial polynomial at a rational point: P_0 of the translated operator.
RatPoly indicial_at_rational(const ThetaOperator& op, const Rat& p) {
    ThetaOperator moved = p == 0 ? op : translate_point(op, p);
    return moved.poly(0);
}

// Indicial polynomial over K = Q[x]/(f) at the locus of f, as K-coefficients
// (ascending powers of lambda).
std::vector<NFElem> indicial_at_locus(const ThetaOperator& op, const RatPoly& minpoly) {
    auto field = std::make_shared<const NumberField>(minpoly);
    NFElem alpha = NFElem::generator(field);
    DiffOperator d = theta_to_d(op).primitive_polynomial();
    int n = d.order();

    std::vector<int> val(n + 1, -1);
    std::vector<NFElem> lead(n + 1);
    for (int i = 0; i <= n; ++i) {
        const RatPoly& a = d.coeff(i).num();
        if (a.is_zero()) continue;
        std::vector<NFElem> cur;
        for (int k = 0; k <= a.degree(); ++k) cur.emplace_back(field, a.coeff(k));
        int v = 0;
        while (true) {
            NFDivision div = divide_by_linear(cur, alpha);
            if (!div.remainder.is_zero()) {
                lead[i] = div.remainder;
                break;
            }
            cur = std::move(div.quotient);
            if (cur.empty()) throw Error("indicial_at_locus: coefficient vanished");
            ++v;
        }
        val[i] = v;
    }

    int nu = std::numeric_limits<int>::min();
    for (int i = 0; i <= n; ++i)
        if (val[i] >= 0) nu = std::max(nu, i - val[i]);

    std::vector<NFElem> ind(n + 1, NFElem(field, Rat(0)));
    for (int i = 0; i <= n; ++i) {
        if (val[i] < 0 || i - val[i] != nu) continue;
        RatPoly ff = falling_factorial(i);
        for (int k = 0; k <= ff.degree(); ++k)
            ind[k] = ind[k] + ff.coeff(k) * lead[i];
    }
    while (!ind.empty() && ind.back().is_zero()) ind.pop_back();
    return ind;
}

std::vector<ExponentEntry> roots_over_field(std::vector<NFElem> ind) {
    if (ind.empty()) throw Error("roots_over_field: zero indicial");
    auto field = ind.back().field();
    int fdeg = field->degree();
    // Rational candidates must kill every alpha-component simultaneously.
    RatPoly g;
    for (int d = 0; d < fdeg; ++d) {
        std::vector<Rat> comp;
        for (const auto& c : ind) comp.push_back(c.rep().coeff(d));
        RatPoly pd{std::vector<Rat>(comp)};
        if (pd.is_zero()) continue;
        g = g.is_zero() ? pd.monic() : poly_gcd(g, pd);
    }
    std::vector<ExponentEntry> out;
    for (const auto& [root, mult] : rational_roots(g)) {
        (void)mult;  // true multiplicity decided by K-division below
        NFElem r(field, root);
        int m = 0;
        while (ind.size() > 1) {
            NFDivision div = divide_by_linear(ind, r);
            if (!div.remainder.is_zero()) break;
            ind = std::move(div.quotient);
            ++m;
        }
        if (m > 0) {
            ExponentEntry e;
            e.value = root;
            e.multiplicity = m;
            out.push_back(std::move(e));
        }
    }
    if (ind.size() > 1) {
        // Residual roots: expressible only if the residual has rational
        // coefficients; anything deeper is past desk scale.
        std::vector<Rat> comp;
        for (const auto& c : ind) {
            if (!c.is_rational())
                throw FactorizationIncomplete("exponents live in a proper extension of Q");
            comp.push_back(c.rep().coeff(0));
        }
        for (auto& e : poly_root_entries(RatPoly{std::vector<Rat>(comp)})) out.push_back(e);
    }
    std::sort(out.begin(), out.end(), [](const ExponentEntry& a, const ExponentEntry& b) {
        if (a.rational != b.rational) return a.rational;
        if (a.rational) return a.value < b.value;
        return a.minpoly.coeffs() < b.minpoly.coeffs();
    });
    return out;
}

}  // namespace

std::vector<ExponentEntry> local_exponents(const ThetaOperator& op, const PointDescriptor& p) {
    int n = op.order();
    std::vector<ExponentEntry> out;
    switch (p.kind) {
        case PointDescriptor::Kind::Infinity:
            return local_exponents(reciprocal_transform(op), PointDescriptor::rational(Rat(0)));
        case PointDescriptor::Kind::Rational: {
            RatPoly ind = indicial_at_rational(op, p.value);
            if (ind.degree() < n) throw IrregularPoint("indicial degree below order at " + p.to_string());
            out = poly_root_entries(ind);
            break;
        }
        case PointDescriptor::Kind::Algebraic: {
            if (p.minpoly.degree() > 4)
                throw DegreeCapExceeded("algebraic locus of degree > 4");
            auto ind = indicial_at_locus(op, p.minpoly);
            if (static_cast<int>(ind.size()) - 1 < n)
                throw IrregularPoint("indicial degree below order at " + p.to_string());
            out = roots_over_field(std::move(ind));
            break;
        }
    }
    if (indicial_total_multiplicity(out) != n)
        throw Error("local_exponents: multiplicity bookkeeping failure");
    return out;
}

Rat local_exponent_sum(const ThetaOperator& op, const PointDescriptor& p) {
    int n = op.order();
    switch (p.kind) {
        case PointDescriptor::Kind::Infinity:
            return local_exponent_sum(reciprocal_transform(op), PointDescriptor::rational(Rat(0)));
        case PointDescriptor::Kind::Rational: {
            RatPoly ind = indicial_at_rational(op, p.value);
            if (ind.degree() < n) throw IrregularPoint("indicial degree below order");
            return -ind.coeff(n - 1) / ind.coeff(n);
        }
        case PointDescriptor::Kind::Algebraic: {
            auto ind = indicial_at_locus(op, p.minpoly);
            if (static_cast<int>(ind.size()) - 1 < n) throw IrregularPoint("indicial degree below order");
            NFElem s = ind[n - 1] / ind[n];
            if (!s.is_rational())
                throw Error("local_exponent_sum: non-rational sum at algebraic locus");
            return -s.rational_value();
        }
    }
    throw Error("unreachable");
}

bool ordinary_at_zero(const ThetaOperator& op) {
    DiffOperator d = theta_to_d(op).primitive_polynomial();
    return d.coeff(d.order()).num()(Rat(0)) != 0;
}

namespace {

void locus_violations(const DiffOperator& prim, bool at_infinity,
                      std::vector<FuchsViolation>& out) {
    int n = prim.order();
    std::vector<RatPoly> inputs;
    for (const auto& a : prim.coeffs())
        if (!a.is_zero()) inputs.push_back(a.num());
    for (const RatPoly& piece : coprime_basis(inputs)) {
        if (at_infinity && !(piece == RatPoly::variable())) continue;
        int vn = poly_valuation(prim.coeff(n).num(), piece);
        if (vn == 0) continue;
        for (int i = 0; i < n; ++i) {
            if (prim.coeff(i).is_zero()) continue;
            int vi = poly_valuation(prim.coeff(i).num(), piece);
            if (vn - vi > n - i) {
                if (at_infinity) {
                    out.push_back({PointDescriptor::infinity(), i});
                } else {
                    for (const auto& [fac, mult] : factor_poly(piece).factors) {
                        (void)mult;
                        out.push_back({fac.degree() == 1
                                           ? PointDescriptor::rational(-fac.coeff(0))
                                           : PointDescriptor::algebraic(fac),
                                       i});
                    }
                }
            }
        }
    }
}

}  // namespace

FuchsReport fuchs_check(const ThetaOperator& op) {
    FuchsReport rep;
    locus_violations(theta_to_d(op).primitive_polynomial(), false, rep.failures);
    locus_violations(theta_to_d(reciprocal_transform(op)).primitive_polynomial(), true,
                     rep.failures);
    rep.fuchsian = rep.failures.empty();
    return rep;
}

FuchsReport fuchs_check(const DiffOperator& op) {
    return fuchs_check(d_to_theta(op));
}

RiemannSymbol riemann_symbol(const ThetaOperator& op) {
    if (!fuchs_check(op).fuchsian) throw NonFuchsian();
    RiemannSymbol sym;
    sym.order = op.order();

    DiffOperator prim = theta_to_d(op).primitive_polynomial();
    RatPoly lead = prim.coeff(prim.order()).num();
    std::vector<PointDescriptor> points;
    for (const auto& [fac, mult] : factor_poly(lead).factors) {
        (void)mult;
        points.push_back(fac.degree() == 1 ? PointDescriptor::rational(-fac.coeff(0))
                                           : PointDescriptor::algebraic(fac));
    }
    if (!ordinary_at_zero(reciprocal_transform(op))) points.push_back(PointDescriptor::infinity());

    for (const auto& p : points) {
        SymbolColumn col;
        col.point = p;
        col.exponents = local_exponents(op, p);
        col.exponent_sum = local_exponent_sum(op, p);
        bool all_int = true;
        bool all_simple = true;
        for (const auto& e : col.exponents) {
            if (!e.rational || !is_integer(e.value) || e.value < 0) all_int = false;
            if (e.multiplicity > 1) all_simple = false;
        }
        col.candidate_apparent =
            p.kind != PointDescriptor::Kind::Infinity && all_int && all_simple;
        sym.columns.push_back(std::move(col));
    }
    std::sort(sym.columns.begin(), sym.columns.end(), [](const SymbolColumn& a, const SymbolColumn& b) {
        auto rank = [](const PointDescriptor& p) {
            switch (p.kind) {
                case PointDescriptor::Kind::Rational: return 0;
                case PointDescriptor::Kind::Algebraic: return 1;
                case PointDescriptor::Kind::Infinity: return 2;
            }
            return 3;
        };
        if (rank(a.point) != rank(b.point)) return rank(a.point) < rank(b.point);
        if (a.point.kind == PointDescriptor::Kind::Rational) return a.point.value < b.point.value;
        if (a.point.kind == PointDescriptor::Kind::Algebraic)
            return a.point.minpoly.coeffs() < b.point.minpoly.coeffs();
        return false;
    });
    return sym;
}

}  // namespace cyops
