#include "cyops/polyfactor.hpp"

#include <algorithm>

namespace cyops {

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p) {
    std::vector<std::pair<RatPoly, int>> out;
    if (p.degree() < 1) return out;
    // Yun's algorithm over Q.
    RatPoly a = p.monic();
    RatPoly g = poly_gcd(a, a.derivative());
    RatPoly b = a.quotient(g);
    RatPoly c = a.derivative().quotient(g);
    RatPoly d = c - b.derivative();
    int k = 1;
    while (b.degree() > 0) {
        RatPoly f = poly_gcd(b, d);
        if (f.degree() > 0) out.emplace_back(f, k);
        b = b.quotient(f);
        c = d.quotient(f);
        d = c - b.derivative();
        ++k;
    }
    return out;
}

int poly_valuation(const RatPoly& p, const RatPoly& f) {
    if (p.is_zero()) throw Error("poly_valuation of zero polynomial");
    int v = 0;
    RatPoly q = p;
    while (true) {
        RatPoly quo, rem;
        RatPoly::divmod(q, f, quo, rem);
        if (!rem.is_zero()) break;
        q = quo;
        ++v;
    }
    return v;
}

std::vector<std::pair<Rat, int>> rational_roots(const RatPoly& p) {
    std::vector<std::pair<Rat, int>> roots;
    if (p.degree() < 1) return roots;
    RatPoly q = p.primitive();
    // strip T^k
    int tval = 0;
    while (q.coeff(0) == 0) {
        q = q.quotient(RatPoly::variable());
        ++tval;
    }
    if (tval > 0) roots.emplace_back(Rat(0), tval);
    if (q.degree() < 1) return roots;
    Int a0 = num(q.coeff(0));
    Int an = num(q.leading());
    std::vector<Int> ps = divisors(a0), qs = divisors(an);
    if (ps.size() * qs.size() > 200000)
        throw FactorizationIncomplete("rational_roots: divisor set beyond desk scale");
    for (const Int& pp : ps)
        for (const Int& qq : qs)
            for (int sign : {1, -1}) {
                Rat cand = make_rat(sign * pp, qq);
                if (q(cand) != 0) continue;
                int mult = 0;
                RatPoly lin{-cand, Rat(1)};
                while (q(cand) == 0) {
                    q = q.quotient(lin);
                    ++mult;
                }
                roots.emplace_back(cand, mult);
            }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

namespace {

// Kronecker: look for a monic factor of degree d of the squarefree monic
// integer-primitive polynomial q by interpolating through divisor tuples of
// values at small integers. Caps the search; throws when the cap trips.
bool kronecker_find_factor(const RatPoly& q, int d, RatPoly& out) {
    std::vector<Rat> xs;
    for (int i = 0; xs.size() < static_cast<size_t>(d) + 1; ++i) {
        Rat x(i % 2 == 0 ? i / 2 : -(i / 2 + 1));
        if (q(x) != 0) xs.push_back(x);
    }
    std::vector<std::vector<Int>> choices;
    long combos = 1;
    for (const Rat& x : xs) {
        Int v = num(q(x));
        std::vector<Int> ds;
        for (const Int& dv : divisors(v)) {
            ds.push_back(dv);
            ds.push_back(-dv);
        }
        combos *= static_cast<long>(ds.size());
        if (combos > 2000000) throw FactorizationIncomplete("kronecker: divisor explosion");
        choices.push_back(std::move(ds));
    }
    std::vector<size_t> idx(xs.size(), 0);
    while (true) {
        // Lagrange interpolation through (xs[i], choices[i][idx[i]]).
        RatPoly cand;
        for (size_t i = 0; i < xs.size(); ++i) {
            RatPoly li = RatPoly::constant(Rat(choices[i][idx[i]]));
            for (size_t j = 0; j < xs.size(); ++j) {
                if (i == j) continue;
                li = li * RatPoly{-xs[j], Rat(1)};
                li = (1 / (xs[i] - xs[j])) * li;
            }
            cand = cand + li;
        }
        if (cand.degree() == d && cand.divides(q)) {
            out = cand.monic();
            return true;
        }
        size_t k = 0;
        while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
        if (k == idx.size()) return false;
    }
}

// Factor a squarefree monic polynomial with no rational roots.
void factor_squarefree(const RatPoly& q, std::vector<RatPoly>& out) {
    if (q.degree() <= 1) {
        if (q.degree() == 1) out.push_back(q);
        return;
    }
    if (q.degree() <= 3) {
        // no rational root and degree <= 3: irreducible over Q
        out.push_back(q);
        return;
    }
    if (q.degree() > 8)
        throw FactorizationIncomplete("factor_poly: residual degree beyond desk scale");
    for (int d = 2; d <= q.degree() / 2; ++d) {
        RatPoly f;
        if (kronecker_find_factor(q.primitive(), d, f)) {
            out.push_back(f);
            factor_squarefree(q.quotient(f).monic(), out);
            return;
        }
    }
    out.push_back(q);  // no factor up to half degree: irreducible
}

}  // namespace

Factorization factor_poly(const RatPoly& p) {
    Factorization out;
    if (p.is_zero()) throw Error("factor_poly of zero polynomial");
    out.unit = p.leading();
    if (p.degree() < 1) return out;
    for (const auto& [g, mult] : squarefree_decomposition(p)) {
        RatPoly rest = g;
        for (const auto& [root, rmult] : rational_roots(g)) {
            (void)rmult;  // squarefree: multiplicity 1 inside g
            RatPoly lin{-root, Rat(1)};
            out.factors.push_back({lin, mult});
            rest = rest.quotient(lin);
        }
        if (rest.degree() > 0) {
            std::vector<RatPoly> irr;
            factor_squarefree(rest.monic(), irr);
            for (const auto& f : irr) out.factors.push_back({f, mult});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        return a.factor.coeffs() < b.factor.coeffs();
    });
    return out;
}

std::vector<RatPoly> coprime_basis(const std::vector<RatPoly>& polys) {
    std::vector<RatPoly> basis;
    for (const RatPoly& p : polys) {
        for (const auto& [g, mult] : squarefree_decomposition(p)) {
            (void)mult;
            std::vector<RatPoly> queue{g.monic()};
            while (!queue.empty()) {
                RatPoly cur = queue.back();
                queue.pop_back();
                if (cur.degree() < 1) continue;
                bool split = false;
                for (size_t i = 0; i < basis.size(); ++i) {
                    RatPoly d = poly_gcd(cur, basis[i]);
                    if (d.degree() < 1) continue;
                    if (d.degree() == basis[i].degree()) {
                        // basis[i] divides cur; keep remainder part
                        RatPoly rest = cur.quotient(basis[i]);
                        if (rest.degree() >= 1) queue.push_back(rest.monic());
                        split = true;
                        break;
                    }
                    // refine basis[i] into d and basis[i]/d, retry cur
                    RatPoly hi = basis[i].quotient(d).monic();
                    basis[i] = d.monic();
                    basis.push_back(hi);
                    queue.push_back(cur);
                    split = true;
                    break;
                }
                if (!split) basis.push_back(cur.monic());
            }
        }
    }
    std::sort(basis.begin(), basis.end(), [](const RatPoly& a, const RatPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });
    return basis;
}

}  // namespace cyops
