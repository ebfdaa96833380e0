#pragma once

// Factorization of univariate rational polynomials at desk scale:
// squarefree (Yun) decomposition, rational root extraction through integer
// divisor enumeration, irreducibility for the residual factors the corpus
// needs (degree <= 3 directly; small degrees via Kronecker interpolation).
// When a residual cannot be certified, FactorizationIncomplete is thrown
// rather than guessing.

#include <vector>

#include "cyops/ratpoly.hpp"

namespace cyops {

struct PolyFactor {
    RatPoly factor;  // monic irreducible over Q
    int multiplicity;
};

struct Factorization {
    Rat unit;  // P = unit * prod factor^multiplicity
    std::vector<PolyFactor> factors;
};

// Squarefree decomposition P = unit * prod g_k^k with g_k squarefree,
// pairwise coprime, monic.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p);

// All rational roots with multiplicities.
std::vector<std::pair<Rat, int>> rational_roots(const RatPoly& p);

Factorization factor_poly(const RatPoly& p);

// Pairwise-coprime refinement: squarefree polynomials d_j such that every
// input is a unit times a product of powers of the d_j. Used where the
// Fuchs criterion needs valuations but not true irreducible loci.
std::vector<RatPoly> coprime_basis(const std::vector<RatPoly>& polys);

// Multiplicity of the (squarefree) factor f in p.
int poly_valuation(const RatPoly& p, const RatPoly& f);

}  // namespace cyops
