#pragma once

// Self-duality machinery for fourth-order operators: the Q-quantity whose
// vanishing characterises essential self-adjointness, and the alpha-function
// with P alpha = alpha P*. For the monic operator D^n + a_{n-1} D^{n-1} + ...
// the subleading coefficient drives alpha through alpha'/alpha = -(2/n) a_{n-1};
// alpha is then const * prod f_i(t)^{e_i} with e_i read off from exact residues.

#include <vector>

#include "cyops/riemann.hpp"
#include "cyops/theta_op.hpp"

namespace cyops {

// Q = a2 a3 / 2 - a1 - a3^3 / 8 + a2' - (3/4) a3 a3' - a3'' / 2 for the monic
// order-4 operator; WrongOrder otherwise. Q == 0 iff essentially self-adjoint.
RatFun q_quantity(const DiffOperator& op);
RatFun q_quantity(const ThetaOperator& op);

struct AlphaFactor {
    bool at_infinity = false;
    RatPoly factor;  // monic irreducible; meaningful when !at_infinity
    Rat exponent;
};

struct AlphaFunction {
    // alpha = prod factor^exponent up to a nonzero constant; the infinity
    // entry carries the exponent-parity datum for the rationality test.
    std::vector<AlphaFactor> factors;
    bool rational = false;   // all exponents integers
    bool parity_ok = false;  // every exponent-column sum is an even integer
    // witnesses for a failed parity test: (point, exponent sum)
    std::vector<std::pair<PointDescriptor, Rat>> parity_failures;
};

AlphaFunction alpha_dual_function(const DiffOperator& op);
AlphaFunction alpha_dual_function(const ThetaOperator& op);

// Builds alpha as an honest rational function (requires all finite exponents
// integral) for the symbolic check P alpha = alpha P*.
RatFun alpha_as_ratfun(const AlphaFunction& a);

// Exact operator identity P alpha == alpha P*.
bool essential_self_adjointness_witness(const DiffOperator& op, const RatFun& alpha);

}  // namespace cyops
