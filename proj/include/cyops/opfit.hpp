#pragma once

// Recovery of an annihilating operator from a truncated series by exact
// linear algebra. Candidate shapes (order, degree) are tried in increasing
// lexicographic order of (order+degree, order); for each shape the
// homogeneous system "operator applied to s vanishes through order
// #unknowns-1+margin" is solved exactly. A one-dimensional kernel gives the
// canonical primitive generator; a higher-dimensional kernel at the minimal
// shape is reported as AmbiguousKernel, never silently resolved.

#include <optional>

#include "cyops/qseries.hpp"
#include "cyops/theta_op.hpp"

namespace cyops {

struct FitOptions {
    int max_order = 4;
    int max_degree = 10;
    int margin = 10;
};

std::optional<ThetaOperator> fit_operator(const QSeries& s, const FitOptions& opt);

// apply_operator(op, s) == 0 through the maximal checkable order; requires
// s.trunc() >= op.degree() + slack.
bool verify_annihilation(const ThetaOperator& op, const QSeries& s, int slack);

}  // namespace cyops
