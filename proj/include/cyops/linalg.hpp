#pragma once

// Exact linear algebra over Q via fraction-free (Bareiss) elimination on a
// scaled integer matrix. No floating point: a kernel vector is a kernel
// vector, full stop.

#include <vector>

#include "cyops/rational.hpp"

namespace cyops {

using RatMatrix = std::vector<std::vector<Rat>>;

// Basis of the right kernel {x : M x = 0}; each vector has `cols` entries.
std::vector<std::vector<Rat>> rational_kernel(const RatMatrix& m, size_t cols);

size_t rational_rank(const RatMatrix& m, size_t cols);

}  // namespace cyops
