#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gring/scalar.hpp"

namespace gring::linalg {

// Dense field linear algebra on Scalars (QQ or Z/p). Small systems only.

using Mat = std::vector<std::vector<Scalar>>;
using Vec = std::vector<Scalar>;

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row, in order.
std::vector<std::size_t> rref(Mat& m, const RingPtr& field);

/// Basis of { x : M x = 0 } with `cols` unknowns.
std::vector<Vec> kernel(Mat m, const RingPtr& field, std::size_t cols);

/// One solution of M x = b, or nullopt.
std::optional<Vec> solve(Mat m, Vec b, const RingPtr& field);

}  // namespace gring::linalg
