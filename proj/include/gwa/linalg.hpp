// Dense Gaussian elimination over the exact field Q(q).
#pragma once

#include <optional>

#include "gwa/scalar.hpp"

namespace gwa {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

// Any solution x of M x = rhs, or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve_linear(ScalarMatrix m, std::vector<Scalar> rhs);

unsigned matrix_rank(ScalarMatrix m);

}  // namespace gwa
