#pragma once

#include "permtop/homotopy.hpp"
#include "permtop/point_model.hpp"

namespace permtop {

/// Homotopy type of the order complex of a sub-configuration, via its
/// permutation; an empty index set gives the empty space.
HomotopyType homotopy_type_of(const PointConfig& q, std::span<const int> indices);

/// Sufficient test for r-connectivity of the order complex of q: for every
/// pair of distinct minimal points, the complex induced on the points above
/// their join must be (r-1)-connected. True guarantees r-connectivity;
/// false is inconclusive. Throws std::invalid_argument for r < 1 or n = 0.
bool sufficient_condition_holds(const PointConfig& q, int r);

} // namespace permtop
