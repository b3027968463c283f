#include "permtop/nerve.hpp"

#include <stdexcept>

namespace permtop {

HomotopyType homotopy_type_of(const PointConfig& q, std::span<const int> indices)
{
    if (indices.empty())
        return HomotopyType::empty();
    return homotopy_type(to_permutation(q.subset(indices)));
}

bool sufficient_condition_holds(const PointConfig& q, int r)
{
    if (r < 1)
        throw std::invalid_argument("sufficient condition needs r >= 1");
    if (q.size() == 0)
        throw std::invalid_argument("sufficient condition needs a nonempty configuration");
    const auto minimal = minimal_elements(q);
    for (std::size_t s = 0; s < minimal.size(); ++s) {
        for (std::size_t t = s + 1; t < minimal.size(); ++t) {
            const auto above = upper_set(q, join(q[minimal[s]], q[minimal[t]]));
            if (!is_r_connected(homotopy_type_of(q, above), r - 1))
                return false;
        }
    }
    return true;
}

} // namespace permtop
