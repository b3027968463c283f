#include "permtop/homotopy.hpp"

#include <algorithm>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace permtop {

HomotopyType HomotopyType::wedge_of(SphereCounts spheres)
{
    for (auto it = spheres.begin(); it != spheres.end();) {
        if (it->first < 0)
            throw std::invalid_argument("sphere dimension must be >= 0");
        it = it->second == 0 ? spheres.erase(it) : std::next(it);
    }
    if (spheres.empty())
        return contractible();
    return HomotopyType(Kind::Wedge, std::move(spheres));
}

std::uint64_t HomotopyType::count(int dim) const
{
    const auto it = spheres_.find(dim);
    return it == spheres_.end() ? 0 : it->second;
}

int HomotopyType::min_dimension() const
{
    return spheres_.empty() ? -1 : spheres_.begin()->first;
}

std::string HomotopyType::to_json() const
{
    nlohmann::ordered_json j;
    switch (kind_) {
    case Kind::Empty:
        j["type"] = "empty";
        break;
    case Kind::Contractible:
        j["type"] = "contractible";
        break;
    case Kind::Wedge: {
        j["type"] = "wedge";
        auto arr = nlohmann::ordered_json::array();
        for (const auto& [dim, count] : spheres_) {
            nlohmann::ordered_json s;
            s["dim"] = dim;
            s["count"] = count;
            arr.push_back(std::move(s));
        }
        j["spheres"] = std::move(arr);
        break;
    }
    }
    return j.dump();
}

std::string HomotopyType::to_string() const
{
    if (is_empty())
        return "empty";
    if (is_contractible())
        return "contractible";
    std::string out;
    for (const auto& [dim, count] : spheres_) {
        for (std::uint64_t c = 0; c < count; ++c) {
            if (!out.empty())
                out += " v ";
            out += "S^" + std::to_string(dim);
            if (count > 8) {
                out += " (x" + std::to_string(count) + ")";
                break;
            }
        }
    }
    return out;
}

HomotopyType wedge(const HomotopyType& lhs, const HomotopyType& rhs)
{
    if (lhs.is_empty() || rhs.is_empty())
        throw std::invalid_argument("wedge of an empty space is undefined");
    auto spheres = lhs.spheres();
    for (const auto& [dim, count] : rhs.spheres())
        spheres[dim] += count;
    return HomotopyType::wedge_of(std::move(spheres));
}

HomotopyType suspend(const HomotopyType& h)
{
    if (h.is_empty())
        return HomotopyType::sphere(0);
    if (h.is_contractible())
        return h;
    HomotopyType::SphereCounts shifted;
    for (const auto& [dim, count] : h.spheres())
        shifted.emplace(dim + 1, count);
    return HomotopyType::wedge_of(std::move(shifted));
}

namespace {

// Sorted runs of the value sequence at every power-of-two block size, used
// to answer "smallest value above a threshold within a position range".
class MergeSortLevels {
public:
    explicit MergeSortLevels(std::span<const int> values)
        : n_(values.size())
    {
        levels_.emplace_back(values.begin(), values.end());
        for (std::size_t width = 1; width < n_; width *= 2) {
            const auto& prev = levels_.back();
            std::vector<int> next(n_);
            for (std::size_t lo = 0; lo < n_; lo += 2 * width) {
                const std::size_t mid = std::min(lo + width, n_);
                const std::size_t hi = std::min(lo + 2 * width, n_);
                std::merge(prev.begin() + lo, prev.begin() + mid, prev.begin() + mid, prev.begin() + hi,
                           next.begin() + lo);
            }
            levels_.push_back(std::move(next));
        }
    }

    // Smallest value > floor among 0-based indices [lo, hi), or 0.
    int successor(std::size_t lo, std::size_t hi, int floor) const
    {
        int best = 0;
        while (lo < hi) {
            std::size_t level = 0;
            while (level + 1 < levels_.size() && lo % (std::size_t{2} << level) == 0 &&
                   lo + (std::size_t{2} << level) <= hi)
                ++level;
            const std::size_t end = lo + (std::size_t{1} << level);
            probe(level, lo, end, floor, best);
            lo = end;
        }
        return best;
    }

private:
    void probe(std::size_t level, std::size_t lo, std::size_t hi, int floor, int& best) const
    {
        const auto& run = levels_[level];
        const auto it = std::upper_bound(run.begin() + lo, run.begin() + hi, floor);
        if (it != run.begin() + hi && (best == 0 || *it < best))
            best = *it;
    }

    std::size_t n_;
    std::vector<std::vector<int>> levels_;
};

// Every subproblem reached by the recursion is a quadrant of the original
// permutation: the entries with value > A at position > B. Inside a quadrant
// the successive minima m_1 < m_2 < ... move strictly left; each step
// m_k -> m_(k+1) splits off the quadrant (m_(k+1), pos(m_k)) one suspension
// deeper, and the last minimum leaves a contractible main branch. A split
// that is already empty contributes S^depth, where depth counts the
// suspensions above the quadrant being scanned.
//
// Quadrants at depth > max_depth are not visited. on_sphere(dim) returns
// false to stop the walk.
template <typename OnSphere>
void walk_quadrants(const Permutation& pi, int max_depth, OnSphere on_sphere)
{
    const int n = pi.size();
    const auto pos = pi.positions();
    const auto vals = pi.values();
    std::vector<int> suffix_max(static_cast<std::size_t>(n) + 2, 0);
    for (int p = n; p >= 1; --p)
        suffix_max[static_cast<std::size_t>(p)] =
            std::max(suffix_max[static_cast<std::size_t>(p) + 1], vals[static_cast<std::size_t>(p - 1)]);
    const MergeSortLevels tree(vals);

    struct Quadrant {
        int above_value;
        int after_position;
        int depth;
    };

    std::vector<Quadrant> work{{0, 0, 0}};
    while (!work.empty()) {
        const auto [a, b, depth] = work.back();
        work.pop_back();
        int m = tree.successor(static_cast<std::size_t>(b), static_cast<std::size_t>(n), a);
        int p = pos[static_cast<std::size_t>(m - 1)];
        while (p > b + 1) {
            const int next = tree.successor(static_cast<std::size_t>(b), static_cast<std::size_t>(p - 1), a);
            if (next == 0)
                break;
            if (suffix_max[static_cast<std::size_t>(p) + 1] <= next) {
                if (!on_sphere(depth))
                    return;
            } else if (depth < max_depth) {
                work.push_back({next, p, depth + 1});
            }
            m = next;
            p = pos[static_cast<std::size_t>(m - 1)];
        }
    }
}

} // namespace

HomotopyType homotopy_type(const Permutation& pi)
{
    if (pi.empty())
        return HomotopyType::empty();
    HomotopyType::SphereCounts spheres;
    walk_quadrants(pi, std::numeric_limits<int>::max(), [&](int dim) {
        ++spheres[dim];
        return true;
    });
    return HomotopyType::wedge_of(std::move(spheres));
}

bool has_sphere_up_to(const Permutation& pi, int max_dim)
{
    if (pi.empty() || max_dim < 0)
        return false;
    bool found = false;
    walk_quadrants(pi, max_dim, [&](int) {
        found = true;
        return false;
    });
    return found;
}

bool is_r_connected(const Permutation& pi, int r)
{
    if (r < -1)
        throw std::invalid_argument("connectivity level must be >= -1");
    return !pi.empty() && !has_sphere_up_to(pi, r);
}

HomotopyType homotopy_type_by_patterns(const Permutation& pi)
{
    const int n = pi.size();
    if (n == 0)
        return HomotopyType::empty();
    if (n == 1)
        return HomotopyType::contractible();
    const auto pos = pi.positions();
    const int i = pos[0];
    const int j = pos[1];
    if (i < j)
        return homotopy_type_by_patterns(delete_pattern(pi, j));
    return wedge(homotopy_type_by_patterns(delete_pattern(pi, i)),
                 suspend(homotopy_type_by_patterns(suffix_pattern(pi, i))));
}

bool is_r_connected(const HomotopyType& h, int r)
{
    if (r < -1)
        throw std::invalid_argument("connectivity level must be >= -1");
    switch (h.kind()) {
    case HomotopyType::Kind::Empty:
        return false;
    case HomotopyType::Kind::Contractible:
        return true;
    case HomotopyType::Kind::Wedge:
        return r < h.min_dimension();
    }
    return false;
}

} // namespace permtop
