#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "permtop/permutation.hpp"

namespace permtop {

/// Homotopy type of a permutation complex: empty, contractible, or a
/// wedge of spheres recorded as dimension -> multiplicity.
class HomotopyType {
public:
    enum class Kind { Empty, Contractible, Wedge };
    using SphereCounts = std::map<int, std::uint64_t>;

    static HomotopyType empty() { return HomotopyType(Kind::Empty, {}); }
    static HomotopyType contractible() { return HomotopyType(Kind::Contractible, {}); }

    /// Zero counts are dropped; an all-zero map gives Contractible.
    /// Throws std::invalid_argument on a negative dimension.
    static HomotopyType wedge_of(SphereCounts spheres);
    static HomotopyType sphere(int dim) { return wedge_of({{dim, 1}}); }

    Kind kind() const noexcept { return kind_; }
    bool is_empty() const noexcept { return kind_ == Kind::Empty; }
    bool is_contractible() const noexcept { return kind_ == Kind::Contractible; }
    bool is_wedge() const noexcept { return kind_ == Kind::Wedge; }

    const SphereCounts& spheres() const noexcept { return spheres_; }
    std::uint64_t count(int dim) const;
    /// Smallest sphere dimension; -1 unless this is a wedge.
    int min_dimension() const;

    /// {"type":"wedge","spheres":[{"dim":1,"count":1},...]}
    std::string to_json() const;
    /// "S^1 v S^2", "contractible", "empty"
    std::string to_string() const;

    bool operator==(const HomotopyType&) const = default;

private:
    HomotopyType(Kind kind, SphereCounts spheres) : kind_(kind), spheres_(std::move(spheres)) {}

    Kind kind_;
    SphereCounts spheres_;
};

/// One-point union. Throws std::invalid_argument if either side is empty.
HomotopyType wedge(const HomotopyType& lhs, const HomotopyType& rhs);

/// Join with S^0. The suspension of the empty space is S^0.
HomotopyType suspend(const HomotopyType& h);

/// Homotopy type of the order complex of pi, by removing the two smallest
/// values one step at a time: with i, j the positions of 1 and 2,
///   i < j:  X(pi) ~ X(pi minus position j)
///   i > j:  X(pi) ~ X(pi minus position i) v Susp X(pi after position i)
/// Iterative. Every subproblem is the set of entries above some value and
/// right of some position, so nothing is materialized. Cost is proportional
/// to the number of branches, which for random input grows exponentially
/// with n (tens of millions of spheres by n = 800).
HomotopyType homotopy_type(const Permutation& pi);

/// True if the decomposition of X(pi) contains a sphere of dimension
/// <= max_dim. Only branches shallow enough to produce one are explored.
bool has_sphere_up_to(const Permutation& pi, int max_dim);

/// Same answer as is_r_connected(homotopy_type(pi), r) without building the
/// whole decomposition.
bool is_r_connected(const Permutation& pi, int r);

/// Same recursion written literally on materialized patterns. Quadratic per
/// level; kept as a cross-check for the fast path.
HomotopyType homotopy_type_by_patterns(const Permutation& pi);

/// Empty: never; Contractible: always; Wedge: iff r < smallest dimension.
/// Throws std::invalid_argument for r < -1.
bool is_r_connected(const HomotopyType& h, int r);

} // namespace permtop
