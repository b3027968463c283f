#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "permtop/permutation.hpp"
#include "permtop/point_model.hpp"

namespace permtop {

/// Vertex subsets as bitmasks: bit (v-1) stands for vertex label v.
using FaceMask = std::uint32_t;

constexpr int kMaxVertexLabel = 31;
constexpr int kDefaultEnumerationGuard = 16;

/// Finite simplicial complex on vertex labels 1..31, stored as the sorted
/// list of its nonempty faces. Brute-force ground truth for small inputs.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Throws std::invalid_argument if `faces` is not downward closed or
    /// contains the empty mask.
    static SimplicialComplex from_faces(std::vector<FaceMask> faces);

    /// Downward closure of the given faces.
    static SimplicialComplex generated_by(std::span<const FaceMask> faces);

    bool empty() const noexcept { return faces_.empty(); }
    FaceMask vertex_mask() const noexcept { return vertex_mask_; }
    std::vector<int> vertices() const;
    std::span<const FaceMask> faces() const noexcept { return faces_; }
    bool contains(FaceMask face) const;
    int dimension() const;

    /// face_counts()[d] = number of d-dimensional faces.
    std::vector<std::int64_t> face_counts() const;
    std::int64_t euler_characteristic() const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    FaceMask vertex_mask_ = 0;
    std::vector<FaceMask> faces_;
};

/// Reduced Betti numbers over GF(2), indexed by dimension 0..dim.
struct BettiVector {
    bool is_empty = true;
    std::vector<std::int64_t> reduced;

    bool all_zero() const;
    std::int64_t operator[](int dim) const;
};

/// Faces are the increasing subsequences of pi. Throws std::length_error
/// when pi.size() exceeds `guard`.
SimplicialComplex order_complex(const Permutation& pi, int guard = kDefaultEnumerationGuard);

/// Chains of q in the product order, labeled by the point indices.
SimplicialComplex order_complex(const PointConfig& q, int guard = kDefaultEnumerationGuard);

/// Faces of K contained in S. Throws std::invalid_argument unless S is a
/// subset of K's vertices.
SimplicialComplex induced(const SimplicialComplex& K, std::span<const int> vertices);

/// Relabels every vertex v as relabel[v-1].
SimplicialComplex relabel(const SimplicialComplex& K, std::span<const int> relabel);

BettiVector betti_gf2(const SimplicialComplex& K);

/// Connectivity read off the GF(2) Betti numbers. Sound for permutation
/// and planar point complexes only: those are wedges of spheres, so their
/// homology is free and vanishing reduced homology through degree r is
/// equivalent to r-connectivity. Throws std::invalid_argument for r < -1.
bool is_r_connected_oracle(const SimplicialComplex& K, int r);

/// Rank over GF(2) of the given rows, each a packed bit vector of `words`
/// 64-bit words. Rows are consumed.
std::size_t gf2_rank(std::vector<std::vector<std::uint64_t>>& rows);

} // namespace permtop
