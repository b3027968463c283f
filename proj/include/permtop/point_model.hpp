#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permtop/permutation.hpp"
#include "permtop/rational.hpp"
#include "permtop/rng.hpp"

namespace permtop {

struct Point {
    double a = 0.0;
    double b = 0.0;

    bool operator==(const Point&) const = default;
};

/// Componentwise maximum.
constexpr Point join(Point p, Point q) noexcept
{
    return {p.a > q.a ? p.a : q.a, p.b > q.b ? p.b : q.b};
}

/// p >= q in the product order.
constexpr bool dominates(Point p, Point q) noexcept
{
    return p.a >= q.a && p.b >= q.b;
}

/// n points of the unit square with pairwise distinct a- and pairwise
/// distinct b-coordinates. Point indices at the interface are 1-based.
class PointConfig {
public:
    PointConfig() = default;

    /// Throws std::invalid_argument on coordinates outside [0,1] or a
    /// repeated coordinate.
    explicit PointConfig(std::vector<Point> points);

    int size() const noexcept { return static_cast<int>(points_.size()); }
    const Point& operator[](int index) const { return points_[static_cast<std::size_t>(index - 1)]; }
    std::span<const Point> points() const noexcept { return points_; }

    /// Sub-configuration on the given 1-based indices, in the given order.
    PointConfig subset(std::span<const int> indices) const;

    /// JSON array of [a, b] pairs.
    std::string to_json() const;
    static PointConfig from_json(const std::string& text);

private:
    std::vector<Point> points_;
};

/// n i.i.d. uniform points; a coordinate colliding with an earlier one is
/// redrawn.
PointConfig sample_config(int n, Rng& rng);

/// Position = rank of a, value = rank of b. The order complex of q is the
/// complex of the result after relabeling point i by the rank of a_i.
Permutation to_permutation(const PointConfig& q);

/// rank_a[i-1] = rank of a_i among the a-coordinates (1-based).
std::vector<int> a_ranks(const PointConfig& q);

/// Indices of points dominating no other point, ascending.
std::vector<int> minimal_elements(const PointConfig& q);

/// Indices l with q_l >= p, ascending.
std::vector<int> upper_set(const PointConfig& q, Point p);

/// Two marked incomparable points (a1,b1) and (a2,b2) with a1 < a2 and
/// b2 < b1, given exactly. Splits the square into the region below one of
/// the marked points, the quadrant above both, and the rest.
class RegionSpec {
public:
    /// Throws std::invalid_argument unless 0 <= a1 < a2 <= 1, 0 <= b2 < b1 <= 1.
    RegionSpec(BigRational a1, BigRational a2, BigRational b1, BigRational b2);

    const BigRational& a1() const noexcept { return a1_; }
    const BigRational& a2() const noexcept { return a2_; }
    const BigRational& b1() const noexcept { return b1_; }
    const BigRational& b2() const noexcept { return b2_; }

    /// (a1, a2 - a1, 1 - a2)
    std::array<BigRational, 3> x() const;
    /// (b2, b1 - b2, 1 - b1)
    std::array<BigRational, 3> y() const;

    /// Double copies of the four coordinates for sampling loops.
    double a1d() const noexcept { return a1d_; }
    double a2d() const noexcept { return a2d_; }
    double b1d() const noexcept { return b1d_; }
    double b2d() const noexcept { return b2d_; }

private:
    BigRational a1_, a2_, b1_, b2_;
    double a1d_, a2d_, b1d_, b2d_;
};

enum class Region { Lower, Middle, Upper };

struct RegionVolumes {
    BigRational lower;
    BigRational middle;
    BigRational upper;
};

RegionVolumes region_volumes(const RegionSpec& c);

/// x1*y3 + x2*(y2+y3) + x3*(y1+y2); equals region_volumes(c).middle.
BigRational middle_volume_barycentric(const RegionSpec& c);

/// nullopt when p lies on one of the lines a = a1, a = a2, b = b1, b = b2,
/// which contain every region boundary.
std::optional<Region> classify_region(const RegionSpec& c, Point p);

} // namespace permtop
