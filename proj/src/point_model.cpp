#include "permtop/point_model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

namespace permtop {

namespace {

std::vector<int> ranks_by(const std::vector<Point>& pts, double Point::*coord)
{
    std::vector<int> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return pts[static_cast<std::size_t>(i)].*coord < pts[static_cast<std::size_t>(j)].*coord; });
    std::vector<int> rank(pts.size());
    for (std::size_t r = 0; r < order.size(); ++r)
        rank[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
    return rank;
}

} // namespace

PointConfig::PointConfig(std::vector<Point> points) : points_(std::move(points))
{
    std::unordered_set<double> as, bs;
    for (const auto& p : points_) {
        if (!(p.a >= 0.0 && p.a <= 1.0 && p.b >= 0.0 && p.b <= 1.0))
            throw std::invalid_argument("point coordinate outside [0,1]");
        if (!as.insert(p.a).second || !bs.insert(p.b).second)
            throw std::invalid_argument("configuration is not in general position");
    }
}

PointConfig PointConfig::subset(std::span<const int> indices) const
{
    std::vector<Point> sub;
    sub.reserve(indices.size());
    for (int i : indices) {
        if (i < 1 || i > size())
            throw std::out_of_range("point index out of range");
        sub.push_back((*this)[i]);
    }
    return PointConfig(std::move(sub));
}

std::string PointConfig::to_json() const
{
    auto arr = nlohmann::json::array();
    for (const auto& p : points_)
        arr.push_back({p.a, p.b});
    return arr.dump();
}

PointConfig PointConfig::from_json(const std::string& text)
{
    const auto arr = nlohmann::json::parse(text);
    if (!arr.is_array())
        throw std::invalid_argument("point configuration must be a JSON array");
    std::vector<Point> pts;
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("each point must be an [a, b] pair");
        pts.push_back({e[0].get<double>(), e[1].get<double>()});
    }
    return PointConfig(std::move(pts));
}

PointConfig sample_config(int n, Rng& rng)
{
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    std::unordered_set<double> as, bs;
    for (int i = 0; i < n; ++i) {
        double a = uniform01(rng);
        while (!as.insert(a).second)
            a = uniform01(rng);
        double b = uniform01(rng);
        while (!bs.insert(b).second)
            b = uniform01(rng);
        pts.push_back({a, b});
    }
    return PointConfig(std::move(pts));
}

std::vector<int> a_ranks(const PointConfig& q)
{
    return ranks_by({q.points().begin(), q.points().end()}, &Point::a);
}

Permutation to_permutation(const PointConfig& q)
{
    const std::vector<Point> pts(q.points().begin(), q.points().end());
    const auto ra = ranks_by(pts, &Point::a);
    const auto rb = ranks_by(pts, &Point::b);
    std::vector<int> values(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        values[static_cast<std::size_t>(ra[i] - 1)] = rb[i];
    return Permutation(std::move(values));
}

std::vector<int> minimal_elements(const PointConfig& q)
{
    // Sweep by increasing a: a point is minimal iff its b is below every b
    // seen so far.
    const auto n = static_cast<std::size_t>(q.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return q[i].a < q[j].a; });
    std::vector<int> out;
    double best_b = 2.0;
    for (int i : order) {
        if (q[i].b < best_b) {
            out.push_back(i);
            best_b = q[i].b;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> upper_set(const PointConfig& q, Point p)
{
    std::vector<int> out;
    for (int i = 1; i <= q.size(); ++i)
        if (dominates(q[i], p))
            out.push_back(i);
    return out;
}

RegionSpec::RegionSpec(BigRational a1, BigRational a2, BigRational b1, BigRational b2)
    : a1_(std::move(a1)), a2_(std::move(a2)), b1_(std::move(b1)), b2_(std::move(b2))
{
    if (!(0 <= a1_ && a1_ < a2_ && a2_ <= 1))
        throw std::invalid_argument("region parameters need 0 <= a1 < a2 <= 1");
    if (!(0 <= b2_ && b2_ < b1_ && b1_ <= 1))
        throw std::invalid_argument("region parameters need 0 <= b2 < b1 <= 1");
    a1d_ = to_double(a1_);
    a2d_ = to_double(a2_);
    b1d_ = to_double(b1_);
    b2d_ = to_double(b2_);
}

std::array<BigRational, 3> RegionSpec::x() const
{
    return {a1_, a2_ - a1_, 1 - a2_};
}

std::array<BigRational, 3> RegionSpec::y() const
{
    return {b2_, b1_ - b2_, 1 - b1_};
}

RegionVolumes region_volumes(const RegionSpec& c)
{
    RegionVolumes v;
    v.lower = c.a1() * c.b1() + c.a2() * c.b2() - c.a1() * c.b2();
    v.upper = (1 - c.a2()) * (1 - c.b1());
    v.middle = 1 - v.lower - v.upper;
    return v;
}

BigRational middle_volume_barycentric(const RegionSpec& c)
{
    const auto x = c.x();
    const auto y = c.y();
    return x[0] * y[2] + x[1] * (y[1] + y[2]) + x[2] * (y[0] + y[1]);
}

std::optional<Region> classify_region(const RegionSpec& c, Point p)
{
    if (p.a == c.a1d() || p.a == c.a2d() || p.b == c.b1d() || p.b == c.b2d())
        return std::nullopt;
    if (p.a > c.a2d() && p.b > c.b1d())
        return Region::Upper;
    if ((p.a < c.a1d() && p.b < c.b1d()) || (p.a < c.a2d() && p.b < c.b2d()))
        return Region::Lower;
    return Region::Middle;
}

} // namespace permtop
