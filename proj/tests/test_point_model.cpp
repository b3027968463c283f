#include <doctest.h>

#include <algorithm>

#include "permtop/complex.hpp"
#include "permtop/experiment.hpp"
#include "permtop/point_model.hpp"

using namespace permtop;

namespace {

PointConfig example()
{
    return PointConfig({{0.2, 0.7}, {0.5, 0.1}, {0.9, 0.4}});
}

PointConfig diagonal(int n)
{
    std::vector<Point> pts;
    for (int i = 1; i <= n; ++i)
        pts.push_back({i / (n + 1.0), i / (n + 1.0)});
    return PointConfig(pts);
}

PointConfig anti_diagonal(int n)
{
    std::vector<Point> pts;
    for (int i = 1; i <= n; ++i)
        pts.push_back({i / (n + 1.0), 1.0 - i / (n + 1.0)});
    return PointConfig(pts);
}

BigRational q(long long num, long long den)
{
    return BigRational(num, den);
}

} // namespace

TEST_CASE("PointConfig validates general position")
{
    CHECK_THROWS_AS(PointConfig({{0.1, 0.2}, {0.1, 0.3}}), std::invalid_argument);
    CHECK_THROWS_AS(PointConfig({{0.1, 0.2}, {0.3, 0.2}}), std::invalid_argument);
    CHECK_THROWS_AS(PointConfig({{1.5, 0.2}}), std::invalid_argument);
}

TEST_CASE("sample_config")
{
    Rng rng = make_stream(5, 0);
    CHECK(sample_config(0, rng).size() == 0);
    Rng a = make_stream(5, 1), b = make_stream(5, 1);
    CHECK(sample_config(50, a).to_json() == sample_config(50, b).to_json());

    // two uniform points are incomparable half the time
    Rng rng2 = make_stream(5, 2);
    const int trials = 1000000;
    int incomparable = 0;
    for (int t = 0; t < trials; ++t) {
        const auto c = sample_config(2, rng2);
        incomparable += (c[1].a < c[2].a) != (c[1].b < c[2].b);
    }
    const double sigma = std::sqrt(0.25 / trials);
    CHECK(std::abs(incomparable / double(trials) - 0.5) <= 3 * sigma);
}

TEST_CASE("JSON round trip keeps full precision")
{
    Rng rng = make_stream(6, 0);
    const auto c = sample_config(12, rng);
    const auto back = PointConfig::from_json(c.to_json());
    REQUIRE(back.size() == c.size());
    for (int i = 1; i <= c.size(); ++i)
        CHECK(back[i] == c[i]);
    CHECK_THROWS(PointConfig::from_json("[[0.1]]"));
}

TEST_CASE("to_permutation")
{
    CHECK(to_permutation(example()) == Permutation({3, 1, 2}));
    CHECK(to_permutation(diagonal(6)) == Permutation::identity(6));
    CHECK(to_permutation(anti_diagonal(6)) == Permutation::reversal(6));
    // input order does not matter beyond the a-ranks
    CHECK(to_permutation(PointConfig({{0.9, 0.4}, {0.2, 0.7}, {0.5, 0.1}})) == Permutation({3, 1, 2}));
}

TEST_CASE("minimal_elements")
{
    CHECK(minimal_elements(diagonal(5)) == std::vector<int>{1});
    CHECK(minimal_elements(example()) == std::vector<int>{1, 2});
    CHECK(minimal_elements(anti_diagonal(4)) == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("minimal elements form an antichain that every point dominates")
{
    Rng rng = make_stream(8, 0);
    for (int trial = 0; trial < 500; ++trial) {
        const auto c = sample_config(1 + static_cast<int>(bounded(rng, 30)), rng);
        const auto m = minimal_elements(c);
        for (int i : m)
            for (int j : m)
                if (i != j)
                    CHECK_FALSE(dominates(c[i], c[j]));
        for (int l = 1; l <= c.size(); ++l)
            CHECK(std::any_of(m.begin(), m.end(), [&](int i) { return dominates(c[l], c[i]); }));
    }
}

TEST_CASE("join")
{
    CHECK(join({0.2, 0.7}, {0.5, 0.1}) == Point{0.5, 0.7});
    const Point p{0.3, 0.6};
    CHECK(join(p, p) == p);
    CHECK(join({0, 0}, p) == p);

    Rng rng = make_stream(9, 0);
    for (int i = 0; i < 1000; ++i) {
        const Point x{uniform01(rng), uniform01(rng)}, y{uniform01(rng), uniform01(rng)},
            z{uniform01(rng), uniform01(rng)};
        CHECK(join(join(x, y), z) == join(x, join(y, z)));
        CHECK(join(x, y) == join(y, x));
    }
}

TEST_CASE("upper_set")
{
    const auto c = example();
    CHECK(upper_set(c, {0, 0}) == std::vector<int>{1, 2, 3});
    CHECK(upper_set(c, {1, 1}).empty());
    CHECK(upper_set(c, join(c[1], c[2])).empty());
    CHECK(upper_set(c, c[2]) == std::vector<int>{2, 3});
}

TEST_CASE("region_volumes")
{
    const RegionSpec c(q(1, 4), q(1, 2), q(3, 4), q(1, 4));
    const auto v = region_volumes(c);
    CHECK(v.lower == q(1, 4));
    CHECK(v.middle == q(5, 8));
    CHECK(v.upper == q(1, 8));
    CHECK(middle_volume_barycentric(c) == q(5, 8));

    const RegionSpec strip(0, 1, q(1, 2), q(1, 3));
    CHECK(region_volumes(strip).upper == 0);

    CHECK_THROWS_AS(RegionSpec(q(1, 2), q(1, 4), q(3, 4), q(1, 4)), std::invalid_argument);
    CHECK_THROWS_AS(RegionSpec(q(1, 4), q(1, 2), q(1, 4), q(3, 4)), std::invalid_argument);
}

TEST_CASE("region area identity on random rational c")
{
    Rng rng = make_stream(10, 0);
    for (int i = 0; i < 1000; ++i) {
        const auto c = random_region_spec(rng, 997);
        const auto v = region_volumes(c);
        CHECK(v.middle == middle_volume_barycentric(c));
        CHECK(v.lower + v.middle + v.upper == 1);
        CHECK(v.lower >= 0);
        CHECK(v.middle >= 0);
        const auto x = c.x(), y = c.y();
        CHECK(x[0] + x[1] + x[2] == 1);
        CHECK(y[0] + y[1] + y[2] == 1);
    }
}

TEST_CASE("classify_region")
{
    const RegionSpec c(q(1, 4), q(1, 2), q(3, 4), q(1, 4));
    CHECK(classify_region(c, {0.9, 0.9}) == Region::Upper);
    CHECK(classify_region(c, {0.1, 0.1}) == Region::Lower);
    CHECK(classify_region(c, {0.4, 0.2}) == Region::Lower);
    CHECK(classify_region(c, {0.4, 0.5}) == Region::Middle);
    CHECK(classify_region(c, {0.9, 0.5}) == Region::Middle);
    CHECK(classify_region(c, {0.1, 0.9}) == Region::Middle);
    // the marked points and boundary lines are rejected
    CHECK_FALSE(classify_region(c, {0.25, 0.75}).has_value());
    CHECK_FALSE(classify_region(c, {0.5, 0.25}).has_value());
    CHECK_FALSE(classify_region(c, {0.7, 0.75}).has_value());
}

TEST_CASE("region frequencies match exact areas")
{
    Rng rng = make_stream(12, 0);
    const RegionSpec c(q(1, 4), q(1, 2), q(3, 4), q(1, 4));
    const auto res = region_probability_check(c, 1, 1, 1000000, rng, 3.0);
    CHECK(res.expected == doctest::Approx(5.0 / 64));
    CHECK(res.passed);

    const auto trivial = region_probability_check(c, 0, 0, 1000, rng);
    CHECK(trivial.expected == 1.0);
    CHECK(trivial.observed == 1.0);
}

TEST_CASE("order complex of q equals the complex of its permutation after a-rank relabeling")
{
    Rng rng = make_stream(13, 0);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto c = sample_config(1 + static_cast<int>(bounded(rng, 10)), rng);
        const auto relabeled = relabel(order_complex(c), a_ranks(c));
        CHECK(relabeled == order_complex(to_permutation(c)));
    }
}
