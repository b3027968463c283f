#include <doctest.h>

#include <algorithm>

#include "permtop/complex.hpp"
#include "permtop/nerve.hpp"

using namespace permtop;

TEST_CASE("chain configurations satisfy the condition vacuously")
{
    std::vector<Point> pts;
    for (int i = 1; i <= 6; ++i)
        pts.push_back({i / 7.0, i / 7.0});
    const PointConfig chain(pts);
    for (int r = 1; r <= 4; ++r)
        CHECK(sufficient_condition_holds(chain, r));
}

TEST_CASE("two-point antichain fails at r = 1")
{
    const PointConfig q({{0.2, 0.8}, {0.7, 0.1}});
    CHECK_FALSE(sufficient_condition_holds(q, 1));
    CHECK(homotopy_type_of(q, upper_set(q, join(q[1], q[2]))) == HomotopyType::empty());
}

TEST_CASE("argument checks")
{
    const PointConfig q({{0.2, 0.8}});
    CHECK_THROWS_AS(sufficient_condition_holds(q, 0), std::invalid_argument);
    CHECK_THROWS_AS(sufficient_condition_holds(PointConfig(), 1), std::invalid_argument);
}

TEST_CASE("a positive verdict is confirmed by homology")
{
    Rng rng = make_stream(41, 0);
    int positives = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const auto q = sample_config(1 + static_cast<int>(bounded(rng, 12)), rng);
        const auto K = order_complex(q);
        for (int r = 1; r <= 2; ++r) {
            if (sufficient_condition_holds(q, r)) {
                ++positives;
                CHECK(is_r_connected_oracle(K, r));
            }
        }
    }
    CHECK(positives > 1000);
}

TEST_CASE("intersection of cones over minimal points is the complex above the extreme pair")
{
    Rng rng = make_stream(42, 0);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto q = sample_config(2 + static_cast<int>(bounded(rng, 9)), rng);
        const auto K = order_complex(q);
        const auto M = minimal_elements(q);
        std::vector<int> J;
        for (int i : M)
            if (bounded(rng, 2))
                J.push_back(i);
        if (J.empty())
            J.push_back(M.front());

        // K_J: intersect the cones K_t = K[{l : q_l >= q_t}]
        std::vector<int> common;
        for (int l = 1; l <= q.size(); ++l)
            if (std::all_of(J.begin(), J.end(), [&](int t) { return dominates(q[l], q[t]); }))
                common.push_back(l);

        const int i = *std::max_element(J.begin(), J.end(), [&](int s, int t) { return q[s].a < q[t].a; });
        const int j = *std::max_element(J.begin(), J.end(), [&](int s, int t) { return q[s].b < q[t].b; });
        const auto above = upper_set(q, join(q[i], q[j]));
        CHECK(above == common);
        if (!above.empty())
            CHECK(induced(K, above) == induced(K, common));
    }
}
