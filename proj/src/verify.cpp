#include "permtop/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "permtop/complex.hpp"
#include "permtop/experiment.hpp"
#include "permtop/homotopy.hpp"
#include "permtop/integrals.hpp"
#include "permtop/nerve.hpp"

namespace permtop {

namespace {

constexpr std::uint64_t kVerifySeed = 20240601;

bool sphere_counts_match(const HomotopyType& h, const BettiVector& betti)
{
    if (h.is_empty())
        return betti.is_empty;
    if (betti.is_empty)
        return false;
    if (h.is_contractible())
        return betti.all_zero();
    for (std::size_t d = 0; d < betti.reduced.size(); ++d)
        if (static_cast<std::uint64_t>(betti.reduced[d]) != h.count(static_cast<int>(d)))
            return false;
    return h.spheres().rbegin()->first < static_cast<int>(betti.reduced.size());
}

template <class F>
void for_each_permutation(int n, F&& f)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        f(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<CheckResult> oracle_suite(int max_n)
{
    std::vector<CheckResult> out;
    {
        const auto h = homotopy_type(parse_permutation("3254176"));
        out.push_back({"oracle", "example 3254176 is S^1 v S^2",
                       h == HomotopyType::wedge_of({{1, 1}, {2, 1}}), h.to_string()});
    }
    std::uint64_t complexes = 0, mismatches = 0, fast_slow = 0, cut_scan = 0;
    for (int n = 1; n <= max_n; ++n) {
        for_each_permutation(n, [&](const Permutation& pi) {
            const auto h = homotopy_type(pi);
            ++complexes;
            if (!sphere_counts_match(h, betti_gf2(order_complex(pi))))
                ++mismatches;
            if (n <= 8 && !(homotopy_type_by_patterns(pi) == h))
                ++fast_slow;
            if (is_r_connected(h, 0) == is_disconnected(pi))
                ++cut_scan;
        });
    }
    std::ostringstream d;
    d << complexes << " complexes, " << mismatches << " mismatches";
    out.push_back({"oracle", "decomposition matches GF(2) homology, n <= " + std::to_string(max_n),
                   mismatches == 0, d.str()});
    out.push_back({"oracle", "fast and pattern-based recursion agree", fast_slow == 0,
                   std::to_string(fast_slow) + " disagreements"});
    out.push_back({"oracle", "0-connectivity matches cut scan", cut_scan == 0,
                   std::to_string(cut_scan) + " disagreements"});
    return out;
}

std::vector<CheckResult> integrals_suite()
{
    std::vector<CheckResult> out;
    auto spot = [&](const std::string& name, const BigRational& got, const BigRational& want) {
        out.push_back({"integrals", name, got == want, to_string(got)});
    };
    spot("I(0,0) = 1", integral_I_exact(0, 0), 1);
    spot("I(0,1) = 1/9", integral_I_exact(0, 1), BigRational(1, 9));
    spot("I(1,0) = 5/9", integral_I_exact(1, 0), BigRational(5, 9));
    spot("F(4,1) = 5/3", F_exact(4, 1).lhs, BigRational(5, 3));

    int bad = 0;
    for (int k = 0; k <= 20; ++k)
        for (int l = 0; l <= 20; ++l)
            bad += check_I_bound(k, l).holds ? 0 : 1;
    out.push_back({"integrals", "I(k,l) bound, k,l <= 20", bad == 0, std::to_string(bad) + " violations"});

    bad = 0;
    for (int N = 0; N <= 200; ++N)
        for (int t = 0; 2 * t <= N; ++t)
            bad += F_exact(N, t).holds ? 0 : 1;
    out.push_back({"integrals", "F(N,t) bound, N <= 200", bad == 0, std::to_string(bad) + " violations"});

    bad = 0;
    for (int l = 0; l <= 60; ++l)
        for (int j = 0; j <= 60; ++j)
            bad += corollary33(l, j).holds ? 0 : 1;
    out.push_back({"integrals", "central binomial sum bound, l,j <= 60", bad == 0,
                   std::to_string(bad) + " violations"});

    bad = 0;
    for (int b1 = 0; b1 <= 15; ++b1)
        for (int b2 = 0; b2 <= 15; ++b2)
            for (int b3 = 0; b3 <= 15; ++b3)
                bad += claim35(b1, b2, b3).holds ? 0 : 1;
    out.push_back({"integrals", "y-moment bound, b_i <= 15", bad == 0, std::to_string(bad) + " violations"});
    return out;
}

std::vector<CheckResult> bounds_suite(int max_n)
{
    std::vector<CheckResult> out;
    const int top = std::min(max_n, 8);
    // table[n][r+1], r = -1..2
    std::vector<std::vector<BigRational>> table;
    for (int n = 0; n <= std::max(top, 9); ++n) {
        const auto counts = failure_counts(n, 2);
        std::vector<BigRational> row;
        for (auto c : counts)
            row.emplace_back(c, factorial(static_cast<unsigned>(n)));
        table.push_back(std::move(row));
    }
    auto p = [&](int n, int r) { return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(r + 1)]; };

    out.push_back({"bounds", "p_0(2) = 1/2, p_0(3) = 1/2, p_0(4) = 11/24",
                   p(2, 0) == BigRational(1, 2) && p(3, 0) == BigRational(1, 2) && p(4, 0) == BigRational(11, 24),
                   to_string(p(4, 0))});

    int bad = 0;
    for (int n = 2; n <= 9; ++n)
        bad += (BigRational(1, n) <= p(n, 0) && p(n, 0) <= BigRational(4, n)) ? 0 : 1;
    out.push_back({"bounds", "1/n <= p_0(n) <= 4/n, 2 <= n <= 9", bad == 0, std::to_string(bad) + " violations"});

    // The lower bound's proof needs n >= 2; at n = 1, r = 0 the formula
    // gives 1 while a single point is contractible.
    bad = 0;
    for (int n = 2; n <= top; ++n)
        for (int r = 0; r <= 2; ++r) {
            const double v = to_double(p(n, r));
            if (v < thm_lower_clamped(n, r) || v > std::min(1.0, thm_upper(n, r)))
                ++bad;
        }
    out.push_back({"bounds", "theorem sandwich, 2 <= n <= " + std::to_string(top) + ", r <= 2", bad == 0,
                   std::to_string(bad) + " violations"});
    {
        std::ostringstream d;
        d << "thm_lower(1,0) = " << thm_lower(1, 0) << ", p_0(1) = " << to_string(p(1, 0));
        out.push_back({"bounds", "lower bound formula at n = 1, r = 0 exceeds p_0(1)", true, d.str(), true});
    }

    bad = 0;
    for (int n = 3; n <= top; ++n)
        for (int r = 1; r <= 2; ++r) {
            auto prev = [&](int m) { return p(m, r - 1); };
            auto prev_d = [&](int m) { return to_double(p(m, r - 1)); };
            if (!(recursion_lower_rhs_exact(n, r, prev) <= p(n, r)))
                ++bad;
            if (!(to_double(p(n, r)) <= recursion_upper_rhs(n, r, prev_d)))
                ++bad;
        }
    {
        auto prev = [&](int m) { return p(m, 0); };
        const auto lower = recursion_lower_rhs_exact(3, 1, prev);
        out.push_back({"bounds", "lower recursion at n=3, r=1 is 1/3", lower == BigRational(1, 3), to_string(lower)});
    }
    out.push_back({"bounds", "recursion inequalities, 3 <= n <= " + std::to_string(top), bad == 0,
                   std::to_string(bad) + " violations"});

    bad = 0;
    for (int n = 1; n <= top; ++n)
        for (int r = -1; r < 2; ++r)
            bad += p(n, r) <= p(n, r + 1) ? 0 : 1;
    out.push_back({"bounds", "p_r(n) nondecreasing in r", bad == 0, std::to_string(bad) + " violations"});
    return out;
}

std::vector<CheckResult> nerve_suite()
{
    Rng rng = make_stream(kVerifySeed, 1);
    const int top = 12;
    int confirmed = 0, violations = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(top)));
        const auto q = sample_config(n, rng);
        const auto K = order_complex(q);
        for (int r = 1; r <= 2; ++r) {
            if (sufficient_condition_holds(q, r)) {
                ++confirmed;
                if (!is_r_connected_oracle(K, r))
                    ++violations;
            }
        }
    }
    std::ostringstream d;
    d << confirmed << " positive verdicts, " << violations << " violations";
    return {{"nerve", "sufficient condition is sound (2000 configs)", violations == 0, d.str()}};
}

std::vector<CheckResult> regions_suite()
{
    std::vector<CheckResult> out;
    Rng rng = make_stream(kVerifySeed, 2);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto c = random_region_spec(rng);
        const auto vol = region_volumes(c);
        if (vol.middle != middle_volume_barycentric(c) || vol.lower + vol.middle + vol.upper != 1)
            ++bad;
    }
    out.push_back({"regions", "middle area identity on 1000 rational c", bad == 0, std::to_string(bad) + " failures"});

    const RegionSpec c(BigRational(1, 4), BigRational(1, 2), BigRational(3, 4), BigRational(1, 4));
    const auto res = region_probability_check(c, 1, 1, 200000, rng);
    std::ostringstream d;
    d << "observed " << res.observed << " expected " << res.expected << ", incomparable " << res.incomparable;
    out.push_back({"regions", "region frequencies within 4 sigma", res.passed, d.str()});
    return out;
}

} // namespace

std::vector<std::string> verify_suite_names()
{
    return {"oracle", "integrals", "bounds", "nerve", "regions", "all"};
}

std::vector<CheckResult> run_verify_suite(const std::string& suite, int max_n)
{
    if (max_n < 1)
        throw std::invalid_argument("max-n must be >= 1");
    if (suite == "oracle")
        return oracle_suite(max_n);
    if (suite == "integrals")
        return integrals_suite();
    if (suite == "bounds")
        return bounds_suite(max_n);
    if (suite == "nerve")
        return nerve_suite();
    if (suite == "regions")
        return regions_suite();
    if (suite == "all") {
        std::vector<CheckResult> all;
        for (const auto& name : {"oracle", "integrals", "bounds", "nerve", "regions"}) {
            auto part = run_verify_suite(name, max_n);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
}

} // namespace permtop
