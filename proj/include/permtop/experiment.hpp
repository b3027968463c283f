#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "permtop/permutation.hpp"
#include "permtop/point_model.hpp"
#include "permtop/rational.hpp"
#include "permtop/rng.hpp"

namespace permtop {

constexpr int kExactEnumerationGuard = 10;

/// True iff the complex of pi is not r-connected (r >= -1). Uses the
/// linear cut scan for r = 0 and the homotopy classification above that.
bool fails_connectivity(const Permutation& pi, int r);

/// failures[r+1] = #{pi in S_n : complex not r-connected} for r = -1..max_r.
/// Throws std::length_error for n > kExactEnumerationGuard.
std::vector<std::uint64_t> failure_counts(int n, int max_r);

/// Probability that a uniform permutation of [n] has a complex that is not
/// r-connected, by enumeration. exact_p(0, r) = 1: the empty complex is not
/// even (-1)-connected.
BigRational exact_p(int n, int r);

struct Interval {
    double low = 0.0;
    double high = 1.0;
};

/// 95% Wilson score interval for a binomial proportion.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.959963984540054);

struct EstimateResult {
    int n = 0;
    int r = 0;
    std::uint64_t samples = 0;
    std::uint64_t failures = 0;
    double p_hat = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t seed = 0;
    double thm_lower = 0.0;
    double thm_upper = 0.0;

    std::string to_json() const;
    std::string csv_row() const;
    static std::string csv_header();

    bool operator==(const EstimateResult&) const = default;
};

struct EstimateOptions {
    int n = 1;
    int r = 0;
    std::uint64_t samples = 1;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    /// Samples per substream; part of the reproducibility contract.
    std::uint64_t chunk_size = 1u << 14;
};

/// Monte Carlo estimate of p_r(n). Chunk c of the sample range always uses
/// substream c of the seed, so the result is independent of `workers`.
EstimateResult estimate_p(const EstimateOptions& options);

/// c_0 = 0, c_r = sum_{i<r} 1/i!
BigRational c_constant(int r);

/// 40^(r+1) ln(3n)^(2r) / n
double thm_upper(int n, int r);

/// ln(n)^r / (r! n) - c_r ln(n)^(r-1) / n, unclamped (may be negative).
double thm_lower(int n, int r);

/// thm_lower clamped at 0.
double thm_lower_clamped(int n, int r);

/// m -> p_{r-1}(m)
using ProbabilityFn = std::function<double(int)>;
using ExactProbabilityFn = std::function<BigRational(int)>;

/// 20 (1 + ln n) (1/n + sum_{k=0}^{n-3} p_prev(n-2-k)/(k+2)); n >= 3, r >= 1.
double recursion_upper_rhs(int n, int r, const ProbabilityFn& p_prev);

/// (1/n) (1 + (1/(n-1)) sum_{i=1}^{n-1} (i-1) p_prev(n-i)); n >= 2, r >= 1.
/// The i = n term of the full sum is the leading 1, since p_prev(0) = 1.
double recursion_lower_rhs(int n, int r, const ProbabilityFn& p_prev);
BigRational recursion_lower_rhs_exact(int n, int r, const ExactProbabilityFn& p_prev);

/// The lower recursion with the sum also running over i = n on top of the
/// leading 1. Counts the i = n term twice; reported alongside for
/// comparison only.
double recursion_lower_rhs_double_counted(int n, int r, const ProbabilityFn& p_prev);

/// 1/n <= exact_p(n, 0) <= 4/n, decided exactly. n >= 2.
bool claim42_bounds_exact(int n);

/// Monte Carlo form: the Wilson interval of the estimate meets
/// [1/n - slack, 4/n + slack].
bool claim42_bounds_mc(const EstimateResult& estimate, double slack);

struct RegionCheckResult {
    /// Probability that nD points land in the middle region and nPlus in the
    /// upper region, in fixed roles.
    double expected = 0.0;
    double observed = 0.0;
    double sigma = 0.0;
    /// Single-point region frequencies vs exact areas (lower, middle, upper).
    std::array<double, 3> area = {};
    std::array<double, 3> frequency = {};
    std::array<double, 3> frequency_sigma = {};
    /// Fraction of random point pairs that are incomparable; expected 1/2.
    double incomparable = 0.0;
    double incomparable_sigma = 0.0;
    bool passed = false;
};

/// Checks the region probabilities for a given c at `sigmas` standard errors.
RegionCheckResult region_probability_check(const RegionSpec& c, int nD, int nPlus,
                                           std::uint64_t trials, Rng& rng, double sigmas = 4.0);

/// Same with c drawn at random on the 1/1024 grid.
RegionCheckResult region_probability_check(int nD, int nPlus, std::uint64_t trials, Rng& rng,
                                           double sigmas = 4.0);

/// Random c with coordinates on the 1/denominator grid.
RegionSpec random_region_spec(Rng& rng, int denominator = 1024);

} // namespace permtop
