#include "permtop/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "permtop/homotopy.hpp"

namespace permtop {

bool fails_connectivity(const Permutation& pi, int r)
{
    if (r < -1)
        throw std::invalid_argument("connectivity level must be >= -1");
    if (pi.empty())
        return true;
    if (r == -1)
        return false;
    if (r == 0)
        return is_disconnected(pi);
    return !is_r_connected(pi, r);
}

std::vector<std::uint64_t> failure_counts(int n, int max_r)
{
    if (n < 0 || n > kExactEnumerationGuard)
        throw std::length_error("exact enumeration supports 0 <= n <= " +
                                std::to_string(kExactEnumerationGuard));
    if (max_r < -1)
        throw std::invalid_argument("connectivity level must be >= -1");
    std::vector<std::uint64_t> failures(static_cast<std::size_t>(max_r + 2), 0);
    if (n == 0) {
        std::fill(failures.begin(), failures.end(), 1);
        return failures;
    }
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = i + 1;
    do {
        const auto h = homotopy_type(Permutation(v));
        for (int r = -1; r <= max_r; ++r)
            if (!is_r_connected(h, r))
                ++failures[static_cast<std::size_t>(r + 1)];
    } while (std::next_permutation(v.begin(), v.end()));
    return failures;
}

BigRational exact_p(int n, int r)
{
    const auto counts = failure_counts(n, std::max(r, -1));
    return BigRational(counts[static_cast<std::size_t>(r + 1)], factorial(static_cast<unsigned>(n)));
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z)
{
    if (trials == 0)
        return {0.0, 1.0};
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::clamp(std::min(center - half, p), 0.0, 1.0),
            std::clamp(std::max(center + half, p), 0.0, 1.0)};
}

std::string EstimateResult::to_json() const
{
    nlohmann::ordered_json j;
    j["n"] = n;
    j["r"] = r;
    j["samples"] = samples;
    j["failures"] = failures;
    j["p_hat"] = p_hat;
    j["ci_low"] = ci_low;
    j["ci_high"] = ci_high;
    j["seed"] = seed;
    j["thm_lower"] = thm_lower;
    j["thm_upper"] = thm_upper;
    return j.dump();
}

std::string EstimateResult::csv_header()
{
    return "n,r,samples,failures,p_hat,ci_low,ci_high,thm_lower,thm_upper,seed";
}

std::string EstimateResult::csv_row() const
{
    char buf[512];
    std::snprintf(buf, sizeof buf, "%d,%d,%llu,%llu,%.17g,%.17g,%.17g,%.17g,%.17g,%llu", n, r,
                  static_cast<unsigned long long>(samples), static_cast<unsigned long long>(failures), p_hat,
                  ci_low, ci_high, thm_lower, thm_upper, static_cast<unsigned long long>(seed));
    return buf;
}

EstimateResult estimate_p(const EstimateOptions& options)
{
    if (options.n < 1)
        throw std::invalid_argument("estimate_p needs n >= 1");
    if (options.samples < 1)
        throw std::invalid_argument("estimate_p needs samples >= 1");
    if (options.chunk_size < 1)
        throw std::invalid_argument("estimate_p needs chunk_size >= 1");
    if (options.r < -1)
        throw std::invalid_argument("connectivity level must be >= -1");

    const std::uint64_t chunks = (options.samples + options.chunk_size - 1) / options.chunk_size;
    std::vector<std::uint64_t> chunk_failures(chunks, 0);
    std::atomic<std::uint64_t> next{0};

    auto worker = [&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) {
            Rng rng = make_stream(options.seed, c);
            const std::uint64_t begin = c * options.chunk_size;
            const std::uint64_t end = std::min(options.samples, begin + options.chunk_size);
            std::uint64_t failures = 0;
            for (std::uint64_t s = begin; s < end; ++s)
                failures += fails_connectivity(sample_uniform(options.n, rng), options.r) ? 1 : 0;
            chunk_failures[c] = failures;
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(chunks)));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    EstimateResult result;
    result.n = options.n;
    result.r = options.r;
    result.samples = options.samples;
    for (auto f : chunk_failures)
        result.failures += f;
    result.p_hat = static_cast<double>(result.failures) / static_cast<double>(result.samples);
    const auto ci = wilson_interval(result.failures, result.samples);
    result.ci_low = ci.low;
    result.ci_high = ci.high;
    result.seed = options.seed;
    result.thm_lower = options.r >= 0 ? thm_lower_clamped(options.n, options.r) : 0.0;
    result.thm_upper = options.r >= 0 ? thm_upper(options.n, options.r) : 0.0;
    return result;
}

BigRational c_constant(int r)
{
    if (r < 0)
        throw std::invalid_argument("c_r needs r >= 0");
    BigRational c = 0;
    for (int i = 0; i < r; ++i)
        c += BigRational(1, factorial(static_cast<unsigned>(i)));
    return c;
}

double thm_upper(int n, int r)
{
    if (n < 1 || r < 0)
        throw std::invalid_argument("thm_upper needs n >= 1, r >= 0");
    return std::pow(40.0, r + 1) * std::pow(std::log(3.0 * n), 2 * r) / n;
}

double thm_lower(int n, int r)
{
    if (n < 1 || r < 0)
        throw std::invalid_argument("thm_lower needs n >= 1, r >= 0");
    const double L = std::log(static_cast<double>(n));
    double value = std::pow(L, r) / (std::tgamma(r + 1.0) * n);
    if (r >= 1)
        value -= to_double(c_constant(r)) * std::pow(L, r - 1) / n;
    return value;
}

double thm_lower_clamped(int n, int r)
{
    return std::max(0.0, thm_lower(n, r));
}

double recursion_upper_rhs(int n, int r, const ProbabilityFn& p_prev)
{
    if (n < 3 || r < 1)
        throw std::invalid_argument("upper recursion needs n >= 3, r >= 1");
    double sum = 1.0 / n;
    for (int k = 0; k <= n - 3; ++k)
        sum += p_prev(n - 2 - k) / (k + 2);
    return 20.0 * (1.0 + std::log(static_cast<double>(n))) * sum;
}

double recursion_lower_rhs(int n, int r, const ProbabilityFn& p_prev)
{
    if (n < 2 || r < 1)
        throw std::invalid_argument("lower recursion needs n >= 2, r >= 1");
    double sum = 0.0;
    for (int i = 1; i <= n - 1; ++i)
        sum += (i - 1) * p_prev(n - i);
    return (1.0 + sum / (n - 1)) / n;
}

BigRational recursion_lower_rhs_exact(int n, int r, const ExactProbabilityFn& p_prev)
{
    if (n < 2 || r < 1)
        throw std::invalid_argument("lower recursion needs n >= 2, r >= 1");
    BigRational sum = 0;
    for (int i = 1; i <= n - 1; ++i)
        sum += (i - 1) * p_prev(n - i);
    return (1 + sum / (n - 1)) / n;
}

double recursion_lower_rhs_double_counted(int n, int r, const ProbabilityFn& p_prev)
{
    if (n < 2 || r < 1)
        throw std::invalid_argument("lower recursion needs n >= 2, r >= 1");
    double sum = 0.0;
    for (int i = 1; i <= n; ++i)
        sum += (i - 1) * p_prev(n - i);
    return (1.0 + sum / (n - 1)) / n;
}

bool claim42_bounds_exact(int n)
{
    if (n < 2)
        throw std::invalid_argument("claim42 bounds need n >= 2");
    const auto p = exact_p(n, 0);
    return BigRational(1, n) <= p && p <= BigRational(4, n);
}

bool claim42_bounds_mc(const EstimateResult& estimate, double slack)
{
    const double n = estimate.n;
    return estimate.ci_high >= 1.0 / n - slack && estimate.ci_low <= 4.0 / n + slack;
}

RegionSpec random_region_spec(Rng& rng, int denominator)
{
    const auto d = static_cast<std::uint64_t>(denominator);
    std::uint64_t a1 = 0, a2 = 0, b1 = 0, b2 = 0;
    while (a1 >= a2) {
        a1 = bounded(rng, d + 1);
        a2 = bounded(rng, d + 1);
    }
    while (b2 >= b1) {
        b1 = bounded(rng, d + 1);
        b2 = bounded(rng, d + 1);
    }
    auto q = [&](std::uint64_t v) { return BigRational(static_cast<long long>(v), denominator); };
    return RegionSpec(q(a1), q(a2), q(b1), q(b2));
}

namespace {

Region draw_region(const RegionSpec& c, Rng& rng)
{
    for (;;) {
        const Point p{uniform01(rng), uniform01(rng)};
        if (auto region = classify_region(c, p))
            return *region;
    }
}

bool within(double observed, double expected, double sigma, double sigmas)
{
    return std::abs(observed - expected) <= sigmas * sigma;
}

} // namespace

RegionCheckResult region_probability_check(const RegionSpec& c, int nD, int nPlus,
                                           std::uint64_t trials, Rng& rng, double sigmas)
{
    if (nD < 0 || nPlus < 0 || trials == 0)
        throw std::invalid_argument("region check needs nD, nPlus >= 0 and trials >= 1");
    const auto vol = region_volumes(c);
    const double t = static_cast<double>(trials);

    RegionCheckResult out;
    out.expected = std::pow(to_double(vol.middle), nD) * std::pow(to_double(vol.upper), nPlus);
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < trials; ++s) {
        bool ok = true;
        for (int i = 0; i < nD + nPlus; ++i) {
            const Region want = i < nD ? Region::Middle : Region::Upper;
            // Draw every point so the number of draws per trial is fixed.
            ok = (draw_region(c, rng) == want) && ok;
        }
        hits += ok ? 1 : 0;
    }
    out.observed = static_cast<double>(hits) / t;
    out.sigma = std::sqrt(out.expected * (1.0 - out.expected) / t);
    bool passed = within(out.observed, out.expected, out.sigma, sigmas);

    out.area = {to_double(vol.lower), to_double(vol.middle), to_double(vol.upper)};
    std::array<std::uint64_t, 3> counts = {};
    for (std::uint64_t s = 0; s < trials; ++s)
        ++counts[static_cast<std::size_t>(draw_region(c, rng))];
    for (std::size_t i = 0; i < 3; ++i) {
        out.frequency[i] = static_cast<double>(counts[i]) / t;
        out.frequency_sigma[i] = std::sqrt(out.area[i] * (1.0 - out.area[i]) / t);
        passed = passed && within(out.frequency[i], out.area[i], out.frequency_sigma[i], sigmas);
    }

    std::uint64_t incomparable = 0;
    for (std::uint64_t s = 0; s < trials; ++s) {
        const Point p{uniform01(rng), uniform01(rng)};
        const Point q{uniform01(rng), uniform01(rng)};
        incomparable += ((p.a < q.a) != (p.b < q.b)) ? 1 : 0;
    }
    out.incomparable = static_cast<double>(incomparable) / t;
    out.incomparable_sigma = std::sqrt(0.25 / t);
    passed = passed && within(out.incomparable, 0.5, out.incomparable_sigma, sigmas);

    out.passed = passed;
    return out;
}

RegionCheckResult region_probability_check(int nD, int nPlus, std::uint64_t trials, Rng& rng, double sigmas)
{
    const RegionSpec c = random_region_spec(rng);
    return region_probability_check(c, nD, nPlus, trials, rng, sigmas);
}

} // namespace permtop
