#include <doctest.h>

#include <cmath>
#include <map>

#include "permtop/integrals.hpp"

using namespace permtop;

namespace {

BigRational q(long long num, long long den)
{
    return BigRational(num, den);
}

// Independent route for I(k,l): multiply out the integrand as a polynomial
// in (x1,x2,x3,y1,y2,y3) and integrate monomial by monomial.
using Exps = std::array<int, 6>;
using Poly = std::map<Exps, BigInt>;

Poly multiply(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exps e;
            for (int i = 0; i < 6; ++i)
                e[static_cast<std::size_t>(i)] = ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
            out[e] += ca * cb;
        }
    return out;
}

BigRational normalized_moment(int e1, int e2, int e3)
{
    // 2! e1! e2! e3! / (2 + e1 + e2 + e3)!
    return BigRational(2 * factorial(e1) * factorial(e2) * factorial(e3),
                       factorial(static_cast<unsigned>(2 + e1 + e2 + e3)));
}

BigRational I_by_polynomial(int k, int l)
{
    const Poly base{{{1, 0, 0, 0, 0, 1}, 1}, {{0, 1, 0, 0, 1, 0}, 1}, {{0, 1, 0, 0, 0, 1}, 1},
                    {{0, 0, 1, 1, 0, 0}, 1}, {{0, 0, 1, 0, 1, 0}, 1}};
    const Poly corner{{{0, 0, 1, 0, 0, 1}, 1}};
    Poly p{{{0, 0, 0, 0, 0, 0}, 1}};
    for (int i = 0; i < k; ++i)
        p = multiply(p, base);
    for (int i = 0; i < l; ++i)
        p = multiply(p, corner);
    BigRational total = 0;
    for (const auto& [e, c] : p)
        total += BigRational(c) * normalized_moment(e[0], e[1], e[2]) * normalized_moment(e[3], e[4], e[5]);
    return total;
}

// With y = (1 - z2, z2 - z1, z1) the y-moment becomes
// 2 * int_0^1 z1^b1 (1-z1)^b3 (1 - z1^(b2+1)) / (b2+1) dz1, a difference of
// two Beta integrals.
BigRational y_moment_by_beta(int b1, int b2, int b3)
{
    auto beta = [](int a, int b) {
        return BigRational(factorial(a) * factorial(b), factorial(static_cast<unsigned>(a + b + 1)));
    };
    return BigRational(2, b2 + 1) * (beta(b1, b3) - beta(b1 + b2 + 1, b3));
}

BigRational F_direct(int N, int t)
{
    const int h = (N + 1) / 2;
    BigRational s = 0;
    for (int i = 0; i <= t; ++i)
        s += BigRational(1, binomial(N, h + i));
    return BigRational(binomial(N, h + t)) * s;
}

} // namespace

TEST_CASE("simplex monomial integrals")
{
    const std::vector<int> zero{0, 0, 0}, x1{1, 0, 0}, all1{1, 1, 1};
    const auto vol = simplex_monomial_integral(zero);
    CHECK(vol.rational_part == q(1, 2));
    CHECK(vol.sqrt_of == 3);
    CHECK(simplex_monomial_integral(x1).rational_part == q(1, 6));
    CHECK(simplex_moment(x1) == q(1, 3));
    CHECK(simplex_monomial_integral(all1).rational_part == q(1, 120));

    const std::vector<int> interval{2, 3};
    CHECK(simplex_monomial_integral(interval).rational_part == q(2 * 6, 720));
    CHECK(simplex_monomial_integral(interval).sqrt_of == 2);

    const std::vector<int> neg{1, -1, 0}, one{3};
    CHECK_THROWS_AS(simplex_monomial_integral(neg), std::invalid_argument);
    CHECK_THROWS_AS(simplex_monomial_integral(one), std::invalid_argument);
}

TEST_CASE("simplex moments agree with sampling")
{
    Rng rng = make_stream(51, 0);
    const int samples = 400000;
    double sum1 = 0, sum2 = 0;
    for (int s = 0; s < samples; ++s) {
        const auto x = sample_simplex2(rng);
        const double v = x[0] * x[1] * x[1];
        sum1 += v;
        sum2 += v * v;
    }
    const double mean = sum1 / samples;
    const double se = std::sqrt((sum2 / samples - mean * mean) / samples);
    const std::vector<int> e{1, 2, 0};
    CHECK(std::abs(mean - to_double(simplex_moment(e))) <= 4 * se);
}

TEST_CASE("I(k,l) spot values")
{
    CHECK(integral_I_exact(0, 0) == 1);
    CHECK(integral_I_exact(0, 1) == q(1, 9));
    CHECK(integral_I_exact(1, 0) == q(5, 9));
    CHECK(integral_I_exact(1, 1) == q(1, 16));
    CHECK(integral_I_exact(2, 1) == q(11, 300));
    CHECK(integral_I_exact(3, 5) == q(41, 235200));
    CHECK_THROWS_AS(integral_I_exact(40, 21), std::length_error);
    CHECK_THROWS_AS(integral_I_exact(-1, 2), std::invalid_argument);
    CHECK_NOTHROW(integral_I_exact(30, 30));
}

TEST_CASE("I(k,l) matches the polynomial expansion route")
{
    for (int k = 0; k <= 6; ++k)
        for (int l = 0; l <= 4; ++l)
            CHECK(integral_I_exact(k, l) == I_by_polynomial(k, l));
}

TEST_CASE("I(0,l) closed form")
{
    for (int l = 0; l <= 30; ++l) {
        const BigRational m(2, (l + 1) * (l + 2));
        CHECK(integral_I_exact(0, l) == m * m);
    }
}

TEST_CASE("I(k,l) is positive and strictly decreasing in l")
{
    for (int k = 0; k <= 20; ++k) {
        BigRational prev = integral_I_exact(k, 0);
        CHECK(prev > 0);
        for (int l = 1; l <= 20; ++l) {
            const auto cur = integral_I_exact(k, l);
            CHECK(cur > 0);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("Monte Carlo estimate of I")
{
    Rng rng = make_stream(52, 0);
    const auto flat = integral_I_mc(0, 0, 1000, rng);
    CHECK(flat.estimate == 1.0);
    CHECK(flat.std_error == 0.0);

    for (auto [k, l] : {std::pair{1, 0}, std::pair{3, 5}, std::pair{2, 2}}) {
        const auto est = integral_I_mc(k, l, 1000000, rng);
        CHECK(std::abs(est.estimate - to_double(integral_I_exact(k, l))) <= 3 * est.std_error);
    }
    CHECK_THROWS_AS(integral_I_mc(1, 1, 0, rng), std::invalid_argument);
}

TEST_CASE("upper bound on I")
{
    const auto b0 = bound_I(0, 0);
    CHECK(b0.factor == 20);
    CHECK(static_cast<double>(b0.lower_value()) == doctest::Approx(20.0));
    const auto b1 = bound_I(1, 0);
    CHECK(b1.factor == q(40, 9));
    CHECK(static_cast<double>(b1.lower_value()) == doctest::Approx(40.0 / 9 * (1 + std::log(2.0))));

    for (int k = 0; k <= 20; ++k)
        for (int l = 0; l <= 20; ++l)
            CHECK(check_I_bound(k, l).holds);
}

TEST_CASE("F(N,t)")
{
    CHECK(F_exact(10, 0).lhs == 1);
    CHECK(F_exact(7, 0).lhs == 1);
    const auto f = F_exact(4, 1);
    CHECK(f.lhs == q(5, 3));
    CHECK(f.rhs == 2);
    CHECK(f.holds);
    CHECK_THROWS_AS(F_exact(3, 2), std::invalid_argument);

    for (int N = 0; N <= 200; ++N)
        for (int t = 0; 2 * t <= N; ++t) {
            const auto c = F_exact(N, t);
            CHECK(c.holds);
            if (N <= 40)
                CHECK(c.lhs == F_direct(N, t));
        }
}

TEST_CASE("central binomial sum bound")
{
    const auto c00 = corollary33(0, 0);
    CHECK(c00.lhs == 1);
    CHECK(c00.rhs == 10);
    CHECK(c00.holds);
    const auto c11 = corollary33(1, 1);
    CHECK(c11.lhs == 2);
    CHECK(c11.rhs == 15);
    for (int l = 0; l <= 60; ++l)
        for (int j = 0; j <= 60; ++j)
            CHECK(corollary33(l, j).holds);
}

TEST_CASE("y-moment bound")
{
    const auto c0 = claim35(0, 0, 0);
    CHECK(c0.lhs == 1);
    CHECK(c0.rhs == 2);
    const auto c1 = claim35(1, 0, 0);
    CHECK(c1.lhs == q(1, 3));
    CHECK(c1.rhs == 1);
    for (int b1 = 0; b1 <= 15; ++b1)
        for (int b2 = 0; b2 <= 15; ++b2)
            for (int b3 = 0; b3 <= 15; ++b3) {
                const auto c = claim35(b1, b2, b3);
                CHECK(c.holds);
                CHECK(c.lhs == y_moment_by_beta(b1, b2, b3));
            }
    CHECK_THROWS_AS(claim35(30, 30, 30), std::length_error);
}

TEST_CASE("y-moment agrees with sampling")
{
    Rng rng = make_stream(53, 0);
    for (auto b : {std::array{1, 2, 3}, std::array{0, 4, 1}, std::array{3, 0, 2}}) {
        const int samples = 1000000;
        double mean = 0, m2 = 0;
        for (int s = 1; s <= samples; ++s) {
            const auto y = sample_simplex2(rng);
            const double v = std::pow(y[2], b[0]) * std::pow(y[1] + y[2], b[1]) * std::pow(y[0] + y[1], b[2]);
            const double d = v - mean;
            mean += d / s;
            m2 += d * (v - mean);
        }
        const double se = std::sqrt(m2 / (samples - 1) / samples);
        CHECK(std::abs(mean - to_double(dirichlet_y_moment(b[0], b[1], b[2]))) <= 4 * se);
    }
}
