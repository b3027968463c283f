#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "permtop/rational.hpp"
#include "permtop/rng.hpp"

namespace permtop {

constexpr int kIntegralGuard = 60;

/// Integral of prod x_i^e_i over the k-simplex {x in R^(k+1): x >= 0,
/// sum x = 1}, equal to rational_part * sqrt(sqrt_of).
struct SimplexIntegral {
    BigRational rational_part;
    unsigned sqrt_of = 1;
};

/// Exponent count k+1 >= 2. Throws std::invalid_argument on a negative
/// exponent or fewer than two exponents.
SimplexIntegral simplex_monomial_integral(std::span<const int> exponents);

/// Same integral divided by the simplex volume: the mean of the monomial
/// under the uniform distribution. Always rational.
BigRational simplex_moment(std::span<const int> exponents);

/// Mean over independent uniform x, y in the 2-simplex of
///   (x1*y3 + x2*(y2+y3) + x3*(y1+y2))^k * (x3*y3)^l.
/// Exact, by multinomial expansion into simplex moments. Throws
/// std::invalid_argument on negative arguments and std::length_error when
/// k + l exceeds `guard`.
BigRational integral_I_exact(int k, int l, int guard = kIntegralGuard);

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Uniform point of the 2-simplex from the spacings of two sorted uniforms.
std::array<double, 3> sample_simplex2(Rng& rng);

/// Plain Monte Carlo estimate of integral_I_exact(k, l).
McEstimate integral_I_mc(int k, int l, std::uint64_t samples, Rng& rng);

/// 40/(k+2) * C(k+l+2,2)^-1 * C(k+l,k)^-1 * (1 + ln(k+1)): the rational
/// factor is exact, the log term carries 50 digits.
struct IBound {
    BigRational factor;
    HighFloat log_term;

    /// factor * log_term, nudged down past any rounding error.
    HighFloat lower_value() const;
};

IBound bound_I(int k, int l);

/// Result of an exactly decided inequality lhs <= rhs.
struct InequalityCheck {
    BigRational lhs;
    BigRational rhs;
    bool holds = false;
};

/// I(k,l) <= bound_I(k,l), decided with the integral rounded up and the
/// bound rounded down.
struct BoundCheck {
    BigRational lhs;
    HighFloat rhs_lower;
    bool holds = false;
};

BoundCheck check_I_bound(int k, int l, int guard = kIntegralGuard);

/// F(N,t) = C(N, ceil(N/2)+t) * sum_{i=0..t} C(N, ceil(N/2)+i)^-1 against
/// 1 + min{t, N/t} (the bound is 1 for t = 0). Requires N >= 2t.
InequalityCheck F_exact(int N, int t);

/// C(2l+j, l+j) * sum_{i=0..j} C(2l+j, l+i)^-1  <=  10(l+j+1)/(j+1)
InequalityCheck corollary33(int l, int j);

/// Mean over uniform y in the 2-simplex of y3^b1 (y2+y3)^b2 (y1+y2)^b3,
/// by binomial expansion into simplex moments.
BigRational dirichlet_y_moment(int b1, int b2, int b3);

/// dirichlet_y_moment(b) <= 2 b1! b3! / ((b2+1)(b1+b3+1)!)
InequalityCheck claim35(int b1, int b2, int b3, int guard = kIntegralGuard);

} // namespace permtop
