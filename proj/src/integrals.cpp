#include "permtop/integrals.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace permtop {

namespace {

unsigned u(int v)
{
    return static_cast<unsigned>(v);
}

void require_nonnegative(std::initializer_list<int> values, const char* what)
{
    for (int v : values)
        if (v < 0)
            throw std::invalid_argument(std::string(what) + ": arguments must be nonnegative");
}

/// sum over a, b of C(b2,a) C(b3,b) * b! (a+b3-b)! (b1+b2-a)!: the
/// expansion of y3^b1 (y2+y3)^b2 (y1+y2)^b3 into monomials y1^e1 y2^e2 y3^e3,
/// each weighted by e1! e2! e3!. All monomials have degree b1+b2+b3.
BigInt y_expansion_weight(unsigned b1, unsigned b2, unsigned b3)
{
    BigInt total = 0;
    for (unsigned a = 0; a <= b2; ++a) {
        BigInt inner = 0;
        for (unsigned b = 0; b <= b3; ++b)
            inner += binomial(b3, b) * factorial(b) * factorial(a + b3 - b);
        total += binomial(b2, a) * factorial(b1 + b2 - a) * inner;
    }
    return total;
}

// Relative slack used to round high-precision values outward; far above
// the ~1e-50 working precision.
const HighFloat kOutward("1e-40");

} // namespace

SimplexIntegral simplex_monomial_integral(std::span<const int> exponents)
{
    if (exponents.size() < 2)
        throw std::invalid_argument("simplex integral needs at least two coordinates");
    unsigned total = 0;
    BigInt num = 1;
    for (int e : exponents) {
        require_nonnegative({e}, "simplex_monomial_integral");
        num *= factorial(u(e));
        total += u(e);
    }
    const auto k = static_cast<unsigned>(exponents.size() - 1);
    return {BigRational(num, factorial(k + total)), k + 1};
}

BigRational simplex_moment(std::span<const int> exponents)
{
    const auto integral = simplex_monomial_integral(exponents);
    // volume is sqrt(k+1)/k!; the square roots cancel.
    const auto k = static_cast<unsigned>(exponents.size() - 1);
    return integral.rational_part * factorial(k);
}

BigRational integral_I_exact(int k, int l, int guard)
{
    require_nonnegative({k, l}, "integral_I_exact");
    if (k + l > guard)
        throw std::length_error("integral_I_exact: k + l exceeds guard " + std::to_string(guard));
    // Expanding the k-th power over (a1,a2,a3) with a1+a2+a3 = k, the x-part
    // is the moment x1^a1 x2^a2 x3^(a3+l) = 2 a1! a2! (a3+l)! / (k+l+2)! and
    // the y-part is y3^(a1+l) (y2+y3)^a2 (y1+y2)^a3, which expands into
    // degree-(k+l) monomials with common denominator (k+l+2)!/2. The
    // multinomial coefficient cancels a1! a2! a3! down to k!.
    BigInt sum = 0;
    for (int a1 = 0; a1 <= k; ++a1) {
        for (int a2 = 0; a1 + a2 <= k; ++a2) {
            const int a3 = k - a1 - a2;
            const BigInt rising = factorial(u(a3 + l)) / factorial(u(a3));
            sum += rising * y_expansion_weight(u(a1 + l), u(a2), u(a3));
        }
    }
    const BigInt denom = factorial(u(k + l + 2));
    return BigRational(4 * factorial(u(k)) * sum, denom * denom);
}

std::array<double, 3> sample_simplex2(Rng& rng)
{
    double s = uniform01(rng);
    double t = uniform01(rng);
    if (s > t)
        std::swap(s, t);
    return {s, t - s, 1.0 - t};
}

McEstimate integral_I_mc(int k, int l, std::uint64_t samples, Rng& rng)
{
    require_nonnegative({k, l}, "integral_I_mc");
    if (samples == 0)
        throw std::invalid_argument("integral_I_mc needs at least one sample");
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t s = 1; s <= samples; ++s) {
        const auto x = sample_simplex2(rng);
        const auto y = sample_simplex2(rng);
        const double base = x[0] * y[2] + x[1] * (y[1] + y[2]) + x[2] * (y[0] + y[1]);
        const double v = std::pow(base, k) * std::pow(x[2] * y[2], l);
        const double delta = v - mean;
        mean += delta / static_cast<double>(s);
        m2 += delta * (v - mean);
    }
    const double n = static_cast<double>(samples);
    const double variance = samples > 1 ? m2 / (n - 1.0) : 0.0;
    return {mean, std::sqrt(variance / n)};
}

HighFloat IBound::lower_value() const
{
    return to_high(factor) * log_term * (1 - kOutward);
}

IBound bound_I(int k, int l)
{
    require_nonnegative({k, l}, "bound_I");
    IBound b;
    b.factor = BigRational(40, k + 2) /
               BigRational(binomial(u(k + l + 2), 2) * binomial(u(k + l), u(k)));
    b.log_term = 1 + boost::multiprecision::log(HighFloat(k + 1));
    return b;
}

BoundCheck check_I_bound(int k, int l, int guard)
{
    BoundCheck c;
    c.lhs = integral_I_exact(k, l, guard);
    c.rhs_lower = bound_I(k, l).lower_value();
    c.holds = to_high(c.lhs) * (1 + kOutward) <= c.rhs_lower;
    return c;
}

InequalityCheck F_exact(int N, int t)
{
    require_nonnegative({N, t}, "F_exact");
    if (N < 2 * t)
        throw std::invalid_argument("F_exact needs N >= 2t");
    const unsigned half_up = (u(N) + 1) / 2;
    BigRational sum = 0;
    for (int i = 0; i <= t; ++i)
        sum += BigRational(1, binomial(u(N), half_up + u(i)));
    InequalityCheck c;
    c.lhs = BigRational(binomial(u(N), half_up + u(t))) * sum;
    if (t == 0)
        c.rhs = 1;
    else
        c.rhs = 1 + std::min(BigRational(t), BigRational(N, t));
    c.holds = c.lhs <= c.rhs;
    return c;
}

InequalityCheck corollary33(int l, int j)
{
    require_nonnegative({l, j}, "corollary33");
    const unsigned N = u(2 * l + j);
    BigRational sum = 0;
    for (int i = 0; i <= j; ++i)
        sum += BigRational(1, binomial(N, u(l + i)));
    InequalityCheck c;
    c.lhs = BigRational(binomial(N, u(l + j))) * sum;
    c.rhs = BigRational(10 * (l + j + 1), j + 1);
    c.holds = c.lhs <= c.rhs;
    return c;
}

BigRational dirichlet_y_moment(int b1, int b2, int b3)
{
    require_nonnegative({b1, b2, b3}, "dirichlet_y_moment");
    const unsigned degree = u(b1 + b2 + b3);
    return BigRational(2 * y_expansion_weight(u(b1), u(b2), u(b3)), factorial(degree + 2));
}

InequalityCheck claim35(int b1, int b2, int b3, int guard)
{
    require_nonnegative({b1, b2, b3}, "claim35");
    if (b1 + b2 + b3 > guard)
        throw std::length_error("claim35: exponent sum exceeds guard " + std::to_string(guard));
    InequalityCheck c;
    c.lhs = dirichlet_y_moment(b1, b2, b3);
    c.rhs = BigRational(2 * factorial(u(b1)) * factorial(u(b3)),
                        BigInt(b2 + 1) * factorial(u(b1 + b3 + 1)));
    c.holds = c.lhs <= c.rhs;
    return c;
}

} // namespace permtop
