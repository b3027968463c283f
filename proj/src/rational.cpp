#include "permtop/rational.hpp"

#include <vector>

namespace permtop {

namespace {

constexpr unsigned kTableSize = 601;

const std::vector<BigInt>& factorial_table()
{
    static const std::vector<BigInt> table = [] {
        std::vector<BigInt> t(kTableSize);
        t[0] = 1;
        for (unsigned i = 1; i < kTableSize; ++i)
            t[i] = t[i - 1] * i;
        return t;
    }();
    return table;
}

} // namespace

BigInt factorial(unsigned n)
{
    if (n < kTableSize)
        return factorial_table()[n];
    BigInt f = factorial_table().back();
    for (unsigned i = kTableSize; i <= n; ++i)
        f *= i;
    return f;
}

BigInt binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    if (n < kTableSize) {
        const auto& t = factorial_table();
        return t[n] / (t[k] * t[n - k]);
    }
    return factorial(n) / (factorial(k) * factorial(n - k));
}

std::string to_string(const BigRational& q)
{
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const BigRational& q)
{
    return q.convert_to<double>();
}

HighFloat to_high(const BigRational& q)
{
    return HighFloat(boost::multiprecision::numerator(q)) /
           HighFloat(boost::multiprecision::denominator(q));
}

} // namespace permtop
