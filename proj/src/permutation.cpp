#include "permtop/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permtop {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values))
{
    const int n = size();
    std::vector<char> seen(values_.size(), 0);
    for (int v : values_) {
        if (v < 1 || v > n)
            throw std::invalid_argument("permutation value " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n));
        auto& s = seen[static_cast<std::size_t>(v - 1)];
        if (s)
            throw std::invalid_argument("duplicate permutation value " + std::to_string(v));
        s = 1;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::reversal(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(v), Unchecked{});
}

std::vector<int> Permutation::positions() const
{
    std::vector<int> pos(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
        pos[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i) + 1;
    return pos;
}

Permutation Permutation::inverse() const
{
    return Permutation(positions(), Unchecked{});
}

std::string Permutation::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(values_[i]);
    }
    return out;
}

Permutation parse_permutation(std::string_view text)
{
    const bool has_space = std::any_of(text.begin(), text.end(),
                                       [](unsigned char c) { return std::isspace(c); });
    std::vector<int> values;
    std::string trimmed;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            trimmed += c;

    if (!has_space && !trimmed.empty() &&
        std::all_of(trimmed.begin(), trimmed.end(), [](unsigned char c) { return std::isdigit(c); })) {
        // Compact digit form. A lone token is also read this way, so "12"
        // means (1,2) and never the single value 12.
        if (trimmed.size() > 9)
            throw std::invalid_argument("compact digit form is limited to n <= 9");
        for (char c : trimmed)
            values.push_back(c - '0');
        return Permutation(std::move(values));
    }

    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: '" + token + "'");
        }
        if (used != token.size())
            throw std::invalid_argument("not an integer: '" + token + "'");
        values.push_back(v);
    }
    return Permutation(std::move(values));
}

bool comparable(const Permutation& pi, int i, int j)
{
    const int n = pi.size();
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("position out of range");
    if (i == j)
        throw std::invalid_argument("comparable() needs distinct positions");
    if (i > j)
        std::swap(i, j);
    return pi(i) < pi(j);
}

Permutation standardize(std::vector<int> values)
{
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        if (rank > 0 && values[order[rank]] == values[order[rank - 1]])
            throw std::invalid_argument("standardize: repeated value");
    }
    std::vector<int> out(values.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank)
        out[order[rank]] = static_cast<int>(rank) + 1;
    return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation pattern(const Permutation& pi, std::span<const int> positions)
{
    std::vector<int> sub;
    sub.reserve(positions.size());
    int prev = 0;
    for (int a : positions) {
        if (a < 1 || a > pi.size())
            throw std::out_of_range("pattern position " + std::to_string(a) + " out of range");
        if (a <= prev)
            throw std::invalid_argument("pattern positions must be strictly increasing");
        prev = a;
        sub.push_back(pi(a));
    }
    return standardize(std::move(sub));
}

Permutation delete_pattern(const Permutation& pi, int t)
{
    const int n = pi.size();
    if (t < 1 || t > n)
        throw std::out_of_range("delete_pattern position out of range");
    std::vector<int> sub;
    sub.reserve(static_cast<std::size_t>(n - 1));
    const int removed = pi(t);
    for (int i = 1; i <= n; ++i) {
        if (i == t)
            continue;
        const int v = pi(i);
        sub.push_back(v > removed ? v - 1 : v);
    }
    return Permutation(std::move(sub), Permutation::Unchecked{});
}

Permutation suffix_pattern(const Permutation& pi, int t)
{
    const int n = pi.size();
    if (t < 1 || t > n)
        throw std::out_of_range("suffix_pattern position out of range");
    std::vector<int> sub(pi.values().begin() + t, pi.values().end());
    return standardize(std::move(sub));
}

Permutation sample_uniform(int n, Rng& rng)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        const auto j = bounded(rng, static_cast<std::uint64_t>(i) + 1);
        std::swap(v[static_cast<std::size_t>(i)], v[j]);
    }
    return Permutation(std::move(v), Permutation::Unchecked{});
}

bool is_disconnected(const Permutation& pi)
{
    const int n = pi.size();
    if (n == 0)
        throw std::invalid_argument("is_disconnected: empty permutation");
    // Suffix of length m splits off iff its values are exactly 1..m.
    int suffix_max = 0;
    for (int m = 1; m < n; ++m) {
        suffix_max = std::max(suffix_max, pi(n - m + 1));
        if (suffix_max == m)
            return true;
    }
    return false;
}

} // namespace permtop
