#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permtop/rng.hpp"

namespace permtop {

/// A permutation of [n] in one-line notation. Every public index is 1-based:
/// `pi(i)` is the value at position i. n = 0 is the empty permutation.
class Permutation {
public:
    Permutation() = default;

    /// Throws std::invalid_argument unless `values` is a bijection on 1..n.
    explicit Permutation(std::vector<int> values);

    static Permutation identity(int n);
    static Permutation reversal(int n);

    int size() const noexcept { return static_cast<int>(values_.size()); }
    bool empty() const noexcept { return values_.empty(); }

    int operator()(int position) const { return values_[static_cast<std::size_t>(position - 1)]; }
    std::span<const int> values() const noexcept { return values_; }

    /// positions()[v-1] is the position carrying value v.
    std::vector<int> positions() const;
    Permutation inverse() const;

    /// "3 2 5 4 1 7 6"
    std::string to_string() const;

    bool operator==(const Permutation&) const = default;

private:
    struct Unchecked {};
    Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}

    friend Permutation standardize(std::vector<int> values);
    friend Permutation sample_uniform(int n, Rng& rng);
    friend Permutation delete_pattern(const Permutation& pi, int t);

    std::vector<int> values_;
};

/// Accepts whitespace-separated integers, or a bare digit string when n <= 9.
Permutation parse_permutation(std::string_view text);

/// True iff min(i,j) precedes max(i,j) in the poset: positions and values
/// increase together.
bool comparable(const Permutation& pi, int i, int j);

/// Relabels a sequence of distinct integers to 1..k keeping relative order.
Permutation standardize(std::vector<int> values);

/// Pattern of pi on a strictly increasing set of positions.
Permutation pattern(const Permutation& pi, std::span<const int> positions);

/// Pattern on every position except t.
Permutation delete_pattern(const Permutation& pi, int t);

/// Pattern on positions t+1..n; empty when t = n.
Permutation suffix_pattern(const Permutation& pi, int t);

/// Uniform permutation by Fisher-Yates.
Permutation sample_uniform(int n, Rng& rng);

/// True iff some proper suffix of positions carries exactly the smallest
/// values, i.e. the comparability graph has more than one component.
/// Throws std::invalid_argument on the empty permutation.
bool is_disconnected(const Permutation& pi);

} // namespace permtop
