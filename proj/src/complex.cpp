#include "permtop/complex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace permtop {

namespace {

FaceMask bit(int label)
{
    return FaceMask{1} << (label - 1);
}

void check_guard(int n, int guard)
{
    if (n > guard || n > kMaxVertexLabel)
        throw std::length_error("complex enumeration guard exceeded (n = " + std::to_string(n) + ")");
}

/// All nonempty chains of a DAG given as successor masks, vertex labels 1..n.
std::vector<FaceMask> enumerate_chains(const std::vector<FaceMask>& above)
{
    std::vector<FaceMask> faces;
    const int n = static_cast<int>(above.size());
    struct Frame {
        FaceMask face;
        FaceMask candidates;
    };
    std::vector<Frame> stack;
    for (int v = 1; v <= n; ++v)
        stack.push_back({bit(v), above[static_cast<std::size_t>(v - 1)]});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        faces.push_back(f.face);
        for (FaceMask c = f.candidates; c; c &= c - 1) {
            const int w = std::countr_zero(c) + 1;
            stack.push_back({f.face | bit(w), f.candidates & above[static_cast<std::size_t>(w - 1)]});
        }
    }
    return faces;
}

} // namespace

SimplicialComplex SimplicialComplex::from_faces(std::vector<FaceMask> faces)
{
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    SimplicialComplex K;
    K.faces_ = std::move(faces);
    for (FaceMask f : K.faces_) {
        if (f == 0)
            throw std::invalid_argument("the empty face is implicit");
        K.vertex_mask_ |= f;
        for (FaceMask rest = f; rest; rest &= rest - 1) {
            const FaceMask sub = f & ~(rest & -rest);
            if (sub && !K.contains(sub))
                throw std::invalid_argument("face set is not downward closed");
        }
    }
    return K;
}

SimplicialComplex SimplicialComplex::generated_by(std::span<const FaceMask> faces)
{
    std::vector<FaceMask> all;
    for (FaceMask f : faces) {
        // every nonempty submask
        for (FaceMask s = f; s; s = (s - 1) & f)
            all.push_back(s);
    }
    return from_faces(std::move(all));
}

std::vector<int> SimplicialComplex::vertices() const
{
    std::vector<int> out;
    for (FaceMask m = vertex_mask_; m; m &= m - 1)
        out.push_back(std::countr_zero(m) + 1);
    return out;
}

bool SimplicialComplex::contains(FaceMask face) const
{
    return std::binary_search(faces_.begin(), faces_.end(), face);
}

int SimplicialComplex::dimension() const
{
    int d = -1;
    for (FaceMask f : faces_)
        d = std::max(d, std::popcount(f) - 1);
    return d;
}

std::vector<std::int64_t> SimplicialComplex::face_counts() const
{
    std::vector<std::int64_t> counts(static_cast<std::size_t>(dimension() + 1), 0);
    for (FaceMask f : faces_)
        ++counts[static_cast<std::size_t>(std::popcount(f) - 1)];
    return counts;
}

std::int64_t SimplicialComplex::euler_characteristic() const
{
    std::int64_t chi = 0;
    const auto counts = face_counts();
    for (std::size_t d = 0; d < counts.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * counts[d];
    return chi;
}

bool BettiVector::all_zero() const
{
    return std::all_of(reduced.begin(), reduced.end(), [](std::int64_t b) { return b == 0; });
}

std::int64_t BettiVector::operator[](int dim) const
{
    if (dim < 0 || dim >= static_cast<int>(reduced.size()))
        return 0;
    return reduced[static_cast<std::size_t>(dim)];
}

SimplicialComplex order_complex(const Permutation& pi, int guard)
{
    const int n = pi.size();
    check_guard(n, guard);
    std::vector<FaceMask> above(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (pi(i) < pi(j))
                above[static_cast<std::size_t>(i - 1)] |= bit(j);
    return SimplicialComplex::from_faces(enumerate_chains(above));
}

SimplicialComplex order_complex(const PointConfig& q, int guard)
{
    const int n = q.size();
    check_guard(n, guard);
    std::vector<FaceMask> above(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && q[i].a < q[j].a && q[i].b < q[j].b)
                above[static_cast<std::size_t>(i - 1)] |= bit(j);
    return SimplicialComplex::from_faces(enumerate_chains(above));
}

SimplicialComplex induced(const SimplicialComplex& K, std::span<const int> vertices)
{
    FaceMask s = 0;
    for (int v : vertices) {
        if (v < 1 || v > kMaxVertexLabel || !(K.vertex_mask() & bit(v)))
            throw std::invalid_argument("induced: vertex " + std::to_string(v) + " not in complex");
        s |= bit(v);
    }
    std::vector<FaceMask> faces;
    for (FaceMask f : K.faces())
        if ((f & ~s) == 0)
            faces.push_back(f);
    return SimplicialComplex::from_faces(std::move(faces));
}

SimplicialComplex relabel(const SimplicialComplex& K, std::span<const int> relabel)
{
    std::vector<FaceMask> faces;
    faces.reserve(K.faces().size());
    for (FaceMask f : K.faces()) {
        FaceMask g = 0;
        for (FaceMask m = f; m; m &= m - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(m));
            if (v >= relabel.size())
                throw std::invalid_argument("relabel: no image for vertex");
            g |= bit(relabel[v]);
        }
        faces.push_back(g);
    }
    return SimplicialComplex::from_faces(std::move(faces));
}

std::size_t gf2_rank(std::vector<std::vector<std::uint64_t>>& rows)
{
    // Row reduction keyed by the lowest set bit of each basis row.
    std::unordered_map<std::size_t, std::size_t> pivot_row;
    std::size_t rank = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto& row = rows[r];
        for (;;) {
            std::size_t lead = row.size() * 64;
            for (std::size_t w = 0; w < row.size(); ++w) {
                if (row[w]) {
                    lead = w * 64 + static_cast<std::size_t>(std::countr_zero(row[w]));
                    break;
                }
            }
            if (lead == row.size() * 64)
                break;
            auto it = pivot_row.find(lead);
            if (it == pivot_row.end()) {
                pivot_row.emplace(lead, r);
                ++rank;
                break;
            }
            const auto& basis = rows[it->second];
            for (std::size_t w = lead / 64; w < row.size(); ++w)
                row[w] ^= basis[w];
        }
    }
    return rank;
}

BettiVector betti_gf2(const SimplicialComplex& K)
{
    BettiVector out;
    if (K.empty())
        return out;
    out.is_empty = false;

    const int dim = K.dimension();
    std::vector<std::vector<FaceMask>> by_dim(static_cast<std::size_t>(dim + 1));
    for (FaceMask f : K.faces())
        by_dim[static_cast<std::size_t>(std::popcount(f) - 1)].push_back(f);

    // rank_of[d] = rank of the boundary map from d-faces; the augmentation
    // from vertices to the empty face has rank 1.
    std::vector<std::size_t> rank_of(static_cast<std::size_t>(dim + 2), 0);
    rank_of[0] = 1;
    for (int d = 1; d <= dim; ++d) {
        const auto& lower = by_dim[static_cast<std::size_t>(d - 1)];
        const auto& upper = by_dim[static_cast<std::size_t>(d)];
        std::unordered_map<FaceMask, std::size_t> index;
        index.reserve(lower.size());
        for (std::size_t i = 0; i < lower.size(); ++i)
            index.emplace(lower[i], i);
        const std::size_t words = (lower.size() + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows(upper.size(), std::vector<std::uint64_t>(words, 0));
        for (std::size_t c = 0; c < upper.size(); ++c) {
            const FaceMask f = upper[c];
            for (FaceMask m = f; m; m &= m - 1) {
                const std::size_t i = index.at(f & ~(m & -m));
                rows[c][i / 64] |= std::uint64_t{1} << (i % 64);
            }
        }
        rank_of[static_cast<std::size_t>(d)] = gf2_rank(rows);
    }

    out.reduced.resize(static_cast<std::size_t>(dim + 1));
    for (int d = 0; d <= dim; ++d) {
        const auto count = static_cast<std::int64_t>(by_dim[static_cast<std::size_t>(d)].size());
        out.reduced[static_cast<std::size_t>(d)] = count -
                                                   static_cast<std::int64_t>(rank_of[static_cast<std::size_t>(d)]) -
                                                   static_cast<std::int64_t>(rank_of[static_cast<std::size_t>(d + 1)]);
    }
    return out;
}

bool is_r_connected_oracle(const SimplicialComplex& K, int r)
{
    if (r < -1)
        throw std::invalid_argument("connectivity level must be >= -1");
    if (K.empty())
        return false;
    const auto betti = betti_gf2(K);
    for (int i = 0; i <= r; ++i)
        if (betti[i] != 0)
            return false;
    return true;
}

} // namespace permtop
