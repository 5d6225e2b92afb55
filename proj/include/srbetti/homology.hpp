#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "complex.hpp"
#include "field.hpp"
#include "linalg.hpp"

namespace sr {

/// Reduced Betti numbers, stored shifted by one: count[c] = betti_{c-1}.
/// betti_{-1} = 1 only for the empty complex {{}}.
struct betti_vector {
    std::vector<long long> count;

    long long at_dim(int p) const {
        int c = p + 1;
        return (c >= 0 && c < int(count.size())) ? count[c] : 0;
    }
    bool all_zero() const {
        for (long long b : count)
            if (b) return false;
        return true;
    }
    long long alternating_sum() const {
        long long s = 0;
        for (int c = 0; c < int(count.size()); ++c) s += (c % 2 == 0) ? -count[c] : count[c];
        return s;  // sum over p >= 0 of (-1)^p betti_p (the p = -1 slot has sign -(-1)^{-1}).
    }
    friend bool operator==(const betti_vector&, const betti_vector&) = default;
};

/// Boundary operator from k-faces to (k-1)-faces with vertices in increasing
/// order and sign (-1)^position; k = 0 is the augmentation row over the empty
/// face.  Rows and columns are sorted by face mask.
inline sign_matrix boundary_matrix(const simplicial_complex& cx, int k) {
    const auto& cols = cx.faces_with_card(k + 1);
    const auto& rows = cx.faces_with_card(k);
    sign_matrix m(int(rows.size()), int(cols.size()));
    for (int c = 0; c < int(cols.size()); ++c) {
        std::uint64_t f = cols[c];
        int pos = 0;
        for (std::uint64_t b = f; b; b &= b - 1, ++pos) {
            std::uint64_t sub = f & ~(b & (~b + 1));
            auto it = std::lower_bound(rows.begin(), rows.end(), sub);
            m.at(int(it - rows.begin()), c) = (pos % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

/// Computes reduced Betti vectors of induced subcomplexes of one fixed
/// complex over one fixed field.  Holds scratch buffers, so instances are
/// cheap to reuse but must not be shared across threads; the underlying
/// complex is immutable and freely shareable.
class induced_homology {
public:
    induced_homology(const simplicial_complex& cx, const field_spec& field)
        : cx_(&cx), field_(field) {}

    const field_spec& field() const { return field_; }
    const simplicial_complex& complex() const { return *cx_; }

    /// Reduced Betti vector of cx[W]; W = 0 yields the empty complex.
    betti_vector betti_of(std::uint64_t w) {
        int top_card = cx_->dim() + 1;
        // Filter the global face lists down to faces inside W.
        if (int(filtered_.size()) < top_card + 1) filtered_.resize(top_card + 1);
        int w_top = std::min(top_card, std::popcount(w));
        for (int c = 0; c <= w_top; ++c) {
            filtered_[c].clear();
            for (std::uint64_t f : cx_->faces_with_card(c))
                if ((f & ~w) == 0) filtered_[c].push_back(f);
        }

        // r[c] = rank of the boundary map from card-c faces to card-(c-1).
        std::vector<int> r(w_top + 2, 0);
        r[1] = w != 0 ? 1 : 0;  // augmentation
        for (int c = 2; c <= w_top; ++c) r[c] = boundary_rank(c);

        betti_vector out;
        out.count.resize(w_top + 1, 0);
        for (int c = 0; c <= w_top; ++c) {
            long long nc = (c == 0) ? 1 : (long long)filtered_[c].size();
            out.count[c] = nc - r[c] - (c + 1 < int(r.size()) ? r[c + 1] : 0);
        }
        return out;
    }

private:
    int boundary_rank(int c) {
        const auto& cols = filtered_[c];      // card-c faces: rows of the accumulators
        const auto& basis = filtered_[c - 1]; // card-(c-1) faces: coordinates
        if (cols.empty() || basis.empty()) return 0;
        if (field_.is_gf2()) {
            gf2_rank_accumulator acc(int(basis.size()));
            std::vector<std::uint64_t> row;
            for (std::uint64_t f : cols) {
                row.assign(acc.words(), 0);
                for (std::uint64_t b = f; b; b &= b - 1) {
                    int idx = index_of(basis, f & ~(b & (~b + 1)));
                    row[idx / 64] ^= std::uint64_t(1) << (idx % 64);
                }
                acc.add_row(row);
            }
            return acc.rank();
        }
        if (!field_.is_rational()) {
            std::uint32_t p = field_.characteristic;
            gfp_rank_accumulator acc(int(basis.size()), p);
            std::vector<std::uint32_t> row;
            for (std::uint64_t f : cols) {
                row.assign(basis.size(), 0);
                int pos = 0;
                for (std::uint64_t b = f; b; b &= b - 1, ++pos)
                    row[index_of(basis, f & ~(b & (~b + 1)))] = (pos % 2 == 0) ? 1 : p - 1;
                acc.add_row(row);
            }
            return acc.rank();
        }
        integer_rank_accumulator acc(int(basis.size()));
        std::vector<integer> row;
        for (std::uint64_t f : cols) {
            row.assign(basis.size(), 0);
            int pos = 0;
            for (std::uint64_t b = f; b; b &= b - 1, ++pos)
                row[index_of(basis, f & ~(b & (~b + 1)))] = (pos % 2 == 0) ? 1 : -1;
            acc.add_row(row);
        }
        return acc.rank();
    }

    static int index_of(const std::vector<std::uint64_t>& sorted, std::uint64_t v) {
        return int(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
    }

    const simplicial_complex* cx_;
    field_spec field_;
    std::vector<std::vector<std::uint64_t>> filtered_;
};

/// Reduced Betti numbers of the whole complex.
inline betti_vector reduced_betti(const simplicial_complex& cx, const field_spec& field) {
    induced_homology h(cx, field);
    return h.betti_of(cx.vertices_mask().bits);
}

/// Memoizing wrapper used by operations that revisit subset homology
/// (averages, skip sums, Cramer systems).  Per-invocation; not thread-safe.
class induced_betti_cache {
public:
    induced_betti_cache(const simplicial_complex& cx, const field_spec& field)
        : engine_(cx, field) {}

    const betti_vector& betti_of(std::uint64_t w) {
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        return memo_.emplace(w, engine_.betti_of(w)).first->second;
    }

    induced_homology& engine() { return engine_; }

private:
    induced_homology engine_;
    std::unordered_map<std::uint64_t, betti_vector> memo_;
};

} // namespace sr
