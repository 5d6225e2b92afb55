#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "numbers.hpp"

namespace sr {

/// Dense matrix of boundary-operator signs (-1, 0, +1), row-major.
struct sign_matrix {
    int rows = 0, cols = 0;
    std::vector<std::int8_t> a;

    sign_matrix() = default;
    sign_matrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}
    std::int8_t& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
    std::int8_t at(int r, int c) const { return a[std::size_t(r) * cols + c]; }
};

/// Incremental rank over GF(2).  Rows are bit-packed; reduction against the
/// pivot set is word-parallel XOR.  This is the inner loop of the 2^n sweep.
class gf2_rank_accumulator {
public:
    explicit gf2_rank_accumulator(int ncols)
        : words_((ncols + 63) / 64), pivot_of_col_(ncols, -1) {}

    /// Consumes `row` (modified in place); returns true if the rank grew.
    bool add_row(std::vector<std::uint64_t>& row) {
        while (true) {
            int lead = leading_bit(row);
            if (lead < 0) return false;
            int p = pivot_of_col_[lead];
            if (p < 0) {
                pivot_of_col_[lead] = int(pivots_.size());
                pivots_.push_back(row);
                return true;
            }
            const auto& pr = pivots_[p];
            for (int w = lead / 64; w < words_; ++w) row[w] ^= pr[w];
        }
    }

    int rank() const { return int(pivots_.size()); }
    int words() const { return words_; }

private:
    int leading_bit(const std::vector<std::uint64_t>& row) const {
        for (int w = 0; w < words_; ++w)
            if (row[w]) return w * 64 + std::countr_zero(row[w]);
        return -1;
    }

    int words_;
    std::vector<int> pivot_of_col_;
    std::vector<std::vector<std::uint64_t>> pivots_;
};

/// Incremental rank over GF(p), p an odd prime.  Pivot rows are normalized
/// to leading coefficient 1.
class gfp_rank_accumulator {
public:
    gfp_rank_accumulator(int ncols, std::uint32_t p) : p_(p), pivot_of_col_(ncols, -1) {}

    bool add_row(std::vector<std::uint32_t>& row) {
        while (true) {
            int lead = -1;
            for (int c = 0; c < int(row.size()); ++c)
                if (row[c] != 0) { lead = c; break; }
            if (lead < 0) return false;
            int p = pivot_of_col_[lead];
            if (p < 0) {
                std::uint64_t inv = inverse(row[lead]);
                for (auto& x : row) x = std::uint32_t((inv * x) % p_);
                pivot_of_col_[lead] = int(pivots_.size());
                pivots_.push_back(row);
                return true;
            }
            const auto& pr = pivots_[p];
            std::uint64_t c0 = row[lead];
            for (int c = lead; c < int(row.size()); ++c)
                row[c] = std::uint32_t((row[c] + (p_ - 1) * c0 % p_ * pr[c]) % p_);
        }
    }

    int rank() const { return int(pivots_.size()); }

private:
    std::uint32_t inverse(std::uint32_t x) const {
        // Fermat: x^(p-2) mod p.
        std::uint64_t base = x % p_, acc = 1, e = p_ - 2;
        while (e) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return std::uint32_t(acc);
    }

    std::uint32_t p_;
    std::vector<int> pivot_of_col_;
    std::vector<std::vector<std::uint32_t>> pivots_;
};

/// Incremental rank over Q via fraction-free integer elimination: each
/// reduction step is row' = a*row - row[c]*pivot with a the pivot's leading
/// coefficient, followed by division by the row content to bound growth.
class integer_rank_accumulator {
public:
    explicit integer_rank_accumulator(int ncols) : pivot_of_col_(ncols, -1) {}

    bool add_row(std::vector<integer>& row) {
        while (true) {
            int lead = -1;
            for (int c = 0; c < int(row.size()); ++c)
                if (row[c] != 0) { lead = c; break; }
            if (lead < 0) return false;
            int p = pivot_of_col_[lead];
            if (p < 0) {
                normalize(row);
                pivot_of_col_[lead] = int(pivots_.size());
                pivots_.push_back(row);
                return true;
            }
            const auto& pr = pivots_[p];
            integer a = pr[lead], b = row[lead];
            for (int c = lead; c < int(row.size()); ++c) row[c] = a * row[c] - b * pr[c];
            normalize(row);
        }
    }

    int rank() const { return int(pivots_.size()); }

private:
    static void normalize(std::vector<integer>& row) {
        integer g = 0;
        for (const integer& x : row) {
            g = boost::multiprecision::gcd(g, x);
            if (g == 1) return;
        }
        if (g > 1)
            for (integer& x : row) x /= g;
    }

    std::vector<int> pivot_of_col_;
    std::vector<std::vector<integer>> pivots_;
};

/// Rank of a sign matrix over the given field.
inline int rank_over(const sign_matrix& m, const field_spec& field) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if (field.is_gf2()) {
        gf2_rank_accumulator acc(m.cols);
        std::vector<std::uint64_t> row;
        for (int r = 0; r < m.rows; ++r) {
            row.assign(acc.words(), 0);
            for (int c = 0; c < m.cols; ++c)
                if (m.at(r, c) & 1) row[c / 64] |= std::uint64_t(1) << (c % 64);
            acc.add_row(row);
        }
        return acc.rank();
    }
    if (!field.is_rational()) {
        gfp_rank_accumulator acc(m.cols, field.characteristic);
        std::vector<std::uint32_t> row;
        for (int r = 0; r < m.rows; ++r) {
            row.assign(m.cols, 0);
            for (int c = 0; c < m.cols; ++c) {
                int v = m.at(r, c);
                row[c] = v >= 0 ? v : field.characteristic - 1;
            }
            acc.add_row(row);
        }
        return acc.rank();
    }
    integer_rank_accumulator acc(m.cols);
    std::vector<integer> row;
    for (int r = 0; r < m.rows; ++r) {
        row.assign(m.cols, 0);
        for (int c = 0; c < m.cols; ++c) row[c] = m.at(r, c);
        acc.add_row(row);
    }
    return acc.rank();
}

/// Exact solve of a square rational system by Gaussian elimination.
/// Throws singular_system if the matrix is singular.
inline std::vector<rational> solve_rational_system(std::vector<std::vector<rational>> a,
                                                   std::vector<rational> b) {
    int n = int(a.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw singular_system("singular linear system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        rational inv = a[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            rational factor = a[r][col] / inv;
            for (int c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    std::vector<rational> x(n);
    for (int col = n - 1; col >= 0; --col) {
        rational s = b[col];
        for (int c = col + 1; c < n; ++c) s -= a[col][c] * x[c];
        x[col] = s / a[col][col];
    }
    return x;
}

} // namespace sr
