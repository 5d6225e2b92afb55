#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "face.hpp"
#include "numbers.hpp"

namespace sr {

/// Face counts per cardinality: count[c] = number of faces with c vertices,
/// c = 0..d.  count[0] = 1 is the empty face.
struct f_vector {
    std::vector<long long> count;

    int d() const { return int(count.size()) - 1; }
    /// f_i, the number of i-dimensional faces (i = -1..d-1).
    long long at_dim(int i) const {
        int c = i + 1;
        return (c >= 0 && c < int(count.size())) ? count[c] : 0;
    }
    friend bool operator==(const f_vector&, const f_vector&) = default;
};

/// h_0..h_d, the binomial transform of the f-vector.  Entries may be
/// negative for non-Cohen-Macaulay complexes.
struct h_vector {
    std::vector<long long> entry;

    long long sum() const {
        long long s = 0;
        for (long long e : entry) s += e;
        return s;
    }
    friend bool operator==(const h_vector&, const h_vector&) = default;
};

/// An immutable simplicial complex on vertex set {0,...,n-1}, stored as its
/// facet set plus the full face list bucketed by cardinality.  Every vertex
/// must lie in some facet (no ghost vertices); the empty complex {{}} is
/// representable only with n = 0.  All operations are pure.
class simplicial_complex {
public:
    simplicial_complex(int n, std::vector<face> input_facets) : n_(n) {
        if (n < 0 || n > 64) throw resource_limit("vertex count must be in [0, 64], got " + std::to_string(n));
        const std::uint64_t full = face::full(n).bits;
        std::uint64_t covered = 0;
        for (const face& f : input_facets) {
            if (f.bits & ~full)
                throw vertex_out_of_range("facet " + f.str() + " has a vertex >= n = " + std::to_string(n));
            covered |= f.bits;
        }
        if (covered != full) {
            for (int v = 0; v < n; ++v)
                if (!((covered >> v) & 1))
                    throw ghost_vertex("vertex " + std::to_string(v) + " appears in no facet");
        }

        // Drop non-maximal input faces, then canonicalize.
        std::sort(input_facets.begin(), input_facets.end(),
                  [](face a, face b) { return a.cardinality() > b.cardinality(); });
        for (const face& f : input_facets) {
            bool maximal = true;
            for (const face& kept : facets_)
                if (f.subset_of(kept)) { maximal = false; break; }
            if (maximal) facets_.push_back(f);
        }
        if (facets_.empty()) facets_.push_back(face());  // the empty complex {{}}, n = 0
        std::sort(facets_.begin(), facets_.end());

        build_faces();
    }

    static simplicial_complex from_facets(int n, std::vector<face> facets) {
        return simplicial_complex(n, std::move(facets));
    }

    int vertex_count() const { return n_; }
    face vertices_mask() const { return face::full(n_); }
    const std::vector<face>& facets() const { return facets_; }
    int dim() const { return int(faces_by_card_.size()) - 2; }

    bool is_face(face f) const {
        int c = f.cardinality();
        if (c >= int(faces_by_card_.size())) return false;
        const auto& bucket = faces_by_card_[c];
        return std::binary_search(bucket.begin(), bucket.end(), f.bits);
    }

    /// Sorted masks of all faces with c vertices (c = 0..d).
    const std::vector<std::uint64_t>& faces_with_card(int c) const {
        static const std::vector<std::uint64_t> none;
        return (c >= 0 && c < int(faces_by_card_.size())) ? faces_by_card_[c] : none;
    }

    std::vector<face> faces_of_dim(int k) const {
        std::vector<face> out;
        for (std::uint64_t m : faces_with_card(k + 1)) out.push_back(face(m));
        return out;
    }

    f_vector f() const {
        f_vector fv;
        for (const auto& bucket : faces_by_card_) fv.count.push_back((long long)bucket.size());
        return fv;
    }

    /// Exact integer binomial transform h_i = sum_j (-1)^{i-j} C(d-j, d-i) f_{j-1}.
    h_vector h() const {
        f_vector fv = f();
        int d = fv.d();
        h_vector hv;
        hv.entry.resize(d + 1, 0);
        for (int i = 0; i <= d; ++i) {
            integer acc = 0;
            for (int j = 0; j <= i; ++j) {
                integer term = binomial(d - j, d - i) * fv.at_dim(j - 1);
                acc += ((i - j) % 2 == 0) ? term : -term;
            }
            hv.entry[i] = (long long)acc;
        }
        return hv;
    }

    /// Number of top-dimensional faces; the multiplicity of S/I.
    long long facet_count_top() const { return f().count.back(); }

    /// lk(F) = {G - F : F subset G in complex}, re-indexed to a dense vertex
    /// set.  vertex_map[new] = old.
    struct mapped {
        simplicial_complex complex;
        std::vector<int> vertex_map;
    };

    mapped link_mapped(face f) const {
        if (!is_face(f)) throw face_not_in_complex("link: " + f.str() + " is not a face");
        std::vector<face> link_facets;
        std::uint64_t verts = 0;
        for (const face& g : facets_)
            if (f.subset_of(g)) {
                link_facets.push_back(g - f);
                verts |= (g - f).bits;
            }
        return relabel_dense(verts, std::move(link_facets));
    }

    simplicial_complex link(face f) const { return link_mapped(f).complex; }

    /// Induced subcomplex on W, re-indexed to |W| dense vertices.
    mapped induced_mapped(face w) const {
        if (w.empty()) throw empty_vertex_set("induced: empty vertex set");
        if (w.bits & ~vertices_mask().bits)
            throw vertex_out_of_range("induced: " + w.str() + " is not a subset of the vertex set");
        std::vector<face> cut;
        for (const face& g : facets_) cut.push_back(g & w);
        return relabel_dense(w.bits, std::move(cut));
    }

    simplicial_complex induced(face w) const { return induced_mapped(w).complex; }

    simplicial_complex deletion(int v) const {
        return induced(vertices_mask().without(v));
    }

    simplicial_complex join(const simplicial_complex& other) const {
        if (n_ + other.n_ > 64) throw resource_limit("join exceeds 64 vertices");
        std::vector<face> joined;
        for (const face& a : facets_)
            for (const face& b : other.facets_)
                joined.push_back(face(a.bits | (b.bits << n_)));
        return simplicial_complex(n_ + other.n_, std::move(joined));
    }

    simplicial_complex skeleton(int i) const {
        if (i < 0 || i > dim())
            throw dimension_mismatch("skeleton index " + std::to_string(i) + " outside [0, dim]");
        std::vector<face> fac;
        for (std::uint64_t m : faces_with_card(i + 1)) fac.push_back(face(m));
        for (const face& g : facets_)
            if (g.dimension() < i) fac.push_back(g);
        return simplicial_complex(n_, std::move(fac));
    }

    simplicial_complex cone() const {
        std::vector<face> fac;
        for (const face& g : facets_) fac.push_back(g.with(n_));
        if (n_ + 1 > 64) throw resource_limit("cone exceeds 64 vertices");
        return simplicial_complex(n_ + 1, std::move(fac));
    }

    /// Minimal non-faces: S not a face with every S - {v} a face.  Their
    /// sizes are bounded by dim + 2.
    std::vector<face> minimal_nonfaces() const {
        std::vector<face> out;
        int max_card = dim() + 2;
        for (int c = 1; c <= std::min(max_card, n_); ++c) {
            std::uint64_t m = face::full(c).bits;
            do {
                face s(m);
                if (is_face(s)) continue;
                bool minimal = true;
                for (std::uint64_t b = m; b; b &= b - 1) {
                    if (!is_face(s.without(std::countr_zero(b)))) { minimal = false; break; }
                }
                if (minimal) out.push_back(s);
            } while (next_same_size_subset(m, n_));
        }
        return out;
    }

    /// Flag: every minimal non-face has exactly two vertices.
    bool is_flag() const {
        for (const face& s : minimal_nonfaces())
            if (s.cardinality() != 2) return false;
        return true;
    }

    bool is_r_neighborly(int r) const {
        if (r < 0) throw precondition_not_met("neighborliness index must be nonnegative");
        return integer(f().at_dim(r - 1)) == binomial(n_, r);
    }

    bool is_pure() const {
        for (const face& g : facets_)
            if (g.cardinality() != facets_.back().cardinality()) return false;
        return true;
    }

    friend bool operator==(const simplicial_complex& a, const simplicial_complex& b) {
        return a.n_ == b.n_ && a.facets_ == b.facets_;
    }

    std::string facets_str() const {
        std::string s;
        for (const face& g : facets_) {
            if (!s.empty()) s += " ";
            s += g.str();
        }
        return s;
    }

private:
    mapped relabel_dense(std::uint64_t verts, std::vector<face> raw_facets) const {
        std::vector<int> map;
        int pos[64] = {};
        for (int v = 0; v < n_; ++v)
            if ((verts >> v) & 1) {
                pos[v] = int(map.size());
                map.push_back(v);
            }
        std::vector<face> relabeled;
        relabeled.reserve(raw_facets.size());
        for (const face& g : raw_facets) {
            std::uint64_t bits = 0;
            for (std::uint64_t b = g.bits; b; b &= b - 1)
                bits |= std::uint64_t(1) << pos[std::countr_zero(b)];
            relabeled.push_back(face(bits));
        }
        return mapped{simplicial_complex(int(map.size()), std::move(relabeled)), std::move(map)};
    }

    void build_faces() {
        int d = 0;
        for (const face& g : facets_) d = std::max(d, g.cardinality());
        faces_by_card_.assign(d + 1, {});
        // Enumerate each facet's subsets, bucket by cardinality, dedup.
        for (const face& g : facets_) {
            std::uint64_t m = g.bits;
            std::uint64_t sub = m;
            while (true) {
                faces_by_card_[std::popcount(sub)].push_back(sub);
                if (sub == 0) break;
                sub = (sub - 1) & m;
            }
        }
        for (auto& bucket : faces_by_card_) {
            std::sort(bucket.begin(), bucket.end());
            bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
        }
    }

    int n_;
    std::vector<face> facets_;
    std::vector<std::vector<std::uint64_t>> faces_by_card_;
};

} // namespace sr
