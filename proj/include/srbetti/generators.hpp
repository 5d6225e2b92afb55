#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "face.hpp"

namespace sr {
namespace gen {

/// The full d-simplex on d+1 vertices (zero Stanley-Reisner ideal).
inline simplicial_complex simplex(int d) {
    if (d < 0) throw precondition_not_met("simplex: d >= 0 required");
    return simplicial_complex(d + 1, {face::full(d + 1)});
}

/// Boundary of the d-simplex: a (d-1)-sphere on d+1 vertices.
inline simplicial_complex boundary_of_simplex(int d) {
    if (d < 1) throw precondition_not_met("boundary_of_simplex: d >= 1 required");
    std::vector<face> facets;
    face full = face::full(d + 1);
    for (int v = 0; v <= d; ++v) facets.push_back(full.without(v));
    return simplicial_complex(d + 1, std::move(facets));
}

/// Boundary of the s-dimensional cross polytope: 2s vertices in antipodal
/// pairs {2i, 2i+1}, one vertex from each pair per facet (2^s facets).
inline simplicial_complex cross_polytope_boundary(int s) {
    if (s < 1) throw precondition_not_met("cross_polytope_boundary: s >= 1 required");
    if (2 * s > 64) throw resource_limit("cross_polytope_boundary: too many vertices");
    std::vector<face> facets;
    for (std::uint64_t pick = 0; pick < (std::uint64_t(1) << s); ++pick) {
        std::uint64_t bits = 0;
        for (int i = 0; i < s; ++i) bits |= std::uint64_t(1) << (2 * i + ((pick >> i) & 1));
        facets.push_back(face(bits));
    }
    return simplicial_complex(2 * s, std::move(facets));
}

/// The k-cycle (k >= 3): edges {i, i+1 mod k}.
inline simplicial_complex cycle(int k) {
    if (k < 3) throw precondition_not_met("cycle: k >= 3 required");
    if (k > 64) throw resource_limit("cycle: too many vertices");
    std::vector<face> facets;
    for (int i = 0; i < k; ++i) facets.push_back(face{i, (i + 1) % k});
    return simplicial_complex(k, std::move(facets));
}

/// Boundary of the cyclic polytope C(d, n) via the Gale evenness condition:
/// a d-subset of the path 0 < 1 < ... < n-1 is a facet iff every maximal run
/// of its elements not touching either end has even length.
inline simplicial_complex cyclic_polytope_boundary(int d, int n) {
    if (d < 2 || n <= d) throw precondition_not_met("cyclic_polytope_boundary: n > d >= 2 required");
    if (n > 64) throw resource_limit("cyclic_polytope_boundary: too many vertices");
    std::vector<face> facets;
    std::uint64_t m = face::full(d).bits;
    do {
        bool ok = true;
        int run = 0, run_start = -1;
        for (int v = 0; v <= n; ++v) {
            bool in = v < n && ((m >> v) & 1);
            if (in) {
                if (run == 0) run_start = v;
                ++run;
            } else if (run > 0) {
                bool touches_end = (run_start == 0) || (v == n);
                if (!touches_end && run % 2 != 0) { ok = false; break; }
                run = 0;
            }
        }
        if (ok) facets.push_back(face(m));
    } while (next_same_size_subset(m, n));
    return simplicial_complex(n, std::move(facets));
}

/// A 2-dimensional Cohen-Macaulay complex on 7 vertices whose minimal free
/// resolution is pure with shifts (3,4,6,7) yet which is neither 1-Leray nor
/// a join of a cycle or cross polytope with a simplex.
inline simplicial_complex example_seven() {
    // 1-based facet labels, re-indexed to 0-based.
    static const int raw[21][3] = {
        {1, 2, 4}, {1, 2, 6}, {1, 2, 7}, {1, 3, 5}, {1, 3, 6}, {1, 3, 7}, {1, 4, 5},
        {1, 4, 7}, {1, 5, 6}, {2, 3, 4}, {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 5, 7},
        {2, 6, 7}, {3, 4, 6}, {3, 4, 7}, {3, 5, 7}, {4, 5, 6}, {4, 6, 7}, {5, 6, 7}};
    std::vector<face> facets;
    for (const auto& t : raw) facets.push_back(face{t[0] - 1, t[1] - 1, t[2] - 1});
    return simplicial_complex(7, std::move(facets));
}

/// The facet list above has 21 triangles; a face count of 12 is sometimes
/// quoted for this example but is inconsistent with the list (and with the
/// pure-resolution multiplicity 3*4*6*7/4! = 21).  Reports carry this note.
inline const char* example_seven_note() {
    return "example7: recomputed facet count f_2 = 21 (= 3*4*6*7/4!); the quoted value "
           "f_2 = 12 is inconsistent with the facet list and has been ignored";
}

/// Minimal 6-vertex triangulation of the real projective plane.
inline simplicial_complex projective_plane_six() {
    static const int raw[10][3] = {{1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6}, {1, 4, 5},
                                   {2, 3, 4}, {2, 3, 5}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}};
    std::vector<face> facets;
    for (const auto& t : raw) facets.push_back(face{t[0] - 1, t[1] - 1, t[2] - 1});
    return simplicial_complex(6, std::move(facets));
}

/// The 7-vertex Moebius-Kantor torus: triangles {i, i+1, i+3} and
/// {i, i+2, i+3} mod 7.
inline simplicial_complex torus_seven() {
    std::vector<face> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back(face{i, (i + 1) % 7, (i + 3) % 7});
        facets.push_back(face{i, (i + 2) % 7, (i + 3) % 7});
    }
    return simplicial_complex(7, std::move(facets));
}

} // namespace gen
} // namespace sr
