#pragma once

#include <stdexcept>
#include <string>

namespace sr {

/// Base class for all errors raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct vertex_out_of_range : error {
    using error::error;
};

/// A vertex of the ambient set [n] appears in no facet.
struct ghost_vertex : error {
    using error::error;
};

struct face_not_in_complex : error {
    using error::error;
};

struct empty_vertex_set : error {
    using error::error;
};

/// The Stanley-Reisner ideal is zero (the complex is the full simplex),
/// so shift sequences are empty and the requested quantity is undefined.
struct zero_ideal : error {
    using error::error;
};

/// A computation would exceed the configured size budget.
struct resource_limit : error {
    using error::error;
};

struct not_cohen_macaulay : error {
    using error::error;
};

struct non_increasing_skips : error {
    using error::error;
};

struct singular_system : error {
    using error::error;
};

struct dimension_mismatch : error {
    using error::error;
};

struct precondition_not_met : error {
    using error::error;
};

struct not_flag : error {
    using error::error;
};

/// Facet-file syntax or validation error; carries a 1-based line number.
struct parse_error : error {
    int line;
    parse_error(int line_, const std::string& what_)
        : error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

} // namespace sr
