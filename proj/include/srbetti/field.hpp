#pragma once

#include <cstdint>
#include <string>

#include "errors.hpp"
#include "numbers.hpp"

namespace sr {

/// Coefficient field for homology ranks: GF(p) for a prime p, or Q.
/// characteristic 0 denotes the rationals.
struct field_spec {
    std::uint32_t characteristic = 2;

    static field_spec gf(std::uint32_t p) {
        if (!is_prime(p)) throw precondition_not_met("GF(p) requires a prime, got " + std::to_string(p));
        return field_spec{p};
    }
    static field_spec rationals() { return field_spec{0}; }

    bool is_rational() const { return characteristic == 0; }
    bool is_gf2() const { return characteristic == 2; }

    std::string name() const {
        return is_rational() ? std::string("Q") : "GF(" + std::to_string(characteristic) + ")";
    }

    friend bool operator==(const field_spec&, const field_spec&) = default;
};

} // namespace sr
