#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sr {

// All bound/average arithmetic in this library is exact; no floating point.
using integer = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline integer binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    integer r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline integer factorial(int n) {
    integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

/// "num/den" form used by the JSON report schema.
inline std::string rational_to_string(const rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

inline rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return rational(integer(s));
    return rational(integer(s.substr(0, slash)), integer(s.substr(slash + 1)));
}

} // namespace sr
