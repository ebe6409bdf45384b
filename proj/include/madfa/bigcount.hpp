#pragma once

// Exact integer arithmetic for all counting paths. Counts overflow 64 bits
// quickly (table cells reach ~10^31), so everything goes through BigCount.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace madfa {

using BigCount = boost::multiprecision::cpp_int;

// Binomial coefficient, vanishing outside 0 <= k <= n. The formulas rely on
// out-of-range terms being zero (e.g. binom(phi(1), tau_1) with tau_1 > phi(1)),
// so no error is raised.
inline BigCount binomial(const BigCount& n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigCount r = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact: product of j consecutive integers is divisible by j!
    }
    return r;
}

inline BigCount binomial(std::int64_t n, std::int64_t k) {
    return binomial(BigCount(n), k);
}

inline BigCount factorial(std::int64_t n) {
    BigCount r = 1;
    for (std::int64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigCount pow_count(const BigCount& base, std::int64_t exp) {
    if (exp < 0) throw std::invalid_argument("pow_count: negative exponent");
    BigCount r = 1, b = base;
    for (std::int64_t e = exp; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

inline std::string to_string(const BigCount& v) { return v.str(); }

}  // namespace madfa
