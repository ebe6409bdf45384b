#pragma once

// Exact counting of generalized parking functions:
//  - count_pf:        alternating recurrence (single forward pass over n)
//  - count_simple_pf: sum over compositions tau of binomial products
//  - frobenius_coefficient: per-shape coefficient; its multinomial
//    specialization recovers count_pf along an independent route
//
// Index convention for the simple/Frobenius block widths: block i > 1 spans
// phi(1 + partial(i-1)) - phi(1 + partial(i-2)); block 1 has width phi(1).

#include <cstdint>

#include "madfa/bigcount.hpp"
#include "madfa/composition.hpp"
#include "madfa/weight.hpp"

namespace madfa {

namespace detail {

// Width of block i (1-based) when the slot history is walked through pi's
// partial sums, refined by tau.
inline std::int64_t profile_block_width(const WeightFunction& phi, const Composition& pi,
                                        const Composition& tau, int i) {
    if (i == 1) return phi(1);
    return phi(1 + partial_sum(pi, partial_sum(tau, i - 1))) -
           phi(1 + partial_sum(pi, partial_sum(tau, i - 2)));
}

}  // namespace detail

inline BigCount count_pf(const WeightFunction& phi, int n) {
    if (n < 0) throw std::invalid_argument("count_pf: n must be >= 0");
    std::vector<BigCount> g(static_cast<std::size_t>(n) + 1);
    g[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigCount s = 0;
        for (int j = 1; j <= m; ++j) {
            BigCount term = binomial(m, j) * pow_count(phi(m - j + 1), j) * g[m - j];
            if (j % 2 == 1)
                s += term;
            else
                s -= term;
        }
        g[m] = s;
    }
    return g[n];
}

// Parking functions with every |Q_j| <= 1. The block width of part i depends
// only on the two partial sums before it, so the composition sum factors
// through states (sum before the last part, sum so far) into an O(n^3)
// forward pass instead of a walk over all 2^(n-1) compositions.
inline BigCount count_simple_pf(const WeightFunction& phi, int n) {
    if (n < 0) throw std::invalid_argument("count_simple_pf: n must be >= 0");
    if (n == 0) return 1;
    std::vector<std::vector<BigCount>> dp(static_cast<std::size_t>(n) + 1,
                                          std::vector<BigCount>(static_cast<std::size_t>(n) + 1));
    for (int p = 1; p <= n; ++p) dp[0][p] = binomial(phi(1), p);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (dp[u][v] == 0) continue;
            const std::int64_t width = phi(1 + v) - phi(1 + u);
            for (int p = 1; v + p <= n; ++p)
                dp[v][v + p] += dp[u][v] * binomial(width, p);
        }
    BigCount total = 0;
    for (int u = 0; u < n; ++u) total += dp[u][n];
    return factorial(n) * total;
}

// Number of slot-placement patterns whose ordered non-empty-set sizes read pi
// (the first non-empty set has pi_1 elements, the second pi_2, ...).
inline BigCount frobenius_coefficient(const WeightFunction& phi, const Composition& pi) {
    BigCount total = 0;
    for_each_composition(pi.length(), [&](const Composition& tau) {
        BigCount prod = 1;
        for (int i = 1; i <= tau.length() && prod != 0; ++i)
            prod *= binomial(detail::profile_block_width(phi, pi, tau, i), tau.parts[i - 1]);
        total += prod;
    });
    return total;
}

// Independent route: specialize each pattern coefficient to the multinomial.
// Must agree with count_pf for every phi and n.
inline BigCount count_pf_via_frobenius(const WeightFunction& phi, int n) {
    BigCount total = 0;
    for_each_composition(n, [&](const Composition& pi) {
        total += frobenius_coefficient(phi, pi) * multinomial(pi);
    });
    return total;
}

}  // namespace madfa
