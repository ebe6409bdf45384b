#pragma once

// Integer compositions and the partial-sum helper used throughout the
// counting formulas, which all sum over compositions of n.

#include <stdexcept>
#include <utility>
#include <vector>

#include "madfa/bigcount.hpp"

namespace madfa {

struct Composition {
    std::vector<int> parts;  // each >= 1

    int length() const { return static_cast<int>(parts.size()); }
    int sum() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    auto operator<=>(const Composition&) const = default;
};

// partial sum parts[0] + ... + parts[i-1]; i = 0 gives 0.
inline int partial_sum(const Composition& pi, int i) {
    if (i < 0 || i > pi.length()) throw std::out_of_range("partial_sum: index out of range");
    int s = 0;
    for (int j = 0; j < i; ++j) s += pi.parts[j];
    return s;
}

// Visits every composition of n exactly once, in lexicographic order by parts:
// (1,1,1) < (1,2) < (2,1) < (3). n = 0 yields the single empty composition.
template <class F>
void for_each_composition(int n, F&& visit) {
    if (n < 0) throw std::invalid_argument("for_each_composition: n must be >= 0");
    Composition cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            visit(std::as_const(cur));
            return;
        }
        for (int first = 1; first <= rest; ++first) {
            cur.parts.push_back(first);
            self(self, rest - first);
            cur.parts.pop_back();
        }
    };
    rec(rec, n);
}

inline std::vector<Composition> compositions(int n) {
    std::vector<Composition> out;
    for_each_composition(n, [&](const Composition& c) { out.push_back(c); });
    return out;
}

inline BigCount multinomial(const Composition& pi) {
    BigCount r = 1;
    int rest = pi.sum();
    for (int p : pi.parts) {
        r *= binomial(rest, p);
        rest -= p;
    }
    return r;
}

}  // namespace madfa
