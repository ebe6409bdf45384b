#pragma once

// Streaming enumeration of parking functions, following the constructive
// grammar: pick a composition pi of n; block i owns the slot range
// (phi(1+pi(i-2)), phi(1+pi(i-1))] (block 1 owns (0, phi(1))]; choose which
// labels fill each block; drop each label of a block into one of its slots.
//
// Deterministic order: compositions lexicographic by parts, label choice per
// block in colexicographic subset order, slot assignment odometer with the
// earliest label moving slowest and slots filled left-to-right.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "madfa/composition.hpp"
#include "madfa/parking.hpp"
#include "madfa/weight.hpp"

namespace madfa {

namespace detail {

template <class F>
void colex_subsets(const std::vector<Label>& items, int r, F&& visit) {
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    std::vector<Label> subset(r);
    if (r == 0) {
        visit(subset, items);
        return;
    }
    const int n = static_cast<int>(items.size());
    while (true) {
        std::vector<Label> rest;
        for (int i = 0, j = 0; i < n; ++i) {
            if (j < r && idx[j] == i)
                subset[j++] = items[i];
            else
                rest.push_back(items[i]);
        }
        visit(subset, rest);
        // next combination in colex order: bump the lowest index that can move
        int i = 0;
        while (i < r && idx[i] + 1 == (i + 1 < r ? idx[i + 1] : n)) ++i;
        if (i == r) break;
        ++idx[i];
        for (int j = 0; j < i; ++j) idx[j] = j;
    }
}

}  // namespace detail

// Visits every phi-parking function on the given labels exactly once.
template <class F>
void for_each_pf(const WeightFunction& phi, int n, std::vector<Label> labels, F&& visit) {
    if (n < 0) throw std::invalid_argument("for_each_pf: n must be >= 0");
    std::sort(labels.begin(), labels.end());
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("for_each_pf: n must equal the label count");
    ParkingFunction pf;
    pf.labels = labels;
    if (n == 0) {
        visit(std::as_const(pf));
        return;
    }
    pf.slots.assign(static_cast<std::size_t>(phi(n)), {});

    for_each_composition(n, [&](const Composition& pi) {
        const int blocks = pi.length();
        std::vector<std::int64_t> lo(blocks), width(blocks);
        for (int i = 1; i <= blocks; ++i) {
            lo[i - 1] = i == 1 ? 0 : phi(1 + partial_sum(pi, i - 2));
            width[i - 1] = (i == 1 ? phi(1) : phi(1 + partial_sum(pi, i - 1))) - lo[i - 1];
        }
        std::function<void(int, const std::vector<Label>&)> place_block =
            [&](int bi, const std::vector<Label>& remaining) {
                if (bi == blocks) {
                    visit(std::as_const(pf));
                    return;
                }
                if (width[bi] == 0) return;  // flat phi: no room for this block
                detail::colex_subsets(
                    remaining, pi.parts[bi],
                    [&](const std::vector<Label>& chosen, const std::vector<Label>& rest) {
                        const int r = static_cast<int>(chosen.size());
                        std::vector<std::int64_t> at(r, 0);  // slot offsets within the block
                        while (true) {
                            for (int j = 0; j < r; ++j) {
                                auto& slot = pf.slots[lo[bi] + at[j]];
                                slot.insert(std::lower_bound(slot.begin(), slot.end(), chosen[j]),
                                            chosen[j]);
                            }
                            place_block(bi + 1, rest);
                            for (int j = 0; j < r; ++j) {
                                auto& slot = pf.slots[lo[bi] + at[j]];
                                slot.erase(std::lower_bound(slot.begin(), slot.end(), chosen[j]));
                            }
                            int j = r - 1;
                            while (j >= 0 && at[j] + 1 == width[bi]) at[j--] = 0;
                            if (j < 0) break;
                            ++at[j];
                        }
                    });
            };
        place_block(0, labels);
    });
}

template <class F>
void for_each_pf(const WeightFunction& phi, int n, F&& visit) {
    std::vector<Label> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i + 1;
    for_each_pf(phi, n, std::move(labels), std::forward<F>(visit));
}

// Simple parking functions, generated directly (no filtering): an injective
// placement is parking exactly when the i-th smallest occupied slot is
// <= phi(i). Occupied slot sets stream in lexicographic order, label
// assignments in std::next_permutation order.
template <class F>
void for_each_simple_pf(const WeightFunction& phi, int n, std::vector<Label> labels, F&& visit) {
    if (n < 0) throw std::invalid_argument("for_each_simple_pf: n must be >= 0");
    std::sort(labels.begin(), labels.end());
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("for_each_simple_pf: n must equal the label count");
    ParkingFunction pf;
    pf.labels = labels;
    if (n == 0) {
        visit(std::as_const(pf));
        return;
    }
    pf.slots.assign(static_cast<std::size_t>(phi(n)), {});
    std::vector<std::int64_t> chosen(n);
    std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t start) {
        if (i == n) {
            std::vector<Label> perm = labels;
            do {
                for (int j = 0; j < n; ++j) pf.slots[chosen[j] - 1] = {perm[j]};
                visit(std::as_const(pf));
            } while (std::next_permutation(perm.begin(), perm.end()));
            for (int j = 0; j < n; ++j) pf.slots[chosen[j] - 1].clear();
            return;
        }
        for (std::int64_t j = start; j <= phi(i + 1); ++j) {
            chosen[i] = j;
            rec(i + 1, j + 1);
        }
    };
    rec(0, 1);
}

template <class F>
void for_each_simple_pf(const WeightFunction& phi, int n, F&& visit) {
    std::vector<Label> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i + 1;
    for_each_simple_pf(phi, n, std::move(labels), std::forward<F>(visit));
}

inline std::vector<ParkingFunction> enumerate_pf(const WeightFunction& phi, int n) {
    std::vector<ParkingFunction> out;
    for_each_pf(phi, n, [&](const ParkingFunction& pf) { out.push_back(pf); });
    return out;
}

inline std::vector<ParkingFunction> enumerate_simple_pf(const WeightFunction& phi, int n) {
    std::vector<ParkingFunction> out;
    for_each_simple_pf(phi, n, [&](const ParkingFunction& pf) { out.push_back(pf); });
    return out;
}

}  // namespace madfa
