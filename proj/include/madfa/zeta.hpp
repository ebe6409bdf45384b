#pragma once

// The bijection between 2(m+t)^k-style parking functions and (extended,
// constrained) non-initial acyclic automata.
//
// Forward direction: order the labels by <_q, slice the slots into division
// factors (factor p holds levels, i.e. rows over the first p-1 placed
// states), pair consecutive slots (odd local index = non-accepting, even =
// accepting) with the level's nu maps, and read each label's row off its
// slot. With constraints, the level-1 slot list is the full (row, status)
// couple list minus the constraint couples.
//
// Inverse direction: greedily place states. A state is placeable once all of
// its real-state targets are placed; its slot is then determined by
// (level = 1 + rank of its largest placed target, lex rank of its row,
// accepting parity). Among placeable states the one with the smallest
// (slot, label) goes next.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "madfa/automaton.hpp"
#include "madfa/nu_table.hpp"
#include "madfa/parking.hpp"
#include "madfa/split_merge.hpp"
#include "madfa/weight.hpp"

namespace madfa {

namespace detail {

// Level-1 slots as (row, status) couples in (lex row, status) order, with the
// constraint couples removed when a constraint set applies.
inline std::vector<std::pair<std::vector<Label>, bool>> level1_slots(
    int k, const std::vector<Label>& extras, const ConstraintSet* constraints) {
    std::vector<std::pair<std::vector<Label>, bool>> out;
    NuTable t = nu_maps(1, k, extras, {});
    for (auto& m : t.maps) {
        out.emplace_back(m, false);
        out.emplace_back(std::move(m), true);
    }
    if (constraints) {
        std::erase_if(out, [&](const auto& couple) {
            return constraints->contains(Constraint{couple.first, couple.second});
        });
    }
    return out;
}

inline void check_constraints(int k, const std::vector<Label>& extras, const ConstraintSet& c) {
    if (c.size() != static_cast<int>(extras.size()) + 1)
        throw std::invalid_argument("zeta: constraint set must have t+1 members");
    if (!c.contains(forced_constraint(k)))
        throw std::invalid_argument("zeta: constraint set must contain the forced constraint");
    for (const auto& item : c.items) {
        if (static_cast<int>(item.nu.size()) != k)
            throw std::invalid_argument("zeta: constraint arity mismatch");
        for (Label v : item.nu)
            if (v != absorbing && !std::binary_search(extras.begin(), extras.end(), v))
                throw std::invalid_argument("zeta: constraint target is not an extra");
    }
}

inline ExtendedNiAutomaton zeta_impl(const ParkingFunction& pf, int k,
                                     const std::vector<Label>& extras,
                                     const ConstraintSet* constraints,
                                     const WeightFunction& phi) {
    if (!is_parking(pf.slots, phi)) throw std::invalid_argument("zeta: parking condition violated");
    if (constraints && !is_simple_pf(pf))
        throw std::invalid_argument("zeta: constrained map requires a simple parking function");

    ExtendedNiAutomaton aut;
    aut.alphabet = k;
    aut.states = pf.labels;
    aut.extras = extras;
    aut.delta.resize(pf.labels.size());

    const auto order = q_order(pf);
    const auto lvl1 = level1_slots(k, extras, constraints);
    std::optional<NuTable> table;  // current level's maps, built on demand

    int p = 1;
    for (std::size_t gi = 1; gi <= pf.slots.size(); ++gi) {
        while (static_cast<std::int64_t>(gi) > phi(p)) {
            ++p;
            table.reset();
        }
        const auto& occupants = pf.slots[gi - 1];
        if (occupants.empty()) continue;

        std::vector<Label> row;
        bool acc = false;
        if (p == 1) {
            const auto& couple = lvl1[gi - 1];
            row = couple.first;
            acc = couple.second;
        } else {
            if (!table) table = nu_maps(p, k, extras, order);
            const std::int64_t local = static_cast<std::int64_t>(gi) - phi(p - 1);
            row = table->maps[static_cast<std::size_t>((local + 1) / 2 - 1)];
            acc = local % 2 == 0;
        }
        for (Label q : occupants) {
            aut.delta[static_cast<std::size_t>(aut.index_of(q))] = row;
            if (acc)
                aut.accepting.insert(
                    std::lower_bound(aut.accepting.begin(), aut.accepting.end(), q), q);
        }
    }
    return aut;
}

inline ParkingFunction zeta_inverse_impl(const ExtendedNiAutomaton& aut, int k,
                                         const ConstraintSet* constraints,
                                         const WeightFunction& phi) {
    if (aut.alphabet != k) throw std::invalid_argument("zeta inverse: alphabet mismatch");
    if (!is_acyclic(aut)) throw std::domain_error("zeta inverse: cyclic input");

    const int n = aut.size();
    ParkingFunction pf;
    pf.labels = aut.states;
    if (n == 0) return pf;
    pf.slots.assign(static_cast<std::size_t>(phi(n)), {});

    const auto lvl1 = level1_slots(k, aut.extras, constraints);
    std::vector<Label> placed;
    std::vector<int> rank_of(static_cast<std::size_t>(n), 0);  // 1-based, 0 = unplaced

    for (int step = 0; step < n; ++step) {
        std::int64_t best_slot = 0;
        Label best_label = 0;
        for (int i = 0; i < n; ++i) {
            if (rank_of[static_cast<std::size_t>(i)] != 0) continue;
            const Label q = aut.states[static_cast<std::size_t>(i)];
            const auto& row = aut.delta[static_cast<std::size_t>(i)];
            int max_rank = 0;
            bool placeable = true;
            for (Label v : row) {
                int vi = aut.index_of(v);
                if (vi < 0) continue;  // absorbing or extra
                int r = rank_of[static_cast<std::size_t>(vi)];
                if (r == 0) {
                    placeable = false;
                    break;
                }
                max_rank = std::max(max_rank, r);
            }
            if (!placeable) continue;

            const bool acc = aut.is_accepting(q);
            std::int64_t slot;
            if (max_rank == 0) {
                auto it = std::find(lvl1.begin(), lvl1.end(),
                                    std::make_pair(row, acc));
                if (it == lvl1.end())
                    throw std::invalid_argument(
                        "zeta inverse: level-1 row excluded by the constraints");
                slot = static_cast<std::int64_t>(it - lvl1.begin()) + 1;
            } else {
                const int p = 1 + max_rank;
                NuTable table = nu_maps(p, k, aut.extras, placed);
                const int j = table.rank_of(row);
                if (j == 0) throw std::invalid_argument("zeta inverse: row is not a level map");
                slot = phi(p - 1) + 2 * (j - 1) + (acc ? 2 : 1);
            }
            if (best_label == 0 || std::pair(slot, q) < std::pair(best_slot, best_label)) {
                best_slot = slot;
                best_label = q;
            }
        }
        if (best_label == 0) throw std::invalid_argument("zeta inverse: no placeable state");
        rank_of[static_cast<std::size_t>(aut.index_of(best_label))] =
            static_cast<int>(placed.size()) + 1;
        placed.push_back(best_label);
        auto& slot = pf.slots[static_cast<std::size_t>(best_slot - 1)];
        slot.insert(std::lower_bound(slot.begin(), slot.end(), best_label), best_label);
    }
    return pf;
}

}  // namespace detail

// Non-initial automaton from a 2m^k-parking function.
inline ExtendedNiAutomaton zeta(const ParkingFunction& pf, int k) {
    return detail::zeta_impl(pf, k, {}, nullptr, phi_2mk(k));
}

inline ParkingFunction zeta_inverse(const ExtendedNiAutomaton& aut, int k) {
    if (!aut.extras.empty()) throw std::invalid_argument("zeta inverse: extras must be empty");
    return detail::zeta_inverse_impl(aut, k, nullptr, phi_2mk(k));
}

// Constrained variant: simple (2(m+t)^k - t - 1)-parking functions onto
// extended automata over t extras, with the t+1 constraint couples removed
// from the level-1 slot list.
inline ExtendedNiAutomaton zeta_extended(const ParkingFunction& pf, int k,
                                         const std::vector<Label>& extras,
                                         const ConstraintSet& constraints) {
    if (!std::is_sorted(extras.begin(), extras.end()))
        throw std::invalid_argument("zeta: extras must be sorted");
    detail::check_constraints(k, extras, constraints);
    return detail::zeta_impl(pf, k, extras, &constraints,
                             phi_constrained(k, static_cast<std::int64_t>(extras.size())));
}

inline ParkingFunction zeta_extended_inverse(const ExtendedNiAutomaton& aut, int k,
                                             const ConstraintSet& constraints) {
    detail::check_constraints(k, aut.extras, constraints);
    if (!is_simple(aut))
        throw std::invalid_argument("zeta inverse: input must be simple");
    if (!satisfies_constraints(aut, constraints))
        throw std::invalid_argument("zeta inverse: input violates the constraints");
    auto pf = detail::zeta_inverse_impl(
        aut, k, &constraints, phi_constrained(k, static_cast<std::int64_t>(aut.extras.size())));
    return pf;
}

}  // namespace madfa
