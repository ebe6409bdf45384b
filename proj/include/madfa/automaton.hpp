#pragma once

// Extended non-initial acyclic DFAs: labeled states, an accepting subset,
// optional extra absorbing states, and a total transition table into
// states + {absorbing} + extras. The absorbing sink and the extras are fixed
// points of every symbol and are never members of `states`.

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "madfa/parking.hpp"  // Label

namespace madfa {

inline constexpr Label absorbing = 0;  // the sink; real labels are >= 1

struct ExtendedNiAutomaton {
    int alphabet = 1;                        // k symbols a_1 < ... < a_k
    std::vector<Label> states;               // sorted, distinct
    std::vector<Label> accepting;            // sorted subset of states
    std::vector<Label> extras;               // sorted, distinct, disjoint from states
    std::vector<std::vector<Label>> delta;   // delta[i][a] for states[i]

    int size() const { return static_cast<int>(states.size()); }

    int index_of(Label q) const {
        auto it = std::lower_bound(states.begin(), states.end(), q);
        if (it == states.end() || *it != q) return -1;
        return static_cast<int>(it - states.begin());
    }
    bool is_state(Label q) const { return index_of(q) >= 0; }
    bool is_extra(Label q) const {
        return std::binary_search(extras.begin(), extras.end(), q);
    }
    bool is_accepting(Label q) const {
        return std::binary_search(accepting.begin(), accepting.end(), q);
    }
    const std::vector<Label>& row(Label q) const {
        int i = index_of(q);
        if (i < 0) throw std::invalid_argument("row: unknown state");
        return delta[static_cast<std::size_t>(i)];
    }

    // Structural validation; acyclicity is a separate predicate since the
    // brute-force enumerators construct candidates first and filter after.
    void validate() const {
        if (alphabet < 1) throw std::invalid_argument("automaton: alphabet size must be >= 1");
        if (!std::is_sorted(states.begin(), states.end()) ||
            std::adjacent_find(states.begin(), states.end()) != states.end())
            throw std::invalid_argument("automaton: states must be sorted and distinct");
        if (!states.empty() && states.front() < 1)
            throw std::invalid_argument("automaton: state labels must be >= 1");
        if (!std::is_sorted(extras.begin(), extras.end()) ||
            std::adjacent_find(extras.begin(), extras.end()) != extras.end())
            throw std::invalid_argument("automaton: extras must be sorted and distinct");
        if (!extras.empty() && extras.front() < 1)
            throw std::invalid_argument("automaton: extra labels must be >= 1");
        for (Label e : extras)
            if (is_state(e)) throw std::invalid_argument("automaton: extras overlap states");
        if (!std::is_sorted(accepting.begin(), accepting.end()))
            throw std::invalid_argument("automaton: accepting must be sorted");
        for (Label a : accepting)
            if (!is_state(a)) throw std::invalid_argument("automaton: accepting not a subset of states");
        if (delta.size() != states.size())
            throw std::invalid_argument("automaton: one delta row per state required");
        for (const auto& r : delta) {
            if (static_cast<int>(r.size()) != alphabet)
                throw std::invalid_argument("automaton: delta row arity mismatch");
            for (Label v : r)
                if (v != absorbing && !is_state(v) && !is_extra(v))
                    throw std::invalid_argument("automaton: delta target unknown");
        }
    }

    bool operator==(const ExtendedNiAutomaton&) const = default;
};

struct InitialAutomaton {
    ExtendedNiAutomaton base;  // extras must be empty
    Label initial = absorbing; // absorbing marks the designated empty automaton

    void validate() const {
        base.validate();
        if (!base.extras.empty())
            throw std::invalid_argument("initial automaton: extras must be empty");
        if (base.states.empty()) {
            if (initial != absorbing)
                throw std::invalid_argument("initial automaton: empty automaton has no initial state");
        } else if (!base.is_state(initial)) {
            throw std::invalid_argument("initial automaton: initial state missing");
        }
    }

    bool operator==(const InitialAutomaton&) const = default;
};

// Extended transition function over words of symbol indices (0-based).
// Absorbing and extras are fixed points.
inline Label delta_star(const ExtendedNiAutomaton& aut, Label q, std::span<const int> word) {
    if (q != absorbing && !aut.is_state(q) && !aut.is_extra(q))
        throw std::invalid_argument("delta_star: unknown state");
    for (int a : word) {
        if (a < 0 || a >= aut.alphabet) throw std::invalid_argument("delta_star: symbol out of range");
        if (q == absorbing || aut.is_extra(q)) return q;
        q = aut.row(q)[static_cast<std::size_t>(a)];
    }
    return q;
}

inline Label delta_star(const ExtendedNiAutomaton& aut, Label q, const std::vector<int>& word) {
    return delta_star(aut, q, std::span<const int>(word));
}

// No non-empty word returns a state to itself, i.e. the graph on states
// (edges into states only) is a DAG.
inline bool is_acyclic(const ExtendedNiAutomaton& aut) {
    const int n = aut.size();
    std::vector<int> color(static_cast<std::size_t>(n), 0);  // 0 new, 1 open, 2 done
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s]) continue;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            if (color[u] == 0) {
                color[u] = 1;
                for (Label v : aut.delta[static_cast<std::size_t>(u)]) {
                    int vi = aut.index_of(v);
                    if (vi < 0) continue;
                    if (color[vi] == 1) return false;
                    if (color[vi] == 0) stack.push_back(vi);
                }
            } else {
                if (color[u] == 1) color[u] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

// Forward closure from the initial state; excludes absorbing and extras.
inline std::vector<Label> reachable_states(const InitialAutomaton& aut) {
    if (aut.base.states.empty()) return {};
    std::vector<Label> seen{aut.initial};
    std::vector<Label> stack{aut.initial};
    auto known = [&](Label q) { return std::binary_search(seen.begin(), seen.end(), q); };
    while (!stack.empty()) {
        Label u = stack.back();
        stack.pop_back();
        for (Label v : aut.base.row(u)) {
            if (!aut.base.is_state(v) || known(v)) continue;
            seen.insert(std::lower_bound(seen.begin(), seen.end(), v), v);
            stack.push_back(v);
        }
    }
    return seen;
}

// Coreachability. Two regimes:
//  - extras empty: every state reaches an accepting state;
//  - extras present: no state may have an all-absorbing row (the extended
//    automaton is a complement piece, so a dead-end row is disallowed even
//    on accepting states).
inline bool is_coreachable(const ExtendedNiAutomaton& aut) {
    if (!aut.extras.empty()) {
        for (const auto& r : aut.delta)
            if (std::all_of(r.begin(), r.end(), [](Label v) { return v == absorbing; }))
                return false;
        return true;
    }
    const int n = aut.size();
    std::vector<char> good(static_cast<std::size_t>(n), 0);
    for (Label a : aut.accepting) good[static_cast<std::size_t>(aut.index_of(a))] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            if (good[i]) continue;
            for (Label v : aut.delta[static_cast<std::size_t>(i)]) {
                int vi = aut.index_of(v);
                if (vi >= 0 && good[vi]) {
                    good[i] = 1;
                    changed = true;
                    break;
                }
            }
        }
    }
    return std::all_of(good.begin(), good.end(), [](char c) { return c == 1; });
}

}  // namespace madfa
