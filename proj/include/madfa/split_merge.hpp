#pragma once

// Reversible splitting of a non-initial automaton at a state i into the
// initially-connected part reachable from i and its complement, an extended
// automaton whose extras are exactly the removed (reachable) states. The
// constraint machinery records the minimal part's rows so a complement can
// never duplicate one of its states.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "madfa/automaton.hpp"
#include "madfa/right_language.hpp"

namespace madfa {

struct Constraint {
    std::vector<Label> nu;        // one target per symbol: absorbing or an extra
    bool accepting_status = false;

    auto operator<=>(const Constraint&) const = default;
};

struct ConstraintSet {
    std::vector<Constraint> items;  // sorted, distinct

    int size() const { return static_cast<int>(items.size()); }
    bool contains(const Constraint& c) const {
        return std::binary_search(items.begin(), items.end(), c);
    }
};

inline Constraint forced_constraint(int k) {
    return Constraint{std::vector<Label>(static_cast<std::size_t>(k), absorbing), false};
}

inline ConstraintSet make_constraint_set(std::vector<Constraint> items) {
    std::sort(items.begin(), items.end());
    if (std::adjacent_find(items.begin(), items.end()) != items.end())
        throw std::invalid_argument("constraint set: duplicate constraint");
    return ConstraintSet{std::move(items)};
}

inline std::pair<InitialAutomaton, ExtendedNiAutomaton> split(const ExtendedNiAutomaton& ni,
                                                              Label i) {
    if (!ni.extras.empty()) throw std::invalid_argument("split: input must have no extras");
    if (!ni.is_state(i)) throw std::invalid_argument("split: unknown state");

    InitialAutomaton probe{ni, i};
    auto reach = reachable_states(probe);
    auto reached = [&](Label q) { return std::binary_search(reach.begin(), reach.end(), q); };

    InitialAutomaton first;
    first.initial = i;
    first.base.alphabet = ni.alphabet;
    first.base.states = reach;
    for (Label q : reach) {
        if (ni.is_accepting(q)) first.base.accepting.push_back(q);
        first.base.delta.push_back(ni.row(q));
    }

    ExtendedNiAutomaton second;
    second.alphabet = ni.alphabet;
    second.extras = reach;  // removed states become extra absorbing labels
    for (Label q : ni.states) {
        if (reached(q)) continue;
        second.states.push_back(q);
        if (ni.is_accepting(q)) second.accepting.push_back(q);
        second.delta.push_back(ni.row(q));  // targets inside reach are now extras
    }
    return {std::move(first), std::move(second)};
}

// Inverse of split: extras of e resolve back into the states of a. Forgets
// which state of a was initial.
inline ExtendedNiAutomaton merge(const InitialAutomaton& a, const ExtendedNiAutomaton& e) {
    if (!a.base.extras.empty()) throw std::invalid_argument("merge: first part must have no extras");
    if (e.extras != a.base.states)
        throw std::invalid_argument("merge: extras of the complement must equal the states of the part");
    for (Label q : e.states)
        if (a.base.is_state(q)) throw std::invalid_argument("merge: state sets overlap");

    ExtendedNiAutomaton out;
    out.alphabet = a.base.alphabet;
    out.states.resize(a.base.states.size() + e.states.size());
    std::merge(a.base.states.begin(), a.base.states.end(), e.states.begin(), e.states.end(),
               out.states.begin());
    out.accepting.resize(a.base.accepting.size() + e.accepting.size());
    std::merge(a.base.accepting.begin(), a.base.accepting.end(), e.accepting.begin(),
               e.accepting.end(), out.accepting.begin());
    for (Label q : out.states)
        out.delta.push_back(a.base.is_state(q) ? a.base.row(q) : e.row(q));
    return out;
}

// One constraint per state of a minimal automaton: its row rewritten through
// the order-preserving relabeling onto canonical extras, plus its accepting
// status; the forced (all-absorbing, non-accepting) constraint is always
// included. Duplicate rows signal a non-simple input.
inline ConstraintSet constraints_of(const InitialAutomaton& a,
                                    const std::vector<Label>& canonical_extras) {
    if (canonical_extras.size() != a.base.states.size())
        throw std::invalid_argument("constraints_of: relabel map must cover every state");
    if (!std::is_sorted(canonical_extras.begin(), canonical_extras.end()))
        throw std::invalid_argument("constraints_of: canonical extras must be sorted");
    std::vector<Constraint> items;
    for (std::size_t i = 0; i < a.base.states.size(); ++i) {
        Constraint c;
        c.accepting_status = a.base.is_accepting(a.base.states[i]);
        for (Label v : a.base.delta[i]) {
            if (v == absorbing) {
                c.nu.push_back(absorbing);
            } else {
                int vi = a.base.index_of(v);
                if (vi < 0) throw std::invalid_argument("constraints_of: row leaves the automaton");
                c.nu.push_back(canonical_extras[static_cast<std::size_t>(vi)]);
            }
        }
        items.push_back(std::move(c));
    }
    items.push_back(forced_constraint(a.base.alphabet));
    std::sort(items.begin(), items.end());
    if (std::adjacent_find(items.begin(), items.end()) != items.end())
        throw std::invalid_argument("constraints_of: duplicate constraint (input not simple)");
    return ConstraintSet{std::move(items)};
}

// Convenience: keep the original labels as the canonical extras.
inline ConstraintSet constraints_of(const InitialAutomaton& a) {
    return constraints_of(a, a.base.states);
}

// True when no state of e matches any constraint's (row, status) pair.
inline bool satisfies_constraints(const ExtendedNiAutomaton& e, const ConstraintSet& c) {
    for (const auto& item : c.items) {
        if (static_cast<int>(item.nu.size()) != e.alphabet)
            throw std::invalid_argument("satisfies_constraints: constraint arity mismatch");
        for (Label v : item.nu)
            if (v != absorbing && !e.is_extra(v))
                throw std::invalid_argument("satisfies_constraints: constraint codomain mismatch");
    }
    for (std::size_t i = 0; i < e.states.size(); ++i) {
        const bool acc = e.is_accepting(e.states[i]);
        for (const auto& item : c.items)
            if (item.accepting_status == acc && item.nu == e.delta[i]) return false;
    }
    return true;
}

}  // namespace madfa
