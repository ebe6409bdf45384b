#pragma once

// Right-language machinery: the distinguishability partition, simplicity,
// minimality, and quotient minimization.
//
// Two states are equivalent when for every word w the accepting status of
// delta*(q,w) and delta*(r,w) agree, and delta*(q,w) = delta*(r,w) whenever
// either lands in {absorbing} + extras. Equivalent states leave the state set
// at the same times into the same sinks, so they have equal height (longest
// chain before every path is absorbed); one refinement pass per height level
// therefore suffices, with lower levels already final.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "madfa/automaton.hpp"

namespace madfa {

namespace detail {

// height[i]: 0 when the row has no state targets, else 1 + max over them.
inline std::vector<int> state_heights(const ExtendedNiAutomaton& aut) {
    const int n = aut.size();
    std::vector<int> height(static_cast<std::size_t>(n), -1);
    auto rec = [&](auto&& self, int i) -> int {
        if (height[i] >= 0) return height[i];
        height[i] = 0;  // marks in-progress; acyclicity is a precondition
        int h = 0;
        for (Label v : aut.delta[static_cast<std::size_t>(i)]) {
            int vi = aut.index_of(v);
            if (vi >= 0) h = std::max(h, 1 + self(self, vi));
        }
        return height[i] = h;
    };
    for (int i = 0; i < n; ++i) rec(rec, i);
    return height;
}

}  // namespace detail

// Blocks of the coarsest right-language equivalence, each sorted, ordered by
// smallest member. Throws on cyclic input.
inline std::vector<std::vector<Label>> right_language_partition(const ExtendedNiAutomaton& aut) {
    if (!is_acyclic(aut)) throw std::domain_error("right_language_partition: cyclic input");
    const int n = aut.size();
    auto height = detail::state_heights(aut);
    int max_h = 0;
    for (int h : height) max_h = std::max(max_h, h);

    // Signature codes: absorbing -> -1, extra #j -> -(j+2), state -> its class.
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    int next_class = 0;
    using Sig = std::pair<bool, std::vector<int>>;
    for (int h = 0; h <= max_h; ++h) {
        std::map<Sig, int> seen;
        for (int i = 0; i < n; ++i) {
            if (height[i] != h) continue;
            Sig sig;
            sig.first = aut.is_accepting(aut.states[static_cast<std::size_t>(i)]);
            for (Label v : aut.delta[static_cast<std::size_t>(i)]) {
                int vi = aut.index_of(v);
                if (vi >= 0) {
                    sig.second.push_back(cls[static_cast<std::size_t>(vi)]);
                } else if (v == absorbing) {
                    sig.second.push_back(-1);
                } else {
                    auto it = std::lower_bound(aut.extras.begin(), aut.extras.end(), v);
                    sig.second.push_back(-2 - static_cast<int>(it - aut.extras.begin()));
                }
            }
            auto [it, inserted] = seen.emplace(std::move(sig), next_class);
            if (inserted) ++next_class;
            cls[static_cast<std::size_t>(i)] = it->second;
        }
    }

    std::vector<std::vector<Label>> blocks(static_cast<std::size_t>(next_class));
    for (int i = 0; i < n; ++i)
        blocks[static_cast<std::size_t>(cls[static_cast<std::size_t>(i)])].push_back(
            aut.states[static_cast<std::size_t>(i)]);
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

inline bool is_simple(const ExtendedNiAutomaton& aut) {
    return right_language_partition(aut).size() == aut.states.size();
}

// Myhill-Nerode on acyclic automata: reachable + coreachable + simple.
inline bool is_minimal(const InitialAutomaton& aut) {
    if (aut.base.states.empty()) return false;
    if (reachable_states(aut).size() != aut.base.states.size()) return false;
    return is_coreachable(aut.base) && is_simple(aut.base);
}

// Reachable states that can still reach an accepting state; the state set
// that survives trimming.
inline std::vector<Label> trimmed_states(const InitialAutomaton& aut) {
    if (aut.base.states.empty()) return {};
    auto reach = reachable_states(aut);
    std::vector<Label> useful;
    for (Label q : reach)
        if (aut.base.is_accepting(q)) useful.push_back(q);
    auto in_useful = [&](Label q) { return std::binary_search(useful.begin(), useful.end(), q); };
    bool changed = true;
    while (changed) {
        changed = false;
        for (Label q : reach) {
            if (in_useful(q)) continue;
            for (Label v : aut.base.row(q)) {
                if (aut.base.is_state(v) && in_useful(v)) {
                    useful.insert(std::lower_bound(useful.begin(), useful.end(), q), q);
                    changed = true;
                    break;
                }
            }
        }
    }
    return useful;
}

// Trims unreachable and useless states and quotients by the right-language
// partition. The surviving class containing each state is represented by its
// smallest label. Recognizing the empty language degenerates to the
// zero-state automaton (initial = absorbing).
inline InitialAutomaton minimize(const InitialAutomaton& aut) {
    if (!aut.base.extras.empty()) throw std::invalid_argument("minimize: extras must be empty");
    if (!is_acyclic(aut.base)) throw std::domain_error("minimize: cyclic input");
    InitialAutomaton empty;
    empty.base.alphabet = aut.base.alphabet;
    if (aut.base.states.empty()) return empty;

    auto useful = trimmed_states(aut);
    auto in_useful = [&](Label q) { return std::binary_search(useful.begin(), useful.end(), q); };
    if (!in_useful(aut.initial)) return empty;

    ExtendedNiAutomaton trimmed;
    trimmed.alphabet = aut.base.alphabet;
    trimmed.states = useful;
    for (Label q : useful) {
        if (aut.base.is_accepting(q)) trimmed.accepting.push_back(q);
        auto row = aut.base.row(q);
        for (Label& v : row)
            if (!in_useful(v)) v = absorbing;  // dead branches accept nothing
        trimmed.delta.push_back(std::move(row));
    }

    auto blocks = right_language_partition(trimmed);
    std::map<Label, Label> rep;
    for (const auto& b : blocks)
        for (Label q : b) rep[q] = b.front();

    InitialAutomaton out;
    out.base.alphabet = trimmed.alphabet;
    for (const auto& b : blocks) out.base.states.push_back(b.front());
    std::sort(out.base.states.begin(), out.base.states.end());
    for (Label q : out.base.states) {
        if (trimmed.is_accepting(q)) out.base.accepting.push_back(q);
        auto row = trimmed.row(q);
        for (Label& v : row)
            if (v != absorbing) v = rep.at(v);
        out.base.delta.push_back(std::move(row));
    }
    out.initial = rep.at(aut.initial);
    return out;
}

}  // namespace madfa
