#pragma once

// Structured serialization. Automata:
//   { "k": int, "states": [int], "accepting": [int], "extras": [int],
//     "initial": int|null, "delta": { "<state>": ["<target>", ...] } }
// where a target is a state label, "@" for the absorbing sink, or "T<label>"
// for an extra. Field order is fixed as listed so golden files are stable.
// Parking functions: a list of label lists, one per slot.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "madfa/automaton.hpp"
#include "madfa/parking.hpp"

namespace madfa {

using ordered_json = nlohmann::ordered_json;

inline std::string target_to_string(const ExtendedNiAutomaton& aut, Label v) {
    if (v == absorbing) return "@";
    if (aut.is_extra(v)) return "T" + std::to_string(v);
    return std::to_string(v);
}

inline ordered_json to_json(const ExtendedNiAutomaton& aut, std::optional<Label> initial = {}) {
    ordered_json j;
    j["k"] = aut.alphabet;
    j["states"] = aut.states;
    j["accepting"] = aut.accepting;
    j["extras"] = aut.extras;
    if (initial)
        j["initial"] = *initial;
    else
        j["initial"] = nullptr;
    ordered_json delta = ordered_json::object();
    for (std::size_t i = 0; i < aut.states.size(); ++i) {
        ordered_json row = ordered_json::array();
        for (Label v : aut.delta[i]) row.push_back(target_to_string(aut, v));
        delta[std::to_string(aut.states[i])] = std::move(row);
    }
    j["delta"] = std::move(delta);
    return j;
}

inline ordered_json to_json(const InitialAutomaton& aut) {
    return to_json(aut.base, aut.initial);
}

// Reads either form; `initial` comes back when present and non-null.
inline ExtendedNiAutomaton automaton_from_json(const ordered_json& j,
                                               std::optional<Label>* initial = nullptr) {
    ExtendedNiAutomaton aut;
    try {
        aut.alphabet = j.at("k").get<int>();
        aut.states = j.at("states").get<std::vector<Label>>();
        aut.accepting = j.at("accepting").get<std::vector<Label>>();
        aut.extras = j.value("extras", std::vector<Label>{});
        if (initial) {
            if (j.contains("initial") && !j.at("initial").is_null())
                *initial = j.at("initial").get<Label>();
            else
                *initial = std::nullopt;
        }
        const auto& delta = j.at("delta");
        aut.delta.resize(aut.states.size());
        for (std::size_t i = 0; i < aut.states.size(); ++i) {
            const auto& row = delta.at(std::to_string(aut.states[i]));
            for (const auto& cell : row) {
                const std::string s = cell.get<std::string>();
                if (s == "@")
                    aut.delta[i].push_back(absorbing);
                else if (!s.empty() && s[0] == 'T')
                    aut.delta[i].push_back(std::stoi(s.substr(1)));
                else
                    aut.delta[i].push_back(std::stoi(s));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("automaton json: ") + e.what());
    }
    aut.validate();
    return aut;
}

inline ordered_json to_json(const ParkingFunction& pf) {
    ordered_json j = ordered_json::array();
    for (const auto& s : pf.slots) j.push_back(s);
    return j;
}

inline std::vector<std::vector<Label>> pf_slots_from_json(const ordered_json& j) {
    try {
        return j.get<std::vector<std::vector<Label>>>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("parking json: ") + e.what());
    }
}

// Graphviz export: accepting states as double circles, extras as dashed
// boxes, the absorbing sink as a plain node.
inline std::string to_dot(const ExtendedNiAutomaton& aut, std::optional<Label> initial = {}) {
    auto symbol_name = [&](int a) {
        if (aut.alphabet <= 26) return std::string(1, static_cast<char>('a' + a));
        return "s" + std::to_string(a + 1);
    };
    std::string out = "digraph adfa {\n  rankdir=LR;\n";
    out += "  \"@\" [shape=none, label=\"&empty;\"];\n";
    for (Label q : aut.states) {
        out += "  \"" + std::to_string(q) + "\" [shape=" +
               (aut.is_accepting(q) ? "doublecircle" : "circle") + "];\n";
    }
    for (Label e : aut.extras)
        out += "  \"T" + std::to_string(e) + "\" [shape=box, style=dashed, label=\"" +
               std::to_string(e) + "\"];\n";
    if (initial) {
        out += "  \"\" [shape=none, label=\"\"];\n";
        out += "  \"\" -> \"" + std::to_string(*initial) + "\";\n";
    }
    for (std::size_t i = 0; i < aut.states.size(); ++i) {
        // merge symbols sharing a target into one labeled edge
        std::vector<Label> seen;
        for (int a = 0; a < aut.alphabet; ++a) {
            Label v = aut.delta[i][static_cast<std::size_t>(a)];
            if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
            seen.push_back(v);
            std::string label = symbol_name(a);
            for (int b = a + 1; b < aut.alphabet; ++b)
                if (aut.delta[i][static_cast<std::size_t>(b)] == v) label += "," + symbol_name(b);
            out += "  \"" + std::to_string(aut.states[i]) + "\" -> \"" +
                   target_to_string(aut, v) + "\" [label=\"" + label + "\"];\n";
        }
    }
    out += "}\n";
    return out;
}

inline std::string to_dot(const InitialAutomaton& aut) { return to_dot(aut.base, aut.initial); }

}  // namespace madfa
