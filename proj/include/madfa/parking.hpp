#pragma once

// Generalized parking functions as sequences of disjoint label sets (Q_j).
// A sequence of phi(n) sets over n labels is a phi-parking function when
// sum_{i<=phi(k)} |Q_i| >= k for every k in [n].

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "madfa/weight.hpp"

namespace madfa {

using Label = int;  // state / parking labels, always >= 1

struct ParkingFunction {
    std::vector<Label> labels;               // sorted, distinct
    std::vector<std::vector<Label>> slots;   // length phi(n); each sorted

    int size() const { return static_cast<int>(labels.size()); }
    bool operator==(const ParkingFunction&) const = default;
};

namespace detail {
inline std::vector<Label> collect_labels(const std::vector<std::vector<Label>>& slots) {
    std::vector<Label> labs;
    for (const auto& s : slots)
        for (Label x : s) {
            if (x < 1) throw std::invalid_argument("parking function: labels must be >= 1");
            labs.push_back(x);
        }
    std::sort(labs.begin(), labs.end());
    if (std::adjacent_find(labs.begin(), labs.end()) != labs.end())
        throw std::invalid_argument("parking function: slots are not disjoint");
    return labs;
}
}  // namespace detail

// Parking condition check. Structural problems (non-disjoint slots, slot count
// != phi(n)) throw; only the displayed inequality decides the return value.
inline bool is_parking(const std::vector<std::vector<Label>>& slots, const WeightFunction& phi) {
    auto labs = detail::collect_labels(slots);
    const int n = static_cast<int>(labs.size());
    if (n == 0) {
        if (!slots.empty()) throw std::invalid_argument("parking function: empty structure must have no slots");
        return true;
    }
    if (static_cast<std::int64_t>(slots.size()) != phi(n))
        throw std::invalid_argument("parking function: slot count differs from phi(n)");
    std::int64_t placed = 0;
    std::size_t slot = 0;
    for (int k = 1; k <= n; ++k) {
        const auto limit = static_cast<std::size_t>(phi(k));
        for (; slot < limit; ++slot) placed += static_cast<std::int64_t>(slots[slot].size());
        if (placed < k) return false;
    }
    return true;
}

inline ParkingFunction make_parking_function(std::vector<std::vector<Label>> slots,
                                             const WeightFunction& phi) {
    for (auto& s : slots) std::sort(s.begin(), s.end());
    if (!is_parking(slots, phi)) throw std::invalid_argument("parking condition violated");
    ParkingFunction pf;
    pf.labels = detail::collect_labels(slots);
    pf.slots = std::move(slots);
    return pf;
}

inline bool is_simple_pf(const ParkingFunction& pf) {
    return std::all_of(pf.slots.begin(), pf.slots.end(),
                       [](const auto& s) { return s.size() <= 1; });
}

// Division factors D_1..D_n: D_p spans slots (phi(p-1), phi(p)], with phi(0) = 0.
inline std::vector<std::vector<std::vector<Label>>> division_factors(const ParkingFunction& pf,
                                                                     const WeightFunction& phi) {
    std::vector<std::vector<std::vector<Label>>> factors;
    std::int64_t prev = 0;
    for (int p = 1; p <= pf.size(); ++p) {
        const std::int64_t cur = phi(p);
        factors.emplace_back(pf.slots.begin() + prev, pf.slots.begin() + cur);
        prev = cur;
    }
    return factors;
}

// Total order <_q: by slot index, ties by natural label order. Aligns the
// labels with the levels of the automaton the bijection builds.
inline std::vector<Label> q_order(const ParkingFunction& pf) {
    std::vector<Label> order;
    order.reserve(pf.labels.size());
    for (const auto& s : pf.slots) order.insert(order.end(), s.begin(), s.end());
    return order;
}

// ---- text form, matching the (12|·|3|·) display --------------------------
//
// "·" is the empty set. Labels inside a set are ascending; they are written
// as concatenated digits when every label of the structure is a single digit,
// and comma-separated otherwise (so "(10|·)" is the ten, not {1,0}).

inline std::string to_text(const ParkingFunction& pf) {
    const bool commas =
        !pf.labels.empty() && pf.labels.back() > 9;
    std::string out = "(";
    for (std::size_t i = 0; i < pf.slots.size(); ++i) {
        if (i) out += "|";
        if (pf.slots[i].empty()) {
            out += "·";
        } else {
            for (std::size_t j = 0; j < pf.slots[i].size(); ++j) {
                if (j && commas) out += ",";
                out += std::to_string(pf.slots[i][j]);
            }
        }
    }
    out += ")";
    return out;
}

// Parses the text form back into raw slots (validation is the caller's job,
// via make_parking_function with the intended phi).
inline std::vector<std::vector<Label>> parse_pf_text(const std::string& text) {
    std::size_t begin = text.find('(');
    std::size_t end = text.rfind(')');
    if (begin == std::string::npos || end == std::string::npos || begin >= end)
        throw std::invalid_argument("parking text: expected (...|...)");
    std::string body = text.substr(begin + 1, end - begin - 1);
    std::vector<std::vector<Label>> slots;
    if (body.empty()) return slots;
    std::vector<std::string> blocks;
    std::string cur;
    for (char ch : body) {
        if (ch == '|') {
            blocks.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    blocks.push_back(cur);
    for (auto& b : blocks) {
        // strip spaces and the UTF-8 middle dot (0xC2 0xB7); '.' also accepted
        std::string c;
        for (char ch : b)
            if (ch != ' ' && ch != '.' && ch != '\xc2' && ch != '\xb7') c += ch;
        std::vector<Label> set;
        if (!c.empty()) {
            if (c.find(',') != std::string::npos) {
                std::string num;
                for (char ch : c + ",") {
                    if (ch == ',') {
                        if (num.empty()) throw std::invalid_argument("parking text: empty label");
                        set.push_back(std::stoi(num));
                        num.clear();
                    } else {
                        num += ch;
                    }
                }
            } else if (std::all_of(c.begin(), c.end(),
                                   [](char ch) { return ch >= '1' && ch <= '9'; })) {
                for (char ch : c) set.push_back(ch - '0');
            } else {
                set.push_back(std::stoi(c));
            }
        }
        std::sort(set.begin(), set.end());
        slots.push_back(std::move(set));
    }
    return slots;
}

}  // namespace madfa
