#pragma once

// Closed-form / recurrence counting of automata classes.
//
//   count_transition_functions(k,t;n): acyclic extended transition tables
//     d(n) = sum_{j<n} C(n,j) (-1)^{n-j-1} (j+t+1)^{k(n-j)} d(j),   d(0)=1
//   count_extended_ni(k,t;n): extended non-initial ADFA
//     e(n) = sum_{j<n} C(n,j) (-1)^{n-j-1} (2(j+t+1)^k)^{n-j} e(j), e(0)=1
//     (= 2^n d(n): each state independently accepting or not)
//   count_adfa(k;n): initially-connected ADFA with a fixed initial label,
//     solved triangularly from  e(k,0;n) = sum_t C(n-1,t-1) e(k,t;n-t) a(k;t)
//   count_madfa(k;n): minimal ADFA with a fixed initial label, solved
//     triangularly from
//     s(2m^k-1;n) = sum_t C(n-1,t-1) s(2(m+t)^k-t-1;n-t) m(k;t),  m(k;1)=1.
//
// The leading coefficient of both triangular solves is C(n-1,n-1) * (count at
// n=0) = 1, so everything stays in exact integers; all normalized table views
// check divisibility and refuse to round.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "madfa/bigcount.hpp"
#include "madfa/parking_count.hpp"
#include "madfa/weight.hpp"

namespace madfa {

namespace detail {

inline std::vector<BigCount> transition_function_row(int k, int t, int n_max) {
    std::vector<BigCount> d(static_cast<std::size_t>(n_max) + 1);
    d[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        BigCount s = 0;
        for (int j = 0; j < n; ++j) {
            BigCount term = binomial(n, j) * pow_count(BigCount(j + t + 1), static_cast<std::int64_t>(k) * (n - j)) * d[j];
            if ((n - j - 1) % 2 == 0)
                s += term;
            else
                s -= term;
        }
        d[n] = s;
    }
    return d;
}

inline std::vector<BigCount> extended_ni_row(int k, int t, int n_max) {
    std::vector<BigCount> e(static_cast<std::size_t>(n_max) + 1);
    e[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        BigCount s = 0;
        for (int j = 0; j < n; ++j) {
            BigCount base = 2 * pow_count(BigCount(j + t + 1), k);
            BigCount term = binomial(n, j) * pow_count(base, n - j) * e[j];
            if ((n - j - 1) % 2 == 0)
                s += term;
            else
                s -= term;
        }
        e[n] = s;
    }
    return e;
}

inline std::vector<BigCount> adfa_row(int k, int n_max) {
    std::vector<BigCount> a(static_cast<std::size_t>(n_max) + 1);
    for (int n = 1; n <= n_max; ++n) {
        // leading coefficient of the t = n term must be 1 for an integer solve
        if (extended_ni_row(k, n, 0)[0] != 1)
            throw std::logic_error("count_adfa: non-unit leading coefficient");
        BigCount s = extended_ni_row(k, 0, n)[static_cast<std::size_t>(n)];
        for (int t = 1; t < n; ++t)
            s -= binomial(n - 1, t - 1) * extended_ni_row(k, t, n - t)[static_cast<std::size_t>(n - t)] * a[static_cast<std::size_t>(t)];
        a[static_cast<std::size_t>(n)] = s;
    }
    return a;
}

inline std::vector<BigCount> madfa_row(int k, int n_max) {
    std::vector<BigCount> m(static_cast<std::size_t>(n_max) + 1);
    for (int n = 1; n <= n_max; ++n) {
        if (count_simple_pf(phi_constrained(k, n), 0) != 1)
            throw std::logic_error("count_madfa: non-unit leading coefficient");
        BigCount s = count_simple_pf(phi_2mk_minus1(k), n);
        for (int t = 1; t < n; ++t)
            s -= binomial(n - 1, t - 1) * count_simple_pf(phi_constrained(k, t), n - t) * m[static_cast<std::size_t>(t)];
        m[static_cast<std::size_t>(n)] = s;
    }
    return m;
}

}  // namespace detail

inline BigCount count_transition_functions(int k, int t, int n) {
    if (k < 1 || t < 0 || n < 0) throw std::invalid_argument("count_transition_functions: bad arguments");
    return detail::transition_function_row(k, t, n)[static_cast<std::size_t>(n)];
}

inline BigCount count_extended_ni(int k, int t, int n) {
    if (k < 1 || t < 0 || n < 0) throw std::invalid_argument("count_extended_ni: bad arguments");
    return detail::extended_ni_row(k, t, n)[static_cast<std::size_t>(n)];
}

inline BigCount count_adfa(int k, int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("count_adfa: bad arguments");
    return detail::adfa_row(k, n)[static_cast<std::size_t>(n)];
}

inline BigCount count_madfa(int k, int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("count_madfa: bad arguments");
    return detail::madfa_row(k, n)[static_cast<std::size_t>(n)];
}

// ---- table emission -------------------------------------------------------

enum class Normalization { None, ByFactorialN, ByFactorialNMinus1 };

struct CountTable {
    std::string kind;          // table-a | table-b | table-c | f | s | d | e | a | m
    std::vector<int> k_values;
    std::vector<int> n_values;
    std::vector<std::vector<BigCount>> entries;  // entries[k index][n index]
    Normalization normalization = Normalization::None;
};

// Normalized grid of exact values. Kinds:
//   table-a: simple (2m^k - 1)-parking counts / n!   (coreachable simple)
//   table-b: simple (2m^k)-parking counts / n!       ((quasi-)simple)
//   table-c: minimal ADFA counts / (n-1)!
//   f, s:    raw phi = m^k parking / simple-parking counts
//   d, e:    raw transition-function / extended automaton counts (t given)
//   a, m:    raw initially-connected / minimal ADFA counts
inline CountTable emit_table(const std::string& kind, int k_max, int n_max, int t = 0) {
    if (k_max < 1 || n_max < 0) throw std::invalid_argument("emit_table: bad ranges");
    CountTable table;
    table.kind = kind;
    const bool from_one = kind == "table-c" || kind == "a" || kind == "m";
    for (int k = 1; k <= k_max; ++k) table.k_values.push_back(k);
    for (int n = from_one ? 1 : 0; n <= n_max; ++n) table.n_values.push_back(n);
    if (kind == "table-a" || kind == "table-b")
        table.normalization = Normalization::ByFactorialN;
    else if (kind == "table-c")
        table.normalization = Normalization::ByFactorialNMinus1;

    for (int k : table.k_values) {
        std::vector<BigCount> row;
        for (int n : table.n_values) {
            BigCount v;
            if (kind == "table-a")
                v = count_simple_pf(phi_2mk_minus1(k), n);
            else if (kind == "table-b")
                v = count_simple_pf(phi_2mk(k), n);
            else if (kind == "table-c" || kind == "m")
                v = count_madfa(k, n);
            else if (kind == "f")
                v = count_pf(phi_mk(k), n);
            else if (kind == "s")
                v = count_simple_pf(phi_mk(k), n);
            else if (kind == "d")
                v = count_transition_functions(k, t, n);
            else if (kind == "e")
                v = count_extended_ni(k, t, n);
            else if (kind == "a")
                v = count_adfa(k, n);
            else
                throw std::invalid_argument("emit_table: unknown kind " + kind);

            if (table.normalization != Normalization::None) {
                BigCount div = table.normalization == Normalization::ByFactorialN
                                   ? factorial(n)
                                   : factorial(n - 1);
                if (v % div != 0) throw std::logic_error("emit_table: inexact normalization");
                v /= div;
            }
            row.push_back(std::move(v));
        }
        table.entries.push_back(std::move(row));
    }
    return table;
}

inline std::string to_csv(const CountTable& table) {
    std::string out = "k\\n";
    for (int n : table.n_values) out += "," + std::to_string(n);
    out += "\n";
    for (std::size_t i = 0; i < table.k_values.size(); ++i) {
        out += std::to_string(table.k_values[i]);
        for (const auto& v : table.entries[i]) out += "," + v.str();
        out += "\n";
    }
    return out;
}

inline nlohmann::ordered_json to_json(const CountTable& table) {
    nlohmann::ordered_json j;
    j["kind"] = table.kind;
    j["k_range"] = table.k_values;
    j["n_range"] = table.n_values;
    switch (table.normalization) {
        case Normalization::None: j["normalization"] = "none"; break;
        case Normalization::ByFactorialN: j["normalization"] = "divide-by-n!"; break;
        case Normalization::ByFactorialNMinus1: j["normalization"] = "divide-by-(n-1)!"; break;
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.entries) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& v : row) r.push_back(v.str());
        rows.push_back(std::move(r));
    }
    j["entries"] = std::move(rows);
    return j;
}

}  // namespace madfa
