#pragma once

// Candidate transition rows per level of the bijection. At level p >= 2 a row
// maps the alphabet into {absorbing} + extras + {q_1..q_{p-1}} and must hit
// the newest state q_{p-1}; level 1 rows map into {absorbing} + extras with no
// such requirement. Rows are ordered lexicographically on the word
// nu(a_1)...nu(a_k) under the codomain order
//   absorbing < extras (ascending label) < q_1 < ... < q_{p-1}.

#include <span>
#include <stdexcept>
#include <vector>

#include "madfa/automaton.hpp"

namespace madfa {

struct NuTable {
    int level = 1;  // p
    int alphabet = 1;
    std::vector<Label> codomain;             // absorbing, extras..., placed states in q-order
    std::vector<std::vector<Label>> maps;    // lexicographically increasing

    int size() const { return static_cast<int>(maps.size()); }

    // Lexicographic rank (1-based) of a row among this level's maps;
    // 0 if the row is not a valid map of this level.
    int rank_of(const std::vector<Label>& row) const {
        for (std::size_t j = 0; j < maps.size(); ++j)
            if (maps[j] == row) return static_cast<int>(j) + 1;
        return 0;
    }
};

inline NuTable nu_maps(int p, int k, std::span<const Label> extras,
                       std::span<const Label> placed) {
    if (p < 1) throw std::invalid_argument("nu_maps: level must be >= 1");
    if (k < 1) throw std::invalid_argument("nu_maps: alphabet size must be >= 1");
    if (p >= 2 && static_cast<int>(placed.size()) < p - 1)
        throw std::invalid_argument("nu_maps: not enough placed states for this level");

    NuTable table;
    table.level = p;
    table.alphabet = k;
    table.codomain.push_back(absorbing);
    table.codomain.insert(table.codomain.end(), extras.begin(), extras.end());
    for (int i = 0; i < p - 1; ++i) table.codomain.push_back(placed[static_cast<std::size_t>(i)]);

    const int size = static_cast<int>(table.codomain.size());
    const int top = size - 1;  // index of q_{p-1} when p >= 2
    std::vector<int> word(static_cast<std::size_t>(k), 0);
    while (true) {
        bool keep = p == 1;
        if (!keep)
            for (int w : word)
                if (w == top) {
                    keep = true;
                    break;
                }
        if (keep) {
            std::vector<Label> row(static_cast<std::size_t>(k));
            for (int a = 0; a < k; ++a)
                row[static_cast<std::size_t>(a)] = table.codomain[static_cast<std::size_t>(word[a])];
            table.maps.push_back(std::move(row));
        }
        int a = k - 1;
        while (a >= 0 && word[a] + 1 == size) word[a--] = 0;
        if (a < 0) break;
        ++word[a];
    }
    return table;
}

inline NuTable nu_maps(int p, int k, const std::vector<Label>& extras,
                       const std::vector<Label>& placed) {
    return nu_maps(p, k, std::span<const Label>(extras), std::span<const Label>(placed));
}

}  // namespace madfa
