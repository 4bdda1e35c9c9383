#pragma once

#include <vector>

#include "hfill/word.hpp"

namespace hfill {

// Commutation data for a right-angled Artin group: adjacency over generator
// indices (0-based).
struct CommutingGraph {
    std::size_t n = 0;
    std::vector<std::vector<bool>> adj;

    explicit CommutingGraph(std::size_t n_ = 0)
        : n(n_), adj(n_, std::vector<bool>(n_, false)) {}

    void add_edge(std::size_t i, std::size_t j) {
        adj[i][j] = true;
        adj[j][i] = true;
    }
    bool commute(int letter_a, int letter_b) const {
        std::size_t i = std::abs(letter_a) - 1, j = std::abs(letter_b) - 1;
        if (i == j) return true;
        return adj[i][j];
    }
};

// Geodesic (reduced) representative: repeatedly cancels letter pairs x, x^-1
// separated only by letters commuting with x.
Word raag_reduce(const CommutingGraph& g, const Word& w);

// Shortlex-least member of the commuting-swap orbit of the reduced word.
// Equals the fixed-point-set construction: close under "swap adjacent
// commuting letters, then freely cancel" and take the shortlex-least member;
// computed here greedily instead of by orbit enumeration.
Word raag_canonical(const CommutingGraph& g, const Word& w);

bool raag_is_trivial(const CommutingGraph& g, const Word& w);

// Orbit-closure reference implementation; exponential, used by tests as the
// independent oracle for raag_canonical.
Word raag_canonical_bruteforce(const CommutingGraph& g, const Word& w);

} // namespace hfill
