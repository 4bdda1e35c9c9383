#include "hfill/raag.hpp"

#include <algorithm>
#include <set>

namespace hfill {

Word raag_reduce(const CommutingGraph& g, const Word& w) {
    std::vector<int> v = w.letters;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < v.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                if (v[j] == -v[i]) {
                    bool clear = true;
                    for (std::size_t k = i + 1; k < j; ++k)
                        if (!g.commute(v[i], v[k])) {
                            clear = false;
                            break;
                        }
                    if (clear) {
                        v.erase(v.begin() + j);
                        v.erase(v.begin() + i);
                        changed = true;
                        break;
                    }
                }
                if (std::abs(v[j]) == std::abs(v[i])) break; // same generator blocks
                if (!g.commute(v[i], v[j])) break;
            }
        }
    }
    return Word{v};
}

Word raag_canonical(const CommutingGraph& g, const Word& w) {
    std::vector<int> v = raag_reduce(g, w).letters;
    Word out;
    out.letters.reserve(v.size());
    // Greedily emit the least letter that can commute to the front.
    while (!v.empty()) {
        std::size_t pick = 0;
        bool have = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            bool movable = true;
            for (std::size_t k = 0; k < i; ++k)
                if (!g.commute(v[i], v[k])) {
                    movable = false;
                    break;
                }
            if (!movable) continue;
            if (!have || letter_less(v[i], v[pick])) {
                pick = i;
                have = true;
            }
        }
        out.letters.push_back(v[pick]);
        v.erase(v.begin() + pick);
    }
    return out;
}

bool raag_is_trivial(const CommutingGraph& g, const Word& w) {
    return raag_reduce(g, w).empty();
}

Word raag_canonical_bruteforce(const CommutingGraph& g, const Word& w) {
    // Orbit of the word under adjacent commuting swaps, cancelling whenever
    // possible (restarting from the shorter word).
    Word start = free_reduce(w);
    while (true) {
        std::set<std::vector<int>> seen;
        std::vector<std::vector<int>> stack{start.letters};
        seen.insert(start.letters);
        bool shrunk = false;
        while (!stack.empty() && !shrunk) {
            std::vector<int> cur = stack.back();
            stack.pop_back();
            for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
                if (cur[i + 1] == -cur[i]) {
                    std::vector<int> next = cur;
                    next.erase(next.begin() + i, next.begin() + i + 2);
                    start = free_reduce(Word{next});
                    shrunk = true;
                    break;
                }
                if (cur[i] != cur[i + 1] && g.commute(cur[i], cur[i + 1])) {
                    std::vector<int> next = cur;
                    std::swap(next[i], next[i + 1]);
                    if (seen.insert(next).second) stack.push_back(next);
                }
            }
        }
        if (!shrunk) {
            Word best{*seen.begin()};
            for (const auto& cand : seen) {
                Word c{cand};
                if (c < best) best = c;
            }
            return best;
        }
    }
}

} // namespace hfill
