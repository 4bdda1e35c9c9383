#include "hfill/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hfill {

Word Word::inverse() const {
    Word out;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(-*it);
    return out;
}

Word Word::operator*(const Word& other) const {
    Word out = *this;
    out.letters.insert(out.letters.end(), other.letters.begin(), other.letters.end());
    return out;
}

int letter_rank(int letter) {
    // g1 -> 0, g1^-1 -> 1, g2 -> 2, g2^-1 -> 3, ...
    int idx = std::abs(letter) - 1;
    return 2 * idx + (letter < 0 ? 1 : 0);
}

bool letter_less(int a, int b) { return letter_rank(a) < letter_rank(b); }

bool Word::operator<(const Word& other) const {
    if (letters.size() != other.letters.size()) return letters.size() < other.letters.size();
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (letters[i] != other.letters[i]) return letter_less(letters[i], other.letters[i]);
    }
    return false;
}

Word free_reduce(const Word& w) {
    Word out;
    for (int x : w.letters) {
        if (!out.letters.empty() && out.letters.back() == -x)
            out.letters.pop_back();
        else
            out.letters.push_back(x);
    }
    return out;
}

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    std::size_t lo = 0, hi = r.letters.size();
    while (hi - lo >= 2 && r.letters[lo] == -r.letters[hi - 1]) {
        ++lo;
        --hi;
    }
    Word out;
    out.letters.assign(r.letters.begin() + lo, r.letters.begin() + hi);
    return out;
}

bool is_freely_reduced(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
        if (w.letters[i] == -w.letters[i + 1]) return false;
    return true;
}

bool is_cyclically_reduced(const Word& w) {
    if (!is_freely_reduced(w)) return false;
    if (w.letters.size() >= 2 && w.letters.front() == -w.letters.back()) return false;
    return true;
}

Word rotate(const Word& w, std::size_t k) {
    Word out;
    std::size_t n = w.letters.size();
    if (n == 0) return out;
    k %= n;
    out.letters.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.letters.push_back(w.letters[(i + k) % n]);
    return out;
}

Word cyclic_canonical(const Word& w) {
    if (w.empty()) return w;
    Word best = w;
    Word inv = w.inverse();
    for (std::size_t k = 0; k < w.letters.size(); ++k) {
        Word r = rotate(w, k);
        if (r < best) best = r;
        Word ri = rotate(inv, k);
        if (ri < best) best = ri;
    }
    return best;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& generators) {
    bool all_single = true;
    for (const auto& g : generators)
        if (g.size() != 1) all_single = false;
    std::ostringstream os;
    bool first = true;
    for (int x : w.letters) {
        int idx = std::abs(x) - 1;
        if (idx < 0 || idx >= static_cast<int>(generators.size()))
            throw input_error("word letter out of range");
        if (!first) os << ' ';
        first = false;
        if (x > 0) {
            os << generators[idx];
        } else if (all_single) {
            os << static_cast<char>(std::toupper(generators[idx][0]));
        } else {
            os << '-' << generators[idx];
        }
    }
    return os.str();
}

Word word_from_string(const std::string& text, const std::vector<std::string>& generators) {
    Word w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        bool neg = false;
        std::string name = tok;
        if (name.size() > 1 && name[0] == '-') {
            neg = true;
            name = name.substr(1);
        }
        int idx = -1;
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i] == name) idx = static_cast<int>(i);
        if (idx < 0 && name.size() == 1 && std::isupper(static_cast<unsigned char>(name[0]))) {
            std::string lower(1, static_cast<char>(std::tolower(name[0])));
            for (std::size_t i = 0; i < generators.size(); ++i)
                if (generators[i] == lower) {
                    idx = static_cast<int>(i);
                    neg = !neg;
                }
        }
        if (idx < 0) throw input_error("unknown generator token: " + tok);
        w.letters.push_back(neg ? -(idx + 1) : idx + 1);
    }
    return w;
}

} // namespace hfill
