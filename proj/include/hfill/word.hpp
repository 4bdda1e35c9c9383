#pragma once

#include <string>
#include <vector>

#include "hfill/errors.hpp"

namespace hfill {

// A word over a generating set: letters are signed 1-based generator indices,
// positive for the generator, negative for its inverse.
struct Word {
    std::vector<int> letters;

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    Word inverse() const;
    Word operator*(const Word& other) const;
    bool operator==(const Word& other) const { return letters == other.letters; }
    bool operator<(const Word& other) const;   // shortlex with letter order below

    static Word single(int letter) { return Word{{letter}}; }
};

// Letter order used for shortlex everywhere: g1 < g1^-1 < g2 < g2^-1 < ...
int letter_rank(int letter);
bool letter_less(int a, int b);

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

Word rotate(const Word& w, std::size_t k);

// Lexicographically least among all rotations of w and of its inverse.
Word cyclic_canonical(const Word& w);

// Token-based serialization. Single-character generator names use the
// uppercase-for-inverse convention ("a b A B"); otherwise a '-' prefix.
std::string word_to_string(const Word& w, const std::vector<std::string>& generators);
Word word_from_string(const std::string& text, const std::vector<std::string>& generators);

} // namespace hfill
