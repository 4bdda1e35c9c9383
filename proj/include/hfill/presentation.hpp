#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hfill/word.hpp"

namespace hfill {

// Finite group presentation. Relators are nonempty cyclically reduced words;
// loading rejects anything else. When the presentation was produced by
// free_product, factor_of_generator records which factor each generator
// came from, so the factor retraction (kill the other factor) is available.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
    std::vector<int> factor_of_generator; // empty unless built by free_product

    void validate() const;

    std::string to_json() const;
    static Presentation from_json(const std::string& text);

    // Word map realizing the retraction onto one factor: letters of the other
    // factor are deleted.
    Word retract_to_factor(const Word& w, int factor) const;
};

// Disjoint union of generators and relators; colliding generator names from
// the right factor get a suffix. Records factor provenance.
Presentation free_product(const Presentation& p1, const Presentation& p2);

} // namespace hfill
