#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hfill/presentation.hpp"
#include "hfill/raag.hpp"
#include "hfill/word.hpp"

namespace hfill {

// Finite group given by a closed multiplication table. Element 0 need not be
// the identity; the identity index is stored explicitly.
struct FiniteTable {
    std::size_t size = 0;
    std::vector<std::vector<int>> mult; // size x size
    int identity = 0;
    std::map<std::string, int> generator_element; // generator name -> element

    void validate() const; // closure, identity, inverses

    static FiniteTable cyclic(int n, const std::string& generator);
};

// One step of a Dehn reduction: at position pos of the current word, the
// subword of length match_len (a majority prefix of symmetrized relator word
// sym_index) is replaced by the inverse of the complement.
struct DehnStep {
    std::size_t pos = 0;
    std::size_t match_len = 0;
    std::size_t sym_index = 0;
    Word replaced;
    Word replacement;
};

struct DehnReduction {
    Word input;
    Word result; // fully reduced; empty iff trivial
    std::vector<DehnStep> steps;
};

// Pluggable decision procedure for word triviality. All kinds are immutable
// after construction and safe for concurrent use.
class EqualityOracle {
public:
    enum class Kind { Free, FreeAbelian, FiniteTableKind, Raag, DehnC16, FreeProduct };

    static EqualityOracle make_free(std::vector<std::string> generators);
    // images: optional exponent vector per generator (defaults to the
    // standard basis). rank = vector length.
    static EqualityOracle make_free_abelian(std::vector<std::string> generators,
                                            std::vector<std::vector<long long>> images = {});
    static EqualityOracle make_finite_table(FiniteTable table);
    // commuting pairs given by generator-name edges
    static EqualityOracle make_raag(std::vector<std::string> generators,
                                    std::vector<std::pair<std::string, std::string>> edges);
    // Construction checks C'(1/6); failing presentations are rejected.
    static EqualityOracle make_dehn_c16(Presentation p);
    static EqualityOracle make_free_product(EqualityOracle left, EqualityOracle right,
                                            const Presentation& product);

    Kind kind() const { return kind_; }
    const std::vector<std::string>& generators() const { return generators_; }

    bool is_trivial(const Word& w) const;

    // Exact canonical form of the group element, when the kind supplies one.
    // Equal keys iff equal elements. Dehn oracles return nullopt.
    std::optional<std::string> canonical_key(const Word& w) const;

    // Dehn's algorithm with a replayable trace; only for DehnC16.
    DehnReduction dehn_reduce(const Word& w) const;
    const std::vector<Word>& symmetrized_relators() const;

    std::string to_json() const;
    static EqualityOracle from_json(const std::string& text,
                                    const std::optional<Presentation>& pres = std::nullopt);

private:
    EqualityOracle() = default;

    Kind kind_ = Kind::Free;
    std::vector<std::string> generators_;

    // free-abelian
    std::size_t ab_rank_ = 0;
    std::vector<std::vector<long long>> ab_images_;

    // finite table
    FiniteTable table_;

    // raag
    CommutingGraph graph_{0};

    // dehn
    Presentation dehn_pres_;
    std::vector<Word> symmetrized_; // deduplicated cyclic shifts of relators and inverses

    // free product
    std::shared_ptr<EqualityOracle> left_, right_;
    std::vector<int> factor_of_generator_;
    std::vector<int> factor_letter_; // product letter -> factor letter (1-based)
};

// Validates a step sequence against the free group: every replacement must
// splice in the complement of a majority prefix of a symmetrized relator, and
// the final word must match. Throws input_error on any mismatch.
void validate_dehn_trace(const EqualityOracle& oracle, const DehnReduction& red);

} // namespace hfill
