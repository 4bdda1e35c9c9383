#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hfill/flag_complex.hpp"
#include "hfill/presentation.hpp"
#include "hfill/two_complex.hpp"

namespace hfill {

struct Rational {
    long long num = 0;
    long long den = 1;
};

Rational parse_rational(const std::string& text);

// Small-cancellation report: pieces are maximal common prefixes of distinct
// members of the symmetrized relator set (all cyclic shifts of relators and
// their inverses, deduplicated).
struct CPrimeReport {
    std::size_t max_piece = 0;
    std::vector<std::size_t> relator_lengths;
    // longest piece occurring on each relator (same order as relators)
    std::vector<std::size_t> max_piece_per_relator;
    bool verdict = false;
};

CPrimeReport c_prime_check(const Presentation& p, const Rational& lambda);

// One generator per vertex, one commutator relator per edge.
Presentation raag_presentation(const FlagComplex& L);

// 2-skeleton of the cubical classifying complex of the right-angled Artin
// group on L: one vertex, a loop per vertex of L, a commutator square per
// edge. Every generator loop has height increment +1 under the exponent-sum
// homomorphism; the increments are returned alongside.
struct SalvettiSkeleton {
    TwoComplex complex;
    std::vector<std::pair<std::string, int>> edge_height; // edge id -> +1
};

SalvettiSkeleton salvetti_two_skeleton(const FlagComplex& L);

// Group presented on the directed edges of L:
//   R1: e.ebar per undirected edge,
//   R2: abc and a^-1 b^-1 c^-1 for one orientation per triangle,
//   R3: a1^n ... al^n per spanning-tree fundamental loop and n in S
// (dropped entirely when the complex is certified simply connected; n = 0
// would give the empty word and is skipped).
struct LearyPresentation {
    Presentation presentation;
    std::size_t r1_count = 0;
    std::size_t r2_count = 0;
    std::size_t r3_count = 0;
    bool simply_connected_certified = false;
    bool has_local_cut_points = false;
    std::vector<std::vector<std::string>> fundamental_loops; // as directed-edge generator names
};

LearyPresentation leary_presentation(const FlagComplex& L, const std::vector<long long>& S);

// Certifies pi_1(X) = 1 for the 2-complex with one generator per non-tree
// edge by Tietze-simplifying the induced presentation. A false return is
// inconclusive.
bool certify_simply_connected(const FlagComplex& L);

// Named inputs used across the test and acceptance suites.
struct BuiltinResult {
    std::optional<Presentation> presentation;
    std::optional<FlagComplex> flag_complex;
    std::optional<TwoComplex> two_complex;
    std::optional<std::pair<std::string, std::string>> marked_edge; // complexF bold edge
};

// name: groupA | groupBm | groupQ | complexF | complexKA
BuiltinResult builtin_library(const std::string& name, std::optional<int> m = std::nullopt);

// Presentation 2-complex: one vertex, a loop per generator, a face per
// relator.
TwoComplex presentation_complex(const Presentation& p);

} // namespace hfill
