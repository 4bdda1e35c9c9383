#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hfill/errors.hpp"

namespace hfill {

// Finite simplicial complex with flag / local-cut-point validation results.
// Simplices are stored as sorted vertex-id tuples, closed under faces.
class FlagComplex {
public:
    using Simplex = std::vector<std::string>; // sorted, nonempty

    FlagComplex() = default;

    // Builds from arbitrary simplex list. When flag_closure is set, all
    // cliques of the 1-skeleton are added as simplices first. Rejects inputs
    // that are not face-closed unless flag_closure (which subsumes closure)
    // was requested.
    static FlagComplex build(const std::vector<std::string>& vertices,
                             const std::vector<Simplex>& simplices, bool flag_closure);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::set<Simplex>& simplices() const { return simplices_; }

    bool has_simplex(const Simplex& s) const { return simplices_.count(s) > 0; }
    bool has_edge(const std::string& a, const std::string& b) const;

    int dimension() const; // max simplex dimension, -1 when empty
    std::size_t count_simplices(int dim) const;
    std::vector<Simplex> simplices_of_dim(int dim) const;
    std::vector<std::pair<std::string, std::string>> edge_list() const;

    // Validation flags; computed by validate().
    bool is_flag() const { return is_flag_; }
    bool is_connected() const { return is_connected_; }
    bool no_local_cut_points() const { return no_local_cut_points_; }
    const std::string& first_bad_clique() const { return bad_clique_; }

    void validate();

    // Link of a vertex as a simplicial complex.
    FlagComplex vertex_link(const std::string& v) const;

    std::string to_json() const;
    static FlagComplex from_json(const std::string& text);

    // Identical simplex sets under a vertex renaming given explicitly.
    bool isomorphic_by_renaming(const FlagComplex& other,
                                const std::map<std::string, std::string>& rename) const;

private:
    std::vector<std::string> vertices_;
    std::set<Simplex> simplices_;
    bool is_flag_ = false;
    bool is_connected_ = false;
    bool no_local_cut_points_ = false;
    std::string bad_clique_;
};

// Vertex set {v+, v-}; every k-simplex contributes all 2^(k+1) sign choices.
FlagComplex spherical_double(const FlagComplex& L);

// Pushout identifying edge eK of K with edge eF of F (endpoints in order).
// Vertices of F are renamed apart; the result is re-validated and a non-flag
// identification is rejected with the offending clique.
FlagComplex glue_edge(const FlagComplex& K, const FlagComplex& F,
                      const std::pair<std::string, std::string>& eK,
                      const std::pair<std::string, std::string>& eF);

} // namespace hfill
