#pragma once

#include <map>
#include <string>
#include <vector>

#include "hfill/cayley.hpp"
#include "hfill/flag_complex.hpp"
#include "hfill/raag.hpp"
#include "hfill/two_complex.hpp"

namespace hfill {

// A k-cube: base vertex plus k pairwise-commuting generators (0-based
// indices, sorted). The base is the phi-minimal corner: every cube edge
// leaves the base in the positive generator direction.
struct Cube {
    std::size_t base = 0;
    std::vector<int> gens;

    int dim() const { return static_cast<int>(gens.size()); }
};

// Finite ball of the CAT(0) cube complex covering the cubical classifying
// complex of the right-angled Artin group on L. Vertices are canonical
// normal forms; cubes exist when their generator set spans a simplex of L
// and all corners lie in the ball.
struct CubeBall {
    FlagComplex L;
    std::vector<std::string> generators; // = vertices of L
    CommutingGraph graph{0};
    int dim_l = 0; // max simplex dimension of L
    std::size_t radius = 0;

    std::vector<Word> vertices;
    std::vector<long long> height; // exponent sum (Morse height)
    std::vector<std::size_t> depth;
    std::vector<std::vector<std::size_t>> adjacency; // letter rank -> neighbor
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::vector<std::vector<Cube>> cubes_by_dim; // index 1.. = dimension
    std::vector<std::vector<std::size_t>> squares_at_vertex; // into cubes_by_dim[2]

    std::size_t vertex_count() const { return vertices.size(); }
    std::string vertex_name(std::size_t v) const;
    std::optional<std::size_t> find_word(const Word& w) const;

    // all 2^k corners of a cube, or nullopt when one leaves the ball
    std::optional<std::vector<std::size_t>> corners(const Cube& c) const;
    bool cube_in_ball(const Cube& c) const { return corners(c).has_value(); }

    // graph distance inside the ball
    std::vector<std::size_t> distances_from(std::size_t v) const;

    std::string to_json() const;

private:
    friend CubeBall build_cube_ball(const FlagComplex&, std::size_t, std::size_t);
    std::map<std::vector<int>, std::size_t> index_of_word_;
};

CubeBall build_cube_ball(const FlagComplex& L, std::size_t R,
                         std::size_t vertex_budget = kDefaultBallVertexBudget);

// Hyperplane in the ball: class of dual edges closed under the opposite-
// edges-of-a-square relation, plus the two halfspace sides when the class
// separates the ball.
struct Hyperplane {
    std::size_t id = 0;
    std::vector<std::pair<std::size_t, int>> dual_edges; // (base vertex, generator)
    std::vector<int> side; // per ball vertex: +1/-1; empty when non-separating
    bool separating = false;
};

struct HyperplaneSet {
    std::vector<Hyperplane> planes;
    std::map<std::pair<std::size_t, int>, std::size_t> of_edge; // (base, gen) -> plane

    bool separates(std::size_t h, std::size_t v, std::size_t w) const {
        const Hyperplane& H = planes[h];
        return H.separating && H.side[v] != H.side[w];
    }
};

HyperplaneSet hyperplanes(const CubeBall& B);

// Ascending / descending links at a vertex: simplices of the cubes attaining
// their Morse minimum / maximum there; the full link has one vertex per edge
// end, labelled g- for the ascending direction and g+ for the descending one.
struct MorseLinks {
    FlagComplex ascending;
    FlagComplex descending;
    FlagComplex full;
};

MorseLinks morse_links(const CubeBall& B, std::size_t v);

// True when every cube at v is complete in the ball (margin dim(L) + 1).
bool is_interior_vertex(const CubeBall& B, std::size_t v);

// The 2-skeleton as a TwoComplex (vertex ids are canonical words, edge ids
// "base|g", square ids "sq(base|g,h)").
TwoComplex cube_ball_two_skeleton(const CubeBall& B);

std::string cube_edge_id(const CubeBall& B, std::size_t base, int gen);
std::string cube_square_id(const CubeBall& B, const Cube& sq);

} // namespace hfill
