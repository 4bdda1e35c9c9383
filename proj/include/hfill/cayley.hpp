#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hfill/oracle.hpp"
#include "hfill/presentation.hpp"
#include "hfill/two_complex.hpp"

namespace hfill {

inline constexpr std::size_t kDefaultBallVertexBudget = 200000;

// Ball of a Cayley graph. Vertices carry shortlex-least representative words
// (among those discovered by the breadth-first closure); vertex 0 is the
// identity.
struct CayleyBall {
    std::size_t radius = 0;
    std::vector<std::string> generators;
    std::vector<Word> vertices;           // canonical representatives
    std::vector<std::size_t> depth;       // word-metric distance from identity
    // adjacency[v][letter_rank] = neighbor index, or npos when the neighbor
    // left the ball. Letters are ranked g1, g1^-1, g2, ...
    std::vector<std::vector<std::size_t>> adjacency;
    bool saturated = false; // the whole group was exhausted before radius

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    struct BallEdge {
        std::size_t from;
        int generator; // 1-based index
        std::size_t to;
    };
    std::vector<BallEdge> edges() const;

    std::size_t vertex_count() const { return vertices.size(); }
    std::string vertex_id(std::size_t v) const;
    std::optional<std::size_t> find_vertex_of_word(const Word& w, const EqualityOracle& o) const;

    std::string to_json() const;
};

CayleyBall cayley_ball(const Presentation& p, const EqualityOracle& o, std::size_t R,
                       std::size_t vertex_budget = kDefaultBallVertexBudget);

// One disk per (vertex, relator) pair whose traced loop closes inside the
// ball. Proper powers contribute one disk per basepoint along the power loop.
struct RelativeComplexResult {
    TwoComplex complex;
    std::size_t skipped_loops = 0; // traces that left the ball
};

RelativeComplexResult relative_cayley_complex(const CayleyBall& ball,
                                              const std::vector<Word>& relators,
                                              const std::vector<std::string>& generators);

// Traces a word from a start vertex; returns the 1-chain of the path and the
// endpoint, or nullopt when the path leaves the ball.
struct TracedPath {
    ChainVec chain{1};
    std::size_t endpoint = 0;
    std::vector<std::size_t> visited; // vertex sequence including start
};
std::optional<TracedPath> trace_word(const CayleyBall& ball, std::size_t start, const Word& w);

struct H1Evidence {
    bool exact = false;              // full-group verdict (finite-table, saturated)
    bool h1_trivial = false;         // meaningful when exact
    std::size_t radius = 0;
    std::size_t length_bound = 0;
    // loops of length <= L whose cycles admit no filling inside the ball
    std::vector<std::string> unfillable_loops;
    bool conclusive = false;
    std::size_t faces = 0;
    std::size_t skipped_loops = 0;
};

H1Evidence h1_evidence(const Presentation& p, const EqualityOracle& o, std::size_t R,
                       std::size_t L, std::size_t vertex_budget = kDefaultBallVertexBudget);

} // namespace hfill
