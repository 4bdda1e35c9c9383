#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hfill/cube_ball.hpp"

namespace hfill {

// Cube sequence C1..Cm with diagonal vertices v0..vm; normal when
// St(Ci) meets C(i+1) in exactly {vi}.
struct CubePath {
    std::vector<Cube> cubes;
    std::vector<std::size_t> diagonals; // v0..vm, v0 = start
    bool normal = false;

    std::size_t length() const { return cubes.size(); }
    std::size_t total_dim() const {
        std::size_t s = 0;
        for (const auto& c : cubes) s += c.gens.size();
        return s;
    }
    std::string to_json(const CubeBall& B) const;
};

// Checks the radius margin shared by the path operations and returns the
// ball distance d(v, w). Throws a resource error naming the required radius.
std::size_t require_path_margin(const CubeBall& B, std::size_t v, std::size_t w);

// The unique normal cube-path, built recursively: cross all separating
// hyperplanes meeting the star of the current vertex at once; post-verified
// normal.
CubePath normal_cube_path(const CubeBall& B, const HyperplaneSet& H, std::size_t v,
                          std::size_t w);

bool is_normal_cube_path(const CubeBall& B, const CubePath& path);

// Enumerates every cube-path between the endpoints with exactly `length`
// cubes (for the uniqueness checks).
std::vector<CubePath> enumerate_cube_paths(const CubeBall& B, std::size_t v, std::size_t w,
                                           std::size_t length);

// Geodesic edge path carried by the cube path: inside each cube the
// lexicographically least shuffle of its generator directions.
std::vector<std::size_t> carried_geodesic(const CubeBall& B, const CubePath& path);

// True when rho is a geodesic from its front to back carried by `path`
// (every edge inside one of the path's cubes, visiting every diagonal).
bool is_carried_by(const CubeBall& B, const CubePath& path, const std::vector<std::size_t>& rho);

// Combinatorial disk diagram with a cell map to the ball's 2-skeleton.
struct DiskDiagram {
    TwoComplex complex;
    std::vector<EdgeRef> boundary; // closed walk in the diagram
    std::map<std::string, std::string> vertex_image;
    std::map<std::string, std::string> edge_image;
    std::map<std::string, std::pair<std::string, int>> face_image; // (square id, orientation)

    std::map<std::string, std::size_t> link_sizes() const; // face corners per vertex
    std::string to_json() const;
};

struct FellowTravel {
    std::vector<std::size_t> rho_w; // carried geodesic to w (vertex sequence)
    int type = 0;                   // 1..4
    DiskDiagram diagram;            // the full subcomplex on both images

    // Strip data used by the disk-filling induction: squares in order
    // (low_s, low_{s+1}, up_{s+1}, up_s); lows lie on rho_wprime.
    std::vector<std::array<std::size_t, 4>> strip;
};

// Lemma-style fellow traveling: given a carried geodesic to w', produce one
// to the adjacent vertex w whose joint diagram is one of the four encoded
// patterns; anything else fails loudly.
FellowTravel fellow_travel(const CubeBall& B, const HyperplaneSet& H, std::size_t v,
                           std::size_t w, std::size_t wprime,
                           const std::vector<std::size_t>& rho_wprime);

// Full subcomplex of the ball's 2-skeleton on a vertex set, as an embedded
// diagram (identity cell map).
DiskDiagram full_subcomplex_diagram(const CubeBall& B, const std::vector<std::size_t>& verts);

// Within-one-cube Hausdorff bound between two vertex paths.
bool hausdorff_within_one_cube(const CubeBall& B, const std::vector<std::size_t>& a,
                               const std::vector<std::size_t>& b);

} // namespace hfill
