#include "hfill/subdivision.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hfill {

namespace {

TwoComplex subdivide_once(const TwoComplex& X) {
    std::vector<std::string> vertices = X.vertices();
    for (const auto& e : X.edges()) vertices.push_back("m(" + e.id + ")");
    for (const auto& f : X.faces()) vertices.push_back("c(" + f.id + ")");

    std::vector<Edge> edges;
    for (const auto& e : X.edges()) {
        edges.push_back(Edge{e.id + ".0", e.src, "m(" + e.id + ")"});
        edges.push_back(Edge{e.id + ".1", "m(" + e.id + ")", e.dst});
    }

    std::vector<Face> faces;
    for (const auto& f : X.faces()) {
        const std::string center = "c(" + f.id + ")";
        const std::size_t k = f.cycle.size();
        // Subdivided boundary walk: 2k positions alternating corner/midpoint.
        // positions[p] = vertex id, segments[p] = signed edge from p to p+1.
        std::vector<std::string> positions(2 * k);
        std::vector<EdgeRef> segments(2 * k);
        for (std::size_t i = 0; i < k; ++i) {
            const EdgeRef& ref = f.cycle[i];
            const Edge& e = X.edge(ref.edge);
            const std::string mid = "m(" + e.id + ")";
            positions[2 * i] = ref.reversed ? e.dst : e.src;
            positions[2 * i + 1] = mid;
            if (!ref.reversed) {
                segments[2 * i] = EdgeRef{e.id + ".0", false};
                segments[2 * i + 1] = EdgeRef{e.id + ".1", false};
            } else {
                segments[2 * i] = EdgeRef{e.id + ".1", true};
                segments[2 * i + 1] = EdgeRef{e.id + ".0", true};
            }
        }
        // One spoke per walk position (repeated vertices get distinct spokes).
        std::vector<std::string> spoke(2 * k);
        for (std::size_t p = 0; p < 2 * k; ++p) {
            spoke[p] = "sp(" + f.id + "," + std::to_string(p) + ")";
            edges.push_back(Edge{spoke[p], positions[p], center});
        }
        for (std::size_t p = 0; p < 2 * k; ++p) {
            Face t;
            t.id = f.id + ".t" + std::to_string(p);
            t.cycle = {segments[p], EdgeRef{spoke[(p + 1) % (2 * k)], false},
                       EdgeRef{spoke[p], true}};
            faces.push_back(std::move(t));
        }
    }
    return TwoComplex(std::move(vertices), std::move(edges), std::move(faces));
}

} // namespace

TwoComplex barycentric_subdivision(const TwoComplex& X, int iterations) {
    if (iterations < 1) throw input_error("subdivision needs iterations >= 1");
    TwoComplex out = X;
    for (int i = 0; i < iterations; ++i) out = subdivide_once(out);
    return out;
}

FlagComplex to_simplicial(const TwoComplex& X) {
    std::set<std::pair<std::string, std::string>> edge_pairs;
    for (const auto& e : X.edges()) {
        if (e.src == e.dst) throw input_error("not simplicial: loop edge " + e.id);
        auto pr = std::minmax(e.src, e.dst);
        if (!edge_pairs.insert({pr.first, pr.second}).second)
            throw input_error("not simplicial: parallel edges between " + e.src + " and " + e.dst);
    }
    std::set<FlagComplex::Simplex> triangles;
    for (const auto& f : X.faces()) {
        if (f.cycle.size() != 3)
            throw input_error("not simplicial: face " + f.id + " is not a triangle");
        std::set<std::string> vs;
        for (const auto& ref : f.cycle) {
            const Edge& e = X.edge(ref.edge);
            vs.insert(e.src);
            vs.insert(e.dst);
        }
        if (vs.size() != 3)
            throw input_error("not simplicial: face " + f.id + " has repeated vertices");
        FlagComplex::Simplex t(vs.begin(), vs.end());
        if (!triangles.insert(t).second)
            throw input_error("not simplicial: repeated triangle at face " + f.id);
    }
    std::vector<FlagComplex::Simplex> simplices;
    for (const auto& [a, b] : edge_pairs) simplices.push_back({a, b});
    for (const auto& t : triangles) simplices.push_back(t);
    return FlagComplex::build(X.vertices(), simplices, false);
}

} // namespace hfill
