#include "hfill/cube_ball.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <queue>

namespace hfill {

using nlohmann::ordered_json;

std::string CubeBall::vertex_name(std::size_t v) const {
    if (vertices[v].empty()) return "1";
    return word_to_string(vertices[v], generators);
}

std::optional<std::size_t> CubeBall::find_word(const Word& w) const {
    Word c = raag_canonical(graph, w);
    auto it = index_of_word_.find(c.letters);
    if (it == index_of_word_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::vector<std::size_t>> CubeBall::corners(const Cube& c) const {
    const std::size_t k = c.gens.size();
    std::vector<std::size_t> out;
    out.reserve(1u << k);
    for (std::size_t mask = 0; mask < (1u << k); ++mask) {
        std::size_t cur = c.base;
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) {
            if (!(mask & (1u << i))) continue;
            cur = adjacency[cur][2 * static_cast<std::size_t>(c.gens[i])];
            if (cur == npos) ok = false;
        }
        if (!ok) return std::nullopt;
        out.push_back(cur);
    }
    return out;
}

std::vector<std::size_t> CubeBall::distances_from(std::size_t v) const {
    std::vector<std::size_t> dist(vertex_count(), npos);
    std::queue<std::size_t> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
        std::size_t x = q.front();
        q.pop();
        for (std::size_t r = 0; r < adjacency[x].size(); ++r) {
            std::size_t u = adjacency[x][r];
            if (u != npos && dist[u] == npos) {
                dist[u] = dist[x] + 1;
                q.push(u);
            }
        }
    }
    return dist;
}

std::string CubeBall::to_json() const {
    ordered_json j;
    j["radius"] = radius;
    ordered_json vs = ordered_json::array();
    for (std::size_t v = 0; v < vertex_count(); ++v)
        vs.push_back({{"word", vertex_name(v)}, {"height", height[v]}});
    j["vertices"] = vs;
    ordered_json counts = ordered_json::object();
    for (std::size_t d = 1; d < cubes_by_dim.size(); ++d)
        counts[std::to_string(d)] = cubes_by_dim[d].size();
    j["cubeCounts"] = counts;
    return j.dump();
}

CubeBall build_cube_ball(const FlagComplex& L, std::size_t R, std::size_t vertex_budget) {
    if (!L.is_flag()) throw input_error("cube ball needs a validated flag complex");
    CubeBall B;
    B.L = L;
    B.generators = L.vertices();
    B.dim_l = std::max(L.dimension(), 0);
    B.radius = R;
    const std::size_t g = B.generators.size();
    B.graph = CommutingGraph(g);
    auto gen_index = [&](const std::string& name) {
        for (std::size_t i = 0; i < B.generators.size(); ++i)
            if (B.generators[i] == name) return i;
        throw internal_error("cube ball generator lookup failed");
    };
    for (const auto& [a, b] : L.edge_list()) B.graph.add_edge(gen_index(a), gen_index(b));

    B.vertices.push_back(Word{});
    B.height.push_back(0);
    B.depth.push_back(0);
    B.adjacency.emplace_back(2 * g, CubeBall::npos);
    B.index_of_word_[{}] = 0;

    std::vector<std::size_t> level{0};
    for (std::size_t d = 0; d <= R && !level.empty(); ++d) {
        std::vector<std::size_t> next;
        const bool expand = d < R;
        for (std::size_t v : level) {
            for (std::size_t rank = 0; rank < 2 * g; ++rank) {
                if (B.adjacency[v][rank] != CubeBall::npos) continue;
                int letter = static_cast<int>(rank / 2) + 1;
                if (rank % 2) letter = -letter;
                Word w = raag_canonical(B.graph, B.vertices[v] * Word::single(letter));
                auto it = B.index_of_word_.find(w.letters);
                std::size_t target;
                if (it != B.index_of_word_.end()) {
                    target = it->second;
                } else if (expand) {
                    target = B.vertices.size();
                    if (target >= vertex_budget)
                        throw resource_error("cube ball vertex budget (" +
                                             std::to_string(vertex_budget) +
                                             ") exceeded at frontier depth " + std::to_string(d));
                    B.vertices.push_back(w);
                    long long h = 0;
                    for (int x : w.letters) h += x > 0 ? 1 : -1;
                    B.height.push_back(h);
                    B.depth.push_back(d + 1);
                    B.adjacency.emplace_back(2 * g, CubeBall::npos);
                    B.index_of_word_[w.letters] = target;
                    next.push_back(target);
                } else {
                    continue;
                }
                B.adjacency[v][rank] = target;
                B.adjacency[target][rank % 2 ? rank - 1 : rank + 1] = v;
            }
        }
        level = std::move(next);
    }

    // Cubes: for every vertex as base and every simplex of L whose corners
    // all lie in the ball.
    B.cubes_by_dim.assign(static_cast<std::size_t>(B.dim_l) + 2, {});
    for (std::size_t v = 0; v < B.vertex_count(); ++v) {
        for (const auto& s : B.L.simplices()) {
            Cube c;
            c.base = v;
            for (const auto& name : s) c.gens.push_back(static_cast<int>(gen_index(name)));
            std::sort(c.gens.begin(), c.gens.end());
            if (B.corners(c)) B.cubes_by_dim[c.gens.size()].push_back(c);
        }
    }
    B.squares_at_vertex.assign(B.vertex_count(), {});
    if (B.cubes_by_dim.size() > 2) {
        for (std::size_t i = 0; i < B.cubes_by_dim[2].size(); ++i) {
            auto cs = B.corners(B.cubes_by_dim[2][i]);
            for (std::size_t x : *cs) B.squares_at_vertex[x].push_back(i);
        }
    }
    return B;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

HyperplaneSet hyperplanes(const CubeBall& B) {
    // index edges as (base, gen)
    const std::size_t g = B.generators.size();
    std::vector<std::pair<std::size_t, int>> edges;
    std::map<std::pair<std::size_t, int>, std::size_t> edge_index;
    for (std::size_t v = 0; v < B.vertex_count(); ++v)
        for (std::size_t gi = 0; gi < g; ++gi)
            if (B.adjacency[v][2 * gi] != CubeBall::npos) {
                edge_index[{v, static_cast<int>(gi)}] = edges.size();
                edges.push_back({v, static_cast<int>(gi)});
            }

    UnionFind uf(edges.size());
    if (B.cubes_by_dim.size() > 2) {
        for (const Cube& sq : B.cubes_by_dim[2]) {
            const int g0 = sq.gens[0], g1 = sq.gens[1];
            std::size_t b = sq.base;
            std::size_t bg0 = B.adjacency[b][2 * static_cast<std::size_t>(g0)];
            std::size_t bg1 = B.adjacency[b][2 * static_cast<std::size_t>(g1)];
            // opposite edges are dual to the same hyperplane
            uf.unite(edge_index.at({b, g0}), edge_index.at({bg1, g0}));
            uf.unite(edge_index.at({b, g1}), edge_index.at({bg0, g1}));
        }
    }

    HyperplaneSet hs;
    std::map<std::size_t, std::size_t> root_to_plane;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        std::size_t r = uf.find(e);
        auto it = root_to_plane.find(r);
        std::size_t pid;
        if (it == root_to_plane.end()) {
            pid = hs.planes.size();
            root_to_plane[r] = pid;
            hs.planes.push_back(Hyperplane{pid, {}, {}, false});
        } else {
            pid = it->second;
        }
        hs.planes[pid].dual_edges.push_back(edges[e]);
        hs.of_edge[edges[e]] = pid;
    }

    // Halfspaces: remove the class's edges and 2-color the rest.
    for (auto& H : hs.planes) {
        std::set<std::pair<std::size_t, int>> removed(H.dual_edges.begin(), H.dual_edges.end());
        std::vector<int> comp(B.vertex_count(), 0);
        int ncomp = 0;
        for (std::size_t s = 0; s < B.vertex_count(); ++s) {
            if (comp[s] != 0) continue;
            ++ncomp;
            if (ncomp > 2) break;
            comp[s] = ncomp;
            std::queue<std::size_t> q;
            q.push(s);
            while (!q.empty()) {
                std::size_t v = q.front();
                q.pop();
                for (std::size_t rank = 0; rank < 2 * g; ++rank) {
                    std::size_t u = B.adjacency[v][rank];
                    if (u == CubeBall::npos || comp[u] != 0) continue;
                    const int gi = static_cast<int>(rank / 2);
                    const std::size_t base = rank % 2 ? u : v;
                    if (removed.count({base, gi})) continue;
                    comp[u] = comp[v];
                    q.push(u);
                }
            }
        }
        if (ncomp == 2) {
            H.separating = true;
            H.side.resize(B.vertex_count());
            for (std::size_t v = 0; v < B.vertex_count(); ++v)
                H.side[v] = comp[v] == 1 ? 1 : -1;
        } else {
            // boundary truncation artifact; excluded from path computations
            H.separating = false;
        }
    }
    return hs;
}

bool is_interior_vertex(const CubeBall& B, std::size_t v) {
    return B.depth[v] + static_cast<std::size_t>(B.dim_l) + 1 <= B.radius;
}

MorseLinks morse_links(const CubeBall& B, std::size_t v) {
    if (!is_interior_vertex(B, v))
        throw input_error("morse links need an interior vertex: require depth + dim(L) + 1 <= R, "
                          "got depth " + std::to_string(B.depth[v]) + " with R " +
                          std::to_string(B.radius));
    const std::size_t g = B.generators.size();
    std::vector<FlagComplex::Simplex> asc, desc, full;
    std::vector<std::string> asc_vs, desc_vs;
    std::set<std::string> full_vs;
    // vertices of the links: edge ends at v
    for (std::size_t gi = 0; gi < g; ++gi) {
        if (B.adjacency[v][2 * gi] != CubeBall::npos) {
            asc_vs.push_back(B.generators[gi]);
            full_vs.insert(B.generators[gi] + "-"); // ascending direction
        }
        if (B.adjacency[v][2 * gi + 1] != CubeBall::npos) {
            desc_vs.push_back(B.generators[gi]);
            full_vs.insert(B.generators[gi] + "+");
        }
    }
    // simplices: cubes at v; the cube's position relative to v decides signs
    for (std::size_t dim = 1; dim < B.cubes_by_dim.size(); ++dim) {
        for (const Cube& c : B.cubes_by_dim[dim]) {
            auto cs = B.corners(c);
            auto pos = std::find(cs->begin(), cs->end(), v);
            if (pos == cs->end()) continue;
            const std::size_t mask = static_cast<std::size_t>(pos - cs->begin());
            FlagComplex::Simplex fs;
            for (std::size_t i = 0; i < c.gens.size(); ++i) {
                const bool used = mask & (1u << i); // v sits above base in gens[i]
                fs.push_back(B.generators[c.gens[i]] + (used ? "+" : "-"));
            }
            std::sort(fs.begin(), fs.end());
            full.push_back(fs);
            if (mask == 0) {
                FlagComplex::Simplex s;
                for (int gi : c.gens) s.push_back(B.generators[gi]);
                std::sort(s.begin(), s.end());
                asc.push_back(s);
            }
            if (mask + 1 == (1u << c.gens.size())) {
                FlagComplex::Simplex s;
                for (int gi : c.gens) s.push_back(B.generators[gi]);
                std::sort(s.begin(), s.end());
                desc.push_back(s);
            }
        }
    }
    MorseLinks out;
    out.ascending = FlagComplex::build(asc_vs, asc, false);
    out.descending = FlagComplex::build(desc_vs, desc, false);
    out.full = FlagComplex::build({full_vs.begin(), full_vs.end()}, full, false);
    return out;
}

std::string cube_edge_id(const CubeBall& B, std::size_t base, int gen) {
    return B.vertex_name(base) + "|" + B.generators[static_cast<std::size_t>(gen)];
}

std::string cube_square_id(const CubeBall& B, const Cube& sq) {
    return "sq(" + B.vertex_name(sq.base) + "|" + B.generators[sq.gens[0]] + "," +
           B.generators[sq.gens[1]] + ")";
}

TwoComplex cube_ball_two_skeleton(const CubeBall& B) {
    std::vector<std::string> vertices;
    for (std::size_t v = 0; v < B.vertex_count(); ++v) vertices.push_back(B.vertex_name(v));
    std::vector<Edge> edges;
    const std::size_t g = B.generators.size();
    for (std::size_t v = 0; v < B.vertex_count(); ++v)
        for (std::size_t gi = 0; gi < g; ++gi) {
            std::size_t u = B.adjacency[v][2 * gi];
            if (u != CubeBall::npos)
                edges.push_back(Edge{cube_edge_id(B, v, static_cast<int>(gi)), B.vertex_name(v),
                                     B.vertex_name(u)});
        }
    std::vector<Face> faces;
    if (B.cubes_by_dim.size() > 2) {
        for (const Cube& sq : B.cubes_by_dim[2]) {
            const int g0 = sq.gens[0], g1 = sq.gens[1];
            std::size_t b = sq.base;
            std::size_t bg0 = B.adjacency[b][2 * static_cast<std::size_t>(g0)];
            std::size_t bg1 = B.adjacency[b][2 * static_cast<std::size_t>(g1)];
            Face f;
            f.id = cube_square_id(B, sq);
            f.cycle = {EdgeRef{cube_edge_id(B, b, g0), false},
                       EdgeRef{cube_edge_id(B, bg0, g1), false},
                       EdgeRef{cube_edge_id(B, bg1, g0), true},
                       EdgeRef{cube_edge_id(B, b, g1), true}};
            faces.push_back(std::move(f));
        }
    }
    return TwoComplex(std::move(vertices), std::move(edges), std::move(faces));
}

} // namespace hfill
