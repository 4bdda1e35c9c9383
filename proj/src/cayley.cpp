#include "hfill/cayley.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <queue>
#include <set>

#include "hfill/smith.hpp"

namespace hfill {

using nlohmann::ordered_json;

std::string CayleyBall::vertex_id(std::size_t v) const {
    if (vertices[v].empty()) return "1";
    return word_to_string(vertices[v], generators);
}

std::vector<CayleyBall::BallEdge> CayleyBall::edges() const {
    std::vector<BallEdge> out;
    const std::size_t g = generators.size();
    for (std::size_t v = 0; v < vertices.size(); ++v)
        for (std::size_t gi = 0; gi < g; ++gi) {
            std::size_t u = adjacency[v][2 * gi];
            if (u != npos) out.push_back(BallEdge{v, static_cast<int>(gi) + 1, u});
        }
    return out;
}

std::optional<std::size_t> CayleyBall::find_vertex_of_word(const Word& w,
                                                           const EqualityOracle& o) const {
    auto key = o.canonical_key(w);
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        if (key) {
            if (*o.canonical_key(vertices[v]) == *key) return v;
        } else if (o.is_trivial(w * vertices[v].inverse())) {
            return v;
        }
    }
    return std::nullopt;
}

std::string CayleyBall::to_json() const {
    ordered_json j;
    j["radius"] = radius;
    j["saturated"] = saturated;
    ordered_json vs = ordered_json::array();
    for (std::size_t v = 0; v < vertices.size(); ++v) vs.push_back(vertex_id(v));
    j["vertices"] = vs;
    ordered_json es = ordered_json::array();
    for (const auto& e : edges())
        es.push_back({{"from", vertex_id(e.from)},
                      {"gen", generators[e.generator - 1]},
                      {"to", vertex_id(e.to)}});
    j["edges"] = es;
    return j.dump();
}

CayleyBall cayley_ball(const Presentation& p, const EqualityOracle& o, std::size_t R,
                       std::size_t vertex_budget) {
    if (o.generators() != p.generators)
        throw input_error("oracle generators do not match the presentation");
    const std::size_t g = p.generators.size();
    CayleyBall ball;
    ball.radius = R;
    ball.generators = p.generators;

    const bool keyed = o.canonical_key(Word{}).has_value();
    std::map<std::string, std::size_t> by_key;       // canonical key -> vertex
    std::map<std::vector<int>, std::size_t> by_form; // reduced form cache (dehn)
    std::vector<Word> reduced_form;                  // per vertex, dehn path only

    auto reduce_dehn = [&](const Word& w) { return o.dehn_reduce(w).result; };

    ball.vertices.push_back(Word{});
    ball.depth.push_back(0);
    ball.adjacency.emplace_back(2 * g, CayleyBall::npos);
    if (keyed) {
        by_key[*o.canonical_key(Word{})] = 0;
    } else {
        Word r = reduce_dehn(Word{});
        by_form[r.letters] = 0;
        reduced_form.push_back(r);
    }

    std::vector<std::size_t> level{0};
    for (std::size_t d = 0; d <= R && !level.empty(); ++d) {
        std::vector<std::size_t> next;
        const bool expand = d < R; // at the boundary only connect, never add
        for (std::size_t v : level) {
            for (std::size_t rank = 0; rank < 2 * g; ++rank) {
                if (ball.adjacency[v][rank] != CayleyBall::npos) continue;
                int letter = static_cast<int>(rank / 2) + 1;
                if (rank % 2) letter = -letter;
                Word w = ball.vertices[v] * Word::single(letter);

                std::optional<std::size_t> found;
                if (keyed) {
                    auto it = by_key.find(*o.canonical_key(w));
                    if (it != by_key.end()) found = it->second;
                } else {
                    Word r = reduce_dehn(w);
                    auto it = by_form.find(r.letters);
                    if (it != by_form.end()) {
                        found = it->second;
                    } else {
                        // pairwise comparison against vertices at compatible depth
                        for (std::size_t u = 0; u < ball.vertices.size() && !found; ++u) {
                            if (ball.depth[u] + 1 < d || ball.depth[u] > d + 1) continue;
                            if (o.is_trivial(w * ball.vertices[u].inverse())) found = u;
                        }
                    }
                }

                std::size_t target;
                if (found) {
                    target = *found;
                } else if (expand) {
                    target = ball.vertices.size();
                    if (target >= vertex_budget)
                        throw resource_error("ball vertex budget (" +
                                             std::to_string(vertex_budget) +
                                             ") exceeded at frontier depth " + std::to_string(d));
                    ball.vertices.push_back(w);
                    ball.depth.push_back(d + 1);
                    ball.adjacency.emplace_back(2 * g, CayleyBall::npos);
                    if (keyed) {
                        by_key[*o.canonical_key(w)] = target;
                    } else {
                        Word r = reduce_dehn(w);
                        by_form[r.letters] = target;
                        reduced_form.push_back(r);
                    }
                    next.push_back(target);
                } else {
                    continue; // neighbor outside the ball
                }
                ball.adjacency[v][rank] = target;
                const std::size_t back = rank % 2 ? rank - 1 : rank + 1;
                ball.adjacency[target][back] = v;
            }
        }
        level = std::move(next);
        if (level.empty() && d < R) ball.saturated = true;
    }
    if (!level.empty()) {
        // Radius reached with a live frontier: the group keeps growing.
        ball.saturated = false;
    } else if (R == 0) {
        // A radius-0 ball says nothing about saturation.
        ball.saturated = false;
    }
    return ball;
}

std::optional<TracedPath> trace_word(const CayleyBall& ball, std::size_t start, const Word& w) {
    TracedPath out;
    out.visited.push_back(start);
    std::size_t cur = start;
    for (int letter : w.letters) {
        const std::size_t gi = static_cast<std::size_t>(std::abs(letter)) - 1;
        if (letter > 0) {
            std::size_t u = ball.adjacency[cur][2 * gi];
            if (u == CayleyBall::npos) return std::nullopt;
            out.chain.add(ball.vertex_id(cur) + "|" + ball.generators[gi], 1);
            cur = u;
        } else {
            std::size_t u = ball.adjacency[cur][2 * gi + 1];
            if (u == CayleyBall::npos) return std::nullopt;
            out.chain.add(ball.vertex_id(u) + "|" + ball.generators[gi], -1);
            cur = u;
        }
        out.visited.push_back(cur);
    }
    out.endpoint = cur;
    return out;
}

RelativeComplexResult relative_cayley_complex(const CayleyBall& ball,
                                              const std::vector<Word>& relators,
                                              const std::vector<std::string>& generators) {
    if (generators != ball.generators)
        throw input_error("relator generators do not match the ball");
    RelativeComplexResult res;
    std::vector<std::string> vertices;
    for (std::size_t v = 0; v < ball.vertex_count(); ++v) vertices.push_back(ball.vertex_id(v));
    std::vector<Edge> edges;
    for (const auto& e : ball.edges())
        edges.push_back(Edge{ball.vertex_id(e.from) + "|" + generators[e.generator - 1],
                             ball.vertex_id(e.from), ball.vertex_id(e.to)});
    std::vector<Face> faces;
    for (std::size_t v = 0; v < ball.vertex_count(); ++v) {
        for (std::size_t k = 0; k < relators.size(); ++k) {
            std::size_t cur = v;
            Face f;
            bool inside = true;
            for (int letter : relators[k].letters) {
                const std::size_t gi = static_cast<std::size_t>(std::abs(letter)) - 1;
                if (letter > 0) {
                    std::size_t u = ball.adjacency[cur][2 * gi];
                    if (u == CayleyBall::npos) {
                        inside = false;
                        break;
                    }
                    f.cycle.push_back(EdgeRef{ball.vertex_id(cur) + "|" + generators[gi], false});
                    cur = u;
                } else {
                    std::size_t u = ball.adjacency[cur][2 * gi + 1];
                    if (u == CayleyBall::npos) {
                        inside = false;
                        break;
                    }
                    f.cycle.push_back(EdgeRef{ball.vertex_id(u) + "|" + generators[gi], true});
                    cur = u;
                }
            }
            if (!inside) {
                ++res.skipped_loops;
                continue;
            }
            if (cur != v) throw internal_error("relator trace did not close");
            f.id = "r" + std::to_string(k + 1) + "@" + ball.vertex_id(v);
            faces.push_back(std::move(f));
        }
    }
    res.complex = TwoComplex(std::move(vertices), std::move(edges), std::move(faces));
    return res;
}

H1Evidence h1_evidence(const Presentation& p, const EqualityOracle& o, std::size_t R,
                       std::size_t L, std::size_t vertex_budget) {
    if (R < L) throw input_error("h1 evidence requires radius >= length bound");
    H1Evidence ev;
    ev.radius = R;
    ev.length_bound = L;
    CayleyBall ball = cayley_ball(p, o, R, vertex_budget);
    RelativeComplexResult rel = relative_cayley_complex(ball, p.relators, p.generators);
    ev.faces = rel.complex.faces().size();
    ev.skipped_loops = rel.skipped_loops;

    if (ball.saturated) {
        HomologySummary h = homology(rel.complex);
        ev.exact = true;
        ev.conclusive = true;
        ev.h1_trivial = h.betti[1] == 0 && h.torsion[1].empty();
        return ev;
    }

    // Bounded evidence: every unfillable 1-cycle of size <= L contains an
    // unfillable loop of length <= L, so loops suffice.
    HomologySummary hball = homology(rel.complex);
    if (hball.betti[1] == 0 && hball.torsion[1].empty()) {
        // every cycle in the ball fills inside the ball
        return ev;
    }

    SmithResult snf = smith_normal_form(boundary_matrix_2(rel.complex), true);
    const std::size_t rows = rel.complex.edges().size();
    const std::size_t cols = rel.complex.faces().size();
    auto fillable = [&](const ChainVec& cycle) {
        std::vector<bigint> b(rows, 0);
        for (const auto& [id, c] : cycle.coefficients()) b[rel.complex.edge_index(id)] = c;
        return solve_integer(snf, rows, cols, b).has_value();
    };

    // recursive loop enumeration from every vertex
    const std::size_t g = ball.generators.size();
    std::map<std::string, std::pair<std::size_t, Word>> cycles;
    for (std::size_t start = 0; start < ball.vertex_count(); ++start) {
        std::vector<std::size_t> dist(ball.vertex_count(), CayleyBall::npos);
        std::queue<std::size_t> q;
        dist[start] = 0;
        q.push(start);
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop();
            for (std::size_t r = 0; r < 2 * g; ++r) {
                std::size_t u = ball.adjacency[v][r];
                if (u != CayleyBall::npos && dist[u] == CayleyBall::npos) {
                    dist[u] = dist[v] + 1;
                    q.push(u);
                }
            }
        }
        std::vector<int> word;
        ChainVec chain(1);
        std::function<void(std::size_t)> dfs = [&](std::size_t cur) {
            if (cur == start && !word.empty() && !(word.front() == -word.back())) {
                if (!chain.empty()) {
                    std::string key = chain.to_json();
                    if (!cycles.count(key)) cycles[key] = {start, Word{word}};
                }
            }
            if (word.size() == L) return;
            for (std::size_t rank = 0; rank < 2 * g; ++rank) {
                int letter = static_cast<int>(rank / 2) + 1;
                if (rank % 2) letter = -letter;
                if (!word.empty() && word.back() == -letter) continue;
                std::size_t nxt = ball.adjacency[cur][rank];
                if (nxt == CayleyBall::npos) continue;
                if (dist[nxt] + word.size() + 1 > L) continue;
                const std::size_t gi = rank / 2;
                const std::string eid = rank % 2 == 0
                                            ? ball.vertex_id(cur) + "|" + ball.generators[gi]
                                            : ball.vertex_id(nxt) + "|" + ball.generators[gi];
                chain.add(eid, rank % 2 == 0 ? 1 : -1);
                word.push_back(letter);
                dfs(nxt);
                word.pop_back();
                chain.add(eid, rank % 2 == 0 ? -1 : 1);
            }
        };
        dfs(start);
    }
    for (const auto& [key, loop] : cycles) {
        ChainVec cycle = ChainVec::from_json(1, key);
        if (!fillable(cycle)) {
            ev.unfillable_loops.push_back(ball.vertex_id(loop.first) + " : " +
                                          word_to_string(loop.second, ball.generators));
        }
    }
    return ev;
}

} // namespace hfill
