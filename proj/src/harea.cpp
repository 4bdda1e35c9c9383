#include "hfill/harea.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace hfill {

using nlohmann::ordered_json;

std::string to_string(FillStatus s) {
    switch (s) {
        case FillStatus::OptimalOnSupport: return "optimal-on-support";
        case FillStatus::OptimalGlobal: return "optimal-global";
        case FillStatus::InfeasibleOnSupport: return "infeasible-on-support";
    }
    return "?";
}

std::string FillingCertificate::to_json() const {
    ordered_json j;
    j["cost"] = cost;
    ordered_json ch = ordered_json::object();
    for (const auto& [id, c] : chain.coefficients()) ch[id] = c;
    j["chain"] = ch;
    j["status"] = to_string(status);
    if (support_radius >= 0) j["supportRadius"] = support_radius;
    if (!note.empty()) j["note"] = note;
    return j.dump();
}

FillingSolver::FillingSolver(const TwoComplex& X) : X_(X) {
    for (const auto& f : X_.faces()) lmax_ = std::max(lmax_, f.cycle.size());
    snf_ = smith_normal_form(boundary_matrix_2(X_), true);

    const std::size_t nf = X_.faces().size();
    face_boundary_.resize(nf);
    faces_at_edge_.assign(X_.edges().size(), {});
    for (std::size_t fi = 0; fi < nf; ++fi) {
        std::map<std::size_t, long long> net;
        for (const auto& ref : X_.faces()[fi].cycle)
            net[X_.edge_index(ref.edge)] += ref.reversed ? -1 : 1;
        for (const auto& [ei, c] : net)
            if (c != 0) {
                face_boundary_[fi].emplace_back(ei, c);
                faces_at_edge_[ei].push_back(fi);
            }
    }
    // Sorted face ids define the lexicographic tie-break order.
    const auto face_id_less = [&](std::size_t a, std::size_t b) {
        return X_.faces()[a].id < X_.faces()[b].id;
    };
    sorted_face_index_.resize(nf);
    for (std::size_t i = 0; i < nf; ++i) sorted_face_index_[i] = i;
    std::sort(sorted_face_index_.begin(), sorted_face_index_.end(), face_id_less);
    for (auto& fs : faces_at_edge_) std::sort(fs.begin(), fs.end(), face_id_less);
    for (std::size_t i = 0; i < nf; ++i) sorted_face_ids_.push_back(X_.faces()[i].id);
}

bool FillingSolver::feasible(const ChainVec& gamma, bigint* norm_out) const {
    std::vector<bigint> b(X_.edges().size(), 0);
    for (const auto& [id, c] : gamma.coefficients()) b[X_.edge_index(id)] = c;
    auto x = solve_integer(snf_, X_.edges().size(), X_.faces().size(), b);
    if (!x) return false;
    if (norm_out) {
        *norm_out = 0;
        for (const auto& v : *x) *norm_out += v < 0 ? bigint(-v) : v;
    }
    return true;
}

namespace {

// Depth-first branch and bound over face coefficients. Branching is guided:
// at each node take the least (by edge id) edge with nonzero residual and
// branch over the undecided faces whose net boundary meets it. Admissible
// lower bound: ceil(|residual|_1 / Lmax).
struct FillSearch {
    const std::vector<std::vector<std::pair<std::size_t, long long>>>& face_boundary;
    const std::vector<std::vector<std::size_t>>& faces_at_edge;
    const std::vector<std::size_t>& sorted_faces; // face indices in id order
    const std::vector<std::size_t>& edge_rank;    // edge index -> rank in id order
    long long lmax;

    std::vector<long long> residual;
    long long res_norm = 0;
    std::vector<char> decided;
    std::vector<long long> value;
    long long budget = 0;

    bool collect_lex_least = false;
    bool found = false;
    std::vector<long long> best;
    std::uint64_t nodes = 0;
    std::uint64_t node_budget = 200000000ull;

    long long lower_bound() const { return (res_norm + lmax - 1) / lmax; }

    void apply(std::size_t fi, long long k) {
        for (const auto& [ei, c] : face_boundary[fi]) {
            res_norm -= std::llabs(residual[ei]);
            residual[ei] -= k * c;
            res_norm += std::llabs(residual[ei]);
        }
    }

    bool lex_less(const std::vector<long long>& a, const std::vector<long long>& b) const {
        for (std::size_t idx : sorted_faces)
            if (a[idx] != b[idx]) return a[idx] < b[idx];
        return false;
    }

    void record() {
        found = true;
        if (!collect_lex_least) {
            best = value;
            return;
        }
        if (best.empty() || lex_less(value, best)) best = value;
    }

    // returns true when pass 1 can stop (existence established)
    bool dfs(long long cost) {
        if (++nodes > node_budget)
            throw resource_error("filling search node budget exceeded");
        if (res_norm == 0) {
            record();
            return !collect_lex_least;
        }
        if (cost + lower_bound() > budget) return false;
        // least residual edge by id order
        std::size_t best_edge = static_cast<std::size_t>(-1);
        std::size_t best_rank = static_cast<std::size_t>(-1);
        for (std::size_t ei = 0; ei < residual.size(); ++ei)
            if (residual[ei] != 0 && edge_rank[ei] < best_rank) {
                best_rank = edge_rank[ei];
                best_edge = ei;
            }
        return dfs_faces(best_edge, 0, cost);
    }

    bool dfs_faces(std::size_t e, std::size_t i, long long cost) {
        const auto& cands = faces_at_edge[e];
        // skip already-decided candidates
        while (i < cands.size() && decided[cands[i]]) ++i;
        if (i == cands.size()) return false; // nothing can fix this edge
        const std::size_t fi = cands[i];
        const long long room = budget - cost;

        // candidate values, preferring the one that zeroes this edge
        long long ce = 0;
        for (const auto& [ei, c] : face_boundary[fi])
            if (ei == e) ce = c;
        long long k0 = ce != 0 ? residual[e] / ce : 0;

        std::vector<long long> ks;
        for (long long k = 1; k <= room; ++k) {
            ks.push_back(k);
            ks.push_back(-k);
        }
        std::stable_sort(ks.begin(), ks.end(), [&](long long a, long long b) {
            return std::llabs(a - k0) < std::llabs(b - k0);
        });

        decided[fi] = 1;
        for (long long k : ks) {
            value[fi] = k;
            apply(fi, k);
            bool stop = dfs(cost + std::llabs(k));
            apply(fi, -k);
            value[fi] = 0;
            if (stop) {
                decided[fi] = 0;
                return true;
            }
        }
        // the zero branch: leave this face out, try the next candidate
        bool stop = dfs_faces(e, i + 1, cost);
        decided[fi] = 0;
        return stop;
    }
};

} // namespace

FillingCertificate FillingSolver::harea(const ChainVec& gamma, bool complete_complex,
                                        long long support_radius) const {
    if (gamma.dimension() != 1) throw input_error("harea expects a 1-chain");
    for (const auto& [id, c] : gamma.coefficients()) X_.edge_index(id);
    if (!boundary_apply(X_, gamma).empty())
        throw input_error("harea input is not a cycle (nonzero boundary)");

    FillingCertificate cert;
    cert.cycle = gamma;
    cert.support_radius = support_radius;
    if (gamma.empty()) {
        cert.cost = 0;
        cert.status = complete_complex ? FillStatus::OptimalGlobal : FillStatus::OptimalOnSupport;
        return cert;
    }

    bigint cap = 0;
    if (!feasible(gamma, &cap)) {
        cert.status = FillStatus::InfeasibleOnSupport;
        cert.note = "no integer 2-chain on this support has the given boundary";
        return cert;
    }

    // edge rank by id order
    std::vector<std::size_t> order(X_.edges().size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return X_.edges()[a].id < X_.edges()[b].id;
    });
    std::vector<std::size_t> edge_rank(order.size());
    for (std::size_t r = 0; r < order.size(); ++r) edge_rank[order[r]] = r;

    FillSearch search{face_boundary_, faces_at_edge_, sorted_face_index_, edge_rank,
                      static_cast<long long>(lmax_)};
    search.residual.assign(X_.edges().size(), 0);
    for (const auto& [id, c] : gamma.coefficients()) {
        search.residual[X_.edge_index(id)] = c;
        search.res_norm += std::llabs(c);
    }
    search.decided.assign(X_.faces().size(), 0);
    search.value.assign(X_.faces().size(), 0);

    // Pass 1: iterative deepening to find the optimal cost.
    long long optimum = -1;
    for (long long budget_c = search.lower_bound();; ++budget_c) {
        if (cap < budget_c) throw internal_error("filling deepening passed the feasible cap");
        search.budget = budget_c;
        search.found = false;
        search.collect_lex_least = false;
        if (search.dfs(0)) {
            long long cost = 0;
            for (long long v : search.best) cost += std::llabs(v);
            optimum = cost;
            break;
        }
        if (search.found) { // defensive; found implies stop in pass 1
            long long cost = 0;
            for (long long v : search.best) cost += std::llabs(v);
            optimum = cost;
            break;
        }
    }

    // Pass 2: exhaust cost-optimal solutions, keep the lexicographically
    // least coefficient vector.
    search.budget = optimum;
    search.found = false;
    search.best.clear();
    search.collect_lex_least = true;
    search.dfs(0);
    if (!search.found) throw internal_error("filling pass 2 lost the optimum");

    cert.cost = 0;
    for (std::size_t fi = 0; fi < search.best.size(); ++fi) {
        if (search.best[fi] != 0) {
            cert.chain.add(X_.faces()[fi].id, search.best[fi]);
            cert.cost += std::llabs(search.best[fi]);
        }
    }
    if (cert.cost != optimum) throw internal_error("filling cost mismatch");
    if (!(boundary_apply(X_, cert.chain) == gamma))
        throw internal_error("filling certificate does not bound the cycle");
    cert.status = complete_complex ? FillStatus::OptimalGlobal : FillStatus::OptimalOnSupport;
    return cert;
}

FillingCertificate harea(const TwoComplex& X, const ChainVec& gamma, bool complete_complex,
                         long long support_radius) {
    FillingSolver solver(X);
    return solver.harea(gamma, complete_complex, support_radius);
}

} // namespace hfill
