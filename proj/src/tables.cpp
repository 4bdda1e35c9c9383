#include "hfill/tables.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <queue>
#include <sstream>
#include <thread>

namespace hfill {

std::string FillingTable::kind_name() const {
    switch (kind) {
        case Kind::DeltaAb: return "delta-ab";
        case Kind::Fa: return "fa";
        case Kind::ClosureOfDeltaAb: return "closure-of-delta-ab";
    }
    return "?";
}

std::string FillingTable::to_csv(const std::string& header_comment) const {
    std::ostringstream os;
    if (!header_comment.empty()) os << "# " << header_comment << "\n";
    os << "# kind=" << kind_name() << " n_max=" << n_max << " radius=" << radius << "\n";
    os << "n,value,status,witness\n";
    for (std::size_t n = 1; n <= n_max; ++n)
        os << n << ',' << values[n - 1] << ',' << status[n - 1] << ",\"" << witness[n - 1]
           << "\"\n";
    return os.str();
}

namespace {

struct LoopClass {
    ChainVec cycle{1};
    std::size_t min_length = 0;
    Word witness; // lexicographically least canonical loop word seen
};

// Cyclically reduced based loop words at the basepoint, up to length n_max,
// grouped by cycle class.
std::map<std::string, LoopClass> basepoint_loop_classes(const CayleyBall& ball,
                                                        std::size_t n_max) {
    const std::size_t g = ball.generators.size();
    std::vector<std::size_t> dist(ball.vertex_count(), CayleyBall::npos);
    {
        std::queue<std::size_t> q;
        dist[0] = 0;
        q.push(0);
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
    }
    std::map<std::string, LoopClass> classes;
    std::vector<int> word;
    ChainVec chain(1);
    std::function<void(std::size_t)> dfs = [&](std::size_t cur) {
        if (cur == 0 && !word.empty() && word.front() != -word.back()) {
            Word canon = cyclic_canonical(Word{word});
            std::string key = chain.to_json();
            auto it = classes.find(key);
            if (it == classes.end()) {
                classes[key] = LoopClass{chain, word.size(), canon};
            } else {
                if (word.size() < it->second.min_length) it->second.min_length = word.size();
                if (canon < it->second.witness) it->second.witness = canon;
            }
        }
        if (word.size() == n_max) return;
        for (std::size_t rank = 0; rank < 2 * g; ++rank) {
            int letter = static_cast<int>(rank / 2) + 1;
            if (rank % 2) letter = -letter;
            if (!word.empty() && word.back() == -letter) continue; // keep words reduced
            std::size_t nxt = ball.adjacency[cur][rank];
            if (nxt == CayleyBall::npos) continue;
            if (dist[nxt] + word.size() + 1 > n_max) continue;
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
    dfs(0);
    return classes;
}

// Deterministic parallel map: results land by index.
std::vector<FillingCertificate> run_harea_batch(const FillingSolver& solver,
                                                const std::vector<const ChainVec*>& cycles,
                                                bool complete, long long radius, int jobs) {
    std::vector<FillingCertificate> out(cycles.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < cycles.size(); ++i)
            out[i] = solver.harea(*cycles[i], complete, radius);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= cycles.size()) return;
                try {
                    out[i] = solver.harea(*cycles[i], complete, radius);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    return out;
}

} // namespace

FillingTable delta_ab_table(const Presentation& p, const EqualityOracle& o, std::size_t n_max,
                            std::size_t R, int jobs, std::size_t vertex_budget) {
    if (R < n_max) throw input_error("delta-ab requires radius >= n_max");
    CayleyBall ball = cayley_ball(p, o, R, vertex_budget);
    RelativeComplexResult rel = relative_cayley_complex(ball, p.relators, p.generators);
    FillingSolver solver(rel.complex);

    auto classes = basepoint_loop_classes(ball, n_max);
    std::vector<const ChainVec*> cycles;
    std::vector<const LoopClass*> order;
    for (const auto& [key, cls] : classes) {
        order.push_back(&cls);
        cycles.push_back(&cls.cycle);
    }
    auto certs =
        run_harea_batch(solver, cycles, ball.saturated, static_cast<long long>(R), jobs);

    FillingTable table;
    table.kind = FillingTable::Kind::DeltaAb;
    table.n_max = n_max;
    table.radius = R;
    table.values.assign(n_max, 0);
    table.status.assign(n_max, ball.saturated ? "exact" : "lower-bound-only");
    table.witness.assign(n_max, "");
    for (std::size_t n = 1; n <= n_max; ++n) {
        long long best = 0;
        const LoopClass* best_cls = nullptr;
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (order[i]->min_length > n) continue;
            // A loop may have no filling inside a truncated ball; the entry
            // is already flagged lower-bound-only in that regime.
            if (certs[i].status == FillStatus::InfeasibleOnSupport) continue;
            if (certs[i].cost > best ||
                (best_cls && certs[i].cost == best && order[i]->witness < best_cls->witness)) {
                best = certs[i].cost;
                best_cls = order[i];
            }
        }
        table.values[n - 1] = best;
        table.witness[n - 1] =
            best_cls ? word_to_string(best_cls->witness, p.generators) : std::string{};
    }
    return table;
}

std::vector<long long> superadditive_closure_values(const std::vector<long long>& values) {
    const std::size_t n_max = values.size();
    std::vector<long long> closure(n_max, 0);
    for (std::size_t n = 1; n <= n_max; ++n) {
        long long best = values[n - 1];
        for (std::size_t j = 1; j < n; ++j)
            best = std::max(best, closure[j - 1] + closure[n - j - 1]);
        closure[n - 1] = best;
    }
    return closure;
}

FillingTable superadditive_closure(const FillingTable& t) {
    FillingTable out;
    out.kind = FillingTable::Kind::ClosureOfDeltaAb;
    out.n_max = t.n_max;
    out.radius = t.radius;
    out.values = superadditive_closure_values(t.values);
    out.status = t.status;
    out.witness.assign(t.n_max, "");
    // witness: the maximizing partition
    for (std::size_t n = 1; n <= t.n_max; ++n) {
        // reconstruct a partition achieving the closure value
        std::vector<std::size_t> parts;
        std::function<void(std::size_t)> split = [&](std::size_t m) {
            for (std::size_t j = 1; j < m; ++j) {
                if (out.values[j - 1] + out.values[m - j - 1] == out.values[m - 1]) {
                    split(j);
                    split(m - j);
                    return;
                }
            }
            parts.push_back(m);
        };
        split(n);
        std::sort(parts.begin(), parts.end());
        std::ostringstream os;
        for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "+" : "") << parts[i];
        out.witness[n - 1] = os.str();
    }
    return out;
}

FillingTable fa_table(const Presentation& p, const EqualityOracle& o, std::size_t n_max,
                      std::size_t R, FaMode mode, int jobs, std::size_t vertex_budget) {
    if (n_max == 0) {
        FillingTable empty;
        empty.kind = mode == FaMode::ViaClosure ? FillingTable::Kind::ClosureOfDeltaAb
                                                : FillingTable::Kind::Fa;
        empty.radius = R;
        return empty;
    }
    if (mode == FaMode::ViaClosure)
        return superadditive_closure(delta_ab_table(p, o, n_max, R, jobs, vertex_budget));

    if (R < n_max) throw input_error("fa-table requires radius >= n_max");
    CayleyBall ball = cayley_ball(p, o, R, vertex_budget);
    RelativeComplexResult rel = relative_cayley_complex(ball, p.relators, p.generators);
    FillingSolver solver(rel.complex);
    const std::size_t ne = rel.complex.edges().size();
    if (ne > 40)
        throw resource_error("direct-cycles enumeration limited to 40 edges, got " +
                             std::to_string(ne));

    // All integer 1-cycles with |z|_1 <= n_max, up to sign.
    std::map<std::string, ChainVec> cycles;
    std::vector<long long> z(ne, 0);
    std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long budget) {
        if (i == ne) {
            ChainVec c(1);
            for (std::size_t k = 0; k < ne; ++k)
                if (z[k] != 0) c.add(rel.complex.edges()[k].id, z[k]);
            if (c.empty()) return;
            if (!boundary_apply(rel.complex, c).empty()) return;
            // dedupe up to global sign
            ChainVec flip(1);
            for (const auto& [id, v] : c.coefficients()) flip.add(id, -v);
            std::string key = std::min(c.to_json(), flip.to_json());
            cycles.emplace(key, c);
            return;
        }
        for (long long v = -budget; v <= budget; ++v) {
            z[i] = v;
            rec(i + 1, budget - std::llabs(v));
        }
        z[i] = 0;
    };
    rec(0, static_cast<long long>(n_max));

    std::vector<const ChainVec*> cycle_ptrs;
    std::vector<const ChainVec*> order;
    for (const auto& [key, c] : cycles) {
        order.push_back(&c);
        cycle_ptrs.push_back(&c);
    }
    auto certs =
        run_harea_batch(solver, cycle_ptrs, ball.saturated, static_cast<long long>(R), jobs);

    FillingTable table;
    table.kind = FillingTable::Kind::Fa;
    table.n_max = n_max;
    table.radius = R;
    table.values.assign(n_max, 0);
    table.status.assign(n_max, ball.saturated ? "exact" : "lower-bound-only");
    table.witness.assign(n_max, "");
    for (std::size_t n = 1; n <= n_max; ++n) {
        long long best = 0;
        const ChainVec* best_cycle = nullptr;
        for (std::size_t i = 0; i < order.size(); ++i) {
            if (order[i]->norm1() > static_cast<long long>(n)) continue;
            if (certs[i].status == FillStatus::InfeasibleOnSupport) continue; // not fillable here
            if (certs[i].cost > best) {
                best = certs[i].cost;
                best_cycle = order[i];
            }
        }
        table.values[n - 1] = best;
        table.witness[n - 1] = best_cycle ? best_cycle->to_json() : std::string{};
    }
    return table;
}

} // namespace hfill
