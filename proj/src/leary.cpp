#include "hfill/leary.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hfill {

Rational parse_rational(const std::string& text) {
    Rational r;
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            r.num = std::stoll(text);
            r.den = 1;
        } else {
            r.num = std::stoll(text.substr(0, slash));
            r.den = std::stoll(text.substr(slash + 1));
        }
    } catch (const std::exception&) {
        throw input_error("bad rational: " + text);
    }
    if (r.den <= 0) throw input_error("rational denominator must be positive");
    return r;
}

CPrimeReport c_prime_check(const Presentation& p, const Rational& lambda) {
    p.validate();
    CPrimeReport rep;
    for (const auto& r : p.relators) rep.relator_lengths.push_back(r.size());
    rep.max_piece_per_relator.assign(p.relators.size(), 0);

    // Symmetrized set with provenance: which relators each word belongs to.
    std::map<std::vector<int>, std::set<std::size_t>> sym;
    for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
        const Word& r = p.relators[ri];
        for (const Word& base : {r, r.inverse()})
            for (std::size_t k = 0; k < base.size(); ++k) sym[rotate(base, k).letters].insert(ri);
    }
    std::vector<std::vector<int>> words;
    std::vector<std::set<std::size_t>> owners;
    for (auto& [w, os] : sym) {
        words.push_back(w);
        owners.push_back(os);
    }

    // A common prefix of two distinct symmetrized words is a piece on every
    // relator owning either occurrence.
    for (std::size_t a = 0; a < words.size(); ++a) {
        for (std::size_t b = a + 1; b < words.size(); ++b) {
            std::size_t d = 0;
            const std::size_t cap = std::min(words[a].size(), words[b].size());
            while (d < cap && words[a][d] == words[b][d]) ++d;
            if (d == 0) continue;
            rep.max_piece = std::max(rep.max_piece, d);
            for (std::size_t ri : owners[a])
                rep.max_piece_per_relator[ri] = std::max(rep.max_piece_per_relator[ri], d);
            for (std::size_t ri : owners[b])
                rep.max_piece_per_relator[ri] = std::max(rep.max_piece_per_relator[ri], d);
        }
    }
    // A word owned by two relator positions is a piece against itself
    // (distinct elements requirement already handled by dedup: a word owned
    // by >1 relator occurs in distinct relators, so its full length counts).
    for (std::size_t i = 0; i < words.size(); ++i)
        if (owners[i].size() > 1) {
            rep.max_piece = std::max(rep.max_piece, words[i].size());
            for (std::size_t ri : owners[i])
                rep.max_piece_per_relator[ri] =
                    std::max(rep.max_piece_per_relator[ri], words[i].size());
        }

    // Verdict: every relator's max piece strictly below lambda * length.
    rep.verdict = true;
    for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
        long long lhs = static_cast<long long>(rep.max_piece_per_relator[ri]) * lambda.den;
        long long rhs = lambda.num * static_cast<long long>(rep.relator_lengths[ri]);
        if (!(lhs < rhs)) rep.verdict = false;
    }
    return rep;
}

Presentation raag_presentation(const FlagComplex& L) {
    Presentation p;
    p.generators = L.vertices();
    auto index_of = [&](const std::string& v) {
        for (std::size_t i = 0; i < p.generators.size(); ++i)
            if (p.generators[i] == v) return static_cast<int>(i) + 1;
        throw internal_error("raag generator lookup failed");
    };
    for (const auto& [a, b] : L.edge_list()) {
        int ia = index_of(a), ib = index_of(b);
        p.relators.push_back(Word{{-ia, -ib, ia, ib}}); // [a,b] = a^-1 b^-1 a b
    }
    p.validate();
    return p;
}

SalvettiSkeleton salvetti_two_skeleton(const FlagComplex& L) {
    SalvettiSkeleton out;
    std::vector<std::string> vertices{"*"};
    std::vector<Edge> edges;
    for (const auto& v : L.vertices()) {
        edges.push_back(Edge{v, "*", "*"});
        out.edge_height.emplace_back(v, 1);
    }
    std::vector<Face> faces;
    for (const auto& [a, b] : L.edge_list()) {
        Face f;
        f.id = "sq(" + a + "," + b + ")";
        f.cycle = {EdgeRef{a, true}, EdgeRef{b, true}, EdgeRef{a, false}, EdgeRef{b, false}};
        faces.push_back(f);
    }
    out.complex = TwoComplex(vertices, edges, faces);
    return out;
}

namespace {

std::string directed_edge_name(const std::string& from, const std::string& to) {
    return from + ">" + to;
}

// Spanning tree by breadth-first search from the least vertex; returns
// parent map.
std::map<std::string, std::string> bfs_tree(const FlagComplex& L) {
    std::map<std::string, std::vector<std::string>> nbr;
    for (const auto& [a, b] : L.edge_list()) {
        nbr[a].push_back(b);
        nbr[b].push_back(a);
    }
    for (auto& [v, ns] : nbr) std::sort(ns.begin(), ns.end());
    std::map<std::string, std::string> parent;
    if (L.vertices().empty()) return parent;
    const std::string root = L.vertices().front();
    parent[root] = root;
    std::vector<std::string> frontier{root};
    while (!frontier.empty()) {
        std::vector<std::string> next;
        for (const auto& v : frontier)
            for (const auto& u : nbr[v])
                if (!parent.count(u)) {
                    parent[u] = v;
                    next.push_back(u);
                }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    return parent;
}

std::vector<std::string> tree_path_to_root(const std::map<std::string, std::string>& parent,
                                           const std::string& v) {
    std::vector<std::string> path{v};
    std::string cur = v;
    while (parent.at(cur) != cur) {
        cur = parent.at(cur);
        path.push_back(cur);
    }
    return path;
}

} // namespace

bool certify_simply_connected(const FlagComplex& L) {
    if (!L.is_connected()) return false;
    auto parent = bfs_tree(L);
    // Generators: non-tree edges (unordered), indexed from 1.
    std::map<FlagComplex::Simplex, int> gen_of_edge;
    int next_gen = 1;
    for (const auto& [a, b] : L.edge_list()) {
        bool tree = (parent.count(a) && parent.at(a) == b) || (parent.count(b) && parent.at(b) == a);
        if (!tree) gen_of_edge[{a, b}] = next_gen++;
    }
    auto edge_letter = [&](const std::string& from, const std::string& to) -> int {
        FlagComplex::Simplex key{from, to};
        std::sort(key.begin(), key.end());
        auto it = gen_of_edge.find(key);
        if (it == gen_of_edge.end()) return 0; // tree edge contributes nothing
        return from < to ? it->second : -it->second;
    };
    // Relator per triangle: boundary in terms of non-tree edge generators.
    std::vector<std::vector<int>> relators;
    for (const auto& t : L.simplices_of_dim(2)) {
        std::vector<int> w;
        const std::string &a = t[0], &b = t[1], &c = t[2];
        for (int x : {edge_letter(a, b), edge_letter(b, c), edge_letter(c, a)})
            if (x != 0) w.push_back(x);
        relators.push_back(free_reduce(Word{w}).letters);
    }
    int n_gens = next_gen - 1;
    std::set<int> alive;
    for (int g = 1; g <= n_gens; ++g) alive.insert(g);

    // Tietze simplification: kill generators with a length-1 relator, or
    // eliminate a generator occurring exactly once in some relator.
    for (int round = 0; round < 1000 && !alive.empty(); ++round) {
        bool progress = false;
        // reduce relators, drop empties
        for (auto& r : relators) r = free_reduce(Word{r}).letters;
        relators.erase(std::remove_if(relators.begin(), relators.end(),
                                      [](const std::vector<int>& r) { return r.empty(); }),
                       relators.end());
        // length-1: generator trivial, erase all occurrences
        for (std::size_t i = 0; i < relators.size() && !progress; ++i) {
            if (relators[i].size() != 1) continue;
            int g = std::abs(relators[i][0]);
            alive.erase(g);
            for (auto& r : relators)
                r.erase(std::remove_if(r.begin(), r.end(),
                                       [&](int x) { return std::abs(x) == g; }),
                        r.end());
            progress = true;
        }
        if (progress) continue;
        // single occurrence: solve for the generator and substitute
        for (std::size_t i = 0; i < relators.size() && !progress; ++i) {
            for (std::size_t pos = 0; pos < relators[i].size(); ++pos) {
                int g = std::abs(relators[i][pos]);
                int count = 0;
                for (int x : relators[i])
                    if (std::abs(x) == g) ++count;
                if (count != 1) continue;
                // g = word in the others (rotate relator so g sits first)
                std::vector<int> rot;
                const std::size_t n = relators[i].size();
                for (std::size_t k = 0; k < n; ++k) rot.push_back(relators[i][(pos + k) % n]);
                std::vector<int> rhs(rot.begin() + 1, rot.end());
                Word expr = Word{rhs}.inverse(); // g^err... if rot[0] = +g: g = (rhs)^-1
                if (rot[0] < 0) expr = Word{rhs}; // g^-1 = (rhs)^-1 => g = rhs
                // substitute into all other relators
                std::vector<std::vector<int>> out;
                for (std::size_t k = 0; k < relators.size(); ++k) {
                    if (k == i) continue;
                    std::vector<int> w;
                    for (int x : relators[k]) {
                        if (std::abs(x) != g) {
                            w.push_back(x);
                        } else {
                            Word sub = x > 0 ? expr : expr.inverse();
                            for (int y : sub.letters) w.push_back(y);
                        }
                    }
                    out.push_back(free_reduce(Word{w}).letters);
                }
                relators = std::move(out);
                alive.erase(g);
                progress = true;
                break;
            }
        }
        if (!progress) break;
    }
    for (auto& r : relators) r = free_reduce(Word{r}).letters;
    relators.erase(std::remove_if(relators.begin(), relators.end(),
                                  [](const std::vector<int>& r) { return r.empty(); }),
                   relators.end());
    return alive.empty() && relators.empty();
}

LearyPresentation leary_presentation(const FlagComplex& L, const std::vector<long long>& S) {
    if (!L.is_flag())
        throw input_error("leary presentation requires a flag complex (validate first)");
    if (!L.is_connected()) throw input_error("leary presentation requires a connected complex");

    LearyPresentation out;
    out.has_local_cut_points = !L.no_local_cut_points();

    Presentation p;
    std::map<std::string, int> gen_index;
    auto add_gen = [&](const std::string& name) {
        p.generators.push_back(name);
        gen_index[name] = static_cast<int>(p.generators.size());
    };
    for (const auto& [a, b] : L.edge_list()) {
        add_gen(directed_edge_name(a, b));
        add_gen(directed_edge_name(b, a));
    }
    // R1: e ebar, one per undirected edge.
    for (const auto& [a, b] : L.edge_list()) {
        int e = gen_index[directed_edge_name(a, b)];
        int ebar = gen_index[directed_edge_name(b, a)];
        p.relators.push_back(Word{{e, ebar}});
        ++out.r1_count;
    }
    // R2: abc and a^-1 b^-1 c^-1, orientation by sorted vertex ids.
    for (const auto& t : L.simplices_of_dim(2)) {
        int a = gen_index[directed_edge_name(t[0], t[1])];
        int b = gen_index[directed_edge_name(t[1], t[2])];
        int c = gen_index[directed_edge_name(t[2], t[0])];
        p.relators.push_back(Word{{a, b, c}});
        p.relators.push_back(Word{{-a, -b, -c}});
        out.r2_count += 2;
    }
    // R3: fundamental loops of the spanning tree, raised to powers in S.
    out.simply_connected_certified = certify_simply_connected(L);
    if (!out.simply_connected_certified) {
        auto parent = bfs_tree(L);
        for (const auto& [a, b] : L.edge_list()) {
            bool tree =
                (parent.count(a) && parent.at(a) == b) || (parent.count(b) && parent.at(b) == a);
            if (tree) continue;
            // loop: root -> a -> b -> root along tree paths
            std::vector<std::string> da = tree_path_to_root(parent, a); // a .. root
            std::vector<std::string> db = tree_path_to_root(parent, b);
            std::vector<std::string> loop_edges;
            for (auto it = da.rbegin(); it + 1 != da.rend(); ++it)
                loop_edges.push_back(directed_edge_name(*it, *(it + 1)));
            std::reverse(loop_edges.begin(), loop_edges.end()); // root .. a
            loop_edges.push_back(directed_edge_name(a, b));
            for (std::size_t i = 0; i + 1 < db.size(); ++i)
                loop_edges.push_back(directed_edge_name(db[i], db[i + 1]));
            out.fundamental_loops.push_back(loop_edges);
        }
        for (long long n : S) {
            if (n == 0) continue; // empty word, rejected by presentation rules
            for (const auto& loop : out.fundamental_loops) {
                Word w;
                for (const auto& ename : loop) {
                    int g = gen_index.at(ename);
                    for (long long k = 0; k < std::llabs(n); ++k)
                        w.letters.push_back(n > 0 ? g : -g);
                }
                p.relators.push_back(w);
                ++out.r3_count;
            }
        }
    }
    p.validate();
    out.presentation = std::move(p);
    return out;
}

TwoComplex presentation_complex(const Presentation& p) {
    p.validate();
    std::vector<std::string> vertices{"*"};
    std::vector<Edge> edges;
    for (const auto& g : p.generators) edges.push_back(Edge{g, "*", "*"});
    std::vector<Face> faces;
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        Face f;
        f.id = "r" + std::to_string(i + 1);
        for (int x : p.relators[i].letters)
            f.cycle.push_back(EdgeRef{p.generators[std::abs(x) - 1], x < 0});
        faces.push_back(f);
    }
    return TwoComplex(vertices, edges, faces);
}

namespace {

Word commutator_power(int a, int b, int k) {
    // [a^k, b^k] = a^-k b^-k a^k b^k
    Word w;
    for (int i = 0; i < k; ++i) w.letters.push_back(-a);
    for (int i = 0; i < k; ++i) w.letters.push_back(-b);
    for (int i = 0; i < k; ++i) w.letters.push_back(a);
    for (int i = 0; i < k; ++i) w.letters.push_back(b);
    return w;
}

Presentation make_group_a() {
    Presentation p;
    p.generators = {"a", "b"};
    // a [b,a][b^2,a^2]...[b^8,a^8]
    Word r1 = Word::single(1);
    for (int k = 1; k <= 8; ++k) r1 = r1 * commutator_power(2, 1, k);
    // b [a^9,b^9][a^10,b^10][a^11,b^11]
    Word r2 = Word::single(2);
    for (int k = 9; k <= 11; ++k) r2 = r2 * commutator_power(1, 2, k);
    p.relators = {r1, r2};
    p.validate();
    return p;
}

Presentation make_group_bm(int m) {
    if (m < 1) throw input_error("groupBm needs m >= 1");
    Presentation p;
    for (int i = 0; i <= m; ++i) p.generators.push_back("x" + std::to_string(i));
    for (int i = 1; i <= m; ++i) {
        // x_i^-1 x_{i-1} x_i x_{i-1}^-2
        Word w{{-(i + 1), i, i + 1, -i, -i}};
        p.relators.push_back(w);
    }
    p.validate();
    return p;
}

Presentation make_group_q(int m) {
    if (m < 1) throw input_error("groupQ needs m >= 1");
    // Amalgam of groupA and groupBm over b = x_m, with x_m eliminated;
    // the resulting presentation is balanced.
    Presentation a = make_group_a();
    Presentation p;
    p.generators = {"a", "b"};
    for (int i = 0; i < m; ++i) p.generators.push_back("x" + std::to_string(i));
    p.relators = a.relators; // over a, b = generators 1, 2
    const int b_idx = 2;
    auto x = [&](int i) { return i == m ? b_idx : i + 3; };
    for (int i = 1; i <= m; ++i) {
        Word w{{-x(i), x(i - 1), x(i), -x(i - 1), -x(i - 1)}};
        p.relators.push_back(w);
    }
    p.validate();
    return p;
}

FlagComplex make_complex_f() {
    // Triangulated hexagonal disk: outer vertices n, s, e, w; inner diamond
    // ni, si, ei, wi. The long horizontal chord is split in three by the
    // collinear inner vertices ei, wi. Bold edge: (e, s).
    std::vector<std::string> vs{"n", "s", "e", "w", "ni", "si", "ei", "wi"};
    std::vector<FlagComplex::Simplex> tris = {
        {"e", "ei", "ni"}, {"e", "n", "ni"},  {"n", "ni", "w"},  {"ni", "w", "wi"},
        {"ei", "ni", "wi"}, {"ei", "si", "wi"}, {"si", "w", "wi"}, {"s", "si", "w"},
        {"e", "s", "si"},  {"e", "ei", "si"}};
    return FlagComplex::build(vs, tris, false);
}

} // namespace

BuiltinResult builtin_library(const std::string& name, std::optional<int> m) {
    BuiltinResult out;
    if (name == "groupA") {
        out.presentation = make_group_a();
    } else if (name == "groupBm") {
        if (!m) throw input_error("groupBm needs --m");
        out.presentation = make_group_bm(*m);
    } else if (name == "groupQ") {
        if (!m) throw input_error("groupQ needs --m");
        out.presentation = make_group_q(*m);
    } else if (name == "complexKA") {
        out.two_complex = presentation_complex(make_group_a());
    } else if (name == "complexF") {
        FlagComplex F = make_complex_f();
        if (!F.is_flag() || !F.is_connected() || !F.no_local_cut_points())
            throw internal_error("complexF transcription failed validation");
        if (!certify_simply_connected(F))
            throw internal_error("complexF transcription is not simply connected");
        out.flag_complex = F;
        out.marked_edge = std::make_pair(std::string("e"), std::string("s"));
    } else {
        throw input_error("unknown builtin: " + name);
    }
    return out;
}

} // namespace hfill
