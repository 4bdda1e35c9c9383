#include "hfill/flag_complex.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <queue>

namespace hfill {

using nlohmann::ordered_json;

namespace {

void all_subsets(const FlagComplex::Simplex& s, std::set<FlagComplex::Simplex>& out) {
    const std::size_t n = s.size();
    for (std::size_t mask = 1; mask < (1u << n); ++mask) {
        FlagComplex::Simplex sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(s[i]);
        out.insert(sub);
    }
}

} // namespace

FlagComplex FlagComplex::build(const std::vector<std::string>& vertices,
                               const std::vector<Simplex>& simplices, bool flag_closure) {
    FlagComplex C;
    std::set<std::string> vs(vertices.begin(), vertices.end());
    if (vs.size() != vertices.size()) throw input_error("duplicate vertex id in flag complex");
    std::set<Simplex> given;
    for (const auto& s : simplices) {
        Simplex t = s;
        std::sort(t.begin(), t.end());
        if (t.empty()) throw input_error("empty simplex");
        if (std::adjacent_find(t.begin(), t.end()) != t.end())
            throw input_error("simplex with repeated vertex");
        for (const auto& v : t) vs.insert(v);
        given.insert(t);
    }
    C.vertices_.assign(vs.begin(), vs.end());
    for (const auto& v : C.vertices_) given.insert({v});

    if (flag_closure) {
        // Close under faces so the 1-skeleton is complete, then add every
        // clique as a simplex.
        std::set<Simplex> closed;
        for (const auto& s : given) all_subsets(s, closed);
        C.simplices_ = closed;
        std::map<std::string, std::set<std::string>> nbr;
        for (const auto& s : C.simplices_)
            if (s.size() == 2) {
                nbr[s[0]].insert(s[1]);
                nbr[s[1]].insert(s[0]);
            }
        // Grow cliques breadth-first; |V| is small at desk scale.
        std::vector<Simplex> frontier;
        for (const auto& s : C.simplices_) frontier.push_back(s);
        while (!frontier.empty()) {
            std::vector<Simplex> next;
            for (const auto& s : frontier) {
                for (const auto& v : C.vertices_) {
                    if (v <= s.back()) continue;
                    bool adjacent_to_all = true;
                    for (const auto& u : s)
                        if (!nbr[u].count(v)) {
                            adjacent_to_all = false;
                            break;
                        }
                    if (!adjacent_to_all) continue;
                    Simplex t = s;
                    t.push_back(v);
                    if (C.simplices_.insert(t).second) next.push_back(t);
                }
            }
            frontier = std::move(next);
        }
    } else {
        // Require face closure.
        std::set<Simplex> closed;
        for (const auto& s : given) all_subsets(s, closed);
        for (const auto& s : closed)
            if (!given.count(s))
                throw input_error("input is not face-closed (missing face) and no flag closure "
                                  "was requested");
        C.simplices_ = given;
    }
    C.validate();
    return C;
}

bool FlagComplex::has_edge(const std::string& a, const std::string& b) const {
    Simplex e{a, b};
    std::sort(e.begin(), e.end());
    return simplices_.count(e) > 0;
}

int FlagComplex::dimension() const {
    int d = -1;
    for (const auto& s : simplices_) d = std::max(d, static_cast<int>(s.size()) - 1);
    return d;
}

std::size_t FlagComplex::count_simplices(int dim) const {
    std::size_t n = 0;
    for (const auto& s : simplices_)
        if (static_cast<int>(s.size()) == dim + 1) ++n;
    return n;
}

std::vector<FlagComplex::Simplex> FlagComplex::simplices_of_dim(int dim) const {
    std::vector<Simplex> out;
    for (const auto& s : simplices_)
        if (static_cast<int>(s.size()) == dim + 1) out.push_back(s);
    return out;
}

std::vector<std::pair<std::string, std::string>> FlagComplex::edge_list() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& s : simplices_)
        if (s.size() == 2) out.emplace_back(s[0], s[1]);
    return out;
}

void FlagComplex::validate() {
    // Flag test: a simplex plus one vertex adjacent to all of it must span.
    is_flag_ = true;
    bad_clique_.clear();
    for (const auto& s : simplices_) {
        for (const auto& v : vertices_) {
            if (v <= s.back()) continue;
            bool adjacent_to_all = true;
            for (const auto& u : s)
                if (!has_edge(u, v)) {
                    adjacent_to_all = false;
                    break;
                }
            if (!adjacent_to_all) continue;
            Simplex t = s;
            t.push_back(v);
            if (!simplices_.count(t)) {
                is_flag_ = false;
                std::string clique;
                for (const auto& u : t) clique += (clique.empty() ? "" : ",") + u;
                bad_clique_ = clique;
            }
        }
        if (!is_flag_) break;
    }

    // Connectivity of the 1-skeleton.
    is_connected_ = true;
    if (!vertices_.empty()) {
        std::set<std::string> seen{vertices_.front()};
        std::queue<std::string> q;
        q.push(vertices_.front());
        while (!q.empty()) {
            std::string v = q.front();
            q.pop();
            for (const auto& s : simplices_)
                if (s.size() == 2 && (s[0] == v || s[1] == v)) {
                    const std::string& other = s[0] == v ? s[1] : s[0];
                    if (seen.insert(other).second) q.push(other);
                }
        }
        is_connected_ = seen.size() == vertices_.size();
    }

    // Local cut points: every vertex link must be connected and bigger than
    // a single point.
    no_local_cut_points_ = true;
    for (const auto& v : vertices_) {
        FlagComplex lk = vertex_link(v);
        bool connected = true;
        if (lk.vertices_.empty()) {
            connected = false;
        } else {
            std::set<std::string> seen{lk.vertices_.front()};
            std::queue<std::string> q;
            q.push(lk.vertices_.front());
            while (!q.empty()) {
                std::string x = q.front();
                q.pop();
                for (const auto& s : lk.simplices_)
                    if (s.size() == 2 && (s[0] == x || s[1] == x)) {
                        const std::string& other = s[0] == x ? s[1] : s[0];
                        if (seen.insert(other).second) q.push(other);
                    }
            }
            connected = seen.size() == lk.vertices_.size();
        }
        if (!connected || lk.vertices_.size() < 2) {
            no_local_cut_points_ = false;
            break;
        }
    }
}

FlagComplex FlagComplex::vertex_link(const std::string& v) const {
    FlagComplex lk;
    std::set<std::string> vs;
    for (const auto& s : simplices_) {
        auto it = std::find(s.begin(), s.end(), v);
        if (it == s.end() || s.size() < 2) continue;
        Simplex t;
        for (const auto& u : s)
            if (u != v) t.push_back(u);
        lk.simplices_.insert(t);
        for (const auto& u : t) vs.insert(u);
    }
    lk.vertices_.assign(vs.begin(), vs.end());
    return lk;
}

std::string FlagComplex::to_json() const {
    ordered_json j;
    j["vertices"] = vertices_;
    ordered_json ss = ordered_json::array();
    for (const auto& s : simplices_)
        if (s.size() > 1) ss.push_back(s);
    j["simplices"] = ss;
    j["flags"] = {{"is_flag", is_flag_},
                  {"is_connected", is_connected_},
                  {"no_local_cut_points", no_local_cut_points_}};
    return j.dump();
}

FlagComplex FlagComplex::from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& ex) {
        throw input_error(std::string("bad flag complex JSON: ") + ex.what());
    }
    std::vector<std::string> vertices;
    std::vector<Simplex> simplices;
    for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
    if (j.contains("simplices"))
        for (const auto& s : j["simplices"]) simplices.push_back(s.get<Simplex>());
    bool closure = j.value("flag_closure", false);
    return build(vertices, simplices, closure);
}

bool FlagComplex::isomorphic_by_renaming(const FlagComplex& other,
                                         const std::map<std::string, std::string>& rename) const {
    if (vertices_.size() != other.vertices_.size()) return false;
    std::set<Simplex> mapped;
    for (const auto& s : simplices_) {
        Simplex t;
        for (const auto& v : s) {
            auto it = rename.find(v);
            if (it == rename.end()) return false;
            t.push_back(it->second);
        }
        std::sort(t.begin(), t.end());
        mapped.insert(t);
    }
    return mapped == other.simplices_;
}

FlagComplex spherical_double(const FlagComplex& L) {
    FlagComplex D;
    std::set<std::string> vs;
    for (const auto& v : L.vertices()) {
        vs.insert(v + "+");
        vs.insert(v + "-");
    }
    for (const auto& s : L.simplices()) {
        const std::size_t k = s.size();
        for (std::size_t mask = 0; mask < (1u << k); ++mask) {
            FlagComplex::Simplex t;
            for (std::size_t i = 0; i < k; ++i)
                t.push_back(s[i] + ((mask >> i) & 1 ? "-" : "+"));
            std::sort(t.begin(), t.end());
            D.simplices_.insert(t);
        }
    }
    D.vertices_.assign(vs.begin(), vs.end());
    D.validate();
    return D;
}

FlagComplex glue_edge(const FlagComplex& K, const FlagComplex& F,
                      const std::pair<std::string, std::string>& eK,
                      const std::pair<std::string, std::string>& eF) {
    if (!K.has_edge(eK.first, eK.second)) throw input_error("glue: edge missing in first complex");
    if (!F.has_edge(eF.first, eF.second)) throw input_error("glue: edge missing in second complex");
    std::set<std::string> used(K.vertices().begin(), K.vertices().end());
    std::map<std::string, std::string> rename;
    rename[eF.first] = eK.first;
    rename[eF.second] = eK.second;
    for (const auto& v : F.vertices()) {
        if (rename.count(v)) continue;
        std::string name = v;
        while (used.count(name)) name += "'";
        used.insert(name);
        rename[v] = name;
    }
    std::vector<std::string> vertices(used.begin(), used.end());
    std::vector<FlagComplex::Simplex> simplices;
    for (const auto& s : K.simplices()) simplices.push_back(s);
    for (const auto& s : F.simplices()) {
        FlagComplex::Simplex t;
        for (const auto& v : s) t.push_back(rename.at(v));
        std::sort(t.begin(), t.end());
        simplices.push_back(t);
    }
    FlagComplex glued = FlagComplex::build(vertices, simplices, false);
    if (!glued.is_flag())
        throw input_error("glue created a non-flag clique: " + glued.first_bad_clique());
    return glued;
}

} // namespace hfill
