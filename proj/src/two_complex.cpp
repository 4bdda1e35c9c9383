#include "hfill/two_complex.hpp"

#include <cstdlib>
#include <nlohmann/json.hpp>

namespace hfill {

using nlohmann::ordered_json;

TwoComplex::TwoComplex(std::vector<std::string> vertices, std::vector<Edge> edges,
                       std::vector<Face> faces)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), faces_(std::move(faces)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!vertex_index_.emplace(vertices_[i], i).second)
            throw input_error("duplicate vertex id: " + vertices_[i]);
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (!edge_index_.emplace(edges_[i].id, i).second)
            throw input_error("duplicate edge id: " + edges_[i].id);
    }
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        if (!face_index_.emplace(faces_[i].id, i).second)
            throw input_error("duplicate face id: " + faces_[i].id);
    }
    validate();
}

void TwoComplex::validate() const {
    for (const auto& e : edges_) {
        if (!has_vertex(e.src) || !has_vertex(e.dst))
            throw input_error("edge " + e.id + " references an undeclared vertex");
    }
    for (const auto& f : faces_) {
        if (f.cycle.empty())
            throw input_error("face " + f.id + " has an empty attaching cycle");
        std::string cur;
        bool first = true;
        for (const auto& ref : f.cycle) {
            auto it = edge_index_.find(ref.edge);
            if (it == edge_index_.end())
                throw input_error("face " + f.id + " references an undeclared edge " + ref.edge);
            const Edge& e = edges_[it->second];
            const std::string& from = ref.reversed ? e.dst : e.src;
            const std::string& to = ref.reversed ? e.src : e.dst;
            if (first) {
                cur = from;
                first = false;
            } else if (cur != from) {
                throw input_error("face " + f.id + " attaching cycle is not a walk at edge " + ref.edge);
            }
            cur = to;
        }
        const auto& ref0 = f.cycle.front();
        const Edge& e0 = edges_[edge_index_.at(ref0.edge)];
        const std::string& start = ref0.reversed ? e0.dst : e0.src;
        if (cur != start)
            throw input_error("face " + f.id + " attaching cycle is not closed");
    }
}

const Edge& TwoComplex::edge(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) throw input_error("unknown edge id: " + id);
    return edges_[it->second];
}

const Face& TwoComplex::face(const std::string& id) const {
    auto it = face_index_.find(id);
    if (it == face_index_.end()) throw input_error("unknown face id: " + id);
    return faces_[it->second];
}

std::size_t TwoComplex::vertex_index(const std::string& id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) throw input_error("unknown vertex id: " + id);
    return it->second;
}

std::size_t TwoComplex::edge_index(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) throw input_error("unknown edge id: " + id);
    return it->second;
}

std::size_t TwoComplex::face_index(const std::string& id) const {
    auto it = face_index_.find(id);
    if (it == face_index_.end()) throw input_error("unknown face id: " + id);
    return it->second;
}

EdgeRef parse_edge_token(const std::string& token) {
    if (token.empty()) throw input_error("empty edge token");
    if (token[0] == '-') {
        if (token.size() == 1) throw input_error("bare '-' edge token");
        return EdgeRef{token.substr(1), true};
    }
    return EdgeRef{token, false};
}

std::string edge_token(const EdgeRef& ref) {
    return ref.reversed ? "-" + ref.edge : ref.edge;
}

std::string TwoComplex::to_json() const {
    ordered_json j;
    j["vertices"] = vertices_;
    j["edges"] = ordered_json::array();
    for (const auto& e : edges_)
        j["edges"].push_back({{"id", e.id}, {"src", e.src}, {"dst", e.dst}});
    j["faces"] = ordered_json::array();
    for (const auto& f : faces_) {
        ordered_json cyc = ordered_json::array();
        for (const auto& ref : f.cycle) cyc.push_back(edge_token(ref));
        j["faces"].push_back({{"id", f.id}, {"cycle", cyc}});
    }
    return j.dump();
}

TwoComplex TwoComplex::from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& ex) {
        throw input_error(std::string("bad TwoComplex JSON: ") + ex.what());
    }
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::vector<Face> faces;
    for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
    if (j.contains("edges"))
        for (const auto& e : j["edges"])
            edges.push_back(Edge{e.at("id").get<std::string>(), e.at("src").get<std::string>(),
                                 e.at("dst").get<std::string>()});
    if (j.contains("faces"))
        for (const auto& f : j["faces"]) {
            Face face;
            face.id = f.at("id").get<std::string>();
            for (const auto& tok : f.at("cycle"))
                face.cycle.push_back(parse_edge_token(tok.get<std::string>()));
            faces.push_back(std::move(face));
        }
    return TwoComplex(std::move(vertices), std::move(edges), std::move(faces));
}

void ChainVec::add(const std::string& cell, long long delta) {
    if (delta == 0) return;
    auto it = coeffs_.find(cell);
    if (it == coeffs_.end()) {
        coeffs_.emplace(cell, delta);
        return;
    }
    it->second += delta;
    if (it->second == 0) coeffs_.erase(it);
}

long long ChainVec::norm1() const {
    long long s = 0;
    for (const auto& [cell, c] : coeffs_) s += std::llabs(c);
    return s;
}

ChainVec& ChainVec::operator+=(const ChainVec& other) {
    for (const auto& [cell, c] : other.coeffs_) add(cell, c);
    return *this;
}

std::string ChainVec::to_json() const {
    ordered_json j = ordered_json::object();
    for (const auto& [cell, c] : coeffs_) j[cell] = c;
    return j.dump();
}

ChainVec ChainVec::from_json(int dimension, const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& ex) {
        throw input_error(std::string("bad chain JSON: ") + ex.what());
    }
    ChainVec c(dimension);
    for (auto it = j.begin(); it != j.end(); ++it)
        c.add(it.key(), it.value().get<long long>());
    return c;
}

ChainVec boundary_apply(const TwoComplex& X, const ChainVec& c) {
    if (c.dimension() != 1 && c.dimension() != 2)
        throw input_error("boundary_apply expects a chain of dimension 1 or 2");
    ChainVec out(c.dimension() - 1);
    if (c.dimension() == 2) {
        for (const auto& [id, coeff] : c.coefficients()) {
            const Face& f = X.face(id);
            for (const auto& ref : f.cycle) out.add(ref.edge, ref.reversed ? -coeff : coeff);
        }
    } else {
        for (const auto& [id, coeff] : c.coefficients()) {
            const Edge& e = X.edge(id);
            out.add(e.dst, coeff);
            out.add(e.src, -coeff);
        }
    }
    return out;
}

} // namespace hfill
