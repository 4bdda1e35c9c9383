#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hfill/errors.hpp"

namespace hfill {

// A signed reference to a directed edge inside an attaching cycle.
// reversed == true means the edge is traversed against its orientation.
struct EdgeRef {
    std::string edge;
    bool reversed = false;
};

struct Edge {
    std::string id;
    std::string src;
    std::string dst;
};

struct Face {
    std::string id;
    std::vector<EdgeRef> cycle; // closed walk of signed edges
};

// Finite combinatorial 2-complex. Immutable once validated; all operations
// on it are pure.
class TwoComplex {
public:
    TwoComplex() = default;
    TwoComplex(std::vector<std::string> vertices, std::vector<Edge> edges,
               std::vector<Face> faces);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }

    bool has_vertex(const std::string& id) const { return vertex_index_.count(id) > 0; }
    bool has_edge(const std::string& id) const { return edge_index_.count(id) > 0; }
    bool has_face(const std::string& id) const { return face_index_.count(id) > 0; }

    const Edge& edge(const std::string& id) const;
    const Face& face(const std::string& id) const;

    std::size_t vertex_index(const std::string& id) const;
    std::size_t edge_index(const std::string& id) const;
    std::size_t face_index(const std::string& id) const;

    long long euler_characteristic() const {
        return static_cast<long long>(vertices_.size()) -
               static_cast<long long>(edges_.size()) +
               static_cast<long long>(faces_.size());
    }

    std::string to_json() const;
    static TwoComplex from_json(const std::string& text);

private:
    void validate() const;

    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
    std::map<std::string, std::size_t> vertex_index_;
    std::map<std::string, std::size_t> edge_index_;
    std::map<std::string, std::size_t> face_index_;
};

// Sparse integer cellular chain of a fixed dimension. Zero coefficients are
// never stored.
class ChainVec {
public:
    ChainVec() = default;
    explicit ChainVec(int dimension) : dimension_(dimension) {}

    int dimension() const { return dimension_; }
    const std::map<std::string, long long>& coefficients() const { return coeffs_; }

    long long coefficient(const std::string& cell) const {
        auto it = coeffs_.find(cell);
        return it == coeffs_.end() ? 0 : it->second;
    }

    void add(const std::string& cell, long long delta);
    bool empty() const { return coeffs_.empty(); }

    // l1 norm: sum of absolute coefficients.
    long long norm1() const;

    ChainVec& operator+=(const ChainVec& other);
    friend ChainVec operator+(ChainVec a, const ChainVec& b) { a += b; return a; }
    bool operator==(const ChainVec& other) const {
        return dimension_ == other.dimension_ && coeffs_ == other.coeffs_;
    }

    std::string to_json() const;
    static ChainVec from_json(int dimension, const std::string& text);

private:
    int dimension_ = 0;
    std::map<std::string, long long> coeffs_;
};

// Cellular boundary operator. Applying it twice gives the empty chain.
ChainVec boundary_apply(const TwoComplex& X, const ChainVec& c);

// Betti numbers and invariant factors (> 1) per dimension.
struct HomologySummary {
    std::vector<long long> betti;                      // b0, b1, b2
    std::vector<std::vector<long long>> torsion;       // per dimension
};

// Parses a signed edge token as used in face cycles: "e" or "-e".
EdgeRef parse_edge_token(const std::string& token);
std::string edge_token(const EdgeRef& ref);

} // namespace hfill
