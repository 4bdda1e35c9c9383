#pragma once

#include <memory>
#include <string>

#include "hfill/smith.hpp"
#include "hfill/two_complex.hpp"

namespace hfill {

enum class FillStatus { OptimalOnSupport, OptimalGlobal, InfeasibleOnSupport };

std::string to_string(FillStatus s);

struct FillingCertificate {
    ChainVec cycle{1};
    ChainVec chain{2};
    long long cost = 0;
    FillStatus status = FillStatus::OptimalOnSupport;
    long long support_radius = -1; // -1 when not applicable
    std::string note;

    std::string to_json() const;
};

// Reusable per-complex state for repeated harea queries: boundary data and
// an integer factorization of d2 for feasibility checks and initial bounds.
class FillingSolver {
public:
    explicit FillingSolver(const TwoComplex& X);

    const TwoComplex& complex() const { return X_; }

    // Exact minimum l1-cost integer 2-chain with boundary gamma, by
    // iterative-deepening depth-first branch and bound with the admissible
    // bound ceil(|residual|_1 / Lmax). Ties resolved to the lexicographically
    // least coefficient vector over sorted face ids.
    FillingCertificate harea(const ChainVec& gamma,
                             bool complete_complex = false,
                             long long support_radius = -1) const;

private:
    bool feasible(const ChainVec& gamma, bigint* norm_out) const;

    TwoComplex X_;
    std::size_t lmax_ = 1; // longest attaching cycle
    SmithResult snf_;
    std::vector<std::vector<std::pair<std::size_t, long long>>> face_boundary_;
    std::vector<std::vector<std::size_t>> faces_at_edge_;
    std::vector<std::string> sorted_face_ids_;
    std::vector<std::size_t> sorted_face_index_;
};

FillingCertificate harea(const TwoComplex& X, const ChainVec& gamma,
                         bool complete_complex = false, long long support_radius = -1);

} // namespace hfill
