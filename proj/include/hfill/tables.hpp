#pragma once

#include <string>
#include <vector>

#include "hfill/cayley.hpp"
#include "hfill/harea.hpp"

namespace hfill {

// Filling-function table over 1..n_max. Values are exact on the explored
// support; entries whose certificates were only optimal-on-support are
// flagged, and the documented workflow is to grow the radius until the table
// stabilizes.
struct FillingTable {
    enum class Kind { DeltaAb, Fa, ClosureOfDeltaAb };

    Kind kind = Kind::DeltaAb;
    std::size_t n_max = 0;
    std::size_t radius = 0;
    std::vector<long long> values;   // values[n-1]
    std::vector<std::string> status; // "exact" | "lower-bound-only"
    std::vector<std::string> witness;

    long long value(std::size_t n) const { return values.at(n - 1); }

    std::string kind_name() const;
    std::string to_csv(const std::string& header_comment) const;
};

// Max of harea over based loops of length <= n at the ball basepoint
// (vertex transitivity makes the basepoint sufficient), deduplicated up to
// cyclic rotation and inversion. jobs > 1 parallelizes the harea calls;
// aggregation order is deterministic.
FillingTable delta_ab_table(const Presentation& p, const EqualityOracle& o, std::size_t n_max,
                            std::size_t R, int jobs = 1,
                            std::size_t vertex_budget = kDefaultBallVertexBudget);

// f_bar(n) = max(f(n), max_j f_bar(j) + f_bar(n-j)); witnesses carry the
// maximizing partition.
FillingTable superadditive_closure(const FillingTable& t);
std::vector<long long> superadditive_closure_values(const std::vector<long long>& values);

enum class FaMode { ViaClosure, DirectCycles };

// ViaClosure: superadditive closure of the delta table (the FA surrogate).
// DirectCycles: enumerate every integer 1-cycle of l1 size <= n in the ball
// and maximize harea; exact but exponential, desk scale only.
FillingTable fa_table(const Presentation& p, const EqualityOracle& o, std::size_t n_max,
                      std::size_t R, FaMode mode, int jobs = 1,
                      std::size_t vertex_budget = kDefaultBallVertexBudget);

} // namespace hfill
