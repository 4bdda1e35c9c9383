#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "hfill/two_complex.hpp"

namespace hfill {

using bigint = boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<bigint>>;

// Smith normal form of an integer matrix. diag holds the nonzero invariant
// factors d1 | d2 | ... | dr. When track_transforms is set, U and V satisfy
// U * A * V = D with U, V unimodular.
struct SmithResult {
    std::vector<bigint> diag;
    std::size_t rank = 0;
    Matrix U; // rows x rows, only if tracked
    Matrix V; // cols x cols, only if tracked
};

SmithResult smith_normal_form(Matrix A, bool track_transforms = false);

// Solves A x = b over the integers using a precomputed SNF with transforms.
// Returns std::nullopt when no integer solution exists.
std::optional<std::vector<bigint>> solve_integer(const SmithResult& snf,
                                                 std::size_t rows, std::size_t cols,
                                                 const std::vector<bigint>& b);

// Boundary matrices of a 2-complex: d1 is (#vertices x #edges),
// d2 is (#edges x #faces), indexed by the complex's cell orderings.
Matrix boundary_matrix_1(const TwoComplex& X);
Matrix boundary_matrix_2(const TwoComplex& X);

// Integral homology via Smith normal forms of the boundary matrices.
HomologySummary homology(const TwoComplex& X);

} // namespace hfill
