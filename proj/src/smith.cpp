#include "hfill/smith.hpp"

#include <algorithm>

namespace hfill {

namespace {

bigint abs_big(const bigint& x) { return x < 0 ? bigint(-x) : x; }

// row[i] += k * row[j]
void add_row(Matrix& A, std::size_t i, std::size_t j, const bigint& k) {
    for (std::size_t c = 0; c < A[i].size(); ++c) A[i][c] += k * A[j][c];
}

// col[i] += k * col[j]
void add_col(Matrix& A, std::size_t i, std::size_t j, const bigint& k) {
    for (auto& row : A) row[i] += k * row[j];
}

void swap_cols(Matrix& A, std::size_t i, std::size_t j) {
    for (auto& row : A) std::swap(row[i], row[j]);
}

struct Worker {
    Matrix A;
    Matrix U, V;
    bool track;
    std::size_t rows, cols;

    void row_add(std::size_t i, std::size_t j, const bigint& k) {
        add_row(A, i, j, k);
        if (track) add_row(U, i, j, k);
    }
    void col_add(std::size_t i, std::size_t j, const bigint& k) {
        add_col(A, i, j, k);
        if (track) add_col(V, i, j, k);
    }
    void row_swap(std::size_t i, std::size_t j) {
        std::swap(A[i], A[j]);
        if (track) std::swap(U[i], U[j]);
    }
    void col_swap(std::size_t i, std::size_t j) {
        swap_cols(A, i, j);
        if (track) swap_cols(V, i, j);
    }
    void row_negate(std::size_t i) {
        for (auto& x : A[i]) x = -x;
        if (track)
            for (auto& x : U[i]) x = -x;
    }
};

} // namespace

SmithResult smith_normal_form(Matrix A0, bool track_transforms) {
    Worker w;
    w.A = std::move(A0);
    w.rows = w.A.size();
    w.cols = w.rows == 0 ? 0 : w.A[0].size();
    w.track = track_transforms;
    if (w.track) {
        w.U.assign(w.rows, std::vector<bigint>(w.rows, 0));
        w.V.assign(w.cols, std::vector<bigint>(w.cols, 0));
        for (std::size_t i = 0; i < w.rows; ++i) w.U[i][i] = 1;
        for (std::size_t i = 0; i < w.cols; ++i) w.V[i][i] = 1;
    }
    Matrix& A = w.A;

    std::size_t t = 0;
    while (t < w.rows && t < w.cols) {
        // Pivot: smallest nonzero magnitude in the trailing block, to slow
        // down entry growth.
        std::size_t pr = t, pc = t;
        bigint best = 0;
        for (std::size_t i = t; i < w.rows; ++i)
            for (std::size_t j = t; j < w.cols; ++j) {
                if (A[i][j] == 0) continue;
                bigint m = abs_big(A[i][j]);
                if (best == 0 || m < best) {
                    best = m;
                    pr = i;
                    pc = j;
                }
            }
        if (best == 0) break; // trailing block entirely zero

        if (pr != t) w.row_swap(t, pr);
        if (pc != t) w.col_swap(t, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < w.rows; ++i) {
                if (A[i][t] == 0) continue;
                bigint q = A[i][t] / A[t][t];
                if (q != 0) w.row_add(i, t, -q);
                if (A[i][t] != 0) {
                    w.row_swap(t, i); // strictly smaller remainder becomes pivot
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < w.cols; ++j) {
                if (A[t][j] == 0) continue;
                bigint q = A[t][j] / A[t][t];
                if (q != 0) w.col_add(j, t, -q);
                if (A[t][j] != 0) {
                    w.col_swap(t, j);
                    clean = false;
                }
            }
        }
        ++t;
    }

    for (std::size_t i = 0; i < t; ++i)
        if (A[i][i] < 0) w.row_negate(i);

    // Enforce d1 | d2 | ... by fixing adjacent pairs until stable.
    int guard = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        if (++guard > 10000) throw internal_error("smith normal form did not stabilize");
        for (std::size_t i = 0; i + 1 < t; ++i) {
            if (A[i + 1][i + 1] % A[i][i] == 0) continue;
            changed = true;
            // 2x2 block [a 0; 0 b] -> [g 0; 0 lcm].
            w.col_add(i, i + 1, 1); // column i gains b at row i+1
            while (A[i + 1][i] != 0) {
                bigint q = A[i][i] / A[i + 1][i];
                if (q != 0) w.row_add(i, i + 1, -q);
                if (A[i][i] != 0 || A[i + 1][i] != 0) w.row_swap(i, i + 1);
            }
            // Now column i has the gcd at row i only; clear the off entry.
            if (A[i][i] < 0) w.row_negate(i);
            bigint x = A[i][i + 1];
            if (x % A[i][i] != 0) throw internal_error("smith 2x2 fixup failed");
            if (x != 0) w.col_add(i + 1, i, -(x / A[i][i]));
            if (A[i + 1][i + 1] < 0) w.row_negate(i + 1);
        }
    }

    SmithResult res;
    res.rank = t;
    for (std::size_t i = 0; i < t; ++i) res.diag.push_back(A[i][i]);
    if (w.track) {
        res.U = std::move(w.U);
        res.V = std::move(w.V);
    }
    return res;
}

std::optional<std::vector<bigint>> solve_integer(const SmithResult& snf,
                                                 std::size_t rows, std::size_t cols,
                                                 const std::vector<bigint>& b) {
    if (b.size() != rows) throw input_error("solve_integer: size mismatch");
    // U A V = D  =>  A (V y) = b with D y = U b.
    std::vector<bigint> ub(rows, 0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j)
            if (snf.U[i][j] != 0 && b[j] != 0) ub[i] += snf.U[i][j] * b[j];
    std::vector<bigint> y(cols, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        if (i < snf.rank) {
            if (ub[i] % snf.diag[i] != 0) return std::nullopt;
            if (i < cols) y[i] = ub[i] / snf.diag[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<bigint> x(cols, 0);
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (snf.V[i][j] != 0 && y[j] != 0) x[i] += snf.V[i][j] * y[j];
    return x;
}

Matrix boundary_matrix_1(const TwoComplex& X) {
    Matrix d1(X.vertices().size(), std::vector<bigint>(X.edges().size(), 0));
    for (std::size_t j = 0; j < X.edges().size(); ++j) {
        const Edge& e = X.edges()[j];
        d1[X.vertex_index(e.dst)][j] += 1;
        d1[X.vertex_index(e.src)][j] -= 1;
    }
    return d1;
}

Matrix boundary_matrix_2(const TwoComplex& X) {
    Matrix d2(X.edges().size(), std::vector<bigint>(X.faces().size(), 0));
    for (std::size_t j = 0; j < X.faces().size(); ++j) {
        for (const auto& ref : X.faces()[j].cycle)
            d2[X.edge_index(ref.edge)][j] += ref.reversed ? -1 : 1;
    }
    return d2;
}

HomologySummary homology(const TwoComplex& X) {
    const long long nv = static_cast<long long>(X.vertices().size());
    const long long ne = static_cast<long long>(X.edges().size());
    const long long nf = static_cast<long long>(X.faces().size());

    SmithResult s1 = smith_normal_form(boundary_matrix_1(X));
    SmithResult s2 = smith_normal_form(boundary_matrix_2(X));
    const long long r1 = static_cast<long long>(s1.rank);
    const long long r2 = static_cast<long long>(s2.rank);

    HomologySummary h;
    h.betti = {nv - r1, (ne - r1) - r2, nf - r2};
    h.torsion.assign(3, {});
    for (const auto& d : s1.diag)
        if (d > 1) h.torsion[0].push_back(d.convert_to<long long>());
    for (const auto& d : s2.diag)
        if (d > 1) h.torsion[1].push_back(d.convert_to<long long>());

    if (X.euler_characteristic() != h.betti[0] - h.betti[1] + h.betti[2])
        throw internal_error("Euler characteristic does not match Betti numbers");
    return h;
}

} // namespace hfill
