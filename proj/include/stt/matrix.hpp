#pragma once

#include <optional>
#include <string>

#include "stt/fp.hpp"

namespace stt {

// Dense matrix over F_p, row-major. Everything in scope is small (a few
// hundred rows at most), so no sparse machinery.
struct Matrix {
    int rows = 0;
    int cols = 0;
    uint32_t p = 2;
    Vec a;

    Matrix() = default;
    Matrix(int r, int c, uint32_t p_) : rows(r), cols(c), p(p_), a(size_t(r) * c, 0) {}

    static Matrix identity(int n, uint32_t p);
    static Matrix from_rows(const std::vector<Vec>& rows, int cols, uint32_t p);

    uint32_t& at(int i, int j) { return a[size_t(i) * cols + j]; }
    uint32_t at(int i, int j) const { return a[size_t(i) * cols + j]; }

    Vec row(int i) const { return Vec(a.begin() + size_t(i) * cols, a.begin() + size_t(i + 1) * cols); }
    void set_row(int i, const Vec& v);

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && p == o.p && a == o.a; }

    Matrix mul(const Matrix& o) const;
    Matrix add(const Matrix& o) const;
    Matrix sub(const Matrix& o) const;
    Matrix scaled(uint32_t c) const;
    Matrix transpose() const;
    Matrix pow(uint64_t e) const;  // square matrices

    Matrix vstack(const Matrix& o) const;
    Matrix hstack(const Matrix& o) const;

    // Deterministic Gaussian elimination, first-nonzero pivoting.
    struct Rref;
    Rref rref() const;
    int rank() const;

    // Echelonized independent rows (zero rows dropped).
    Matrix row_basis() const;
    // Rows spanning {x : A·x = 0} (x as a row vector of length cols).
    Matrix right_kernel() const;
    // Rows spanning {y : y·A = 0} (y of length rows).
    Matrix left_kernel() const;

    // X with A·X = B, if consistent.
    std::optional<Matrix> solve_right(const Matrix& b) const;
    // X with X·A = B; used to express rows of B over the rows of A.
    std::optional<Matrix> solve_left(const Matrix& b) const;

    bool rowspace_contains(const Vec& v) const;
    bool rowspace_contains_all(const Matrix& o) const;

    std::string to_string() const;
};

struct Matrix::Rref {
    Matrix m;
    std::vector<int> pivots;
    int rank = 0;
};

// Solution space of a·x = b: particular solution plus a basis of ker(a).
struct SolveResult {
    Matrix particular;  // cols(a) x cols(b)
    Matrix nullspace;   // rows = basis vectors of ker(a)
};
std::optional<SolveResult> solve(const Matrix& a, const Matrix& b);

// Basis of the intersection of row spaces (all in the same ambient dimension).
Matrix intersect_rowspaces(const std::vector<Matrix>& spaces);

}  // namespace stt
