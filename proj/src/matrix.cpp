#include "stt/matrix.hpp"

#include <sstream>

namespace stt {

Matrix Matrix::identity(int n, uint32_t p) {
    Matrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols, uint32_t p) {
    Matrix m(int(rows.size()), cols, p);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (int(rows[i].size()) != cols) throw std::invalid_argument("from_rows: width mismatch");
        for (int j = 0; j < cols; ++j) m.at(int(i), j) = rows[i][j] % p;
    }
    return m;
}

void Matrix::set_row(int i, const Vec& v) {
    for (int j = 0; j < cols; ++j) at(i, j) = v[j];
}

bool Matrix::is_zero() const {
    for (uint32_t x : a)
        if (x) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != (i == j ? 1u % p : 0u)) return false;
    return true;
}

Matrix Matrix::mul(const Matrix& o) const {
    if (cols != o.rows || p != o.p) throw std::invalid_argument("mul: shape/field mismatch");
    Matrix r(rows, o.cols, p);
    for (int i = 0; i < rows; ++i) {
        for (int k = 0; k < cols; ++k) {
            uint64_t c = at(i, k);
            if (!c) continue;
            for (int j = 0; j < o.cols; ++j) {
                uint64_t v = r.at(i, j) + c * o.at(k, j);
                r.at(i, j) = uint32_t(v % p);
            }
        }
    }
    return r;
}

Matrix Matrix::add(const Matrix& o) const {
    Matrix r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = fp::add(r.a[i], o.a[i], p);
    return r;
}

Matrix Matrix::sub(const Matrix& o) const {
    Matrix r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = fp::sub(r.a[i], o.a[i], p);
    return r;
}

Matrix Matrix::scaled(uint32_t c) const {
    Matrix r = *this;
    for (auto& x : r.a) x = fp::mul(x, c, p);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols, rows, p);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::pow(uint64_t e) const {
    if (rows != cols) throw std::invalid_argument("pow: square only");
    Matrix r = identity(rows, p);
    Matrix b = *this;
    while (e) {
        if (e & 1) r = r.mul(b);
        b = b.mul(b);
        e >>= 1;
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (o.rows == 0) return *this;
    if (rows == 0) return o;
    if (cols != o.cols) throw std::invalid_argument("vstack: width mismatch");
    Matrix r(rows + o.rows, cols, p);
    std::copy(a.begin(), a.end(), r.a.begin());
    std::copy(o.a.begin(), o.a.end(), r.a.begin() + a.size());
    return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (rows != o.rows) throw std::invalid_argument("hstack: height mismatch");
    Matrix r(rows, cols + o.cols, p);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols; ++j) r.at(i, cols + j) = o.at(i, j);
    }
    return r;
}

Matrix::Rref Matrix::rref() const {
    Rref res;
    res.m = *this;
    Matrix& m = res.m;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m.at(i, c)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        uint32_t inv = fp::inv(m.at(r, c), p);
        for (int j = c; j < cols; ++j) m.at(r, j) = fp::mul(m.at(r, j), inv, p);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            uint32_t f = m.at(i, c);
            if (!f) continue;
            for (int j = c; j < cols; ++j)
                m.at(i, j) = fp::sub(m.at(i, j), fp::mul(f, m.at(r, j), p), p);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

int Matrix::rank() const { return rref().rank; }

Matrix Matrix::row_basis() const {
    Rref r = rref();
    Matrix b(r.rank, cols, p);
    for (int i = 0; i < r.rank; ++i)
        for (int j = 0; j < cols; ++j) b.at(i, j) = r.m.at(i, j);
    return b;
}

Matrix Matrix::right_kernel() const {
    Rref r = rref();
    std::vector<bool> is_pivot(cols, false);
    for (int c : r.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(int(free_cols.size()), cols, p);
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        int fc = free_cols[fi];
        k.at(int(fi), fc) = 1 % p;
        for (int i = 0; i < r.rank; ++i)
            k.at(int(fi), r.pivots[i]) = fp::neg(r.m.at(i, fc), p);
    }
    return k;
}

Matrix Matrix::left_kernel() const { return transpose().right_kernel(); }

std::optional<Matrix> Matrix::solve_right(const Matrix& b) const {
    if (b.rows != rows) throw std::invalid_argument("solve_right: height mismatch");
    Matrix aug = hstack(b);
    Matrix::Rref r = aug.rref();
    // inconsistent when a pivot falls in the b block
    for (int c : r.pivots)
        if (c >= cols) return std::nullopt;
    Matrix x(cols, b.cols, p);
    for (size_t i = 0; i < r.pivots.size(); ++i)
        for (int j = 0; j < b.cols; ++j)
            x.at(r.pivots[i], j) = r.m.at(int(i), cols + j);
    return x;
}

std::optional<Matrix> Matrix::solve_left(const Matrix& b) const {
    auto xt = transpose().solve_right(b.transpose());
    if (!xt) return std::nullopt;
    return xt->transpose();
}

bool Matrix::rowspace_contains(const Vec& v) const {
    Matrix vm = Matrix::from_rows({v}, cols, p);
    return vstack(vm).rank() == rank();
}

bool Matrix::rowspace_contains_all(const Matrix& o) const {
    return vstack(o).rank() == rank();
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows; ++i) {
        os << (i == 0 ? "[" : " ") << "[";
        for (int j = 0; j < cols; ++j) os << (j ? "," : "") << at(i, j);
        os << "]" << (i + 1 == rows ? "]" : "\n");
    }
    return os.str();
}

std::optional<SolveResult> solve(const Matrix& a, const Matrix& b) {
    auto x = a.solve_right(b);
    if (!x) return std::nullopt;
    SolveResult r;
    r.particular = *x;
    r.nullspace = a.right_kernel();
    return r;
}

Matrix intersect_rowspaces(const std::vector<Matrix>& spaces) {
    if (spaces.empty()) throw std::invalid_argument("intersect: no spaces");
    Matrix acc = spaces[0].row_basis();
    for (size_t i = 1; i < spaces.size(); ++i) {
        Matrix b = spaces[i].row_basis();
        if (b.cols != acc.cols || b.p != acc.p)
            throw std::invalid_argument("intersect: ambient mismatch");
        // x = u·acc = v·b  <=>  (u,-v) in left kernel of [acc; b]
        Matrix stacked = acc.vstack(b);
        Matrix lk = stacked.left_kernel();
        Matrix out(lk.rows, acc.cols, acc.p);
        for (int r = 0; r < lk.rows; ++r)
            for (int j = 0; j < acc.cols; ++j) {
                uint32_t s = 0;
                for (int i2 = 0; i2 < acc.rows; ++i2)
                    s = fp::add(s, fp::mul(lk.at(r, i2), acc.at(i2, j), acc.p), acc.p);
                out.at(r, j) = s;
            }
        acc = out.row_basis();
    }
    return acc;
}

}  // namespace stt
