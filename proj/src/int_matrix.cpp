#include "sumcone/int_matrix.hpp"

#include <sstream>

namespace sumcone {

std::string point_to_string(const Point& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    os << ")";
    return os.str();
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<Point>& cols) {
    if (cols.empty()) throw error("from_columns: no columns");
    std::size_t rows = cols[0].size();
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw error("from_columns: ragged columns");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Point IntMatrix::column(std::size_t j) const {
    Point c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw error("matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += v * rhs.at(k, j);
        }
    return out;
}

Point IntMatrix::apply(const Point& x) const {
    if (x.size() != cols_) throw error("matrix apply shape mismatch");
    Point out(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * x[j];
    return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += c * at(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

Int determinant(const IntMatrix& m) {
    if (!m.is_square()) throw error("determinant of non-square matrix");
    std::size_t n = m.rows();
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

namespace {

std::optional<std::vector<Rat>> solve_impl(const IntMatrix& a, const std::vector<Rat>& b) {
    std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m) throw error("solve: rhs size mismatch");
    // Augmented rational elimination.
    std::vector<std::vector<Rat>> w(m, std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(a.at(i, j));
        w[i][n] = b[i];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_row(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = row;
        while (p < m && w[p][col] == 0) ++p;
        if (p == m) throw error("solve: columns are linearly dependent");
        std::swap(w[p], w[row]);
        Rat inv = w[row][col];
        for (std::size_t j = col; j <= n; ++j) w[row][j] /= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || w[i][col] == 0) continue;
            Rat f = w[i][col];
            for (std::size_t j = col; j <= n; ++j) w[i][j] -= f * w[row][j];
        }
        pivot_row[col] = row;
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (w[i][n] != 0) return std::nullopt;  // inconsistent
    std::vector<Rat> x(n);
    for (std::size_t col = 0; col < n; ++col) x[col] = w[pivot_row[col]][n];
    return x;
}

}  // namespace

std::optional<std::vector<Rat>> solve_unique(const IntMatrix& a, const std::vector<Rat>& b) {
    return solve_impl(a, b);
}

std::optional<std::vector<Rat>> solve_unique(const IntMatrix& a, const Point& b) {
    std::vector<Rat> rb(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) rb[i] = Rat(b[i]);
    return solve_impl(a, rb);
}

std::size_t rank(const IntMatrix& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rat>> w(rows, std::vector<Rat>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) w[i][j] = Rat(m.at(i, j));
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && w[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(w[p], w[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (w[i][col] == 0) continue;
            Rat f = w[i][col] / w[r][col];
            for (std::size_t j = col; j < cols; ++j) w[i][j] -= f * w[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace sumcone
