#pragma once

// Dense integer matrices with exact arithmetic, plus the handful of exact
// linear-algebra routines the rest of the library leans on: fraction-free
// determinants and rational linear solves with rank checks.

#include "sumcone/numeric.hpp"

#include <optional>

namespace sumcone {

class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {
        if (rows == 0 || cols == 0) throw error("matrix dimensions must be positive");
    }

    static IntMatrix identity(std::size_t n);
    // Columns are the given points (all of equal dimension).
    static IntMatrix from_columns(const std::vector<Point>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    Point column(std::size_t j) const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    Point apply(const Point& x) const;  // matrix * column vector

    bool operator==(const IntMatrix& rhs) const = default;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    bool is_square() const { return rows_ == cols_; }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> entries_;
};

// Exact determinant (Bareiss fraction-free elimination). Square matrices only.
Int determinant(const IntMatrix& m);

// Solve A x = b exactly over the rationals. The columns of A must be linearly
// independent (throws otherwise); returns nullopt when the system is
// inconsistent, the unique solution otherwise. A may be rectangular.
std::optional<std::vector<Rat>> solve_unique(const IntMatrix& a, const std::vector<Rat>& b);
std::optional<std::vector<Rat>> solve_unique(const IntMatrix& a, const Point& b);

// Column rank over Q.
std::size_t rank(const IntMatrix& m);

}  // namespace sumcone
