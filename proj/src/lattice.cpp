#include "sumcone/lattice.hpp"

#include <algorithm>

namespace sumcone {

namespace {

// Position of the submatrix entry of smallest nonzero magnitude, or nullopt
// if the submatrix is zero.
std::optional<std::pair<std::size_t, std::size_t>> min_nonzero(const IntMatrix& s,
                                                               std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs = 0;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            if (s.at(i, j) == 0) continue;
            Int a = abs(s.at(i, j));
            if (!best || a < best_abs) {
                best = {{i, j}};
                best_abs = a;
            }
        }
    return best;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
    IntMatrix s = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());

    // Row ops on s are mirrored on u (left factor), column ops on v (right).
    auto row_add = [&](std::size_t d, std::size_t r, const Int& c) {
        s.add_row_multiple(d, r, c);
        u.add_row_multiple(d, r, c);
    };
    auto col_add = [&](std::size_t d, std::size_t r, const Int& c) {
        s.add_col_multiple(d, r, c);
        v.add_col_multiple(d, r, c);
    };

    std::size_t t = 0;
    const std::size_t limit = std::min(m.rows(), m.cols());
    while (t < limit) {
        auto piv = min_nonzero(s, t);
        if (!piv) break;  // remaining block is zero
        s.swap_rows(t, piv->first);
        u.swap_rows(t, piv->first);
        s.swap_cols(t, piv->second);
        v.swap_cols(t, piv->second);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            // Clear the pivot column.
            for (std::size_t i = t + 1; i < s.rows(); ++i) {
                if (s.at(i, t) == 0) continue;
                Int q = s.at(i, t) / s.at(t, t);
                row_add(i, t, -q);
                if (s.at(i, t) != 0) {
                    // Remainder is strictly smaller; promote it to pivot.
                    s.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            // Clear the pivot row.
            for (std::size_t j = t + 1; j < s.cols(); ++j) {
                if (s.at(t, j) == 0) continue;
                Int q = s.at(t, j) / s.at(t, t);
                col_add(j, t, -q);
                if (s.at(t, j) != 0) {
                    s.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
        }

        // Divisibility: pivot must divide every entry of the trailing block.
        bool fixed = false;
        for (std::size_t i = t + 1; i < s.rows() && !fixed; ++i)
            for (std::size_t j = t + 1; j < s.cols() && !fixed; ++j)
                if (s.at(i, j) % s.at(t, t) != 0) {
                    row_add(t, i, 1);
                    fixed = true;
                }
        if (fixed) continue;  // re-run elimination at the same pivot

        if (s.at(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
        ++t;
    }
    return {std::move(u), std::move(s), std::move(v)};
}

Lattice::Lattice(IntMatrix basis) : basis_(std::move(basis)) {
    if (!basis_.is_square()) throw error("lattice basis must be square");
    snf_ = smith_normal_form(basis_);
    index_ = 1;
    for (std::size_t j = 0; j < basis_.cols(); ++j) index_ *= snf_.s.at(j, j);
    if (index_ == 0) throw error("lattice basis is singular (degenerate hull)");
    for (std::size_t j = 0; j < basis_.cols(); ++j)
        if (snf_.s.at(j, j) > 1) label_rows_.push_back(j);
}

CosetLabel Lattice::coset_label(const Point& x) const {
    if (x.size() != dim()) throw error("coset_label: dimension mismatch");
    // x == y mod L  iff  S_jj | (U x - U y)_j for every j, so the reduced
    // U-coordinates over the non-unit invariant factors name the coset.
    Point ux = snf_.u.apply(x);
    CosetLabel label;
    label.coords.reserve(label_rows_.size());
    for (std::size_t j : label_rows_) {
        const Int& mod = snf_.s.at(j, j);
        Int r = ux[j] % mod;
        if (r < 0) r += mod;
        label.coords.push_back(r);
    }
    return label;
}

bool Lattice::contains(const Point& x) const {
    return static_cast<bool>(basis_coordinates(x));
}

std::optional<Point> Lattice::basis_coordinates(const Point& x) const {
    auto sol = solve_unique(basis_, x);
    if (!sol) return std::nullopt;
    Point c(sol->size());
    for (std::size_t i = 0; i < sol->size(); ++i) {
        if (!is_integer((*sol)[i])) return std::nullopt;
        c[i] = rat_num((*sol)[i]);
    }
    return c;
}

std::vector<Point> Lattice::fundamental_domain_points() const {
    const std::size_t n = dim();
    std::vector<Point> out;
    out.reserve(to_size(index_));

    // One representative per SNF residue vector, reduced into the half-open
    // parallelepiped of the basis.
    std::vector<Int> residue(n, Int(0));
    auto emit = [&]() {
        // Solve U x = residue; U is unimodular so x is integral.
        auto sol = solve_unique(snf_.u, residue);
        if (!sol) throw error("unimodular solve failed");
        Point x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = rat_num((*sol)[i]);
        // Reduce: x' = x - basis * floor(lambda), lambda = basis^{-1} x.
        auto lam = solve_unique(basis_, x);
        if (!lam) throw error("basis solve failed");
        for (std::size_t j = 0; j < n; ++j) {
            Int f = rat_floor((*lam)[j]);
            if (f != 0) {
                for (std::size_t i = 0; i < n; ++i) x[i] -= f * basis_.at(i, j);
            }
        }
        out.push_back(std::move(x));
    };

    // Odometer over residues 0 <= r_j < S_jj.
    while (true) {
        emit();
        std::size_t j = 0;
        for (; j < n; ++j) {
            if (residue[j] + 1 < snf_.s.at(j, j)) {
                ++residue[j];
                break;
            }
            residue[j] = 0;
        }
        if (j == n) break;
    }
    return out;
}

std::optional<Point> nonneg_span_membership(const Point& x, const std::vector<Point>& gens) {
    if (gens.empty()) throw error("nonneg_span_membership: no generators");
    IntMatrix g = IntMatrix::from_columns(gens);
    if (rank(g) != gens.size())
        throw error("nonneg_span_membership: generators are linearly dependent");
    auto sol = solve_unique(g, x);
    if (!sol) return std::nullopt;
    Point c(sol->size());
    for (std::size_t i = 0; i < sol->size(); ++i) {
        if (!is_integer((*sol)[i]) || rat_num((*sol)[i]) < 0) return std::nullopt;
        c[i] = rat_num((*sol)[i]);
    }
    return c;
}

}  // namespace sumcone
