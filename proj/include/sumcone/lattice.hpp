#pragma once

// Exact integer lattices: Smith normal form, lattice index, canonical coset
// labels, fundamental-domain enumeration, and membership in the nonnegative
// span of independent generators.

#include "sumcone/int_matrix.hpp"

#include <compare>
#include <optional>

namespace sumcone {

struct SnfResult {
    IntMatrix u, s, v;  // u * m * v = s, s diagonal with divisibility chain
};

// Works for rectangular matrices; diagonal entries are nonnegative and each
// divides the next.
SnfResult smith_normal_form(const IntMatrix& m);

// Canonical name of a residue class modulo a lattice: one residue per
// non-unit diagonal entry of the SNF, reduced into [0, S_jj).
struct CosetLabel {
    std::vector<Int> coords;

    auto operator<=>(const CosetLabel&) const = default;
};

class Lattice {
  public:
    // Columns of `basis` generate the lattice; must be square and nonsingular.
    explicit Lattice(IntMatrix basis);

    std::size_t dim() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }
    const SnfResult& snf() const { return snf_; }
    const Int& index() const { return index_; }

    CosetLabel coset_label(const Point& x) const;

    // Does x lie in the lattice?
    bool contains(const Point& x) const;

    // Integer coordinates of x in the lattice basis, when x is a lattice
    // point; nullopt otherwise.
    std::optional<Point> basis_coordinates(const Point& x) const;

    // Exactly index() points, one per coset, each satisfying the half-open
    // condition 0 <= lambda_j < 1 in basis coordinates. Deterministic order
    // (lexicographic in SNF residues).
    std::vector<Point> fundamental_domain_points() const;

  private:
    IntMatrix basis_;
    SnfResult snf_;
    Int index_;
    std::vector<std::size_t> label_rows_;  // SNF rows with diagonal > 1
};

// If x is a nonnegative *integer* combination of the given linearly
// independent generators, return the coefficient vector; otherwise nullopt.
// Throws if the generators are dependent.
std::optional<Point> nonneg_span_membership(const Point& x, const std::vector<Point>& gens);

}  // namespace sumcone
