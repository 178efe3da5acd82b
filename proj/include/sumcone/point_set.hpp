#pragma once

// Finite integer point sets: the h-fold sumset oracle, normalization, exact
// convex-hull analysis (vertices, simplex detection, normalized volume),
// weight polynomials, and the one-dimensional exceptional-set machinery.

#include "sumcone/numeric.hpp"
#include "sumcone/weight_poly.hpp"

#include <optional>

namespace sumcone {

inline constexpr std::size_t kDefaultBudget = 1'000'000;  // total cached points

class PointSet {
  public:
    PointSet() = default;
    // Points are deduplicated and kept sorted lexicographically.
    PointSet(std::size_t dim, std::vector<Point> points);

    static PointSet singleton(Point p);
    static PointSet origin(std::size_t dim);
    static PointSet from_1d(const std::vector<Int>& values);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const std::vector<Point>& points() const { return points_; }
    const Point& operator[](std::size_t i) const { return points_[i]; }

    bool contains(const Point& p) const;
    bool operator==(const PointSet& rhs) const = default;

    // For 1-D sets only.
    Int min_value() const;
    Int max_value() const;
    std::vector<Int> values_1d() const;

  private:
    std::size_t dim_ = 0;
    std::vector<Point> points_;
};

// --- sumsets -----------------------------------------------------------

// Exact { s + t : s in S, t in T }. Output size may be capped; exceeding the
// cap throws budget_exceeded.
PointSet minkowski_sum(const PointSet& s, const PointSet& t,
                       std::size_t max_size = SIZE_MAX);

// Level-by-level brute force for hA. This is the oracle every closed form in
// the library is checked against; it refuses to grow past `budget` total
// cached points rather than hang.
class Oracle {
  public:
    explicit Oracle(PointSet base, std::size_t budget = kDefaultBudget);

    const PointSet& level(std::size_t h);
    std::size_t cardinality(std::size_t h) { return level(h).size(); }
    const PointSet& base() const { return base_; }
    std::size_t levels_computed() const { return levels_.size(); }

  private:
    PointSet base_;
    std::size_t budget_;
    std::size_t total_points_ = 0;
    std::vector<PointSet> levels_;
};

PointSet iterated_sumset(const PointSet& a, std::size_t h,
                         std::size_t budget = kDefaultBudget);

// |hA| for h = 0..h_max without retaining the levels (memory-lean sweeps).
std::vector<std::size_t> sumset_cardinalities(const PointSet& a, std::size_t h_max,
                                              std::size_t budget = kDefaultBudget);

// --- normalization -----------------------------------------------------

struct TransformRecord {
    Point shift;                         // subtracted from every point
    Int dilation = 1;                    // 1-D only; divides after the shift
    bool collapsed_singleton = false;    // 1-D singleton note
};

// 1-D: minimum 0 and gcd 1. Higher dimensions: the lexicographically least
// point (always a hull vertex) is translated to the origin.
std::pair<PointSet, TransformRecord> normalize(const PointSet& a);

Point apply_inverse_transform(const TransformRecord& t, const Point& p);

// True iff the difference set A - A generates Z^d additively.
bool generates_full_lattice(const PointSet& a);

// --- convex hull -------------------------------------------------------

struct HullInfo {
    std::vector<Point> vertices;  // d = 2: counterclockwise; otherwise sorted
    bool full_dim = false;
    bool is_simplex = false;      // exactly d+1 affinely independent vertices
    Int normalized_volume = 0;    // vol(hull) * d!, exact; 0 if degenerate
};

HullInfo hull_analysis(const PointSet& a);

// --- weights -----------------------------------------------------------

WeightPolynomial sigma_weight(const PointSet& s);

// --- 1-D exceptional sets ----------------------------------------------

// The finitely many naturals not hit by any hA (requires min 0, gcd 1).
// Scans to (max A)^2 and certifies completeness via a full residue system.
std::vector<Int> exceptional_set(const PointSet& a);

// Checks the interval-minus-two-tails description of hA against the oracle:
// hA = {0..bh} \ (E(A) u (bh - E(b-A))).
bool granville_walker_check(const PointSet& a, std::size_t h,
                            std::size_t budget = kDefaultBudget);

}  // namespace sumcone
