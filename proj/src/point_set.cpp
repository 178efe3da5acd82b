#include "sumcone/point_set.hpp"

#include "sumcone/int_matrix.hpp"
#include "sumcone/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace sumcone {

PointSet::PointSet(std::size_t dim, std::vector<Point> points)
    : dim_(dim), points_(std::move(points)) {
    for (const auto& p : points_)
        if (p.size() != dim_) throw error("point set: dimension mismatch");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

PointSet PointSet::singleton(Point p) {
    std::size_t d = p.size();
    return PointSet(d, {std::move(p)});
}

PointSet PointSet::origin(std::size_t dim) { return singleton(zero_point(dim)); }

PointSet PointSet::from_1d(const std::vector<Int>& values) {
    std::vector<Point> pts;
    pts.reserve(values.size());
    for (const Int& v : values) pts.push_back(Point{v});
    return PointSet(1, std::move(pts));
}

bool PointSet::contains(const Point& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

Int PointSet::min_value() const {
    if (dim_ != 1 || empty()) throw error("min_value needs a nonempty 1-D set");
    return points_.front()[0];
}

Int PointSet::max_value() const {
    if (dim_ != 1 || empty()) throw error("max_value needs a nonempty 1-D set");
    return points_.back()[0];
}

std::vector<Int> PointSet::values_1d() const {
    if (dim_ != 1) throw error("values_1d needs a 1-D set");
    std::vector<Int> v;
    v.reserve(size());
    for (const auto& p : points_) v.push_back(p[0]);
    return v;
}

PointSet minkowski_sum(const PointSet& s, const PointSet& t, std::size_t max_size) {
    if (s.dim() != t.dim()) throw error("minkowski_sum: dimension mismatch");
    if (s.empty() || t.empty()) return PointSet(s.dim(), {});

    // Merge the |small| sorted translates of the larger set; translation
    // preserves lexicographic order, so this is a k-way merge with dedup.
    const PointSet& small = s.size() <= t.size() ? s : t;
    const PointSet& large = s.size() <= t.size() ? t : s;
    const std::size_t k = small.size();

    std::vector<std::size_t> idx(k, 0);
    std::vector<Point> head(k);
    for (std::size_t j = 0; j < k; ++j) head[j] = point_add(large[0], small[j]);

    std::vector<Point> out;
    std::size_t active = k;
    while (active > 0) {
        std::size_t best = SIZE_MAX;
        for (std::size_t j = 0; j < k; ++j) {
            if (idx[j] >= large.size()) continue;
            if (best == SIZE_MAX || head[j] < head[best]) best = j;
        }
        if (out.size() >= max_size)
            throw budget_exceeded("minkowski_sum: result exceeds the point budget");
        out.push_back(head[best]);
        const Point& emitted = out.back();
        for (std::size_t j = 0; j < k; ++j) {
            if (idx[j] >= large.size() || head[j] != emitted) continue;
            if (++idx[j] < large.size())
                head[j] = point_add(large[idx[j]], small[j]);
            else
                --active;
        }
    }
    PointSet result;
    // Already sorted and unique; bypass the normalizing constructor.
    struct Raw : PointSet {};
    PointSet r(s.dim(), std::move(out));
    return r;
}

Oracle::Oracle(PointSet base, std::size_t budget)
    : base_(std::move(base)), budget_(budget) {
    if (base_.empty()) throw error("oracle: base set must be nonempty");
    levels_.push_back(PointSet::origin(base_.dim()));
    total_points_ = 1;
}

const PointSet& Oracle::level(std::size_t h) {
    while (levels_.size() <= h) {
        std::size_t room = budget_ > total_points_ ? budget_ - total_points_ : 0;
        if (room == 0)
            throw budget_exceeded("oracle: point budget of " + std::to_string(budget_) +
                                  " exhausted at level " + std::to_string(levels_.size()));
        PointSet next = minkowski_sum(levels_.back(), base_, room);
        total_points_ += next.size();
        levels_.push_back(std::move(next));
    }
    return levels_[h];
}

PointSet iterated_sumset(const PointSet& a, std::size_t h, std::size_t budget) {
    if (a.empty()) throw error("iterated_sumset: empty base set");
    PointSet cur = PointSet::origin(a.dim());
    std::size_t total = 1;
    for (std::size_t i = 0; i < h; ++i) {
        std::size_t room = budget > total ? budget - total : 0;
        if (room == 0) throw budget_exceeded("iterated_sumset: point budget exhausted");
        cur = minkowski_sum(cur, a, room);
        total += cur.size();
    }
    return cur;
}

std::vector<std::size_t> sumset_cardinalities(const PointSet& a, std::size_t h_max,
                                              std::size_t budget) {
    std::vector<std::size_t> sizes;
    sizes.reserve(h_max + 1);
    PointSet cur = PointSet::origin(a.dim());
    std::size_t total = 1;
    sizes.push_back(1);
    for (std::size_t h = 1; h <= h_max; ++h) {
        std::size_t room = budget > total ? budget - total : 0;
        if (room == 0) throw budget_exceeded("sumset_cardinalities: point budget exhausted");
        cur = minkowski_sum(cur, a, room);
        total += cur.size();
        sizes.push_back(cur.size());
    }
    return sizes;
}

std::pair<PointSet, TransformRecord> normalize(const PointSet& a) {
    if (a.empty()) throw error("normalize: empty set");
    TransformRecord t;
    if (a.dim() == 1) {
        Int shift = a.min_value();
        t.shift = Point{shift};
        std::vector<Int> shifted;
        shifted.reserve(a.size());
        Int g = 0;
        for (const auto& p : a.points()) {
            shifted.push_back(p[0] - shift);
            g = gcd(g, shifted.back());
        }
        if (g == 0) {
            t.collapsed_singleton = true;
            t.dilation = 1;
            return {PointSet::from_1d({Int(0)}), t};
        }
        t.dilation = g;
        for (auto& v : shifted) v /= g;
        return {PointSet::from_1d(shifted), t};
    }
    // The lexicographically least point is extreme, hence a hull vertex.
    t.shift = a[0];
    std::vector<Point> pts;
    pts.reserve(a.size());
    for (const auto& p : a.points()) pts.push_back(point_sub(p, t.shift));
    return {PointSet(a.dim(), std::move(pts)), t};
}

Point apply_inverse_transform(const TransformRecord& t, const Point& p) {
    Point out = point_scale(t.dilation, p);
    return point_add(out, t.shift);
}

bool generates_full_lattice(const PointSet& a) {
    std::size_t d = a.dim();
    if (a.size() < 2) return false;
    std::vector<Point> diffs;
    diffs.reserve(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) diffs.push_back(point_sub(a[i], a[0]));
    SnfResult snf = smith_normal_form(IntMatrix::from_columns(diffs));
    std::size_t pivots = std::min(snf.s.rows(), snf.s.cols());
    for (std::size_t j = 0; j < d; ++j) {
        if (j >= pivots || snf.s.at(j, j) != 1) return false;
    }
    return true;
}

namespace {

Int cross2(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Counterclockwise strictly-convex hull of >= 1 sorted distinct 2-D points.
std::vector<Point> monotone_chain(const std::vector<Point>& pts) {
    if (pts.size() <= 2) return pts;
    std::vector<Point> hull;
    for (const auto& p : pts) {  // lower
        while (hull.size() >= 2 && cross2(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    std::size_t lower = hull.size() + 1;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {  // upper
        while (hull.size() >= lower && cross2(hull[hull.size() - 2], hull.back(), *it) <= 0)
            hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back();
    return hull;
}

// Lifted-column rank: affine rank of the point family.
std::size_t affine_rank(const std::vector<Point>& pts) {
    std::vector<Point> lifted;
    lifted.reserve(pts.size());
    for (const auto& p : pts) {
        Point q = p;
        q.push_back(1);
        lifted.push_back(std::move(q));
    }
    return rank(IntMatrix::from_columns(lifted));
}

// Is p a convex combination of `others`? Exact Caratheodory search over
// affinely independent subsets of size <= d+1.
bool in_convex_hull(const Point& p, const std::vector<Point>& others, std::size_t d) {
    std::size_t n = others.size();
    std::size_t max_k = std::min(n, d + 1);
    std::vector<std::size_t> pick;
    Point rhs = p;
    rhs.push_back(1);

    auto try_subset = [&](const std::vector<std::size_t>& sel) -> bool {
        std::vector<Point> cols;
        cols.reserve(sel.size());
        for (std::size_t i : sel) {
            Point q = others[i];
            q.push_back(1);
            cols.push_back(std::move(q));
        }
        IntMatrix m = IntMatrix::from_columns(cols);
        if (rank(m) != sel.size()) return false;  // affinely dependent; skip
        auto sol = solve_unique(m, rhs);
        if (!sol) return false;
        for (const Rat& c : *sol)
            if (c < 0) return false;
        return true;
    };

    // Enumerate subsets of each size k.
    for (std::size_t k = 1; k <= max_k; ++k) {
        std::vector<std::size_t> sel(k);
        std::iota(sel.begin(), sel.end(), 0);
        while (true) {
            if (try_subset(sel)) return true;
            // next combination
            std::size_t i = k;
            while (i > 0 && sel[i - 1] == n - k + (i - 1)) --i;
            if (i == 0) break;
            ++sel[i - 1];
            for (std::size_t j = i; j < k; ++j) sel[j] = sel[j - 1] + 1;
        }
    }
    return false;
}

Int simplex_normalized_volume(const std::vector<Point>& verts) {
    std::vector<Point> edges;
    edges.reserve(verts.size() - 1);
    for (std::size_t i = 1; i < verts.size(); ++i)
        edges.push_back(point_sub(verts[i], verts[0]));
    return abs(determinant(IntMatrix::from_columns(edges)));
}

// Primitive integer vector spanning the 1-dimensional kernel of m.
Point kernel_vector(const IntMatrix& m) {
    std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Rat>> w(rows, std::vector<Rat>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) w[i][j] = Rat(m.at(i, j));
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && w[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(w[p], w[r]);
        Rat inv = w[r][col];
        for (std::size_t j = col; j < cols; ++j) w[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || w[i][col] == 0) continue;
            Rat f = w[i][col];
            for (std::size_t j = col; j < cols; ++j) w[i][j] -= f * w[r][j];
        }
        pivot_col.push_back(col);
        is_pivot[col] = true;
        ++r;
    }
    std::size_t free_col = SIZE_MAX;
    for (std::size_t j = 0; j < cols; ++j)
        if (!is_pivot[j]) {
            free_col = j;
            break;
        }
    if (free_col == SIZE_MAX || pivot_col.size() + 1 != cols)
        throw error("kernel_vector: kernel is not one-dimensional");
    std::vector<Rat> x(cols, Rat(0));
    x[free_col] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = -w[i][free_col];
    Int den_lcm = 1;
    for (const Rat& c : x) den_lcm = lcm(den_lcm, rat_den(c));
    Point v(cols);
    Int g = 0;
    for (std::size_t j = 0; j < cols; ++j) {
        v[j] = rat_num(x[j]) * (den_lcm / rat_den(x[j]));
        g = gcd(g, v[j]);
    }
    for (auto& c : v) c /= g;
    return v;
}

}  // namespace

HullInfo hull_analysis(const PointSet& a) {
    if (a.empty()) throw error("hull_analysis: empty set");
    const std::size_t d = a.dim();
    HullInfo info;
    info.full_dim = affine_rank(a.points()) == d + 1;

    if (d == 1) {
        if (a.size() == 1) {
            info.vertices = {a[0]};
            return info;
        }
        info.vertices = {a.points().front(), a.points().back()};
        info.is_simplex = true;
        info.normalized_volume = a.max_value() - a.min_value();
        return info;
    }

    if (d == 2) {
        info.vertices = monotone_chain(a.points());
        if (!info.full_dim) return info;
        info.is_simplex = info.vertices.size() == 3;
        Int twice_area = 0;  // shoelace over the CCW vertex cycle
        const auto& v = info.vertices;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point& p = v[i];
            const Point& q = v[(i + 1) % v.size()];
            twice_area += p[0] * q[1] - q[0] * p[1];
        }
        info.normalized_volume = abs(twice_area);
        return info;
    }

    // d >= 3: Caratheodory vertex filter over the (small) sets in scope.
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<Point> others;
        others.reserve(a.size() - 1);
        for (std::size_t j = 0; j < a.size(); ++j)
            if (j != i) others.push_back(a[j]);
        if (others.empty() || !in_convex_hull(a[i], others, d)) info.vertices.push_back(a[i]);
    }
    if (!info.full_dim) return info;
    info.is_simplex = info.vertices.size() == d + 1;
    if (info.is_simplex) {
        info.normalized_volume = simplex_normalized_volume(info.vertices);
        return info;
    }
    if (info.vertices.size() == d + 2) {
        // All d+2 points are vertices: the unique affine dependence splits
        // them into a circuit, and deleting each positive-coefficient point
        // triangulates the hull.
        std::vector<Point> lifted;
        for (const auto& p : info.vertices) {
            Point q = p;
            q.push_back(1);
            lifted.push_back(std::move(q));
        }
        Point lambda = kernel_vector(IntMatrix::from_columns(lifted));
        Int vol = 0;
        for (std::size_t i = 0; i < info.vertices.size(); ++i) {
            if (lambda[i] <= 0) continue;
            std::vector<Point> simplex;
            for (std::size_t j = 0; j < info.vertices.size(); ++j)
                if (j != i) simplex.push_back(info.vertices[j]);
            vol += simplex_normalized_volume(simplex);
        }
        info.normalized_volume = vol;
        return info;
    }
    throw hypothesis_unmet(
        "hull_analysis: exact volume beyond d+2 vertices is not supported in dimension >= 3");
}

WeightPolynomial sigma_weight(const PointSet& s) {
    WeightPolynomial p;
    for (const auto& pt : s.points()) p.add_term(pt, Rat(1));
    return p;
}

std::vector<Int> exceptional_set(const PointSet& a) {
    if (a.dim() != 1) throw hypothesis_unmet("exceptional_set: 1-D sets only");
    if (a.min_value() != 0) throw hypothesis_unmet("exceptional_set: set must contain 0 as minimum");
    Int g = 0;
    for (const Int& v : a.values_1d()) g = gcd(g, v);
    if (g != 1)
        throw hypothesis_unmet("exceptional_set: gcd != 1, the exceptional set is infinite");
    const Int b_int = a.max_value();
    if (b_int > 100000) throw budget_exceeded("exceptional_set: max element too large to scan");
    const std::size_t b = to_size(b_int);
    const std::size_t bound = b * b;  // every residue mod b appears below b^2

    std::vector<char> reachable(bound + 1, 0);
    reachable[0] = 1;
    std::vector<std::size_t> elems;
    for (const Int& v : a.values_1d())
        if (v > 0) elems.push_back(to_size(v));
    for (std::size_t n = 1; n <= bound; ++n)
        for (std::size_t e : elems)
            if (n >= e && reachable[n - e]) {
                reachable[n] = 1;
                break;
            }

    std::vector<char> residue_seen(b, 0);
    for (std::size_t n = 0; n < bound; ++n)
        if (reachable[n]) residue_seen[n % b] = 1;
    for (std::size_t r = 0; r < b; ++r)
        if (!residue_seen[r])
            throw error("exceptional_set: residue certification failed (scan bound too small)");

    std::vector<Int> out;
    for (std::size_t n = 0; n < bound; ++n)
        if (!reachable[n]) out.push_back(Int(n));
    return out;
}

bool granville_walker_check(const PointSet& a, std::size_t h, std::size_t budget) {
    if (a.dim() != 1 || a.min_value() != 0)
        throw hypothesis_unmet("granville_walker_check: normalized 1-D set required");
    const Int b = a.max_value();
    std::vector<Int> e_a = exceptional_set(a);
    std::vector<Int> reflected;
    for (const Int& v : a.values_1d()) reflected.push_back(b - v);
    std::vector<Int> e_b = exceptional_set(PointSet::from_1d(reflected));

    const Int top = b * Int(h);
    std::vector<Point> rhs;
    {
        std::vector<char> excluded(to_size(top) + 1, 0);
        for (const Int& e : e_a)
            if (e <= top) excluded[to_size(e)] = 1;
        for (const Int& e : e_b)
            if (e <= top) excluded[to_size(top - e)] = 1;
        for (std::size_t n = 0; n < excluded.size(); ++n)
            if (!excluded[n]) rhs.push_back(Point{Int(n)});
    }
    PointSet lhs = iterated_sumset(a, h, budget);
    return lhs.points() == rhs;
}

}  // namespace sumcone
