#pragma once

// Exact arithmetic base layer: arbitrary-precision integers and rationals,
// integer points, and the counting binomial. No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumcone {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// A lattice point in Z^d; compared lexicographically.
using Point = std::vector<Int>;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Oracle or enumeration work would exceed the configured point budget.
struct budget_exceeded : error {
    using error::error;
};

// A mathematical hypothesis of the requested operation does not hold
// (non-simplex hull, gcd != 1, wrong cardinality, ...).
struct hypothesis_unmet : error {
    using error::error;
};

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// floor(p/q) as an exact integer.
inline Int rat_floor(const Rat& r) {
    Int n = rat_num(r), d = rat_den(r);
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

inline long long to_ll(const Int& v) {
    if (v > std::numeric_limits<long long>::max() ||
        v < std::numeric_limits<long long>::min())
        throw error("integer out of machine range: " + v.str());
    return static_cast<long long>(v);
}

inline std::size_t to_size(const Int& v) {
    if (v < 0) throw error("expected a non-negative integer, got " + v.str());
    return static_cast<std::size_t>(to_ll(v));
}

// Counting binomial: C(n, k) with C(n, k) = 0 whenever n < k (including
// negative n). This is the convention under which the sumset cardinality
// formulas hold verbatim for every h >= 0.
inline Int binomial(const Int& n, unsigned k) {
    if (n < Int(k)) return 0;
    Int num = 1;
    for (unsigned i = 0; i < k; ++i) num *= n - i;
    Int den = 1;
    for (unsigned i = 2; i <= k; ++i) den *= i;
    return num / den;
}

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Point point_add(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw error("dimension mismatch in point addition");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Point point_sub(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw error("dimension mismatch in point subtraction");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Point point_scale(const Int& c, const Point& a) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Point zero_point(std::size_t dim) { return Point(dim, Int(0)); }

std::string point_to_string(const Point& p);

}  // namespace sumcone
