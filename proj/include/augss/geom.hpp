#pragma once

// Coordinate-level verification that the join of standard simplices is a
// standard simplex: the scaling map (r, u, s, v) -> (r u, s v) from the
// segment-space presentation into barycentric coordinates.  Exact rational
// arithmetic, deterministic seeded sampling.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "augss/sset.hpp"

namespace augss {

using Rational = boost::multiprecision::cpp_rational;

/// Barycentric coordinates: nonnegative, summing to exactly 1.
struct BaryPoint {
    std::vector<Rational> coords;

    static BaryPoint vertex(int m, int i);  // e_i in the m-simplex
    int dim() const { return static_cast<int>(coords.size()) - 1; }
    bool valid() const;
    bool operator==(const BaryPoint&) const = default;
};

/// A point of the join of two simplices: r + s = 1, with the left point
/// ignored when r = 0 and the right point ignored when s = 0.
struct JoinPoint {
    Rational r, s;
    BaryPoint left, right;

    bool valid() const;
    /// Equality modulo the ignore rules.
    bool same_point(const JoinPoint& other) const;
};

/// (r, u, s, v) -> (r u_0, ..., r u_p, s v_0, ..., s v_q).
BaryPoint join_to_simplex(const JoinPoint& pt);

struct GeomReport {
    int requested_samples = 0;
    int checked_samples = 0;
    std::vector<std::string> failures;
    std::vector<std::string> vertex_table;

    bool clean() const { return failures.empty(); }
    std::string to_text() const;
};

/// Draw seeded sample points of the join of the p- and q-simplex, map them
/// through join_to_simplex, and check: the image lies in the standard
/// (p+q+1)-simplex (exact sum 1, nonnegative), the map is injective modulo
/// the ignore rules, and the p + q + 2 join vertices land on the standard
/// basis, left block first.
GeomReport verify_affine_simplex(int p, int q, int samples, std::uint64_t seed);

}  // namespace augss
