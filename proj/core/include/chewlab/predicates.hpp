#pragma once

#include "chewlab/geometry_types.hpp"

namespace chewlab {

// Sign of the signed area of triangle (a, b, c).
// +1 when c lies strictly to the left of the directed line a->b,
// -1 when strictly to the right, 0 when collinear.
// Evaluated with a floating point filter backed by an exact rational
// fallback, so the result is always the true sign.
int orient(const Point& a, const Point& b, const Point& c);

// Sign of the incircle determinant for (a, b, c, p) with (a, b, c) in
// counterclockwise order: +1 when p is strictly inside the circumcircle
// of (a, b, c), -1 when strictly outside, 0 when cocircular.
// Throws DegenerateTriangleError when a, b, c are collinear.
int incircle(const Point& a, const Point& b, const Point& c, const Point& p);

namespace detail {
// Non-adaptive exact evaluations, used as the filter fallback. Exposed for
// the test suite's cross checks.
int orient_exact(const Point& a, const Point& b, const Point& c);
int incircle_exact(const Point& a, const Point& b, const Point& c, const Point& p);
}  // namespace detail

}  // namespace chewlab
