#pragma once

#include <optional>
#include <vector>

#include "chewlab/geometry_types.hpp"

namespace chewlab {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Relative tolerance used for on-circle membership of constructed points.
inline double on_circle_tolerance(double radius) {
    return 1e-9 * (radius > 1.0 ? radius : 1.0);
}

struct Circle {
    Point center;
    double radius = 0.0;  // strictly positive

    Point west() const { return {center.x - radius, center.y}; }
    bool contains_on_boundary(const Point& p) const;
};

enum class Orientation { clockwise, counterclockwise };

inline Orientation opposite(Orientation o) {
    return o == Orientation::clockwise ? Orientation::counterclockwise
                                       : Orientation::clockwise;
}

// Oriented circular arc. `sweep` is the traversed central angle in [0, 2*pi),
// measured in the direction of `dir`.
struct Arc {
    Circle circle;
    Point from;
    Point to;
    Orientation dir = Orientation::clockwise;
    double sweep = 0.0;

    double length() const { return circle.radius * sweep; }
    Point point_at(double fraction) const;  // fraction in [0, 1] along the arc
};

// Polar angle of p around the circle center, in (-pi, pi].
double angle_on(const Circle& c, const Point& p);

// Central angle swept when walking from angle `a` to angle `b` in the given
// direction; result in [0, 2*pi).
double sweep_between(double a, double b, Orientation dir);

// Circumscribed circle of a non-degenerate triangle.
// Throws DegenerateTriangleError when a, b, c are collinear.
Circle circumcircle(const Point& a, const Point& b, const Point& c);

// Intersections of a circle with a closed segment, ordered by x (ties by y).
// A tangency within tolerance is reported as a single point.
std::vector<Point> circle_segment_intersections(const Circle& c, const Point& a,
                                                const Point& b);

// Arc from `from` to `to` in the given direction. Both points must lie on the
// circle within tolerance; throws OffCircleError otherwise. Identical inputs
// give a zero-length arc.
Arc arc_between(const Circle& c, const Point& from, const Point& to, Orientation dir);

// Spiral-shaped comparison path from p to q (requires y(p) == y(q) and
// x(p) < x(q), else InvalidPairError): the vertical segment from p up to the
// tangency point on the line x = x(p), followed by the clockwise arc to q on
// the circle that is tangent to that line and to the horizontal line through
// q. Total length is (1 + 3*pi/2) * (x(q) - x(p)).
struct SnailCurve {
    Point start;
    Point end;
    Circle tangent_circle;
    Point vertical_top;  // tangency point on the line x = x(start)
    double length = 0.0;

    // Piecewise-linear sampling for rendering, `arc_samples` points on the arc.
    std::vector<Point> polyline(int arc_samples = 64) const;
};

SnailCurve snail_curve(const Point& p, const Point& q);

// Length of the snail curve over a horizontal span dx >= 0 (0 maps to 0).
inline double snail_length(double dx) { return (1.0 + 1.5 * kPi) * dx; }

}  // namespace chewlab
