#include "chewlab/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "chewlab/errors.hpp"
#include "chewlab/predicates.hpp"

namespace chewlab {

bool Circle::contains_on_boundary(const Point& p) const {
    return std::abs(distance(p, center) - radius) <= on_circle_tolerance(radius);
}

double angle_on(const Circle& c, const Point& p) {
    return std::atan2(p.y - c.center.y, p.x - c.center.x);
}

double sweep_between(double a, double b, Orientation dir) {
    double s = dir == Orientation::counterclockwise ? b - a : a - b;
    s = std::fmod(s, kTwoPi);
    if (s < 0.0) s += kTwoPi;
    return s;
}

Point Arc::point_at(double fraction) const {
    const double a0 = angle_on(circle, from);
    const double delta = dir == Orientation::counterclockwise ? sweep * fraction
                                                              : -sweep * fraction;
    const double a = a0 + delta;
    return {circle.center.x + circle.radius * std::cos(a),
            circle.center.y + circle.radius * std::sin(a)};
}

Circle circumcircle(const Point& a, const Point& b, const Point& c) {
    if (orient(a, b, c) == 0) {
        throw DegenerateTriangleError("circumcircle: points are collinear");
    }
    const Point u = b - a;
    const Point v = c - a;
    const double d = 2.0 * cross(u, v);
    const double u2 = norm2(u);
    const double v2 = norm2(v);
    const Point rel{(v.y * u2 - u.y * v2) / d, (u.x * v2 - v.x * u2) / d};
    Circle out;
    out.center = a + rel;
    out.radius = norm(rel);
    return out;
}

std::vector<Point> circle_segment_intersections(const Circle& c, const Point& a,
                                                const Point& b) {
    std::vector<Point> out;
    const Point d = b - a;
    const double dd = norm2(d);
    if (dd == 0.0) {
        if (c.contains_on_boundary(a)) out.push_back(a);
        return out;
    }
    const Point f = a - c.center;
    const double A = dd;
    const double B = 2.0 * dot(f, d);
    const double C = norm2(f) - c.radius * c.radius;
    const double disc = B * B - 4.0 * A * C;

    const double tau = on_circle_tolerance(c.radius);
    // Root separation in length units is sqrt(disc)/|d|, so disc <= tau^2 * A
    // means the two crossings coincide within tolerance.
    if (disc <= tau * tau * A) {
        if (disc < -tau * tau * A) return out;
        const double t = -B / (2.0 * A);
        if (t >= 0.0 && t <= 1.0) out.push_back(a + t * d);
        return out;
    }
    const double root = std::sqrt(disc);
    // Numerically stable quadratic: compute the larger-magnitude root first.
    const double q = -0.5 * (B + (B >= 0.0 ? root : -root));
    double t1 = q / A;
    double t2 = C / q;
    if (t1 > t2) std::swap(t1, t2);
    for (double t : {t1, t2}) {
        if (t >= 0.0 && t <= 1.0) out.push_back(a + t * d);
    }
    std::sort(out.begin(), out.end(), [](const Point& p, const Point& q2) {
        return p.x != q2.x ? p.x < q2.x : p.y < q2.y;
    });
    return out;
}

Arc arc_between(const Circle& c, const Point& from, const Point& to, Orientation dir) {
    for (const Point* p : {&from, &to}) {
        if (!c.contains_on_boundary(*p)) {
            throw OffCircleError("arc_between: endpoint is not on the circle");
        }
    }
    Arc arc;
    arc.circle = c;
    arc.from = from;
    arc.to = to;
    arc.dir = dir;
    if (from == to) {
        arc.sweep = 0.0;
    } else {
        arc.sweep = sweep_between(angle_on(c, from), angle_on(c, to), dir);
    }
    return arc;
}

std::vector<Point> SnailCurve::polyline(int arc_samples) const {
    std::vector<Point> pts;
    pts.push_back(start);
    pts.push_back(vertical_top);
    const double a0 = angle_on(tangent_circle, vertical_top);
    const double sweep = 1.5 * kPi;
    for (int i = 1; i <= arc_samples; ++i) {
        const double a = a0 - sweep * static_cast<double>(i) / arc_samples;
        pts.push_back({tangent_circle.center.x + tangent_circle.radius * std::cos(a),
                       tangent_circle.center.y + tangent_circle.radius * std::sin(a)});
    }
    pts.back() = end;
    return pts;
}

SnailCurve snail_curve(const Point& p, const Point& q) {
    if (p.y != q.y || !(p.x < q.x)) {
        throw InvalidPairError("snail_curve: requires y(p) == y(q) and x(p) < x(q)");
    }
    const double w = q.x - p.x;
    SnailCurve s;
    s.start = p;
    s.end = q;
    s.tangent_circle = Circle{{q.x, p.y + w}, w};
    s.vertical_top = {p.x, p.y + w};
    s.length = snail_length(w);
    return s;
}

}  // namespace chewlab
