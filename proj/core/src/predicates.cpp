#include "chewlab/predicates.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "chewlab/errors.hpp"

namespace chewlab {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// (3 + 16 eps) eps and (10 + 96 eps) eps with eps = 2^-53. Standard static
// filter constants for the 2x2 orientation determinant and the lifted 3x3
// incircle determinant evaluated on differences.
constexpr double kOrientErrBound = 3.3306690738754716e-16;
constexpr double kIncircleErrBound = 1.1102230246251577e-15;

int sign_of(const Rational& r) {
    int s = r.sign();
    return (s > 0) - (s < 0);
}

}  // namespace

namespace detail {

int orient_exact(const Point& a, const Point& b, const Point& c) {
    const Rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    const Rational det = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx);
    return sign_of(det);
}

int incircle_exact(const Point& a, const Point& b, const Point& c, const Point& p) {
    const Rational adx = Rational(a.x) - Rational(p.x);
    const Rational ady = Rational(a.y) - Rational(p.y);
    const Rational bdx = Rational(b.x) - Rational(p.x);
    const Rational bdy = Rational(b.y) - Rational(p.y);
    const Rational cdx = Rational(c.x) - Rational(p.x);
    const Rational cdy = Rational(c.y) - Rational(p.y);

    const Rational alift = adx * adx + ady * ady;
    const Rational blift = bdx * bdx + bdy * bdy;
    const Rational clift = cdx * cdx + cdy * cdy;

    const Rational det = alift * (bdx * cdy - cdx * bdy) +
                         blift * (cdx * ady - adx * cdy) +
                         clift * (adx * bdy - bdx * ady);
    return sign_of(det);
}

}  // namespace detail

int orient(const Point& a, const Point& b, const Point& c) {
    const double detleft = (a.x - c.x) * (b.y - c.y);
    const double detright = (a.y - c.y) * (b.x - c.x);
    const double det = detleft - detright;

    double detsum;
    if (detleft > 0.0) {
        if (detright <= 0.0) return (det > 0.0) - (det < 0.0);
        detsum = detleft + detright;
    } else if (detleft < 0.0) {
        if (detright >= 0.0) return (det > 0.0) - (det < 0.0);
        detsum = -detleft - detright;
    } else {
        return (det > 0.0) - (det < 0.0);
    }

    const double errbound = kOrientErrBound * detsum;
    if (det > errbound || -det > errbound) {
        return (det > 0.0) - (det < 0.0);
    }
    return detail::orient_exact(a, b, c);
}

int incircle(const Point& a, const Point& b, const Point& c, const Point& p) {
    if (orient(a, b, c) == 0) {
        throw DegenerateTriangleError("incircle: defining points are collinear");
    }

    const double adx = a.x - p.x;
    const double ady = a.y - p.y;
    const double bdx = b.x - p.x;
    const double bdy = b.y - p.y;
    const double cdx = c.x - p.x;
    const double cdy = c.y - p.y;

    const double bdxcdy = bdx * cdy;
    const double cdxbdy = cdx * bdy;
    const double alift = adx * adx + ady * ady;

    const double cdxady = cdx * ady;
    const double adxcdy = adx * cdy;
    const double blift = bdx * bdx + bdy * bdy;

    const double adxbdy = adx * bdy;
    const double bdxady = bdx * ady;
    const double clift = cdx * cdx + cdy * cdy;

    const double det = alift * (bdxcdy - cdxbdy) +
                       blift * (cdxady - adxcdy) +
                       clift * (adxbdy - bdxady);

    const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                             (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                             (std::abs(adxbdy) + std::abs(bdxady)) * clift;
    const double errbound = kIncircleErrBound * permanent;
    if (det > errbound || -det > errbound) {
        return (det > 0.0) - (det < 0.0);
    }
    return detail::incircle_exact(a, b, c, p);
}

}  // namespace chewlab
