#include "chewlab/delaunay_oracle.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

#include "chewlab/predicates.hpp"

namespace chewlab {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Sign of (u-p).(v-p): negative iff p is strictly inside the circle with
// diameter [uv]; zero iff p lies on it.
int diametral_side(const Point& u, const Point& v, const Point& p) {
    const Rational ax = Rational(u.x) - Rational(p.x);
    const Rational ay = Rational(u.y) - Rational(p.y);
    const Rational bx = Rational(v.x) - Rational(p.x);
    const Rational by = Rational(v.y) - Rational(p.y);
    const Rational d = ax * bx + ay * by;
    const int s = d.sign();
    return (s > 0) - (s < 0);
}

}  // namespace

BruteForceEdges brute_force_delaunay_edges(const PointSet& ps) {
    const int n = ps.size();
    BruteForceEdges out;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool strict_witness = false;
            bool weak_witness = false;

            // Diametral circle of (u, v).
            {
                bool empty_strict = true;
                bool empty_weak = true;
                for (int p = 0; p < n && empty_weak; ++p) {
                    if (p == u || p == v) continue;
                    const int s = diametral_side(ps[u], ps[v], ps[p]);
                    if (s < 0) empty_weak = false;
                    if (s <= 0) empty_strict = false;
                }
                if (empty_strict) strict_witness = true;
                else if (empty_weak) weak_witness = true;
            }

            // Circles through (u, v, w).
            for (int w = 0; w < n && !strict_witness; ++w) {
                if (w == u || w == v) continue;
                int a = u, b = v, c = w;
                const int o = orient(ps[a], ps[b], ps[c]);
                if (o == 0) continue;
                if (o < 0) std::swap(b, c);
                bool empty_strict = true;
                bool empty_weak = true;
                for (int p = 0; p < n && empty_weak; ++p) {
                    if (p == u || p == v || p == w) continue;
                    const int s = incircle(ps[a], ps[b], ps[c], ps[p]);
                    if (s > 0) empty_weak = false;
                    if (s >= 0) empty_strict = false;
                }
                if (empty_strict) strict_witness = true;
                else if (empty_weak) weak_witness = true;
            }

            if (strict_witness) out.firm.push_back({u, v});
            else if (weak_witness) out.ambiguous.push_back({u, v});
        }
    }
    std::sort(out.firm.begin(), out.firm.end());
    std::sort(out.ambiguous.begin(), out.ambiguous.end());
    return out;
}

}  // namespace chewlab
