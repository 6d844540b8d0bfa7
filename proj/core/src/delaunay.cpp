#include "chewlab/delaunay.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "chewlab/errors.hpp"
#include "chewlab/predicates.hpp"

namespace chewlab {

namespace {

constexpr int kGhost = -1;

struct SoupTri {
    std::array<int, 3> v{};
    std::array<int, 3> nbr{};  // across edge opposite v[i]
    bool alive = true;
};

bool is_ghost_tri(const SoupTri& t) { return t.v[2] == kGhost; }

// Exact test: collinear point p lies within the closed span of segment [a, b].
bool within_collinear_span(const Point& a, const Point& b, const Point& p) {
    if (std::abs(b.x - a.x) >= std::abs(b.y - a.y)) {
        return (p.x >= std::min(a.x, b.x)) && (p.x <= std::max(a.x, b.x));
    }
    return (p.y >= std::min(a.y, b.y)) && (p.y <= std::max(a.y, b.y));
}

}  // namespace

class DelaunayBuilder {
public:
    DelaunayBuilder(const PointSet& pts, std::uint64_t seed) : pts_(pts), seed_(seed) {}

    Triangulation run();

private:
    const Point& P(int i) const { return pts_[i]; }

    bool in_conflict(const SoupTri& t, const Point& p) const {
        if (!is_ghost_tri(t)) {
            return incircle(P(t.v[0]), P(t.v[1]), P(t.v[2]), p) > 0;
        }
        const Point& a = P(t.v[0]);
        const Point& b = P(t.v[1]);
        const int o = orient(a, b, p);
        if (o != 0) return o > 0;
        return within_collinear_span(a, b, p);
    }

    int make_tri(std::array<int, 3> v) {
        tris_.push_back(SoupTri{v, {-9, -9, -9}, true});
        return static_cast<int>(tris_.size()) - 1;
    }

    static int slot_of_edge(const SoupTri& t, int a, int b) {
        for (int i = 0; i < 3; ++i) {
            if (t.v[(i + 1) % 3] == a && t.v[(i + 2) % 3] == b) return i;
        }
        return -1;
    }

    void link(int ta, int tb, int a, int b) {
        // ta has directed edge (a, b); tb has (b, a).
        const int sa = slot_of_edge(tris_[ta], a, b);
        const int sb = slot_of_edge(tris_[tb], b, a);
        if (sa < 0 || sb < 0) throw InternalError("delaunay link: edge not found");
        tris_[ta].nbr[sa] = tb;
        tris_[tb].nbr[sb] = ta;
    }

    int locate(const Point& p, int hint) const;
    void insert(int vid);
    void canonicalize_ties();
    void flip_edge(int t1, int e1);

    const PointSet& pts_;
    std::uint64_t seed_;
    std::vector<SoupTri> tris_;
    int last_finite_ = 0;
};

int DelaunayBuilder::locate(const Point& p, int hint) const {
    int cur = hint;
    const long guard = 4 * static_cast<long>(tris_.size()) + 16;
    for (long step = 0; step < guard; ++step) {
        const SoupTri& t = tris_[cur];
        if (is_ghost_tri(t)) return cur;
        int next = -1;
        for (int i = 0; i < 3; ++i) {
            const int a = t.v[(i + 1) % 3];
            const int b = t.v[(i + 2) % 3];
            if (orient(P(a), P(b), p) < 0) {
                next = t.nbr[i];
                break;
            }
        }
        if (next == -1) return cur;
        cur = next;
    }
    throw InternalError("delaunay locate: walk did not terminate");
}

void DelaunayBuilder::insert(int vid) {
    const Point& p = P(vid);
    const int start = locate(p, last_finite_);
    if (!in_conflict(tris_[start], p)) {
        // p inside (or on an edge of) a finite triangle always conflicts with
        // it; reaching here means predicates and location disagree.
        throw InternalError("delaunay insert: located triangle not in conflict");
    }

    // Grow the conflict cavity.
    std::vector<int> cavity;
    std::vector<char> in_cavity(tris_.size(), 0);
    std::vector<int> stack{start};
    in_cavity[start] = 1;
    while (!stack.empty()) {
        const int t = stack.back();
        stack.pop_back();
        cavity.push_back(t);
        for (int i = 0; i < 3; ++i) {
            const int nb = tris_[t].nbr[i];
            if (nb < 0 || in_cavity[nb]) continue;
            if (in_conflict(tris_[nb], p)) {
                in_cavity[nb] = 1;
                stack.push_back(nb);
            }
        }
    }

    // Boundary edges, directed as they appear in the cavity triangles.
    struct BoundaryEdge {
        int a, b, outside;
    };
    std::vector<BoundaryEdge> boundary;
    for (int t : cavity) {
        for (int i = 0; i < 3; ++i) {
            const int nb = tris_[t].nbr[i];
            if (nb >= 0 && in_cavity[nb]) continue;
            boundary.push_back({tris_[t].v[(i + 1) % 3], tris_[t].v[(i + 2) % 3], nb});
        }
    }
    for (int t : cavity) tris_[t].alive = false;

    // Fan new triangles from p to each boundary edge.
    std::vector<int> fresh;
    fresh.reserve(boundary.size());
    for (const BoundaryEdge& e : boundary) {
        std::array<int, 3> v;
        if (e.a == kGhost) {
            v = {e.b, vid, kGhost};
        } else if (e.b == kGhost) {
            v = {vid, e.a, kGhost};
        } else {
            v = {e.a, e.b, vid};
        }
        const int nt = make_tri(v);
        fresh.push_back(nt);
        const int s = slot_of_edge(tris_[nt], e.a, e.b);
        tris_[nt].nbr[s] = e.outside;
        if (e.outside >= 0) {
            const int so = slot_of_edge(tris_[e.outside], e.b, e.a);
            tris_[e.outside].nbr[so] = nt;
        }
        if (v[2] != kGhost) last_finite_ = nt;
    }

    // Stitch the fan: match directed side edges (x, p) with (p, x).
    std::map<std::pair<int, int>, int> open_side;
    for (int nt : fresh) {
        const SoupTri& t = tris_[nt];
        for (int i = 0; i < 3; ++i) {
            const int a = t.v[(i + 1) % 3];
            const int b = t.v[(i + 2) % 3];
            if (a != vid && b != vid) continue;  // the boundary edge
            auto rev = open_side.find({b, a});
            if (rev != open_side.end()) {
                link(nt, rev->second, a, b);
                open_side.erase(rev);
            } else {
                open_side.emplace(std::make_pair(a, b), nt);
            }
        }
    }
    if (!open_side.empty()) {
        throw InternalError("delaunay insert: cavity boundary not closed");
    }
}

void DelaunayBuilder::flip_edge(int t1, int e1) {
    // Shared edge (a, b) = edge opposite e1 in t1; neighbor t2 sees (b, a).
    const int t2 = tris_[t1].nbr[e1];
    const int a = tris_[t1].v[(e1 + 1) % 3];
    const int b = tris_[t1].v[(e1 + 2) % 3];
    const int c = tris_[t1].v[e1];
    const int e2 = slot_of_edge(tris_[t2], b, a);
    const int d = tris_[t2].v[e2];

    const int n_ad = tris_[t2].nbr[slot_of_edge(tris_[t2], a, d)];
    const int n_db = tris_[t2].nbr[slot_of_edge(tris_[t2], d, b)];
    const int n_bc = tris_[t1].nbr[slot_of_edge(tris_[t1], b, c)];
    const int n_ca = tris_[t1].nbr[slot_of_edge(tris_[t1], c, a)];

    tris_[t1].v = {c, a, d};
    tris_[t2].v = {d, b, c};
    tris_[t1].nbr = {-9, -9, -9};
    tris_[t2].nbr = {-9, -9, -9};
    link(t1, t2, d, c);
    auto relink = [&](int t, int x, int y, int outside) {
        const int s = slot_of_edge(tris_[t], x, y);
        tris_[t].nbr[s] = outside;
        if (outside >= 0) {
            tris_[outside].nbr[slot_of_edge(tris_[outside], y, x)] = t;
        }
    };
    relink(t1, a, d, n_ad);
    relink(t1, c, a, n_ca);
    relink(t2, b, c, n_bc);
    relink(t2, d, b, n_db);
}

void DelaunayBuilder::canonicalize_ties() {
    // Resolve cocircular quads toward the lexicographically smallest diagonal
    // so the triangulation is a deterministic function of the point set.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int t1 = 0; t1 < static_cast<int>(tris_.size()); ++t1) {
            if (!tris_[t1].alive || is_ghost_tri(tris_[t1])) continue;
            for (int e1 = 0; e1 < 3; ++e1) {
                const int t2 = tris_[t1].nbr[e1];
                if (t2 < 0 || !tris_[t2].alive || is_ghost_tri(tris_[t2])) continue;
                const int a = tris_[t1].v[(e1 + 1) % 3];
                const int b = tris_[t1].v[(e1 + 2) % 3];
                const int c = tris_[t1].v[e1];
                const int e2 = slot_of_edge(tris_[t2], b, a);
                const int d = tris_[t2].v[e2];
                const auto cur = std::minmax(a, b);
                const auto alt = std::minmax(c, d);
                if (alt >= cur) continue;
                if (incircle(P(a), P(b), P(c), P(d)) != 0) continue;
                // Flip only strictly convex quads.
                if (orient(P(c), P(d), P(a)) * orient(P(c), P(d), P(b)) >= 0) continue;
                flip_edge(t1, e1);
                changed = true;
            }
        }
    }
}

Triangulation DelaunayBuilder::run() {
    const int n = pts_.size();
    if (n < 3) throw ParameterError("build_delaunay: need at least 3 points");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed_);
    std::shuffle(order.begin(), order.end(), rng);

    int third = -1;
    for (int k = 2; k < n; ++k) {
        if (orient(P(order[0]), P(order[1]), P(order[k])) != 0) {
            third = k;
            break;
        }
    }
    if (third == -1) throw AllCollinearError("build_delaunay: all points are collinear");
    std::swap(order[2], order[third]);

    int a = order[0], b = order[1], c = order[2];
    if (orient(P(a), P(b), P(c)) < 0) std::swap(b, c);
    const int t0 = make_tri({a, b, c});
    const int g0 = make_tri({b, a, kGhost});
    const int g1 = make_tri({c, b, kGhost});
    const int g2 = make_tri({a, c, kGhost});
    link(t0, g0, a, b);
    link(t0, g1, b, c);
    link(t0, g2, c, a);
    link(g1, g0, b, kGhost);
    link(g2, g1, c, kGhost);
    link(g0, g2, a, kGhost);
    last_finite_ = t0;

    for (int k = 3; k < n; ++k) insert(order[k]);
    canonicalize_ties();

    std::vector<std::array<int, 3>> finite;
    for (const SoupTri& t : tris_) {
        if (t.alive && !is_ghost_tri(t)) finite.push_back(t.v);
    }
    Triangulation out;
    out.points_ = pts_;
    out.finalize_from_soup(finite);
    return out;
}

void Triangulation::finalize_from_soup(const std::vector<std::array<int, 3>>& finite_tris) {
    tris_.clear();
    tris_.reserve(finite_tris.size());
    std::vector<std::array<int, 3>> sorted = finite_tris;
    // Canonical rotation (smallest vertex first) keeps the counterclockwise
    // order while making the stored form independent of construction history.
    for (auto& v : sorted) {
        while (v[0] > v[1] || v[0] > v[2]) v = {v[1], v[2], v[0]};
    }
    std::sort(sorted.begin(), sorted.end());
    for (const auto& v : sorted) tris_.push_back(Triangle{v, {-1, -1, -1}});

    // Rebuild adjacency from directed edges.
    std::map<std::pair<int, int>, int> by_edge;
    for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
        for (int i = 0; i < 3; ++i) {
            by_edge[{tris_[t].v[(i + 1) % 3], tris_[t].v[(i + 2) % 3]}] = t;
        }
    }
    std::map<std::pair<int, int>, int> hull_next;
    for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
        for (int i = 0; i < 3; ++i) {
            const int u = tris_[t].v[(i + 1) % 3];
            const int w = tris_[t].v[(i + 2) % 3];
            auto it = by_edge.find({w, u});
            if (it != by_edge.end()) {
                tris_[t].nbr[i] = it->second;
            } else {
                hull_next[{u, w}] = w;  // boundary edge, interior on the left
            }
        }
    }

    hull_.clear();
    if (!hull_next.empty()) {
        std::map<int, int> next;
        for (const auto& [edge, to] : hull_next) next[edge.first] = to;
        int start = next.begin()->first;
        int cur = start;
        do {
            hull_.push_back(cur);
            cur = next.at(cur);
        } while (cur != start && hull_.size() <= next.size());
    }

    incident_.assign(points_.size(), {});
    for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
        for (int i = 0; i < 3; ++i) incident_[tris_[t].v[i]].push_back(t);
    }
    edge_keys_.clear();
    for (const auto& tr : tris_) {
        edge_keys_.insert(edge_key(tr.v[0], tr.v[1]));
        edge_keys_.insert(edge_key(tr.v[1], tr.v[2]));
        edge_keys_.insert(edge_key(tr.v[2], tr.v[0]));
    }
}

Triangulation Triangulation::build(PointSet points, std::uint64_t insertion_seed) {
    DelaunayBuilder builder(points, insertion_seed);
    Triangulation result = builder.run();
    result.points_ = std::move(points);
    return result;
}

bool Triangulation::edge_exists(int u, int v) const {
    return edge_keys_.count(edge_key(u, v)) > 0;
}

std::vector<std::array<int, 2>> Triangulation::edges() const {
    std::vector<std::array<int, 2>> out;
    out.reserve(edge_keys_.size());
    for (std::uint64_t k : edge_keys_) {
        out.push_back({static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

Circle Triangulation::circumcircle_of(int t) const {
    const auto& v = tris_[t].v;
    return circumcircle(points_[v[0]], points_[v[1]], points_[v[2]]);
}

bool Triangulation::triangle_has_vertex(int t, int v) const {
    return corner_of(t, v) >= 0;
}

int Triangulation::corner_of(int t, int v) const {
    for (int i = 0; i < 3; ++i) {
        if (tris_[t].v[i] == v) return i;
    }
    return -1;
}

void Triangulation::validate_certificate() const {
    const int n = points_.size();
    for (int t = 0; t < num_triangles(); ++t) {
        const auto& v = tris_[t].v;
        if (orient(points_[v[0]], points_[v[1]], points_[v[2]]) <= 0) {
            throw InternalError("triangulation: triangle " + std::to_string(t) +
                                " is not counterclockwise");
        }
        for (int i = 0; i < 3; ++i) {
            const int nb = tris_[t].nbr[i];
            if (nb < 0) continue;
            const int u = tris_[t].v[(i + 1) % 3];
            const int w = tris_[t].v[(i + 2) % 3];
            bool mutual = false;
            for (int j = 0; j < 3; ++j) {
                if (tris_[nb].v[(j + 1) % 3] == w && tris_[nb].v[(j + 2) % 3] == u &&
                    tris_[nb].nbr[j] == t) {
                    mutual = true;
                }
            }
            if (!mutual) {
                throw InternalError("triangulation: adjacency is not mutual");
            }
        }
        for (int p = 0; p < n; ++p) {
            if (p == v[0] || p == v[1] || p == v[2]) continue;
            if (incircle(points_[v[0]], points_[v[1]], points_[v[2]], points_[p]) > 0) {
                throw InternalError("triangulation: empty-circle certificate violated at triangle " +
                                    std::to_string(t) + " by vertex " + std::to_string(p));
            }
        }
    }
}

}  // namespace chewlab
