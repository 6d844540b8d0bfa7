#pragma once

#include <array>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "chewlab/geometry.hpp"
#include "chewlab/pointset.hpp"

namespace chewlab {

// Euclidean Delaunay triangulation of a point set.
//
// Built by incremental insertion (conflict-cavity retriangulation around a
// ghost vertex) with exact orientation/incircle predicates, followed by a
// canonicalization pass that resolves every cocircular quad toward the
// lexicographically smallest diagonal, so the result is independent of
// insertion order.
class Triangulation {
public:
    struct Triangle {
        std::array<int, 3> v;    // vertex indices, counterclockwise
        std::array<int, 3> nbr;  // neighbor across edge opposite v[i], -1 on hull
    };

    // `insertion_seed` shuffles the internal insertion order only; the result
    // is the same for every seed because cocircular ties are canonicalized.
    static Triangulation build(PointSet points,
                               std::uint64_t insertion_seed = 0x9E3779B97F4A7C15ull);

    const PointSet& points() const { return points_; }
    int num_vertices() const { return points_.size(); }
    int num_triangles() const { return static_cast<int>(tris_.size()); }
    const Triangle& triangle(int t) const { return tris_[t]; }
    const std::vector<Triangle>& triangles() const { return tris_; }

    // Convex hull vertices in counterclockwise order.
    const std::vector<int>& hull() const { return hull_; }

    // Triangles incident to a vertex (ascending triangle index).
    const std::vector<int>& incident_triangles(int v) const { return incident_[v]; }

    bool edge_exists(int u, int v) const;
    std::vector<std::array<int, 2>> edges() const;  // u < v, sorted

    Circle circumcircle_of(int t) const;
    bool triangle_has_vertex(int t, int v) const;
    // Index 0..2 of vertex v inside triangle t, or -1.
    int corner_of(int t, int v) const;

    // Exact structural + empty-circle certificate check; throws on failure.
    void validate_certificate() const;

private:
    friend class DelaunayBuilder;

    void finalize_from_soup(const std::vector<std::array<int, 3>>& finite_tris);

    PointSet points_;
    std::vector<Triangle> tris_;
    std::vector<int> hull_;
    std::vector<std::vector<int>> incident_;
    std::unordered_set<std::uint64_t> edge_keys_;
};

inline std::uint64_t edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
}

}  // namespace chewlab
