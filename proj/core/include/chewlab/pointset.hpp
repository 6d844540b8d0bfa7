#pragma once

#include <string>
#include <vector>

#include "chewlab/geometry_types.hpp"

namespace chewlab {

// Ordered set of distinct finite points with optional per-point role labels
// ("s", "t", "q", ...). Duplicate or non-finite coordinates are rejected at
// construction.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> points,
                      std::vector<std::string> labels = {});

    int size() const { return static_cast<int>(points_.size()); }
    const Point& operator[](int i) const { return points_[i]; }
    const std::vector<Point>& points() const { return points_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }
    void set_label(int i, std::string role) { labels_[i] = std::move(role); }

    // Index of the first point labeled `role`, or -1.
    int find_role(const std::string& role) const;

    int push_back(const Point& p, std::string label = {});

private:
    void validate_new_point(const Point& p) const;

    std::vector<Point> points_;
    std::vector<std::string> labels_;
};

}  // namespace chewlab
