#include "chewlab/pointset.hpp"

#include <algorithm>
#include <numeric>

#include "chewlab/errors.hpp"

namespace chewlab {

PointSet::PointSet(std::vector<Point> points, std::vector<std::string> labels)
    : points_(std::move(points)), labels_(std::move(labels)) {
    labels_.resize(points_.size());
    for (const Point& p : points_) {
        if (!is_finite(p)) {
            throw InvalidPairError("PointSet: non-finite coordinate");
        }
    }
    std::vector<int> idx(points_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        const Point& pa = points_[a];
        const Point& pb = points_[b];
        return pa.x != pb.x ? pa.x < pb.x : pa.y < pb.y;
    });
    for (size_t i = 1; i < idx.size(); ++i) {
        if (points_[idx[i - 1]] == points_[idx[i]]) {
            throw DuplicatePointError("PointSet: duplicate point at indices " +
                                      std::to_string(idx[i - 1]) + " and " +
                                      std::to_string(idx[i]));
        }
    }
}

int PointSet::find_role(const std::string& role) const {
    for (size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == role) return static_cast<int>(i);
    }
    return -1;
}

void PointSet::validate_new_point(const Point& p) const {
    if (!is_finite(p)) {
        throw InvalidPairError("PointSet: non-finite coordinate");
    }
    for (const Point& q : points_) {
        if (q == p) throw DuplicatePointError("PointSet: duplicate point");
    }
}

int PointSet::push_back(const Point& p, std::string label) {
    validate_new_point(p);
    points_.push_back(p);
    labels_.push_back(std::move(label));
    return static_cast<int>(points_.size()) - 1;
}

}  // namespace chewlab
