#include "mskit/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mskit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double coord_scale(std::initializer_list<Point2> pts) {
    double s = 0.0;
    for (const auto& p : pts) {
        s = std::max({s, std::abs(p.x), std::abs(p.y)});
    }
    return s;
}

}  // namespace

bool finite(const Point2& p) {
    return std::isfinite(p.x) && std::isfinite(p.y);
}

double dist(const Point2& p, const Point2& q) {
    return std::hypot(q.x - p.x, q.y - p.y);
}

double cross2(const Point2& p, const Point2& q, const Point2& r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

Orientation orientation(const Point2& p, const Point2& q, const Point2& r,
                        const ToleranceConfig& tol) {
    double area2 = cross2(p, q, r);
    double scale = coord_scale({p, q, r});
    double thresh = tol.eps_orient * std::max(1.0, scale * scale);
    if (std::abs(area2) <= thresh) return Orientation::COLLINEAR;
    return area2 > 0.0 ? Orientation::CCW : Orientation::CW;
}

double point_segment_dist(const Point2& p, const Point2& a, const Point2& b) {
    double dx = b.x - a.x;
    double dy = b.y - a.y;
    double len2 = dx * dx + dy * dy;
    if (len2 == 0.0) return dist(p, a);
    double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

namespace {

// Projection parameter of p onto the line through [a,b], in units of the
// segment length (0 at a, 1 at b).
double project_param(const Point2& p, const Point2& a, const Point2& b) {
    double dx = b.x - a.x;
    double dy = b.y - a.y;
    return ((p.x - a.x) * dx + (p.y - a.y) * dy) / (dx * dx + dy * dy);
}

bool points_coincide(const Point2& p, const Point2& q,
                     const ToleranceConfig& tol) {
    return dist(p, q) <= tol.eps_len;
}

// Is q on the interior of [a,b]? Endpoint neighborhoods are excluded by the
// caller via coincidence checks.
bool on_interior(const Point2& q, const Point2& a, const Point2& b,
                 const ToleranceConfig& tol) {
    if (orientation(a, b, q, tol) != Orientation::COLLINEAR) return false;
    double len = dist(a, b);
    double t = project_param(q, a, b);
    double margin = tol.eps_len / len;
    return t > margin && t < 1.0 - margin;
}

}  // namespace

SegmentRelation segment_relation(const Point2& a1, const Point2& a2,
                                 const Point2& b1, const Point2& b2,
                                 const ToleranceConfig& tol) {
    if (dist(a1, a2) <= tol.eps_len / 2 || dist(b1, b2) <= tol.eps_len / 2) {
        throw Error(ErrorKind::DegenerateSegment,
                    "segment_relation: (near-)zero-length segment");
    }

    bool c11 = points_coincide(a1, b1, tol);
    bool c12 = points_coincide(a1, b2, tol);
    bool c21 = points_coincide(a2, b1, tol);
    bool c22 = points_coincide(a2, b2, tol);
    int shared = (c11 || c12 ? 1 : 0) + (c21 || c22 ? 1 : 0);

    bool col1 = orientation(a1, a2, b1, tol) == Orientation::COLLINEAR;
    bool col2 = orientation(a1, a2, b2, tol) == Orientation::COLLINEAR;
    if (col1 && col2) {
        // Collinear: compare extents along the common direction.
        double t1 = project_param(b1, a1, a2);
        double t2 = project_param(b2, a1, a2);
        double lo = std::min(t1, t2);
        double hi = std::max(t1, t2);
        double len = dist(a1, a2);
        double eps_t = tol.eps_len / len;
        if (lo < 1.0 - eps_t && hi > eps_t) return SegmentRelation::OVERLAPPING;
        if (shared > 0) return SegmentRelation::SHARED_ENDPOINT;
        return SegmentRelation::DISJOINT;
    }

    if (shared > 0) return SegmentRelation::SHARED_ENDPOINT;

    if (on_interior(b1, a1, a2, tol) || on_interior(b2, a1, a2, tol) ||
        on_interior(a1, b1, b2, tol) || on_interior(a2, b1, b2, tol)) {
        return SegmentRelation::ENDPOINT_ON_INTERIOR;
    }

    Orientation o1 = orientation(a1, a2, b1, tol);
    Orientation o2 = orientation(a1, a2, b2, tol);
    Orientation o3 = orientation(b1, b2, a1, tol);
    Orientation o4 = orientation(b1, b2, a2, tol);
    if (o1 != o2 && o3 != o4 && o1 != Orientation::COLLINEAR &&
        o2 != Orientation::COLLINEAR && o3 != Orientation::COLLINEAR &&
        o4 != Orientation::COLLINEAR) {
        return SegmentRelation::PROPER_CROSSING;
    }
    return SegmentRelation::DISJOINT;
}

double direction_angle(const Point2& p, const Point2& q,
                       const ToleranceConfig& tol) {
    if (dist(p, q) <= tol.eps_len / 2) {
        throw Error(ErrorKind::DegenerateSegment,
                    "direction_angle: points too close");
    }
    double a = std::atan2(q.y - p.y, q.x - p.x);
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;
    return a;
}

double ccw_gap(double from_angle, double to_angle) {
    double d = to_angle - from_angle;
    d = std::fmod(d, kTwoPi);
    if (d <= 0.0) d += kTwoPi;
    return d;
}

double signed_area(const std::vector<Point2>& walk) {
    if (walk.size() < 2) return 0.0;
    // Translating to the first point keeps the shoelace terms small and lets
    // bridge portions, traversed once in each direction, cancel cleanly.
    const Point2 o = walk.front();
    double sum = 0.0;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const Point2& a = walk[i];
        const Point2& b = walk[(i + 1) % walk.size()];
        sum += (a.x - o.x) * (b.y - o.y) - (b.x - o.x) * (a.y - o.y);
    }
    return 0.5 * sum;
}

PointLocation point_in_walk(const Point2& p, const std::vector<Point2>& walk,
                            const ToleranceConfig& tol) {
    double scale = std::max({1.0, std::abs(p.x), std::abs(p.y)});
    for (const auto& w : walk) {
        scale = std::max({scale, std::abs(w.x), std::abs(w.y)});
    }
    double band = std::max(tol.eps_len, tol.eps_orient * scale * scale);

    std::size_t m = walk.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (point_segment_dist(p, walk[i], walk[(i + 1) % m]) <= band) {
            return PointLocation::ON_BOUNDARY;
        }
    }

    // Even-odd ray cast toward +x with the half-open vertex rule.
    bool inside = false;
    for (std::size_t i = 0; i < m; ++i) {
        const Point2& a = walk[i];
        const Point2& b = walk[(i + 1) % m];
        if ((a.y > p.y) != (b.y > p.y)) {
            double x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (x_cross > p.x) inside = !inside;
        }
    }
    return inside ? PointLocation::INSIDE : PointLocation::OUTSIDE;
}

}  // namespace mskit
