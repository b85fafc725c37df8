#pragma once

#include <vector>

#include "mskit/error.hpp"

namespace mskit {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

bool finite(const Point2& p);

// Epsilons governing every approximate geometric decision in the library.
// eps_len is slack on unit edge length and point coincidence, eps_ang snaps
// corner angles, eps_orient is the degeneracy threshold for signed areas.
struct ToleranceConfig {
    double eps_len = 1e-9;
    double eps_ang = 1e-7;
    double eps_orient = 1e-12;
};

enum class Orientation { CCW, CW, COLLINEAR };

enum class SegmentRelation {
    DISJOINT,
    SHARED_ENDPOINT,
    PROPER_CROSSING,
    ENDPOINT_ON_INTERIOR,
    OVERLAPPING,
};

enum class PointLocation { INSIDE, OUTSIDE, ON_BOUNDARY };

double dist(const Point2& p, const Point2& q);

// Sign of twice the signed area of triangle (p,q,r). COLLINEAR when the
// magnitude falls below eps_orient scaled by the squared coordinate range.
Orientation orientation(const Point2& p, const Point2& q, const Point2& r,
                        const ToleranceConfig& tol);

// Twice the signed area of (p,q,r); positive for a counterclockwise turn.
double cross2(const Point2& p, const Point2& q, const Point2& r);

// Classifies how two segments touch. SHARED_ENDPOINT covers contact at one
// or two common endpoints only; everything beyond that is a distinct kind so
// callers can report precise violations. Throws DegenerateSegment on
// (near-)zero-length input.
SegmentRelation segment_relation(const Point2& a1, const Point2& a2,
                                 const Point2& b1, const Point2& b2,
                                 const ToleranceConfig& tol);

// Polar angle of q-p in [0, 2*pi). Throws DegenerateSegment when p and q are
// too close to define a direction.
double direction_angle(const Point2& p, const Point2& q,
                       const ToleranceConfig& tol);

// Counterclockwise angular distance from `from` to `to`, in (0, 2*pi].
// Coincident directions map to 2*pi, which realizes the full angle at a
// degree-1 vertex.
double ccw_gap(double from_angle, double to_angle);

// Shoelace signed area of a closed walk (repeated points allowed; a portion
// traversed in both directions contributes zero).
double signed_area(const std::vector<Point2>& walk);

// Even-odd classification of p against the closed polygonal walk, with an
// eps_orient-scaled boundary band. Doubled (bridge) edges cancel in parity,
// so the test is correct for walks that traverse an edge twice.
PointLocation point_in_walk(const Point2& p, const std::vector<Point2>& walk,
                            const ToleranceConfig& tol);

// Distance from p to the segment [a,b].
double point_segment_dist(const Point2& p, const Point2& a, const Point2& b);

}  // namespace mskit
