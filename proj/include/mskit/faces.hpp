#pragma once

#include <map>
#include <vector>

#include "mskit/plane_graph.hpp"

namespace mskit {

// Directed half-edges are numbered 2*edge_index + d where d=0 runs the edge
// from its smaller vertex to its larger one and d=1 runs it back.
struct HalfEdge {
    int from = -1;
    int to = -1;
};

// Circular order of outgoing half-edges around each vertex, sorted by
// direction angle ascending (counterclockwise).
struct RotationSystem {
    std::vector<std::vector<int>> order;     // vertex -> half-edge ids
    std::vector<int> pos_in_order;           // half-edge id -> index in order[origin]
    std::vector<HalfEdge> half_edges;        // 2*e entries
    std::vector<double> angles;              // half-edge id -> direction angle
};

struct Corner {
    int vertex = -1;
    double angle = 0.0;  // in (0, 2*pi], snapped to pi/3 or 2*pi/3 when close
};

// One closed boundary walk with the face on its left. corners[i] sits at the
// head of half_edges[i]. Bounded-face outer walks come out counterclockwise
// with positive area; walks seen from the unbounded side are clockwise.
struct Walk {
    std::vector<int> half_edges;
    std::vector<Corner> corners;
    double area = 0.0;
};

struct Face {
    std::vector<int> walk_ids;
    int sides = 0;  // total half-edges over all walks; bridges count twice
    bool bounded = true;
};

struct FaceCensus {
    int b = 0;                 // sides of the unbounded face
    std::map<int, int> f_k;    // k -> number of bounded k-gons
    int f = 0;                 // total bounded faces
};

struct FaceSet {
    std::vector<Walk> walks;
    std::vector<Face> faces;   // faces[0] is the unbounded face
    FaceCensus census;
};

// Throws DegenerateDirections if two edges leave a vertex in the same
// direction, which validate_matchstick would have rejected as overlapping.
RotationSystem build_rotation_system(const PlaneGraph& g,
                                     const ToleranceConfig& tol);

// Partitions all 2e half-edges into boundary walks. The walk continues from
// (u -> v) along the clockwise successor of (v -> u) in v's rotation, which
// keeps the traced face on the left and makes an edge bounding one face on
// both sides appear twice in the same walk.
std::vector<Walk> trace_walks(const PlaneGraph& g, const RotationSystem& rs,
                              const ToleranceConfig& tol);

// Groups walks into faces. Every positive-area walk opens one bounded face;
// every other walk attaches to the face of its innermost enclosing positive
// walk, or to the unbounded face when nothing encloses it. Throws
// NestingAmbiguity if no unambiguous probe point can be found for a walk.
FaceSet assemble_faces(std::vector<Walk> walks, const PlaneGraph& g,
                       const ToleranceConfig& tol);

FaceSet derive_faces(const PlaneGraph& g, const ToleranceConfig& tol);

FaceCensus face_census(const FaceSet& fs);

struct VertexCorner {
    int face = -1;
    double angle = 0.0;
};

// Every vertex of degree d >= 1 gets exactly d corners; their angles sum
// to 2*pi.
std::vector<std::vector<VertexCorner>> corner_angles_by_vertex(
    const FaceSet& fs, const PlaneGraph& g);

}  // namespace mskit
