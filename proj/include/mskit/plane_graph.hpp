#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mskit/geom.hpp"

namespace mskit {

// Optional provenance carried through graph files so checks that only apply
// to generated families (hex ratio) know when they are applicable.
struct GraphMetadata {
    std::string generator;  // "hex", "primitive", "random"
    std::optional<int> k;
    std::optional<std::string> parity;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> name;  // primitive name
};

// Straight-line drawing of a simple graph: vertex coordinates plus
// undirected edges stored as index pairs with first < second.
struct PlaneGraph {
    std::vector<Point2> vertices;
    std::vector<std::pair<int, int>> edges;
    std::optional<GraphMetadata> metadata;

    int n() const { return static_cast<int>(vertices.size()); }
    int e() const { return static_cast<int>(edges.size()); }
};

struct DegreeHistogram {
    std::map<int, int> counts;  // degree -> number of vertices
    int n = 0;
    int e = 0;

    int at(int degree) const {
        auto it = counts.find(degree);
        return it == counts.end() ? 0 : it->second;
    }
};

enum class ViolationKind {
    NON_UNIT_EDGE,
    PROPER_CROSSING,
    ENDPOINT_ON_INTERIOR,
    OVERLAPPING_EDGES,
    COINCIDENT_VERTICES,
};

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    // Indices of the offending elements: edge indices for edge-pair kinds,
    // vertex indices for COINCIDENT_VERTICES, vertex then edge index for
    // ENDPOINT_ON_INTERIOR, single edge index for NON_UNIT_EDGE.
    std::vector<int> witness;
    double measured = 0.0;
};

struct MatchstickCertificate {
    bool pass = true;
    std::vector<Violation> violations;
};

// Normalizes and checks edge pairs. Throws IndexOutOfRange, SelfLoop or
// DuplicateEdge.
PlaneGraph build(std::vector<Point2> points,
                 const std::vector<std::pair<int, int>>& edge_pairs);

DegreeHistogram degree_histogram(const PlaneGraph& g);

std::vector<int> vertex_degrees(const PlaneGraph& g);

// Number of connected components; isolated vertices count, the empty graph
// has zero.
int connected_components(const PlaneGraph& g);

// Full matchstick validation: unit edge lengths, no forbidden edge-pair
// contact, no vertex on a non-incident edge interior, no coincident
// vertices. Violations are data, not errors. Uses a uniform grid to prune
// candidate pairs and OpenMP when available; the certificate is
// deterministic regardless of thread count.
MatchstickCertificate validate_matchstick(const PlaneGraph& g,
                                          const ToleranceConfig& tol);

// Exhaustive all-pairs reference. Same certificate as validate_matchstick;
// kept for testing and benchmarking the pruned kernel against.
MatchstickCertificate validate_matchstick_serial(const PlaneGraph& g,
                                                 const ToleranceConfig& tol);

// Removes degree-0 vertices, reindexing edges. Returns the stripped graph
// and the number of vertices removed.
std::pair<PlaneGraph, int> remove_isolated(const PlaneGraph& g);

}  // namespace mskit
