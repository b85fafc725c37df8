#pragma once

#include <cstdint>

#include "mskit/plane_graph.hpp"

namespace mskit {

// Hexagonal triangular-lattice family: a side-k hexagon of the unit
// triangular lattice with the central vertex removed and every second edge
// of each intermediate ring hexagon removed. The result has n = 3k^2+3k
// vertices with degree counts n3 = 6, n4 = 6(k-1), n5 = 3k^2-3k.
struct HexFamilySpec {
    int k = 2;
    // Alternating removal phase: edges at even positions along each ring
    // cycle, enumerated counterclockwise from the east corner (k, 0).
    // Fixed so generated files are reproducible.
};

// Throws InvalidK for k < 2 (the k = 1 hexagon degenerates to a 6-cycle and
// leaves the pattern).
PlaneGraph hex_construction(const HexFamilySpec& spec);

enum class PrimitiveName {
    SINGLE_EDGE,
    TRIANGLE,
    RHOMBUS,
    RHOMBUS_PENDANT,
    TWO_TRIANGLES_DISJOINT,
};

PlaneGraph primitive(PrimitiveName name);

// Parses the CLI spelling ("single_edge", "rhombus_pendant", ...).
// Throws UnknownName.
PrimitiveName parse_primitive_name(const std::string& name);
const char* to_string(PrimitiveName name);

// Random edge subset of the full radius-k lattice patch (center kept),
// isolated vertices dropped. Deterministic for a fixed seed, independent of
// platform RNG distributions.
PlaneGraph random_lattice_subgraph(std::uint64_t seed, int k,
                                   double edge_keep_prob);

}  // namespace mskit
