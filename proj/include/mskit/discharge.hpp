#pragma once

#include <vector>

#include "mskit/faces.hpp"

namespace mskit {

struct VertexCharge {
    double initial = 0.0;
    double received = 0.0;
    double final_charge = 0.0;
};

struct CornerTransfer {
    int vertex = -1;
    double angle = 0.0;
    double amount = 0.0;
};

struct FaceCharge {
    double initial = 0.0;
    double sent = 0.0;
    double final_charge = 0.0;
    std::vector<CornerTransfer> transfers;
};

struct ChargeLedger {
    std::vector<VertexCharge> vertex_charges;  // by vertex index
    std::vector<FaceCharge> face_charges;      // by face index (0 unbounded)
    double total_initial = 0.0;
    double total_final = 0.0;
    int components = 0;
};

// Charge moved from a face to a vertex across a corner of angle alpha:
// zero up to pi/3, the ramp 3*alpha/pi - 1 up to 2*pi/3, then capped at 1.
// Throws InvalidAngle outside (0, 2*pi].
double transfer(double alpha);

// Degree-i vertices start at i-6, bounded k-gons at 2k-6, the unbounded face
// at 2b-6. The grand total is -6*(c+1) by Euler's formula.
ChargeLedger initial_charges(const PlaneGraph& g, const FaceSet& fs);

// Applies the transfer rule across every face corner. Total charge is
// conserved.
void redistribute(ChargeLedger& ledger, const FaceSet& fs);

ChargeLedger build_ledger(const PlaneGraph& g, const FaceSet& fs);

enum class ElementKind { VERTEX, BOUNDED_FACE, UNBOUNDED_FACE };

struct ElementBound {
    ElementKind kind;
    int id = -1;          // vertex or face index
    int degree_or_sides = 0;
    double bound = 0.0;   // required lower bound on the final charge
    bool equality = false;  // triangles and rhombi must land exactly on it
    double final_charge = 0.0;
    bool pass = false;
};

struct ElementBoundsReport {
    bool applicable = true;  // false when n < 5
    bool pass = true;
    std::vector<ElementBound> bounds;
    std::vector<int> skipped_isolated;  // degree-0 vertices, reported apart
};

// Lower bounds on final charges per element class: degree 1..4 vertices end
// at >= i-5, degree >= 5 at >= 0, bounded triangles and 4-gons at exactly 0,
// 5-gons at >= 0, k-gons at >= k-6, the unbounded face at >= b-6.
// Not applicable below n = 5.
ElementBoundsReport check_element_bounds(const ChargeLedger& ledger,
                                         const PlaneGraph& g,
                                         const FaceSet& fs,
                                         const ToleranceConfig& tol);

}  // namespace mskit
