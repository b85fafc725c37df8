#pragma once

#include <iosfwd>
#include <string>

#include "mskit/verify.hpp"

namespace mskit {

// Graph interchange format, strict JSON:
//   {"vertices": [[x, y], ...],
//    "edges": [[i, j], ...],            // 0-based, i < j
//    "metadata": {...}}                 // optional
// Throws ParseError on malformed JSON, SchemaError on anything the builder
// rejects (bad indices, self-loops, duplicates, non-finite coordinates).
PlaneGraph read_graph(const std::string& path);
PlaneGraph parse_graph(const std::string& text);

void write_graph(const PlaneGraph& g, const std::string& path);
std::string graph_to_json(const PlaneGraph& g);

// Deterministic report serialization: stable field order, shortest
// round-trip doubles. Identical input and tolerances give byte-identical
// output.
std::string report_to_json(const VerificationReport& report);

std::string certificate_to_json(const MatchstickCertificate& cert);

std::string ledger_to_json(const ChargeLedger& ledger, bool per_element);

// Unit edges as line segments at `scale` px per unit, bounded faces shaded
// by side count when a FaceSet is given, vertices of degree <= 4
// highlighted.
std::string render_svg(const PlaneGraph& g, const FaceSet* fs, double scale);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace mskit
