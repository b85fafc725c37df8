#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mskit/discharge.hpp"

namespace mskit {

enum class CheckStatus { PASS, FAIL, WARN, SKIPPED };

const char* to_string(CheckStatus s);

struct CheckRecord {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string relation;  // "==", ">=", ">", "<="
    CheckStatus status = CheckStatus::SKIPPED;
    double margin = 0.0;
    std::string reason;  // skip reason or failure witness
};

struct VerificationReport {
    std::vector<CheckRecord> checks;
    std::string verdict;  // "pass", "fail", "vacuous"
    // Provenance.
    ToleranceConfig tolerances;
    int n = 0;
    int e = 0;
    int c = 0;
    DegreeHistogram histogram;
    std::optional<FaceCensus> census;
    std::string notes;

    const CheckRecord* find(const std::string& name) const;
};

// Strict inequalities closer than this to equality are flagged WARN.
inline constexpr double kStrictMargin = 1e-9;

// pi * sqrt(3), the constant of the isoperimetric bound.
double pi_sqrt3();

CheckRecord check_incidence_identity(const PlaneGraph& g, const FaceSet& fs);
CheckRecord check_euler(const PlaneGraph& g, const FaceSet& fs);
CheckRecord check_total_charge(const ChargeLedger& ledger);
CheckRecord check_conservation(const ChargeLedger& ledger);
CheckRecord check_discharge_bound(const PlaneGraph& g, const FaceSet& fs);
CheckRecord check_edge_face_bound(const PlaneGraph& g, const FaceSet& fs);
CheckRecord check_isoperimetric(const FaceSet& fs, const PlaneGraph& g);
CheckRecord check_theorem(const PlaneGraph& g);
CheckRecord check_corollary(const PlaneGraph& g);
CheckRecord check_remark_ratio(const PlaneGraph& g);
CheckRecord check_element_bounds_record(const ElementBoundsReport& report);

// Full pipeline: validation, faces, ledger, every check. Validation failure
// produces a failed report with all downstream checks SKIPPED, never an
// exception.
VerificationReport verify_all(const PlaneGraph& g, const ToleranceConfig& tol);

}  // namespace mskit
