#include "mskit/verify.hpp"

#include <cmath>
#include <numbers>

namespace mskit {

namespace {

CheckRecord skipped(const std::string& name, const std::string& reason) {
    CheckRecord r;
    r.name = name;
    r.status = CheckStatus::SKIPPED;
    r.reason = reason;
    return r;
}

CheckStatus strict_status(double margin) {
    if (margin <= 0.0) return CheckStatus::FAIL;
    return margin < kStrictMargin ? CheckStatus::WARN : CheckStatus::PASS;
}

int small_degree_weight(const DegreeHistogram& h) {
    return 4 * h.at(1) + 3 * h.at(2) + 2 * h.at(3) + h.at(4);
}

}  // namespace

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::PASS: return "PASS";
        case CheckStatus::FAIL: return "FAIL";
        case CheckStatus::WARN: return "WARN";
        case CheckStatus::SKIPPED: return "SKIPPED";
    }
    return "?";
}

const CheckRecord* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

double pi_sqrt3() { return std::numbers::pi * std::numbers::sqrt3; }

CheckRecord check_incidence_identity(const PlaneGraph& g, const FaceSet& fs) {
    CheckRecord r;
    r.name = "incidence_identity";
    long long side_sum = fs.census.b;
    for (auto [k, fk] : fs.census.f_k) side_sum += 1LL * k * fk;
    auto h = degree_histogram(g);
    long long degree_sum = 0;
    for (auto [i, ni] : h.counts) degree_sum += 1LL * i * ni;
    r.lhs = static_cast<double>(side_sum);
    r.rhs = 2.0 * g.e();
    r.relation = "==";
    bool ok = side_sum == 2LL * g.e() && degree_sum == 2LL * g.e();
    r.status = ok ? CheckStatus::PASS : CheckStatus::FAIL;
    r.margin = r.lhs - r.rhs;
    if (!ok) {
        r.reason = "face-side sum " + std::to_string(side_sum) +
                   ", degree sum " + std::to_string(degree_sum) + " vs 2e=" +
                   std::to_string(2 * g.e());
    }
    return r;
}

CheckRecord check_euler(const PlaneGraph& g, const FaceSet& fs) {
    CheckRecord r;
    r.name = "euler";
    int c = connected_components(g);
    r.lhs = static_cast<double>(g.n() - g.e() + fs.census.f + 1);
    r.rhs = static_cast<double>(1 + c);
    r.relation = "==";
    r.margin = r.lhs - r.rhs;
    r.status = r.lhs == r.rhs ? CheckStatus::PASS : CheckStatus::FAIL;
    return r;
}

CheckRecord check_total_charge(const ChargeLedger& ledger) {
    CheckRecord r;
    r.name = "total_charge";
    r.lhs = ledger.total_initial;
    r.rhs = -6.0 * (ledger.components + 1);
    r.relation = "==";
    r.margin = r.lhs - r.rhs;
    bool identity = std::abs(r.margin) <= 1e-9;
    bool at_most = ledger.total_initial <= -12.0 + 1e-9;
    r.status = identity && at_most ? CheckStatus::PASS : CheckStatus::FAIL;
    if (!at_most) r.reason = "total initial charge above -12";
    return r;
}

CheckRecord check_conservation(const ChargeLedger& ledger) {
    CheckRecord r;
    r.name = "conservation";
    r.lhs = ledger.total_final;
    r.rhs = ledger.total_initial;
    r.relation = "==";
    r.margin = r.lhs - r.rhs;
    r.status =
        std::abs(r.margin) <= 1e-6 ? CheckStatus::PASS : CheckStatus::FAIL;
    return r;
}

CheckRecord check_discharge_bound(const PlaneGraph& g, const FaceSet& fs) {
    auto h = degree_histogram(g);
    int n_pos = h.n - h.at(0);
    if (n_pos < 5) {
        return skipped("discharge_bound",
                       "requires n >= 5 after dropping isolated vertices");
    }
    CheckRecord r;
    r.name = "discharge_bound";
    r.lhs = static_cast<double>(small_degree_weight(h));
    r.rhs = static_cast<double>(fs.census.b + 6);
    r.relation = ">=";
    r.margin = r.lhs - r.rhs;
    r.status = r.margin >= 0.0 ? CheckStatus::PASS : CheckStatus::FAIL;
    return r;
}

CheckRecord check_edge_face_bound(const PlaneGraph& g, const FaceSet& fs) {
    if (g.n() < 5) {
        return skipped("edge_face_bound", "requires n >= 5");
    }
    if (fs.census.b < 4) {
        return skipped("edge_face_bound",
                       "requires b >= 4 (unbounded face of a graph with "
                       "n >= 5 has at least 4 sides)");
    }
    CheckRecord r;
    r.name = "edge_face_bound";
    long long f3 = fs.census.f_k.count(3) ? fs.census.f_k.at(3) : 0;
    long long excess = 0;  // (k-4) f_k over k >= 5
    for (auto [k, fk] : fs.census.f_k) {
        if (k >= 5) excess += 1LL * (k - 4) * fk;
    }
    long long tight = 4LL * g.n() - 4 - fs.census.b + f3 - excess;
    long long loose = 4LL * g.n() - 8 + f3;
    r.lhs = 2.0 * g.e();
    r.rhs = static_cast<double>(loose);
    r.relation = "<=";
    r.margin = r.rhs - r.lhs;
    bool ok = 2LL * g.e() <= tight && tight <= loose;
    r.status = ok ? CheckStatus::PASS : CheckStatus::FAIL;
    if (!ok) {
        r.reason = "2e=" + std::to_string(2 * g.e()) + " vs " +
                   std::to_string(tight) + " <= " + std::to_string(loose);
    }
    return r;
}

CheckRecord check_isoperimetric(const FaceSet& fs, const PlaneGraph& g) {
    if (g.e() < 1) {
        return skipped("isoperimetric", "requires at least one edge");
    }
    CheckRecord r;
    r.name = "isoperimetric";
    long long f3 = fs.census.f_k.count(3) ? fs.census.f_k.at(3) : 0;
    r.lhs = static_cast<double>(fs.census.b) * fs.census.b;
    r.rhs = pi_sqrt3() * static_cast<double>(f3);
    r.relation = ">";
    r.margin = r.lhs - r.rhs;
    r.status = strict_status(r.margin);
    return r;
}

CheckRecord check_theorem(const PlaneGraph& g) {
    auto h = degree_histogram(g);
    if (h.n == 0) return skipped("theorem", "empty graph");
    if (h.at(0) > 0) {
        return skipped("theorem",
                       "isolated vertices present; see corollary");
    }
    CheckRecord r;
    r.name = "theorem";
    r.lhs = static_cast<double>(small_degree_weight(h));
    r.rhs = std::sqrt(pi_sqrt3() * h.n);
    r.relation = ">";
    r.margin = r.lhs - r.rhs;
    r.status = strict_status(r.margin);
    return r;
}

CheckRecord check_corollary(const PlaneGraph& g) {
    auto h = degree_histogram(g);
    if (h.n == 0) return skipped("corollary", "empty graph");
    CheckRecord r;
    r.name = "corollary";
    // Per the proof route: strip isolated vertices, bound the stripped
    // graph, then add them back on both sides.
    auto [stripped, n0] = remove_isolated(g);
    if (stripped.n() > 0) {
        auto hs = degree_histogram(stripped);
        double lhs_strip = small_degree_weight(hs);
        double rhs_strip = std::sqrt(pi_sqrt3() * hs.n);
        if (!(lhs_strip > rhs_strip)) {
            r.reason = "stripped-graph bound failed";
        }
    }
    r.lhs = static_cast<double>(h.at(0) + h.at(1) + h.at(2) + h.at(3) +
                                h.at(4));
    r.rhs = 0.25 * std::sqrt(pi_sqrt3() * h.n);
    r.relation = ">";
    r.margin = r.lhs - r.rhs;
    r.status = strict_status(r.margin);
    if (!r.reason.empty()) r.status = CheckStatus::FAIL;
    return r;
}

CheckRecord check_remark_ratio(const PlaneGraph& g) {
    if (!g.metadata || g.metadata->generator != "hex" || !g.metadata->k) {
        return skipped("remark_ratio",
                       "input is not a generated hex-family instance");
    }
    int k = *g.metadata->k;
    auto h = degree_histogram(g);
    bool family = k >= 2 && h.n == 3 * k * k + 3 * k && h.at(3) == 6 &&
                  h.at(4) == 6 * (k - 1) && h.at(5) == 3 * k * k - 3 * k;
    CheckRecord r;
    r.name = "remark_ratio";
    if (!family) {
        r.status = CheckStatus::FAIL;
        r.relation = "==";
        r.reason = "degree histogram does not match the hex family";
        return r;
    }
    r.lhs = (2.0 * h.at(3) + h.at(4)) / std::sqrt(static_cast<double>(h.n));
    r.rhs = 2.0 * std::numbers::sqrt3 * std::sqrt(1.0 + 1.0 / k);
    r.relation = "==";
    r.margin = r.lhs - r.rhs;
    r.status =
        std::abs(r.margin) <= 1e-9 ? CheckStatus::PASS : CheckStatus::FAIL;
    return r;
}

CheckRecord check_element_bounds_record(const ElementBoundsReport& report) {
    if (!report.applicable) {
        return skipped("element_bounds", "requires n >= 5");
    }
    CheckRecord r;
    r.name = "element_bounds";
    int failures = 0;
    for (const auto& eb : report.bounds) {
        if (!eb.pass) ++failures;
    }
    r.lhs = static_cast<double>(failures);
    r.rhs = 0.0;
    r.relation = "==";
    r.margin = -r.lhs;
    r.status = failures == 0 ? CheckStatus::PASS : CheckStatus::FAIL;
    if (failures > 0) {
        r.reason = std::to_string(failures) + " element bound(s) violated";
    }
    return r;
}

VerificationReport verify_all(const PlaneGraph& g,
                              const ToleranceConfig& tol) {
    VerificationReport report;
    report.tolerances = tol;
    report.n = g.n();
    report.e = g.e();
    report.c = connected_components(g);
    report.histogram = degree_histogram(g);
    report.notes =
        "unbounded-face side count b sums over all of its boundary walks";

    const std::vector<std::string> downstream = {
        "incidence_identity", "euler",          "total_charge",
        "conservation",       "element_bounds", "discharge_bound",
        "edge_face_bound",    "isoperimetric",  "theorem",
        "corollary",          "remark_ratio"};

    if (g.n() == 0) {
        report.checks.push_back(skipped("validation", "empty graph"));
        for (const auto& name : downstream) {
            report.checks.push_back(skipped(name, "empty graph"));
        }
        report.verdict = "vacuous";
        return report;
    }

    MatchstickCertificate cert = validate_matchstick(g, tol);
    CheckRecord vrec;
    vrec.name = "validation";
    vrec.lhs = static_cast<double>(cert.violations.size());
    vrec.rhs = 0.0;
    vrec.relation = "==";
    vrec.margin = -vrec.lhs;
    vrec.status = cert.pass ? CheckStatus::PASS : CheckStatus::FAIL;
    if (!cert.pass) {
        vrec.reason = std::to_string(cert.violations.size()) +
                      " violation(s); first: " +
                      to_string(cert.violations.front().kind);
    }
    report.checks.push_back(vrec);

    if (!cert.pass) {
        for (const auto& name : downstream) {
            report.checks.push_back(skipped(name, "validation failed"));
        }
        report.verdict = "fail";
        return report;
    }

    FaceSet fs;
    ChargeLedger ledger;
    try {
        fs = derive_faces(g, tol);
        ledger = build_ledger(g, fs);
    } catch (const Error& ex) {
        report.notes += "; face derivation failed: " + std::string(ex.what());
        for (const auto& name : downstream) {
            report.checks.push_back(skipped(name, "face derivation failed"));
        }
        report.verdict = "fail";
        return report;
    }
    report.census = fs.census;

    report.checks.push_back(check_incidence_identity(g, fs));
    report.checks.push_back(check_euler(g, fs));
    report.checks.push_back(check_total_charge(ledger));
    report.checks.push_back(check_conservation(ledger));
    report.checks.push_back(
        check_element_bounds_record(check_element_bounds(ledger, g, fs, tol)));
    report.checks.push_back(check_discharge_bound(g, fs));
    report.checks.push_back(check_edge_face_bound(g, fs));
    report.checks.push_back(check_isoperimetric(fs, g));
    report.checks.push_back(check_theorem(g));
    report.checks.push_back(check_corollary(g));
    report.checks.push_back(check_remark_ratio(g));

    bool any_fail = false;
    bool all_skipped = true;
    for (const auto& c : report.checks) {
        if (c.status == CheckStatus::FAIL) any_fail = true;
        if (c.status != CheckStatus::SKIPPED) all_skipped = false;
    }
    report.verdict = any_fail ? "fail" : all_skipped ? "vacuous" : "pass";
    return report;
}

}  // namespace mskit
