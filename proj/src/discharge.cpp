#include "mskit/discharge.hpp"

#include <cmath>
#include <numbers>

namespace mskit {

namespace {
constexpr double kPi = std::numbers::pi;
}

double transfer(double alpha) {
    if (!(alpha > 0.0) || alpha > 2.0 * kPi + 1e-12) {
        throw Error(ErrorKind::InvalidAngle,
                    "transfer: angle outside (0, 2*pi]");
    }
    if (alpha <= kPi / 3.0) return 0.0;
    if (alpha <= 2.0 * kPi / 3.0) return 3.0 * alpha / kPi - 1.0;
    return 1.0;
}

ChargeLedger initial_charges(const PlaneGraph& g, const FaceSet& fs) {
    ChargeLedger ledger;
    ledger.components = connected_components(g);

    auto deg = vertex_degrees(g);
    ledger.vertex_charges.resize(g.n());
    for (int v = 0; v < g.n(); ++v) {
        double q = deg[v] - 6.0;
        ledger.vertex_charges[v] = {q, 0.0, q};
    }

    ledger.face_charges.resize(fs.faces.size());
    for (std::size_t fi = 0; fi < fs.faces.size(); ++fi) {
        const Face& f = fs.faces[fi];
        double q = 2.0 * f.sides - 6.0;
        ledger.face_charges[fi] = {q, 0.0, q, {}};
    }

    double total = 0.0;
    for (const auto& vc : ledger.vertex_charges) total += vc.initial;
    for (const auto& fc : ledger.face_charges) total += fc.initial;
    ledger.total_initial = total;
    ledger.total_final = total;
    return ledger;
}

void redistribute(ChargeLedger& ledger, const FaceSet& fs) {
    for (std::size_t fi = 0; fi < fs.faces.size(); ++fi) {
        FaceCharge& fc = ledger.face_charges[fi];
        for (int wid : fs.faces[fi].walk_ids) {
            for (const Corner& c : fs.walks[wid].corners) {
                double amt = transfer(c.angle);
                fc.sent += amt;
                fc.transfers.push_back({c.vertex, c.angle, amt});
                ledger.vertex_charges[c.vertex].received += amt;
            }
        }
        fc.final_charge = fc.initial - fc.sent;
    }
    double total = 0.0;
    for (auto& vc : ledger.vertex_charges) {
        vc.final_charge = vc.initial + vc.received;
        total += vc.final_charge;
    }
    for (const auto& fc : ledger.face_charges) total += fc.final_charge;
    ledger.total_final = total;
}

ChargeLedger build_ledger(const PlaneGraph& g, const FaceSet& fs) {
    ChargeLedger ledger = initial_charges(g, fs);
    redistribute(ledger, fs);
    return ledger;
}

ElementBoundsReport check_element_bounds(const ChargeLedger& ledger,
                                         const PlaneGraph& g,
                                         const FaceSet& fs,
                                         const ToleranceConfig& tol) {
    ElementBoundsReport report;
    if (g.n() < 5) {
        report.applicable = false;
        return report;
    }
    const double slack = 6.0 * tol.eps_ang * (3.0 / kPi);

    auto deg = vertex_degrees(g);
    for (int v = 0; v < g.n(); ++v) {
        if (deg[v] == 0) {
            report.skipped_isolated.push_back(v);
            continue;
        }
        ElementBound eb;
        eb.kind = ElementKind::VERTEX;
        eb.id = v;
        eb.degree_or_sides = deg[v];
        eb.bound = deg[v] <= 4 ? deg[v] - 5.0 : 0.0;
        eb.final_charge = ledger.vertex_charges[v].final_charge;
        eb.pass = eb.final_charge >= eb.bound - slack;
        report.bounds.push_back(eb);
    }

    for (std::size_t fi = 0; fi < fs.faces.size(); ++fi) {
        const Face& f = fs.faces[fi];
        ElementBound eb;
        eb.id = static_cast<int>(fi);
        eb.degree_or_sides = f.sides;
        eb.final_charge = ledger.face_charges[fi].final_charge;
        if (f.bounded) {
            eb.kind = ElementKind::BOUNDED_FACE;
            if (f.sides == 3 || f.sides == 4) {
                eb.bound = 0.0;
                eb.equality = true;
                eb.pass = std::abs(eb.final_charge) <= slack;
            } else if (f.sides == 5) {
                eb.bound = 0.0;
                eb.pass = eb.final_charge >= -slack;
            } else {
                eb.bound = f.sides - 6.0;
                eb.pass = eb.final_charge >= eb.bound - slack;
            }
        } else {
            eb.kind = ElementKind::UNBOUNDED_FACE;
            eb.bound = f.sides - 6.0;
            eb.pass = eb.final_charge >= eb.bound - slack;
        }
        report.bounds.push_back(eb);
    }

    for (const auto& eb : report.bounds) {
        if (!eb.pass) {
            report.pass = false;
            break;
        }
    }
    return report;
}

}  // namespace mskit
