#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mskit/generate.hpp"
#include "mskit/io.hpp"
#include "mskit/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void emit_graph(const mskit::PlaneGraph& g, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << mskit::graph_to_json(g);
    } else {
        mskit::write_graph(g, out_path);
    }
}

void print_report_text(const mskit::VerificationReport& report) {
    for (const auto& c : report.checks) {
        std::cout << to_string(c.status) << "  " << c.name;
        if (c.status == mskit::CheckStatus::SKIPPED) {
            std::cout << "  (" << c.reason << ")";
        } else {
            std::cout << "  " << c.lhs << " " << c.relation << " " << c.rhs
                      << "  margin=" << c.margin;
            if (!c.reason.empty()) std::cout << "  [" << c.reason << "]";
        }
        std::cout << "\n";
    }
    std::cout << "verdict: " << report.verdict << "\n";
}

int report_exit_code(const mskit::VerificationReport& report) {
    return report.verdict == "fail" ? kExitCheckFailed : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matchstick graph toolkit: validation, face census, "
                 "discharging, identity checks, generators"};
    app.require_subcommand(1);

    mskit::ToleranceConfig tol;
    if (const char* env = std::getenv("MSKIT_EPS_LEN")) {
        try {
            tol.eps_len = std::stod(env);
        } catch (...) {
            std::cerr << "invalid MSKIT_EPS_LEN value\n";
            return kExitUsage;
        }
    }
    bool json_mode = false;
    app.add_option("--eps-len", tol.eps_len,
                   "unit-length and coincidence tolerance")
        ->capture_default_str();
    app.add_option("--eps-ang", tol.eps_ang, "angle snapping tolerance")
        ->capture_default_str();
    app.add_option("--eps-orient", tol.eps_orient,
                   "orientation degeneracy threshold")
        ->capture_default_str();
    app.add_flag("--json", json_mode, "machine-readable JSON output");

    std::string in_path, out_path;
    bool per_element = false;
    double scale = 60.0;

    auto* validate_cmd =
        app.add_subcommand("validate", "check the matchstick property");
    validate_cmd->add_option("file", in_path)->required();

    auto* verify_cmd = app.add_subcommand(
        "verify", "run every identity and inequality check");
    verify_cmd->add_option("file", in_path)->required();

    auto* report_cmd = app.add_subcommand(
        "report", "full verification report as deterministic JSON");
    report_cmd->add_option("file", in_path)->required();

    auto* discharge_cmd = app.add_subcommand(
        "discharge", "build the charge ledger and element bounds");
    discharge_cmd->add_option("file", in_path)->required();
    discharge_cmd->add_flag("--per-element", per_element,
                            "include per-vertex/per-face charges");

    auto* svg_cmd = app.add_subcommand("svg", "render the drawing to SVG");
    svg_cmd->add_option("file", in_path)->required();
    svg_cmd->add_option("-o,--out", out_path)->required();
    svg_cmd->add_option("--scale", scale, "pixels per unit length")
        ->capture_default_str();

    auto* gen_cmd = app.add_subcommand("gen", "generate graphs");
    gen_cmd->require_subcommand(1);

    int hex_k = 0;
    auto* gen_hex = gen_cmd->add_subcommand("hex", "hexagonal lattice family");
    gen_hex->add_option("k", hex_k, "hexagon side length (>= 2)")->required();
    gen_hex->add_option("-o,--out", out_path);

    std::string prim_name;
    auto* gen_prim = gen_cmd->add_subcommand("primitive", "small fixtures");
    gen_prim
        ->add_option("name", prim_name,
                     "single_edge | triangle | rhombus | rhombus_pendant | "
                     "two_triangles_disjoint")
        ->required();
    gen_prim->add_option("-o,--out", out_path);

    std::uint64_t seed = 0;
    int rand_k = 3;
    double prob = 0.5;
    auto* gen_rand =
        gen_cmd->add_subcommand("random", "random lattice subgraph");
    gen_rand->add_option("--seed", seed)->required();
    gen_rand->add_option("--k", rand_k)->required();
    gen_rand->add_option("--prob", prob)->required();
    gen_rand->add_option("-o,--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*validate_cmd) {
            auto g = mskit::read_graph(in_path);
            auto cert = mskit::validate_matchstick(g, tol);
            if (json_mode) {
                std::cout << mskit::certificate_to_json(cert);
            } else {
                std::cout << (cert.pass ? "pass" : "fail") << "\n";
                for (const auto& v : cert.violations) {
                    std::cout << "  " << to_string(v.kind) << " witness=[";
                    for (std::size_t i = 0; i < v.witness.size(); ++i) {
                        std::cout << (i ? "," : "") << v.witness[i];
                    }
                    std::cout << "] measured=" << v.measured << "\n";
                }
            }
            return cert.pass ? kExitPass : kExitCheckFailed;
        }

        if (*verify_cmd) {
            auto g = mskit::read_graph(in_path);
            auto report = mskit::verify_all(g, tol);
            if (json_mode) {
                std::cout << mskit::report_to_json(report);
            } else {
                print_report_text(report);
            }
            return report_exit_code(report);
        }

        if (*report_cmd) {
            auto g = mskit::read_graph(in_path);
            auto report = mskit::verify_all(g, tol);
            std::cout << mskit::report_to_json(report);
            return report_exit_code(report);
        }

        if (*discharge_cmd) {
            auto g = mskit::read_graph(in_path);
            auto cert = mskit::validate_matchstick(g, tol);
            if (!cert.pass) {
                std::cerr << "refusing to discharge an invalid matchstick "
                             "graph\n";
                if (json_mode) std::cout << mskit::certificate_to_json(cert);
                return kExitCheckFailed;
            }
            auto fs = mskit::derive_faces(g, tol);
            auto ledger = mskit::build_ledger(g, fs);
            auto bounds = mskit::check_element_bounds(ledger, g, fs, tol);
            if (json_mode) {
                std::cout << mskit::ledger_to_json(ledger, per_element);
            } else {
                std::cout << "total_initial=" << ledger.total_initial
                          << " total_final=" << ledger.total_final
                          << " components=" << ledger.components << "\n";
                if (per_element) {
                    for (std::size_t v = 0; v < ledger.vertex_charges.size();
                         ++v) {
                        const auto& vc = ledger.vertex_charges[v];
                        std::cout << "  vertex " << v << ": " << vc.initial
                                  << " + " << vc.received << " -> "
                                  << vc.final_charge << "\n";
                    }
                    for (std::size_t f = 0; f < ledger.face_charges.size();
                         ++f) {
                        const auto& fc = ledger.face_charges[f];
                        std::cout << "  face " << f << ": " << fc.initial
                                  << " - " << fc.sent << " -> "
                                  << fc.final_charge << "\n";
                    }
                }
                std::cout << "element_bounds: "
                          << (!bounds.applicable ? "not applicable (n < 5)"
                              : bounds.pass      ? "pass"
                                                 : "fail")
                          << "\n";
            }
            bool conserved =
                std::abs(ledger.total_final - ledger.total_initial) <= 1e-6;
            bool ok = conserved && (!bounds.applicable || bounds.pass);
            return ok ? kExitPass : kExitCheckFailed;
        }

        if (*svg_cmd) {
            auto g = mskit::read_graph(in_path);
            auto cert = mskit::validate_matchstick(g, tol);
            std::string svg;
            if (cert.pass && g.e() > 0) {
                auto fs = mskit::derive_faces(g, tol);
                svg = mskit::render_svg(g, &fs, scale);
            } else {
                svg = mskit::render_svg(g, nullptr, scale);
            }
            mskit::write_text_file(out_path, svg);
            return kExitPass;
        }

        if (*gen_hex) {
            emit_graph(mskit::hex_construction({hex_k}), out_path);
            return kExitPass;
        }
        if (*gen_prim) {
            emit_graph(mskit::primitive(mskit::parse_primitive_name(prim_name)),
                       out_path);
            return kExitPass;
        }
        if (*gen_rand) {
            emit_graph(mskit::random_lattice_subgraph(seed, rand_k, prob),
                       out_path);
            return kExitPass;
        }
    } catch (const mskit::Error& ex) {
        std::cerr << "error [" << to_string(ex.kind()) << "]: " << ex.what()
                  << "\n";
        return kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
