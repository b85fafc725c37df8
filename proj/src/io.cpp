#include "mskit/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mskit {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json metadata_to_json(const GraphMetadata& md) {
    ordered_json j;
    j["generator"] = md.generator;
    if (md.k) j["k"] = *md.k;
    if (md.parity) j["parity"] = *md.parity;
    if (md.seed) j["seed"] = *md.seed;
    if (md.name) j["name"] = *md.name;
    return j;
}

GraphMetadata metadata_from_json(const ordered_json& j) {
    if (!j.is_object()) {
        throw Error(ErrorKind::SchemaError, "metadata must be an object");
    }
    GraphMetadata md;
    if (j.contains("generator")) md.generator = j.at("generator");
    if (j.contains("k")) md.k = j.at("k").get<int>();
    if (j.contains("parity")) md.parity = j.at("parity").get<std::string>();
    if (j.contains("seed")) md.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("name")) md.name = j.at("name").get<std::string>();
    return md;
}

}  // namespace

std::string graph_to_json(const PlaneGraph& g) {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (const auto& p : g.vertices) {
        j["vertices"].push_back({p.x, p.y});
    }
    j["edges"] = ordered_json::array();
    for (auto [a, b] : g.edges) {
        j["edges"].push_back({a, b});
    }
    if (g.metadata) j["metadata"] = metadata_to_json(*g.metadata);
    return j.dump(2) + "\n";
}

PlaneGraph parse_graph(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::ParseError, ex.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
        throw Error(ErrorKind::SchemaError,
                    "expected an object with 'vertices' and 'edges'");
    }
    std::vector<Point2> pts;
    for (const auto& v : j.at("vertices")) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
            !v[1].is_number()) {
            throw Error(ErrorKind::SchemaError,
                        "each vertex must be a [x, y] number pair");
        }
        Point2 p{v[0].get<double>(), v[1].get<double>()};
        if (!finite(p)) {
            throw Error(ErrorKind::SchemaError,
                        "vertex coordinates must be finite");
        }
        pts.push_back(p);
    }
    std::vector<std::pair<int, int>> edges;
    const long long n = static_cast<long long>(pts.size());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
            throw Error(ErrorKind::SchemaError,
                        "each edge must be an [i, j] index pair");
        }
        long long a = e[0].get<long long>();
        long long b = e[1].get<long long>();
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw Error(ErrorKind::SchemaError,
                        "edge index out of range");
        }
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    PlaneGraph g;
    try {
        g = build(std::move(pts), edges);
    } catch (const Error& ex) {
        throw Error(ErrorKind::SchemaError, ex.what());
    }
    if (j.contains("metadata")) {
        try {
            g.metadata = metadata_from_json(j.at("metadata"));
        } catch (const nlohmann::json::exception& ex) {
            throw Error(ErrorKind::SchemaError,
                        std::string("bad metadata: ") + ex.what());
        }
    }
    return g;
}

PlaneGraph read_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
    }
    out << content;
    if (!out) {
        throw Error(ErrorKind::IoError, "short write to '" + path + "'");
    }
}

void write_graph(const PlaneGraph& g, const std::string& path) {
    write_text_file(path, graph_to_json(g));
}

std::string certificate_to_json(const MatchstickCertificate& cert) {
    ordered_json j;
    j["pass"] = cert.pass;
    j["violations"] = ordered_json::array();
    for (const auto& v : cert.violations) {
        ordered_json vj;
        vj["kind"] = to_string(v.kind);
        vj["witness"] = v.witness;
        vj["measured"] = v.measured;
        j["violations"].push_back(vj);
    }
    return j.dump(2) + "\n";
}

std::string report_to_json(const VerificationReport& report) {
    ordered_json j;
    j["checks"] = ordered_json::array();
    for (const auto& c : report.checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["lhs"] = c.lhs;
        cj["rhs"] = c.rhs;
        cj["relation"] = c.relation;
        cj["status"] = to_string(c.status);
        cj["margin"] = c.margin;
        if (!c.reason.empty()) cj["reason"] = c.reason;
        j["checks"].push_back(cj);
    }
    j["verdict"] = report.verdict;
    if (report.census) {
        ordered_json cj;
        cj["b"] = report.census->b;
        cj["f"] = report.census->f;
        ordered_json fk = ordered_json::object();
        for (auto [k, v] : report.census->f_k) {
            fk[std::to_string(k)] = v;
        }
        cj["f_k"] = fk;
        j["census"] = cj;
    } else {
        j["census"] = nullptr;
    }
    j["tolerances"] = {{"eps_len", report.tolerances.eps_len},
                       {"eps_ang", report.tolerances.eps_ang},
                       {"eps_orient", report.tolerances.eps_orient}};
    ordered_json prov;
    prov["n"] = report.n;
    prov["e"] = report.e;
    prov["c"] = report.c;
    ordered_json hist = ordered_json::object();
    for (auto [deg, cnt] : report.histogram.counts) {
        hist[std::to_string(deg)] = cnt;
    }
    prov["degree_histogram"] = hist;
    prov["notes"] = report.notes;
    j["provenance"] = prov;
    return j.dump(2) + "\n";
}

std::string ledger_to_json(const ChargeLedger& ledger, bool per_element) {
    ordered_json j;
    j["total_initial"] = ledger.total_initial;
    j["total_final"] = ledger.total_final;
    j["components"] = ledger.components;
    if (per_element) {
        j["vertices"] = ordered_json::array();
        for (const auto& vc : ledger.vertex_charges) {
            j["vertices"].push_back({{"initial", vc.initial},
                                     {"received", vc.received},
                                     {"final", vc.final_charge}});
        }
        j["faces"] = ordered_json::array();
        for (const auto& fc : ledger.face_charges) {
            ordered_json fj;
            fj["initial"] = fc.initial;
            fj["sent"] = fc.sent;
            fj["final"] = fc.final_charge;
            fj["transfers"] = ordered_json::array();
            for (const auto& t : fc.transfers) {
                fj["transfers"].push_back({{"vertex", t.vertex},
                                           {"angle", t.angle},
                                           {"amount", t.amount}});
            }
            j["faces"].push_back(fj);
        }
    }
    return j.dump(2) + "\n";
}

namespace {

const char* face_fill(int sides) {
    switch (sides) {
        case 3: return "#cfe8cf";
        case 4: return "#cfd9e8";
        case 5: return "#e8e0cf";
        case 6: return "#e8cfd9";
        default: return "#dddddd";
    }
}

}  // namespace

std::string render_svg(const PlaneGraph& g, const FaceSet* fs, double scale) {
    double min_x = 0.0, min_y = 0.0, max_x = 1.0, max_y = 1.0;
    if (!g.vertices.empty()) {
        min_x = max_x = g.vertices[0].x;
        min_y = max_y = g.vertices[0].y;
        for (const auto& p : g.vertices) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    const double margin = 0.5;
    min_x -= margin;
    min_y -= margin;
    max_x += margin;
    max_y += margin;
    double w = (max_x - min_x) * scale;
    double h = (max_y - min_y) * scale;
    auto px = [&](double x) { return (x - min_x) * scale; };
    auto py = [&](double y) { return (max_y - y) * scale; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
        << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
        << "\">\n";

    if (fs) {
        for (const auto& face : fs->faces) {
            if (!face.bounded) continue;
            svg << "  <path d=\"";
            for (int wid : face.walk_ids) {
                const Walk& walk = fs->walks[wid];
                for (std::size_t i = 0; i < walk.half_edges.size(); ++i) {
                    int he = walk.half_edges[i];
                    auto [a, b] = g.edges[he / 2];
                    int from = (he & 1) ? b : a;
                    svg << (i == 0 ? "M " : "L ") << px(g.vertices[from].x)
                        << " " << py(g.vertices[from].y) << " ";
                }
                svg << "Z ";
            }
            svg << "\" fill=\"" << face_fill(face.sides)
                << "\" fill-rule=\"evenodd\" stroke=\"none\"/>\n";
        }
    }

    for (auto [a, b] : g.edges) {
        svg << "  <line x1=\"" << px(g.vertices[a].x) << "\" y1=\""
            << py(g.vertices[a].y) << "\" x2=\"" << px(g.vertices[b].x)
            << "\" y2=\"" << py(g.vertices[b].y)
            << "\" stroke=\"#333333\" stroke-width=\"1.5\" "
               "stroke-linecap=\"round\"/>\n";
    }

    auto deg = vertex_degrees(g);
    for (int v = 0; v < g.n(); ++v) {
        bool small = deg[v] <= 4;
        svg << "  <circle cx=\"" << px(g.vertices[v].x) << "\" cy=\""
            << py(g.vertices[v].y) << "\" r=\"" << (small ? 3.5 : 2.5)
            << "\" fill=\"" << (small ? "#cc3333" : "#222222") << "\"/>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace mskit
