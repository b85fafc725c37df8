#include "mskit/plane_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#else
namespace {
inline int omp_get_max_threads() { return 1; }
inline int omp_get_thread_num() { return 0; }
}  // namespace
#endif

namespace mskit {

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::NON_UNIT_EDGE: return "NON_UNIT_EDGE";
        case ViolationKind::PROPER_CROSSING: return "PROPER_CROSSING";
        case ViolationKind::ENDPOINT_ON_INTERIOR: return "ENDPOINT_ON_INTERIOR";
        case ViolationKind::OVERLAPPING_EDGES: return "OVERLAPPING_EDGES";
        case ViolationKind::COINCIDENT_VERTICES: return "COINCIDENT_VERTICES";
    }
    return "?";
}

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::DegenerateSegment: return "DegenerateSegment";
        case ErrorKind::DegenerateDirections: return "DegenerateDirections";
        case ErrorKind::InvalidAngle: return "InvalidAngle";
        case ErrorKind::NestingAmbiguity: return "NestingAmbiguity";
        case ErrorKind::InvalidK: return "InvalidK";
        case ErrorKind::UnknownName: return "UnknownName";
        case ErrorKind::NotHexFamily: return "NotHexFamily";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::SchemaError: return "SchemaError";
        case ErrorKind::IoError: return "IoError";
    }
    return "?";
}

PlaneGraph build(std::vector<Point2> points,
                 const std::vector<std::pair<int, int>>& edge_pairs) {
    PlaneGraph g;
    g.vertices = std::move(points);
    const int n = g.n();
    std::set<std::pair<int, int>> seen;
    g.edges.reserve(edge_pairs.size());
    for (auto [i, j] : edge_pairs) {
        if (i < 0 || j < 0 || i >= n || j >= n) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "edge (" + std::to_string(i) + "," + std::to_string(j) +
                            ") out of range for " + std::to_string(n) +
                            " vertices");
        }
        if (i == j) {
            throw Error(ErrorKind::SelfLoop,
                        "self-loop at vertex " + std::to_string(i));
        }
        if (i > j) std::swap(i, j);
        if (!seen.insert({i, j}).second) {
            throw Error(ErrorKind::DuplicateEdge,
                        "duplicate edge (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
        }
        g.edges.emplace_back(i, j);
    }
    return g;
}

std::vector<int> vertex_degrees(const PlaneGraph& g) {
    std::vector<int> deg(g.n(), 0);
    for (auto [i, j] : g.edges) {
        ++deg[i];
        ++deg[j];
    }
    return deg;
}

DegreeHistogram degree_histogram(const PlaneGraph& g) {
    DegreeHistogram h;
    h.n = g.n();
    h.e = g.e();
    for (int d : vertex_degrees(g)) ++h.counts[d];
    return h;
}

int connected_components(const PlaneGraph& g) {
    const int n = g.n();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int c = n;
    for (auto [i, j] : g.edges) {
        int ri = find(i), rj = find(j);
        if (ri != rj) {
            parent[ri] = rj;
            --c;
        }
    }
    return c;
}

std::pair<PlaneGraph, int> remove_isolated(const PlaneGraph& g) {
    auto deg = vertex_degrees(g);
    std::vector<int> remap(g.n(), -1);
    PlaneGraph out;
    out.metadata = g.metadata;
    for (int v = 0; v < g.n(); ++v) {
        if (deg[v] > 0) {
            remap[v] = out.n();
            out.vertices.push_back(g.vertices[v]);
        }
    }
    out.edges.reserve(g.edges.size());
    for (auto [i, j] : g.edges) out.edges.emplace_back(remap[i], remap[j]);
    return {std::move(out), g.n() - out.n()};
}

namespace {

void sort_violations(std::vector<Violation>& v) {
    std::sort(v.begin(), v.end(), [](const Violation& a, const Violation& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.witness < b.witness;
    });
}

// Classifies one edge pair and appends any violation. Edges that share a
// vertex index may legally touch there; anything else they do is forbidden.
void check_edge_pair(const PlaneGraph& g, int ei, int ej,
                     const ToleranceConfig& tol, std::vector<Violation>& out) {
    auto [a, b] = g.edges[ei];
    auto [c, d] = g.edges[ej];
    SegmentRelation rel =
        segment_relation(g.vertices[a], g.vertices[b], g.vertices[c],
                         g.vertices[d], tol);
    switch (rel) {
        case SegmentRelation::PROPER_CROSSING:
            out.push_back({ViolationKind::PROPER_CROSSING, {ei, ej}, 0.0});
            break;
        case SegmentRelation::ENDPOINT_ON_INTERIOR:
            out.push_back({ViolationKind::ENDPOINT_ON_INTERIOR, {ei, ej}, 0.0});
            break;
        case SegmentRelation::OVERLAPPING:
            out.push_back({ViolationKind::OVERLAPPING_EDGES, {ei, ej}, 0.0});
            break;
        case SegmentRelation::DISJOINT:
        case SegmentRelation::SHARED_ENDPOINT:
            // A geometric shared endpoint between edges without a common
            // vertex index shows up as a COINCIDENT_VERTICES finding.
            break;
    }
}

void check_unit_length(const PlaneGraph& g, int ei, const ToleranceConfig& tol,
                       std::vector<Violation>& out) {
    auto [i, j] = g.edges[ei];
    double len = dist(g.vertices[i], g.vertices[j]);
    if (std::abs(len - 1.0) > tol.eps_len) {
        out.push_back({ViolationKind::NON_UNIT_EDGE, {ei}, len});
    }
}

// Vertex against a non-incident edge: within eps_len of the segment but not
// of either endpoint (endpoint proximity is a vertex-coincidence problem).
void check_vertex_edge(const PlaneGraph& g, int v, int ei,
                       const ToleranceConfig& tol,
                       std::vector<Violation>& out) {
    auto [i, j] = g.edges[ei];
    if (v == i || v == j) return;
    const Point2& p = g.vertices[v];
    if (dist(p, g.vertices[i]) <= tol.eps_len) return;
    if (dist(p, g.vertices[j]) <= tol.eps_len) return;
    double d = point_segment_dist(p, g.vertices[i], g.vertices[j]);
    if (d <= tol.eps_len) {
        out.push_back({ViolationKind::ENDPOINT_ON_INTERIOR, {v, ei}, d});
    }
}

void check_vertex_pair(const PlaneGraph& g, int u, int v,
                       const ToleranceConfig& tol,
                       std::vector<Violation>& out) {
    double d = dist(g.vertices[u], g.vertices[v]);
    if (d <= tol.eps_len) {
        out.push_back({ViolationKind::COINCIDENT_VERTICES, {u, v}, d});
    }
}

// Uniform grid over the drawing; cells are keyed by packed integer
// coordinates. Cell size is a little over the unit edge length so a
// segment's inflated bounding box covers a handful of cells.
class Grid {
public:
    explicit Grid(double cell) : cell_(cell) {}

    static std::int64_t key(int cx, int cy) {
        return (static_cast<std::int64_t>(cx) << 32) ^
               (static_cast<std::uint32_t>(cy));
    }

    int coord(double x) const {
        return static_cast<int>(std::floor(x / cell_));
    }

    void insert_box(double x0, double y0, double x1, double y1, int id,
                    std::unordered_map<std::int64_t, std::vector<int>>& m) {
        for (int cx = coord(x0); cx <= coord(x1); ++cx) {
            for (int cy = coord(y0); cy <= coord(y1); ++cy) {
                m[key(cx, cy)].push_back(id);
            }
        }
    }

    double cell_;
};

}  // namespace

MatchstickCertificate validate_matchstick_serial(const PlaneGraph& g,
                                                 const ToleranceConfig& tol) {
    MatchstickCertificate cert;
    auto& out = cert.violations;
    const int e = g.e();
    const int n = g.n();
    for (int i = 0; i < e; ++i) check_unit_length(g, i, tol, out);
    for (int i = 0; i < e; ++i) {
        for (int j = i + 1; j < e; ++j) check_edge_pair(g, i, j, tol, out);
    }
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < e; ++i) check_vertex_edge(g, v, i, tol, out);
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) check_vertex_pair(g, u, v, tol, out);
    }
    sort_violations(out);
    cert.pass = out.empty();
    return cert;
}

MatchstickCertificate validate_matchstick(const PlaneGraph& g,
                                          const ToleranceConfig& tol) {
    MatchstickCertificate cert;
    const int e = g.e();
    const int n = g.n();
    const double pad = std::max(tol.eps_len, 1e-9);

    Grid grid(1.25);
    std::unordered_map<std::int64_t, std::vector<int>> edge_cells;
    edge_cells.reserve(static_cast<std::size_t>(e) * 2 + 16);
    for (int i = 0; i < e; ++i) {
        const Point2& a = g.vertices[g.edges[i].first];
        const Point2& b = g.vertices[g.edges[i].second];
        grid.insert_box(std::min(a.x, b.x) - pad, std::min(a.y, b.y) - pad,
                        std::max(a.x, b.x) + pad, std::max(a.y, b.y) + pad, i,
                        edge_cells);
    }
    std::unordered_map<std::int64_t, std::vector<int>> vertex_cells;
    vertex_cells.reserve(static_cast<std::size_t>(n) + 16);
    for (int v = 0; v < n; ++v) {
        vertex_cells[Grid::key(grid.coord(g.vertices[v].x),
                               grid.coord(g.vertices[v].y))]
            .push_back(v);
    }

    const int nthreads = omp_get_max_threads();
    std::vector<std::vector<Violation>> parts(nthreads);

#pragma omp parallel
    {
        auto& out = parts[omp_get_thread_num()];
        std::vector<int> cand;

#pragma omp for schedule(dynamic, 64) nowait
        for (int i = 0; i < e; ++i) {
            check_unit_length(g, i, tol, out);
            const Point2& a = g.vertices[g.edges[i].first];
            const Point2& b = g.vertices[g.edges[i].second];
            cand.clear();
            for (int cx = grid.coord(std::min(a.x, b.x) - pad);
                 cx <= grid.coord(std::max(a.x, b.x) + pad); ++cx) {
                for (int cy = grid.coord(std::min(a.y, b.y) - pad);
                     cy <= grid.coord(std::max(a.y, b.y) + pad); ++cy) {
                    auto it = edge_cells.find(Grid::key(cx, cy));
                    if (it == edge_cells.end()) continue;
                    for (int j : it->second) {
                        if (j > i) cand.push_back(j);
                    }
                }
            }
            std::sort(cand.begin(), cand.end());
            cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
            for (int j : cand) check_edge_pair(g, i, j, tol, out);
        }

#pragma omp for schedule(dynamic, 256) nowait
        for (int v = 0; v < n; ++v) {
            const Point2& p = g.vertices[v];
            auto it = edge_cells.find(
                Grid::key(grid.coord(p.x), grid.coord(p.y)));
            if (it != edge_cells.end()) {
                cand = it->second;
                std::sort(cand.begin(), cand.end());
                cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
                for (int i : cand) check_vertex_edge(g, v, i, tol, out);
            }
            int cx = grid.coord(p.x);
            int cy = grid.coord(p.y);
            for (int dx = -1; dx <= 1; ++dx) {
                for (int dy = -1; dy <= 1; ++dy) {
                    auto vit = vertex_cells.find(Grid::key(cx + dx, cy + dy));
                    if (vit == vertex_cells.end()) continue;
                    for (int u : vit->second) {
                        if (u > v) check_vertex_pair(g, v, u, tol, out);
                    }
                }
            }
        }
    }

    auto& out = cert.violations;
    for (auto& part : parts) {
        out.insert(out.end(), part.begin(), part.end());
    }
    // Canonical witness order for COINCIDENT_VERTICES pairs.
    for (auto& viol : out) {
        if (viol.kind == ViolationKind::COINCIDENT_VERTICES) {
            std::sort(viol.witness.begin(), viol.witness.end());
        }
    }
    sort_violations(out);
    cert.pass = out.empty();
    return cert;
}

}  // namespace mskit
