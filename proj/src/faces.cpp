#include "mskit/faces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace mskit {

namespace {

constexpr double kPi = std::numbers::pi;

double snap_angle(double a, double eps_ang) {
    if (std::abs(a - kPi / 3.0) <= eps_ang) return kPi / 3.0;
    if (std::abs(a - 2.0 * kPi / 3.0) <= eps_ang) return 2.0 * kPi / 3.0;
    return a;
}

double graph_scale(const PlaneGraph& g) {
    double s = 1.0;
    for (const auto& p : g.vertices) {
        s = std::max({s, std::abs(p.x), std::abs(p.y)});
    }
    return s;
}

}  // namespace

RotationSystem build_rotation_system(const PlaneGraph& g,
                                     const ToleranceConfig& tol) {
    RotationSystem rs;
    const int e = g.e();
    rs.half_edges.resize(2 * e);
    rs.angles.resize(2 * e);
    rs.order.resize(g.n());
    rs.pos_in_order.resize(2 * e, -1);

    for (int m = 0; m < e; ++m) {
        auto [i, j] = g.edges[m];
        rs.half_edges[2 * m] = {i, j};
        rs.half_edges[2 * m + 1] = {j, i};
        rs.angles[2 * m] = direction_angle(g.vertices[i], g.vertices[j], tol);
        rs.angles[2 * m + 1] =
            direction_angle(g.vertices[j], g.vertices[i], tol);
        rs.order[i].push_back(2 * m);
        rs.order[j].push_back(2 * m + 1);
    }

    for (int v = 0; v < g.n(); ++v) {
        auto& ord = rs.order[v];
        std::sort(ord.begin(), ord.end(), [&](int a, int b) {
            return rs.angles[a] < rs.angles[b];
        });
        const int d = static_cast<int>(ord.size());
        for (int p = 0; p < d; ++p) {
            rs.pos_in_order[ord[p]] = p;
            if (d > 1) {
                double gap = ccw_gap(rs.angles[ord[p]],
                                     rs.angles[ord[(p + 1) % d]]);
                if (gap >= 2.0 * kPi - 1e-14 || gap <= 1e-14) {
                    throw Error(ErrorKind::DegenerateDirections,
                                "two edges leave vertex " + std::to_string(v) +
                                    " in the same direction");
                }
            }
        }
    }
    return rs;
}

std::vector<Walk> trace_walks(const PlaneGraph& g, const RotationSystem& rs,
                              const ToleranceConfig& tol) {
    const int nh = static_cast<int>(rs.half_edges.size());
    std::vector<Walk> walks;
    std::vector<bool> visited(nh, false);

    // Continue from (u -> v) along the clockwise successor of (v -> u) in
    // v's counterclockwise rotation. That keeps the face on the left:
    // bounded faces trace counterclockwise, and a pendant edge is walked
    // down and back within the same face boundary.
    auto next = [&](int h) {
        int twin = h ^ 1;
        int v = rs.half_edges[h].to;
        const auto& ord = rs.order[v];
        int d = static_cast<int>(ord.size());
        int p = rs.pos_in_order[twin];
        return ord[(p - 1 + d) % d];
    };

    for (int h0 = 0; h0 < nh; ++h0) {
        if (visited[h0]) continue;
        Walk w;
        int h = h0;
        do {
            visited[h] = true;
            w.half_edges.push_back(h);
            h = next(h);
        } while (h != h0);

        const int m = static_cast<int>(w.half_edges.size());
        std::vector<Point2> poly;
        poly.reserve(m);
        w.corners.reserve(m);
        for (int i = 0; i < m; ++i) {
            int cur = w.half_edges[i];
            int nxt = w.half_edges[(i + 1) % m];
            poly.push_back(g.vertices[rs.half_edges[cur].from]);
            // Corner at the head of cur: sweep counterclockwise from the
            // outgoing direction to the reversed incoming one.
            double alpha = ccw_gap(rs.angles[nxt], rs.angles[cur ^ 1]);
            alpha = snap_angle(alpha, tol.eps_ang);
            w.corners.push_back({rs.half_edges[cur].to, alpha});
        }
        w.area = signed_area(poly);
        walks.push_back(std::move(w));
    }
    return walks;
}

namespace {

// Half-edge id 2*m+d encodes edge m run backwards when d is set.
std::vector<Point2> walk_polygon(const Walk& w, const PlaneGraph& g) {
    std::vector<Point2> poly;
    poly.reserve(w.half_edges.size());
    for (int h : w.half_edges) {
        auto [a, b] = g.edges[h / 2];
        poly.push_back(g.vertices[(h & 1) ? b : a]);
    }
    return poly;
}

// Clearance of vertex v: distance to the nearest vertex or non-incident
// edge. Probe offsets must stay well inside this radius.
double vertex_clearance(const PlaneGraph& g, int v) {
    double r = std::numeric_limits<double>::infinity();
    for (int u = 0; u < g.n(); ++u) {
        if (u != v) r = std::min(r, dist(g.vertices[u], g.vertices[v]));
    }
    for (int m = 0; m < g.e(); ++m) {
        auto [a, b] = g.edges[m];
        if (a == v || b == v) continue;
        r = std::min(r, point_segment_dist(g.vertices[v], g.vertices[a],
                                           g.vertices[b]));
    }
    return r;
}

// A point strictly inside the face bounded by this walk: offset from a
// corner along the bisector of its angular wedge. The wedge between the
// outgoing and reversed-incoming directions contains no other edges, so any
// offset below the vertex clearance lands inside the face.
struct ProbeResult {
    Point2 point;
    bool ok = false;
};

ProbeResult probe_point(const Walk& w, const PlaneGraph& g,
                        const ToleranceConfig& tol) {
    const int m = static_cast<int>(w.half_edges.size());
    double scale = graph_scale(g);
    double band = std::max(tol.eps_len, tol.eps_orient * scale * scale);

    for (int i = 0; i < m; ++i) {
        const Corner& c = w.corners[i];
        int out = w.half_edges[(i + 1) % m];
        auto [a, b] = g.edges[out / 2];
        int from = (out & 1) ? b : a;
        int to = (out & 1) ? a : b;
        double out_dir =
            direction_angle(g.vertices[from], g.vertices[to], tol);
        double alpha = c.angle;
        double bisector = std::fmod(out_dir + alpha / 2.0, 2.0 * kPi);

        double r = vertex_clearance(g, c.vertex);
        if (!(r > 20.0 * band)) continue;
        double wedge_clear = alpha < kPi ? std::sin(alpha / 2.0) : 1.0;
        double t = std::min(0.1, 0.45 * r);
        if (t * wedge_clear <= 3.0 * band) continue;

        ProbeResult res;
        res.point = {g.vertices[c.vertex].x + t * std::cos(bisector),
                     g.vertices[c.vertex].y + t * std::sin(bisector)};
        res.ok = true;
        return res;
    }
    return {};
}

}  // namespace

FaceSet assemble_faces(std::vector<Walk> walks, const PlaneGraph& g,
                       const ToleranceConfig& tol) {
    FaceSet fs;
    fs.walks = std::move(walks);

    Face unbounded;
    unbounded.bounded = false;
    fs.faces.push_back(unbounded);

    double scale = graph_scale(g);
    double area_eps = tol.eps_orient * scale * scale;

    // Positive walks each open one bounded face.
    std::vector<int> positive_walks;
    std::vector<std::vector<Point2>> positive_polys;
    std::vector<int> walk_face(fs.walks.size(), -1);
    for (std::size_t wi = 0; wi < fs.walks.size(); ++wi) {
        if (fs.walks[wi].area > area_eps) {
            Face f;
            f.bounded = true;
            f.walk_ids.push_back(static_cast<int>(wi));
            walk_face[wi] = static_cast<int>(fs.faces.size());
            fs.faces.push_back(f);
            positive_walks.push_back(static_cast<int>(wi));
            positive_polys.push_back(walk_polygon(fs.walks[wi], g));
        }
    }

    // Every other walk attaches to the innermost positive walk enclosing a
    // probe point of its face side, or to the unbounded face.
    for (std::size_t wi = 0; wi < fs.walks.size(); ++wi) {
        if (walk_face[wi] != -1) continue;
        ProbeResult probe = probe_point(fs.walks[wi], g, tol);
        if (!probe.ok) {
            throw Error(ErrorKind::NestingAmbiguity,
                        "no unambiguous interior probe for a boundary walk");
        }
        int best = -1;
        double best_area = std::numeric_limits<double>::infinity();
        for (std::size_t pi = 0; pi < positive_walks.size(); ++pi) {
            PointLocation loc =
                point_in_walk(probe.point, positive_polys[pi], tol);
            if (loc == PointLocation::ON_BOUNDARY) {
                throw Error(ErrorKind::NestingAmbiguity,
                            "probe point lies on a face boundary");
            }
            if (loc == PointLocation::INSIDE &&
                fs.walks[positive_walks[pi]].area < best_area) {
                best_area = fs.walks[positive_walks[pi]].area;
                best = positive_walks[pi];
            }
        }
        int face_id = best == -1 ? 0 : walk_face[best];
        walk_face[wi] = face_id;
        fs.faces[face_id].walk_ids.push_back(static_cast<int>(wi));
    }

    for (auto& f : fs.faces) {
        f.sides = 0;
        for (int wid : f.walk_ids) {
            f.sides += static_cast<int>(fs.walks[wid].half_edges.size());
        }
    }
    fs.census = face_census(fs);
    return fs;
}

FaceCensus face_census(const FaceSet& fs) {
    FaceCensus c;
    for (const auto& f : fs.faces) {
        if (f.bounded) {
            ++c.f_k[f.sides];
            ++c.f;
        } else {
            c.b = f.sides;
        }
    }
    return c;
}

FaceSet derive_faces(const PlaneGraph& g, const ToleranceConfig& tol) {
    RotationSystem rs = build_rotation_system(g, tol);
    return assemble_faces(trace_walks(g, rs, tol), g, tol);
}

std::vector<std::vector<VertexCorner>> corner_angles_by_vertex(
    const FaceSet& fs, const PlaneGraph& g) {
    std::vector<std::vector<VertexCorner>> by_vertex(g.n());
    for (std::size_t fi = 0; fi < fs.faces.size(); ++fi) {
        for (int wid : fs.faces[fi].walk_ids) {
            for (const Corner& c : fs.walks[wid].corners) {
                by_vertex[c.vertex].push_back(
                    {static_cast<int>(fi), c.angle});
            }
        }
    }
    return by_vertex;
}

}  // namespace mskit
