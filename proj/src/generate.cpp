#include "mskit/generate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>

namespace mskit {

namespace {

const double kSqrt3 = std::numbers::sqrt3;

struct Axial {
    int a;
    int b;
    bool operator<(const Axial& o) const {
        return a != o.a ? a < o.a : b < o.b;
    }
};

Point2 to_plane(Axial p) {
    return {p.a + p.b / 2.0, p.b * (kSqrt3 / 2.0)};
}

// Unit-lattice patch of hex radius k: vertex map in deterministic order and
// each unit-distance pair once.
struct Patch {
    std::vector<Axial> axials;
    std::map<Axial, int> index;
    std::vector<std::pair<int, int>> edges;
};

Patch lattice_patch(int k, bool drop_center) {
    Patch patch;
    for (int a = -k; a <= k; ++a) {
        for (int b = std::max(-k, -k - a); b <= std::min(k, k - a); ++b) {
            if (drop_center && a == 0 && b == 0) continue;
            patch.index[{a, b}] = static_cast<int>(patch.axials.size());
            patch.axials.push_back({a, b});
        }
    }
    const Axial offsets[3] = {{1, 0}, {0, 1}, {1, -1}};
    for (std::size_t vi = 0; vi < patch.axials.size(); ++vi) {
        Axial p = patch.axials[vi];
        for (Axial d : offsets) {
            auto it = patch.index.find({p.a + d.a, p.b + d.b});
            if (it != patch.index.end()) {
                patch.edges.emplace_back(static_cast<int>(vi), it->second);
            }
        }
    }
    return patch;
}

// Ring-j hexagon cycle, counterclockwise from the east corner (j, 0).
std::vector<Axial> ring_cycle(int j) {
    const Axial corners[6] = {{j, 0},  {0, j},  {-j, j},
                              {-j, 0}, {0, -j}, {j, -j}};
    const Axial dirs[6] = {{-1, 1}, {-1, 0}, {0, -1},
                           {1, -1}, {1, 0},  {0, 1}};
    std::vector<Axial> cycle;
    cycle.reserve(6 * j);
    for (int s = 0; s < 6; ++s) {
        for (int t = 0; t < j; ++t) {
            cycle.push_back(
                {corners[s].a + t * dirs[s].a, corners[s].b + t * dirs[s].b});
        }
    }
    return cycle;
}

}  // namespace

PlaneGraph hex_construction(const HexFamilySpec& spec) {
    const int k = spec.k;
    if (k < 2) {
        throw Error(ErrorKind::InvalidK,
                    "hex construction requires k >= 2 (got " +
                        std::to_string(k) + ")");
    }

    Patch patch = lattice_patch(k, /*drop_center=*/true);

    // Every second edge of each intermediate ring hexagon goes: positions
    // 0, 2, 4, ... along the ring cycle. Ring 1 and ring k stay intact.
    std::set<std::pair<int, int>> removed;
    for (int j = 2; j <= k - 1; ++j) {
        auto cycle = ring_cycle(j);
        const int len = static_cast<int>(cycle.size());
        for (int t = 0; t < len; t += 2) {
            int u = patch.index.at(cycle[t]);
            int v = patch.index.at(cycle[(t + 1) % len]);
            removed.insert({std::min(u, v), std::max(u, v)});
        }
    }

    std::vector<std::pair<int, int>> kept;
    kept.reserve(patch.edges.size() - removed.size());
    for (auto [u, v] : patch.edges) {
        if (!removed.count({std::min(u, v), std::max(u, v)})) {
            kept.emplace_back(u, v);
        }
    }

    std::vector<Point2> pts;
    pts.reserve(patch.axials.size());
    for (Axial p : patch.axials) pts.push_back(to_plane(p));

    PlaneGraph g = build(std::move(pts), kept);
    GraphMetadata md;
    md.generator = "hex";
    md.k = k;
    md.parity = "even_from_east_corner";
    g.metadata = md;
    return g;
}

const char* to_string(PrimitiveName name) {
    switch (name) {
        case PrimitiveName::SINGLE_EDGE: return "single_edge";
        case PrimitiveName::TRIANGLE: return "triangle";
        case PrimitiveName::RHOMBUS: return "rhombus";
        case PrimitiveName::RHOMBUS_PENDANT: return "rhombus_pendant";
        case PrimitiveName::TWO_TRIANGLES_DISJOINT:
            return "two_triangles_disjoint";
    }
    return "?";
}

PrimitiveName parse_primitive_name(const std::string& name) {
    for (PrimitiveName p :
         {PrimitiveName::SINGLE_EDGE, PrimitiveName::TRIANGLE,
          PrimitiveName::RHOMBUS, PrimitiveName::RHOMBUS_PENDANT,
          PrimitiveName::TWO_TRIANGLES_DISJOINT}) {
        if (name == to_string(p)) return p;
    }
    throw Error(ErrorKind::UnknownName, "unknown primitive '" + name + "'");
}

PlaneGraph primitive(PrimitiveName name) {
    const double h = kSqrt3 / 2.0;
    PlaneGraph g;
    switch (name) {
        case PrimitiveName::SINGLE_EDGE:
            g = build({{0, 0}, {1, 0}}, {{0, 1}});
            break;
        case PrimitiveName::TRIANGLE:
            g = build({{0, 0}, {1, 0}, {0.5, h}}, {{0, 1}, {1, 2}, {0, 2}});
            break;
        case PrimitiveName::RHOMBUS:
            g = build({{0, 0}, {1, 0}, {1.5, h}, {0.5, h}},
                      {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
            break;
        case PrimitiveName::RHOMBUS_PENDANT:
            // Unit rhombus with a pendant unit edge tucked inside it; the
            // bounded face picks up the pendant edge twice.
            g = build({{0, 0}, {1, 0}, {1.5, h}, {0.5, h}, {h, 0.5}},
                      {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
            break;
        case PrimitiveName::TWO_TRIANGLES_DISJOINT:
            g = build({{0, 0}, {1, 0}, {0.5, h}, {3, 0}, {4, 0}, {3.5, h}},
                      {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
            break;
    }
    GraphMetadata md;
    md.generator = "primitive";
    md.name = to_string(name);
    g.metadata = md;
    return g;
}

PlaneGraph random_lattice_subgraph(std::uint64_t seed, int k,
                                   double edge_keep_prob) {
    if (k < 1) {
        throw Error(ErrorKind::InvalidK, "patch size must be >= 1");
    }
    Patch patch = lattice_patch(k, /*drop_center=*/false);

    std::mt19937_64 rng(seed);
    // Platform-stable uniform doubles in [0, 1): top 53 bits of the raw
    // 64-bit draw. Distribution classes vary across standard libraries.
    auto uniform = [&rng]() {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };

    std::vector<std::pair<int, int>> kept;
    for (auto edge : patch.edges) {
        if (edge_keep_prob >= 1.0 || uniform() < edge_keep_prob) {
            kept.push_back(edge);
        }
    }

    std::vector<Point2> pts;
    pts.reserve(patch.axials.size());
    for (Axial p : patch.axials) pts.push_back(to_plane(p));

    PlaneGraph g = build(std::move(pts), kept);
    auto [stripped, n0] = remove_isolated(g);
    (void)n0;
    GraphMetadata md;
    md.generator = "random";
    md.k = k;
    md.seed = seed;
    stripped.metadata = md;
    return stripped;
}

}  // namespace mskit
