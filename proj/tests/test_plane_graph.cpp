#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "mskit/generate.hpp"
#include "mskit/plane_graph.hpp"
#include "support/oracles.hpp"

using namespace mskit;

namespace {
const ToleranceConfig kTol;
const double kS3 = std::numbers::sqrt3;

PlaneGraph square_with_diagonals() {
    return build({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                 {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
}

bool certs_equal(const MatchstickCertificate& a,
                 const MatchstickCertificate& b) {
    if (a.pass != b.pass || a.violations.size() != b.violations.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.violations.size(); ++i) {
        if (a.violations[i].kind != b.violations[i].kind) return false;
        if (a.violations[i].witness != b.violations[i].witness) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("build normalizes and rejects bad edges") {
    PlaneGraph g = build({{0, 0}, {1, 0}}, {{0, 1}});
    CHECK(g.n() == 2);
    CHECK(g.e() == 1);
    PlaneGraph g2 = build({{0, 0}, {1, 0}}, {{1, 0}});
    CHECK(g2.edges[0] == std::pair<int, int>{0, 1});

    std::vector<Point2> pts = {{0, 0}, {1, 0}, {0.5, kS3 / 2}};
    CHECK_THROWS_AS(build(pts, {{0, 1}, {1, 0}}), Error);  // duplicate
    CHECK_THROWS_AS(build(pts, {{0, 3}}), Error);          // out of range
    CHECK_THROWS_AS(build(pts, {{1, 1}}), Error);          // self-loop
}

TEST_CASE("degree histogram") {
    auto tri = primitive(PrimitiveName::TRIANGLE);
    auto h = degree_histogram(tri);
    CHECK(h.at(2) == 3);
    CHECK(h.n == 3);
    CHECK(h.e == 3);

    auto h4 = degree_histogram(hex_construction({4}));
    CHECK(h4.n == 60);
    CHECK(h4.at(3) == 6);
    CHECK(h4.at(4) == 18);
    CHECK(h4.at(5) == 36);

    auto hp = degree_histogram(primitive(PrimitiveName::RHOMBUS_PENDANT));
    CHECK(hp.at(1) == 1);
    CHECK(hp.at(2) == 3);
    CHECK(hp.at(3) == 1);
}

TEST_CASE("connected components") {
    CHECK(connected_components(primitive(PrimitiveName::TRIANGLE)) == 1);
    CHECK(connected_components(
              primitive(PrimitiveName::TWO_TRIANGLES_DISJOINT)) == 2);
    PlaneGraph tri_iso =
        build({{0, 0}, {1, 0}, {0.5, kS3 / 2}, {5, 5}},
              {{0, 1}, {1, 2}, {0, 2}});
    CHECK(connected_components(tri_iso) == 2);
    CHECK(connected_components(PlaneGraph{}) == 0);
}

TEST_CASE("validate_matchstick basics") {
    CHECK(validate_matchstick(primitive(PrimitiveName::TRIANGLE), kTol).pass);

    auto cert = validate_matchstick(square_with_diagonals(), kTol);
    CHECK_FALSE(cert.pass);
    int non_unit = 0, crossing = 0;
    for (const auto& v : cert.violations) {
        if (v.kind == ViolationKind::NON_UNIT_EDGE) {
            ++non_unit;
            CHECK(v.measured == doctest::Approx(std::sqrt(2.0)));
        }
        if (v.kind == ViolationKind::PROPER_CROSSING) ++crossing;
    }
    CHECK(non_unit == 2);
    CHECK(crossing == 1);
    CHECK(cert.violations.size() == 3);
}

TEST_CASE("validate_matchstick catches each violation kind") {
    // coincident vertices
    PlaneGraph g1 = build({{0, 0}, {1, 0}, {1, 0}}, {{0, 1}, {0, 2}});
    auto c1 = validate_matchstick(g1, kTol);
    CHECK_FALSE(c1.pass);
    bool coincident = false;
    for (const auto& v : c1.violations) {
        if (v.kind == ViolationKind::COINCIDENT_VERTICES) coincident = true;
    }
    CHECK(coincident);

    // vertex on a non-incident edge interior (T contact)
    PlaneGraph g2 = build({{0, 0}, {1, 0}, {0.5, 0}, {0.5, 1}},
                          {{0, 1}, {2, 3}});
    auto c2 = validate_matchstick(g2, kTol);
    CHECK_FALSE(c2.pass);
    bool t_contact = false;
    for (const auto& v : c2.violations) {
        if (v.kind == ViolationKind::ENDPOINT_ON_INTERIOR) t_contact = true;
    }
    CHECK(t_contact);

    // collinear overlap
    PlaneGraph g3 = build({{0, 0}, {1, 0}, {0.5, 0}, {1.5, 0}},
                          {{0, 1}, {2, 3}});
    auto c3 = validate_matchstick(g3, kTol);
    bool overlap = false;
    for (const auto& v : c3.violations) {
        if (v.kind == ViolationKind::OVERLAPPING_EDGES) overlap = true;
    }
    CHECK(overlap);
}

TEST_CASE("hex family validates") {
    for (int k = 2; k <= 10; ++k) {
        CAPTURE(k);
        CHECK(validate_matchstick(hex_construction({k}), kTol).pass);
    }
}

TEST_CASE("remove_isolated") {
    PlaneGraph tri_iso =
        build({{5, 5}, {0, 0}, {1, 0}, {0.5, kS3 / 2}, {9, 9}},
              {{1, 2}, {2, 3}, {1, 3}});
    auto [stripped, n0] = remove_isolated(tri_iso);
    CHECK(n0 == 2);
    CHECK(stripped.n() == 3);
    CHECK(stripped.e() == 3);
    auto h_before = degree_histogram(tri_iso);
    auto h_after = degree_histogram(stripped);
    CHECK(h_after.at(0) == 0);
    CHECK(h_after.at(2) == h_before.at(2));

    auto tri = primitive(PrimitiveName::TRIANGLE);
    auto [same, zero] = remove_isolated(tri);
    CHECK(zero == 0);
    CHECK(same.n() == 3);

    PlaneGraph only_iso = build({{0, 0}, {2, 0}, {4, 0}}, {});
    auto [empty, three] = remove_isolated(only_iso);
    CHECK(three == 3);
    CHECK(empty.n() == 0);
}

TEST_CASE("remove_isolated keeps the edge set geometrically intact") {
    std::mt19937_64 seeds(17);
    for (int it = 0; it < 20; ++it) {
        auto g = random_lattice_subgraph(seeds(), 3, 0.4);
        // re-add some isolated vertices
        PlaneGraph padded = g;
        padded.vertices.push_back({50.0 + it, 50.0});
        padded.vertices.push_back({60.0 + it, 60.0});
        auto [stripped, n0] = remove_isolated(padded);
        CHECK(n0 == 2);
        REQUIRE(stripped.e() == g.e());
        for (int m = 0; m < g.e(); ++m) {
            auto [a, b] = g.edges[m];
            auto [c, d] = stripped.edges[m];
            CHECK(g.vertices[a].x == stripped.vertices[c].x);
            CHECK(g.vertices[a].y == stripped.vertices[c].y);
            CHECK(g.vertices[b].x == stripped.vertices[d].x);
            CHECK(g.vertices[b].y == stripped.vertices[d].y);
        }
    }
}

TEST_CASE("degree sum identities hold exactly") {
    std::mt19937_64 seeds(11);
    for (int it = 0; it < 50; ++it) {
        auto g = random_lattice_subgraph(seeds(), 4, 0.6);
        auto h = degree_histogram(g);
        long long sum_n = 0, sum_dn = 0;
        for (auto [d, cnt] : h.counts) {
            sum_n += cnt;
            sum_dn += 1LL * d * cnt;
        }
        CHECK(sum_n == g.n());
        CHECK(sum_dn == 2LL * g.e());
    }
}

TEST_CASE("pruned parallel validator matches the serial reference") {
    std::vector<PlaneGraph> cases;
    cases.push_back(primitive(PrimitiveName::TRIANGLE));
    cases.push_back(primitive(PrimitiveName::RHOMBUS_PENDANT));
    cases.push_back(square_with_diagonals());
    cases.push_back(hex_construction({2}));
    cases.push_back(hex_construction({5}));
    cases.push_back(build({{0, 0}, {1, 0}, {1, 0}}, {{0, 1}, {0, 2}}));
    std::mt19937_64 seeds(3);
    for (int it = 0; it < 30; ++it) {
        cases.push_back(random_lattice_subgraph(seeds(), 3, 0.5));
    }
    // randomly corrupted lattices exercise every violation path
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> jitter(-0.2, 0.2);
    for (int it = 0; it < 20; ++it) {
        auto g = random_lattice_subgraph(1000 + it, 3, 0.8);
        if (g.n() == 0) continue;
        for (auto& p : g.vertices) {
            if (rng() % 4 == 0) {
                p.x += jitter(rng);
                p.y += jitter(rng);
            }
        }
        cases.push_back(g);
    }

    for (std::size_t i = 0; i < cases.size(); ++i) {
        CAPTURE(i);
        auto fast = validate_matchstick(cases[i], kTol);
        auto ref = validate_matchstick_serial(cases[i], kTol);
        CHECK(certs_equal(fast, ref));
    }
}

TEST_CASE("rigid motions preserve the certificate verdict") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> ang(0.0, 6.28);
    std::uniform_real_distribution<double> off(-30.0, 30.0);
    std::vector<PlaneGraph> cases = {
        primitive(PrimitiveName::RHOMBUS_PENDANT), hex_construction({3}),
        square_with_diagonals()};
    for (const auto& g : cases) {
        bool verdict = validate_matchstick(g, kTol).pass;
        for (int it = 0; it < 5; ++it) {
            auto moved = oracles::rigid_motion(g, ang(rng), off(rng), off(rng));
            CHECK(validate_matchstick(moved, kTol).pass == verdict);
        }
    }
}
