#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

namespace oracles {

int count_triangles(const mskit::PlaneGraph& g) {
    std::vector<std::vector<int>> adj(g.n());
    for (auto [i, j] : g.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    int count = 0;
    for (auto [i, j] : g.edges) {
        // common neighbors above both endpoints: each triangle counted at
        // its lexicographically smallest edge
        for (int w : adj[i]) {
            if (w <= std::max(i, j)) continue;
            if (std::binary_search(adj[j].begin(), adj[j].end(), w)) ++count;
        }
    }
    return count;
}

int component_count(const mskit::PlaneGraph& g) {
    std::vector<std::vector<int>> adj(g.n());
    for (auto [i, j] : g.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<bool> seen(g.n(), false);
    int c = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        ++c;
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : adj[v]) {
                if (!seen[u]) {
                    seen[u] = true;
                    q.push(u);
                }
            }
        }
    }
    return c;
}

std::vector<double> flood_fill_region_areas(const mskit::PlaneGraph& g,
                                            double step) {
    if (g.e() == 0) return {};
    double min_x = g.vertices[0].x, max_x = min_x;
    double min_y = g.vertices[0].y, max_y = min_y;
    for (const auto& p : g.vertices) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    min_x -= 3 * step;
    min_y -= 3 * step;
    max_x += 3 * step;
    max_y += 3 * step;

    const int w = static_cast<int>(std::ceil((max_x - min_x) / step)) + 1;
    const int h = static_cast<int>(std::ceil((max_y - min_y) / step)) + 1;
    std::vector<std::uint8_t> blocked(static_cast<std::size_t>(w) * h, 0);

    // Walls: any cell whose center is within one step of an edge. Two cells
    // of thickness keep 4-connected fill from leaking through a segment.
    for (auto [a, b] : g.edges) {
        const mskit::Point2& pa = g.vertices[a];
        const mskit::Point2& pb = g.vertices[b];
        double lo_x = std::min(pa.x, pb.x) - 2 * step;
        double hi_x = std::max(pa.x, pb.x) + 2 * step;
        double lo_y = std::min(pa.y, pb.y) - 2 * step;
        double hi_y = std::max(pa.y, pb.y) + 2 * step;
        int cx0 = std::max(0, static_cast<int>((lo_x - min_x) / step));
        int cx1 = std::min(w - 1, static_cast<int>((hi_x - min_x) / step) + 1);
        int cy0 = std::max(0, static_cast<int>((lo_y - min_y) / step));
        int cy1 = std::min(h - 1, static_cast<int>((hi_y - min_y) / step) + 1);
        for (int cy = cy0; cy <= cy1; ++cy) {
            for (int cx = cx0; cx <= cx1; ++cx) {
                mskit::Point2 c{min_x + cx * step, min_y + cy * step};
                if (mskit::point_segment_dist(c, pa, pb) <= step) {
                    blocked[static_cast<std::size_t>(cy) * w + cx] = 1;
                }
            }
        }
    }

    std::vector<int> region(static_cast<std::size_t>(w) * h, -1);
    auto bfs = [&](int sx, int sy, int id) -> std::int64_t {
        std::queue<std::pair<int, int>> q;
        q.push({sx, sy});
        region[static_cast<std::size_t>(sy) * w + sx] = id;
        std::int64_t cells = 0;
        while (!q.empty()) {
            auto [x, y] = q.front();
            q.pop();
            ++cells;
            const int dx[4] = {1, -1, 0, 0};
            const int dy[4] = {0, 0, 1, -1};
            for (int d = 0; d < 4; ++d) {
                int nx = x + dx[d], ny = y + dy[d];
                if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                std::size_t idx = static_cast<std::size_t>(ny) * w + nx;
                if (blocked[idx] || region[idx] != -1) continue;
                region[idx] = id;
                q.push({nx, ny});
            }
        }
        return cells;
    };

    // Region 0: everything reachable from the border (the unbounded face).
    for (int x = 0; x < w; ++x) {
        for (int y : {0, h - 1}) {
            std::size_t idx = static_cast<std::size_t>(y) * w + x;
            if (!blocked[idx] && region[idx] == -1) bfs(x, y, 0);
        }
    }
    for (int y = 0; y < h; ++y) {
        for (int x : {0, w - 1}) {
            std::size_t idx = static_cast<std::size_t>(y) * w + x;
            if (!blocked[idx] && region[idx] == -1) bfs(x, y, 0);
        }
    }

    std::vector<double> areas;
    int next_id = 1;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            std::size_t idx = static_cast<std::size_t>(y) * w + x;
            if (!blocked[idx] && region[idx] == -1) {
                std::int64_t cells = bfs(x, y, next_id++);
                areas.push_back(static_cast<double>(cells) * step * step);
            }
        }
    }
    std::sort(areas.begin(), areas.end());
    return areas;
}

mskit::PlaneGraph rigid_motion(const mskit::PlaneGraph& g, double theta,
                               double dx, double dy) {
    mskit::PlaneGraph out = g;
    double c = std::cos(theta), s = std::sin(theta);
    for (auto& p : out.vertices) {
        double x = p.x * c - p.y * s + dx;
        double y = p.x * s + p.y * c + dy;
        p = {x, y};
    }
    return out;
}

}  // namespace oracles
