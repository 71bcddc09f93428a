#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "hadamard/tolerance.hpp"

namespace hadamard {

struct TreeEdge {
    int u = 0;
    int v = 0;
    double weight = 1.0;
};

// Point on a tree: a vertex, or an interior point of an edge at offset
// `offset` from edges[edge].u. Offsets 0 / weight canonicalize to vertices.
struct TreePoint {
    int vertex = -1;
    int edge = -1;
    double offset = 0.0;

    bool is_vertex() const { return edge < 0; }
    static TreePoint at_vertex(int v) { return {v, -1, 0.0}; }
};

// Finite weighted tree: connected, acyclic, strictly positive edge weights.
class WeightedTree {
  public:
    WeightedTree(int vertex_count, std::vector<TreeEdge> edges)
        : edges_(std::move(edges)), adjacency_(vertex_count) {
        require(vertex_count >= 1, "tree needs at least one vertex");
        require(static_cast<int>(edges_.size()) == vertex_count - 1,
                "tree must have exactly m-1 edges");
        for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
            const TreeEdge& ed = edges_[e];
            require(ed.u >= 0 && ed.u < vertex_count && ed.v >= 0 &&
                        ed.v < vertex_count && ed.u != ed.v,
                    "bad edge endpoints");
            require(ed.weight > 0.0, "edge weights must be positive");
            adjacency_[ed.u].push_back({ed.v, e});
            adjacency_[ed.v].push_back({ed.u, e});
        }
        // connectivity (plus m-1 edges) implies acyclic
        std::vector<char> seen(vertex_count, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int found = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto [nb, e] : adjacency_[x])
                if (!seen[nb]) {
                    seen[nb] = 1;
                    ++found;
                    stack.push_back(nb);
                }
        }
        require(found == vertex_count, "tree is not connected");
        for (const auto& adj : adjacency_)
            max_degree_ = std::max(max_degree_, static_cast<int>(adj.size()));
    }

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<TreeEdge>& edges() const { return edges_; }
    const TreeEdge& edge(int e) const { return edges_[e]; }
    int max_degree() const { return max_degree_; }
    // neighbors of v as (vertex, edge id) pairs
    const std::vector<std::pair<int, int>>& neighbors(int v) const {
        return adjacency_[v];
    }

    double min_edge_weight() const {
        double w = edges_.empty() ? 0.0 : edges_[0].weight;
        for (const auto& e : edges_) w = std::min(w, e.weight);
        return w;
    }

    // distances and first-hop edges from src to every vertex
    void scan_from(int src, std::vector<double>& dist, std::vector<int>& parent_edge) const {
        int m = vertex_count();
        dist.assign(m, 0.0);
        parent_edge.assign(m, -1);
        std::vector<int> stack{src};
        std::vector<char> seen(m, 0);
        seen[src] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto [nb, e] : adjacency_[x])
                if (!seen[nb]) {
                    seen[nb] = 1;
                    dist[nb] = dist[x] + edges_[e].weight;
                    parent_edge[nb] = e;
                    stack.push_back(nb);
                }
        }
    }

    void check_point(const TreePoint& p) const {
        if (p.is_vertex()) {
            require(p.vertex >= 0 && p.vertex < vertex_count(), "vertex out of range");
        } else {
            require(p.edge >= 0 && p.edge < edge_count(), "edge out of range");
            require(p.offset > 0.0 && p.offset < edges_[p.edge].weight,
                    "interior offset out of range");
        }
    }

    // canonicalize an offset on edge e to a vertex when it hits an endpoint
    TreePoint make_point(int e, double offset) const {
        const TreeEdge& ed = edges_[e];
        double snap = 1e-12 * ed.weight;
        if (offset <= snap) return TreePoint::at_vertex(ed.u);
        if (offset >= ed.weight - snap) return TreePoint::at_vertex(ed.v);
        return TreePoint{-1, e, offset};
    }

  private:
    std::vector<TreeEdge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adjacency_;
    int max_degree_ = 0;
};

namespace detail {

// distance from a point to b given per-vertex distances from some source
inline double point_dist(const WeightedTree& t, const std::vector<double>& dist,
                         const TreePoint& b) {
    if (b.is_vertex()) return dist[b.vertex];
    const TreeEdge& e = t.edge(b.edge);
    return std::min(dist[e.u] + b.offset, dist[e.v] + (e.weight - b.offset));
}

}  // namespace detail

inline double tree_distance(const WeightedTree& t, const TreePoint& a,
                            const TreePoint& b) {
    t.check_point(a);
    t.check_point(b);
    if (!a.is_vertex() && !b.is_vertex() && a.edge == b.edge)
        return std::abs(a.offset - b.offset);
    std::vector<double> dist;
    std::vector<int> pe;
    if (a.is_vertex()) {
        t.scan_from(a.vertex, dist, pe);
        return detail::point_dist(t, dist, b);
    }
    const TreeEdge& ea = t.edge(a.edge);
    t.scan_from(ea.u, dist, pe);
    double via_u = a.offset + detail::point_dist(t, dist, b);
    t.scan_from(ea.v, dist, pe);
    double via_v = (ea.weight - a.offset) + detail::point_dist(t, dist, b);
    return std::min(via_u, via_v);
}

// The unique point at arc length s*d(a,b) from a on the path to b.
inline TreePoint tree_interpolate(const WeightedTree& t, const TreePoint& a,
                                  const TreePoint& b, double s) {
    require(s >= 0.0 && s <= 1.0, "t outside [0,1]");
    t.check_point(a);
    t.check_point(b);
    if (s == 0.0) return a;
    if (s == 1.0) return b;

    if (!a.is_vertex() && !b.is_vertex() && a.edge == b.edge) {
        double off = a.offset + s * (b.offset - a.offset);
        return t.make_point(a.edge, off);
    }

    // vertex distances toward b; two scans when b is interior
    std::vector<double> dist1, dist2;
    std::vector<int> pe;
    if (b.is_vertex()) {
        t.scan_from(b.vertex, dist1, pe);
    } else {
        const TreeEdge& eb = t.edge(b.edge);
        t.scan_from(eb.u, dist1, pe);
        t.scan_from(eb.v, dist2, pe);
    }
    auto to_b = [&](int v) -> double {
        if (b.is_vertex()) return dist1[v];
        const TreeEdge& eb = t.edge(b.edge);
        return std::min(dist1[v] + b.offset, dist2[v] + (eb.weight - b.offset));
    };

    // enter the path at a vertex, possibly consuming part of a's edge
    int x;
    double remaining;
    if (a.is_vertex()) {
        x = a.vertex;
        remaining = s * to_b(x);
    } else {
        const TreeEdge& ea = t.edge(a.edge);
        double via_u = a.offset + to_b(ea.u);
        double via_v = (ea.weight - a.offset) + to_b(ea.v);
        remaining = s * std::min(via_u, via_v);
        if (via_u <= via_v) {
            if (remaining <= a.offset) return t.make_point(a.edge, a.offset - remaining);
            remaining -= a.offset;
            x = ea.u;
        } else {
            if (remaining <= ea.weight - a.offset)
                return t.make_point(a.edge, a.offset + remaining);
            remaining -= ea.weight - a.offset;
            x = ea.v;
        }
    }

    for (;;) {
        if (b.is_vertex() && x == b.vertex) return TreePoint::at_vertex(x);
        if (!b.is_vertex()) {
            const TreeEdge& eb = t.edge(b.edge);
            if (x == eb.u) return t.make_point(b.edge, std::min(remaining, b.offset));
            if (x == eb.v)
                return t.make_point(b.edge,
                                    eb.weight - std::min(remaining, eb.weight - b.offset));
        }
        // the next hop strictly reduces distance to b by the edge weight
        int next = -1, via_edge = -1;
        double dx = to_b(x);
        for (auto [nb, e] : t.neighbors(x)) {
            if (to_b(nb) < dx && to_b(nb) + t.edge(e).weight <=
                                     dx + 1e-9 * (1.0 + t.edge(e).weight)) {
                next = nb;
                via_edge = e;
                break;
            }
        }
        require(next >= 0, "tree interpolation failed to advance");
        double w = t.edge(via_edge).weight;
        if (remaining <= w) {
            double off = (t.edge(via_edge).u == x) ? remaining : w - remaining;
            return t.make_point(via_edge, off);
        }
        remaining -= w;
        x = next;
    }
}

struct TreeMeanResult {
    TreePoint point;
    int vertex_visits = 0;
};

// Exact weighted Frechet mean by directional-derivative descent over vertices,
// with a 1-D Euclidean solve when the minimizer is interior to an edge.
// Data points may sit on edge interiors. Runs in O(n m).
inline TreeMeanResult tree_frechet_mean_traced(const WeightedTree& t,
                                               const std::vector<TreePoint>& points,
                                               const std::vector<double>& weights) {
    require(!points.empty(), "empty data");
    require(points.size() == weights.size(), "points/weights length mismatch");
    const int m = t.vertex_count();
    const int n = static_cast<int>(points.size());
    double wsum = 0.0;
    for (double w : weights) {
        require(w >= 0.0, "negative weight");
        wsum += w;
    }
    require(wsum > 0.0, "zero total weight");

    // per data point: distance to every vertex, and the first edge on the
    // path from each vertex toward the point (-1 when the point is there)
    std::vector<std::vector<double>> dist(n);
    std::vector<std::vector<int>> toward(n);
    std::vector<double> dp, dq;
    std::vector<int> pp, pq;
    for (int j = 0; j < n; ++j) {
        t.check_point(points[j]);
        if (points[j].is_vertex()) {
            t.scan_from(points[j].vertex, dist[j], toward[j]);
        } else {
            const TreeEdge& e = t.edge(points[j].edge);
            double s = points[j].offset;
            t.scan_from(e.u, dp, pp);
            t.scan_from(e.v, dq, pq);
            dist[j].resize(m);
            toward[j].assign(m, -1);
            for (int v = 0; v < m; ++v) {
                double via_u = dp[v] + s;
                double via_v = dq[v] + (e.weight - s);
                dist[j][v] = std::min(via_u, via_v);
                if (v == e.u || v == e.v)
                    toward[j][v] = points[j].edge;
                else
                    toward[j][v] = (via_u <= via_v) ? pp[v] : pq[v];
            }
        }
    }

    int v = 0;
    int prev_edge = -1;
    int prev_vertex = -1;
    int visits = 0;
    for (;;) {
        ++visits;
        require(visits <= m, "tree mean exceeded vertex-count visits");
        double T = 0.0;
        for (int j = 0; j < n; ++j) T += weights[j] * dist[j][v];
        const double tol = 1e-12 * std::max(1.0, T);

        // weighted mass pulled along each incident edge
        int best_edge = -1, best_nb = -1;
        double best_S = -1.0;
        for (auto [nb, e] : t.neighbors(v)) {
            double S = 0.0;
            for (int j = 0; j < n; ++j)
                if (toward[j][v] == e) S += weights[j] * dist[j][v];
            if (S > best_S + tol) {
                best_S = S;
                best_edge = e;
                best_nb = nb;
            }
        }
        // all directional derivatives nonnegative: v is a global minimizer
        if (best_edge < 0 || 2.0 * best_S <= T + tol)
            return {TreePoint::at_vertex(v), visits};

        if (best_edge == prev_edge) {
            // minimizer lies inside the edge just traversed
            const TreeEdge& e = t.edge(best_edge);
            const int p = prev_vertex;
            const double L = e.weight;
            double acc = 0.0;
            for (int j = 0; j < n; ++j) {
                double sj;
                if (!points[j].is_vertex() && points[j].edge == best_edge) {
                    sj = (e.u == p) ? points[j].offset : L - points[j].offset;
                } else if (toward[j][p] != best_edge) {
                    sj = -dist[j][p];
                } else {
                    sj = L + dist[j][v];
                }
                acc += weights[j] * sj;
            }
            double s_star = std::clamp(acc / wsum, 0.0, L);
            double off = (e.u == p) ? s_star : L - s_star;
            return {t.make_point(best_edge, off), visits};
        }
        prev_edge = best_edge;
        prev_vertex = v;
        v = best_nb;
    }
}

inline TreePoint tree_frechet_mean(const WeightedTree& t,
                                   const std::vector<TreePoint>& points,
                                   const std::vector<double>& weights) {
    return tree_frechet_mean_traced(t, points, weights).point;
}

inline TreePoint tree_frechet_mean(const WeightedTree& t,
                                   const std::vector<TreePoint>& points) {
    return tree_frechet_mean(t, points, std::vector<double>(points.size(), 1.0));
}

// All vertices plus interior samples every `step` along each edge; the
// candidate set for the grid oracle.
inline std::vector<TreePoint> tree_grid_candidates(const WeightedTree& t, double step) {
    require(step > 0.0, "step must be positive");
    std::vector<TreePoint> out;
    for (int v = 0; v < t.vertex_count(); ++v) out.push_back(TreePoint::at_vertex(v));
    for (int e = 0; e < t.edge_count(); ++e) {
        double w = t.edge(e).weight;
        for (double s = step; s < w; s += step) out.push_back(TreePoint{-1, e, s});
    }
    return out;
}

inline double tree_diameter(const WeightedTree& t) {
    std::vector<double> dist;
    std::vector<int> pe;
    t.scan_from(0, dist, pe);
    int far = 0;
    for (int v = 0; v < t.vertex_count(); ++v)
        if (dist[v] > dist[far]) far = v;
    t.scan_from(far, dist, pe);
    double d = 0.0;
    for (double x : dist) d = std::max(d, x);
    return d;
}

// Finite weighted tree as a geodesic space. Non-owning view; two TreeSpaces
// are the same space only if they wrap the same tree object.
class TreeSpace {
  public:
    using point_type = TreePoint;
    static constexpr bool is_hadamard = true;

    explicit TreeSpace(const WeightedTree& tree) : tree_(&tree) {}

    const WeightedTree& tree() const { return *tree_; }
    bool operator==(const TreeSpace& o) const { return tree_ == o.tree_; }

    double distance(const TreePoint& a, const TreePoint& b) const {
        return tree_distance(*tree_, a, b);
    }
    TreePoint interpolate(const TreePoint& a, const TreePoint& b, double t) const {
        return tree_interpolate(*tree_, a, b, t);
    }
    bool points_equal(const TreePoint& a, const TreePoint& b, double tol) const {
        return distance(a, b) <= tol;
    }
    TreePoint frechet_mean(const std::vector<TreePoint>& pts,
                           const std::vector<double>& weights) const {
        return tree_frechet_mean(*tree_, pts, weights);
    }

  private:
    const WeightedTree* tree_;
};

}  // namespace hadamard
