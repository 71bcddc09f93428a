#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "hadamard/circle.hpp"
#include "hadamard/euclidean.hpp"
#include "hadamard/geometry.hpp"
#include "hadamard/monte_carlo.hpp"
#include "hadamard/rng.hpp"
#include "hadamard/samplers.hpp"
#include "hadamard/spd.hpp"
#include "hadamard/tree.hpp"
#include "hadamard/tree_word.hpp"

namespace hadamard {

// Measured deviations for one random (x, y, z, w, s, t) case. Deviations are
// normalized so the pass condition is dev <= 1 or slack >= -1 in tolerance
// units. NaN marks a check not applicable to the space.
struct CaseSlacks {
    double identity_dev = 0.0;   // |d(x,x)| / tol
    double symmetry_dev = 0.0;   // |d(x,y)-d(y,x)| / tol
    double triangle_slack = 0.0; // (d(x,y)+d(y,z)-d(x,z)) / tol
    double endpoint_dev = 0.0;
    double speed_dev = 0.0;
    double reparam_dev = 0.0;
    double cat0_slack = std::nan("");      // raw slack / 1e-9
    double cat0_flat_dev = std::nan("");   // |slack| / 1e-8
    double convexity_slack = std::nan(""); // raw slack / 1e-9
};

template <GeodesicSpace S>
CaseSlacks measure_case(const S& space, const typename S::point_type& x,
                        const typename S::point_type& y,
                        const typename S::point_type& z,
                        const typename S::point_type& w, double s, double t,
                        bool hadamard, bool flat) {
    CaseSlacks out;
    double dxy = space.distance(x, y);
    double dyx = space.distance(y, x);
    double dyz = space.distance(y, z);
    double dxz = space.distance(x, z);
    double rel = 1e-9 * std::max(1.0, std::max(dxy, std::max(dyz, dxz)));

    out.identity_dev = std::abs(space.distance(x, x)) / rel;
    out.symmetry_dev = std::abs(dxy - dyx) / rel;
    out.triangle_slack = (dxy + dyz - dxz) / rel;

    auto g0 = space.interpolate(x, y, 0.0);
    auto g1 = space.interpolate(x, y, 1.0);
    out.endpoint_dev = std::max(space.distance(g0, x), space.distance(g1, y)) / rel;

    auto gs = space.interpolate(x, y, s);
    auto gt = space.interpolate(x, y, t);
    out.speed_dev = std::abs(space.distance(gs, gt) - std::abs(t - s) * dxy) / rel;

    auto direct = space.interpolate(x, y, s * t);
    auto nested = space.interpolate(x, gt, s);
    out.reparam_dev = space.distance(direct, nested) / rel;

    if (hadamard) {
        double slack = cat0_slack(space, x, y, z, t);
        out.cat0_slack = slack / 1e-9;
        if (flat) out.cat0_flat_dev = std::abs(slack) / 1e-8;
        out.convexity_slack = pair_convexity_slack(space, x, y, w, z, t) / 1e-9;
    }
    return out;
}

struct InvariantResult {
    std::string space;
    std::string invariant;
    std::uint64_t cases = 0;
    std::uint64_t violations = 0;
    double worst = 0.0;  // most negative slack / largest deviation, in tol units

    bool passed() const { return violations == 0; }
};

struct ValidationReport {
    std::vector<InvariantResult> results;

    bool all_passed() const {
        for (const auto& r : results)
            if (!r.passed()) return false;
        return true;
    }

    void print(std::ostream& os) const {
        for (const auto& r : results) {
            os << (r.passed() ? "PASS" : "FAIL") << "  " << r.space << "."
               << r.invariant << "  cases=" << r.cases
               << " violations=" << r.violations << " worst=" << r.worst << "\n";
        }
    }
};

namespace detail {

struct SlackAgg {
    std::uint64_t violations = 0;
    double worst = 0.0;

    // slack form: pass when value >= -1
    void add_slack(double v) {
        if (std::isnan(v)) return;
        worst = std::min(worst, v);
        if (v < -1.0) ++violations;
    }
    // deviation form: pass when value <= 1
    void add_dev(double v) {
        if (std::isnan(v)) return;
        worst = std::max(worst, v);
        if (v > 1.0) ++violations;
    }
};

}  // namespace detail

// Runs `cases` random cases and appends one InvariantResult per invariant.
// gen(stream, s, t) must return the measured slacks for a fresh case.
template <class G>
void run_property_suite(ValidationReport& report, const std::string& space_name,
                        std::uint64_t cases, std::uint64_t seed, int workers,
                        bool hadamard, bool flat, G&& gen) {
    constexpr std::uint64_t block = 1024;
    const std::uint64_t n_blocks = (cases + block - 1) / block;
    struct BlockAgg {
        detail::SlackAgg identity, symmetry, triangle, endpoint, speed, reparam;
        detail::SlackAgg cat0, cat0_flat, convexity;
    };
    std::vector<BlockAgg> aggs(n_blocks);
    parallel_for_indexed(n_blocks, workers, [&](std::uint64_t b) {
        BlockAgg& a = aggs[b];
        const std::uint64_t hi = std::min(cases, (b + 1) * block);
        for (std::uint64_t i = b * block; i < hi; ++i) {
            RngStream s = make_stream(seed, space_name, i);
            double u = 0.02 + 0.96 * s.next_double();
            double v = 0.02 + 0.96 * s.next_double();
            CaseSlacks cs = gen(s, u, v);
            a.identity.add_dev(cs.identity_dev);
            a.symmetry.add_dev(cs.symmetry_dev);
            a.triangle.add_slack(cs.triangle_slack);
            a.endpoint.add_dev(cs.endpoint_dev);
            a.speed.add_dev(cs.speed_dev);
            a.reparam.add_dev(cs.reparam_dev);
            a.cat0.add_slack(cs.cat0_slack);
            a.cat0_flat.add_dev(cs.cat0_flat_dev);
            a.convexity.add_slack(cs.convexity_slack);
        }
    });
    auto emit = [&](const char* name, bool is_slack, bool enabled,
                    auto member) {
        if (!enabled) return;
        InvariantResult r;
        r.space = space_name;
        r.invariant = name;
        r.cases = cases;
        for (const BlockAgg& a : aggs) {
            const detail::SlackAgg& sa = a.*member;
            r.violations += sa.violations;
            r.worst = is_slack ? std::min(r.worst, sa.worst) : std::max(r.worst, sa.worst);
        }
        report.results.push_back(std::move(r));
    };
    emit("metric.identity", false, true, &BlockAgg::identity);
    emit("metric.symmetry", false, true, &BlockAgg::symmetry);
    emit("metric.triangle", true, true, &BlockAgg::triangle);
    emit("geodesic.endpoints", false, true, &BlockAgg::endpoint);
    emit("geodesic.speed", false, true, &BlockAgg::speed);
    emit("geodesic.reparameterization", false, true, &BlockAgg::reparam);
    emit("cat0.slack", true, hadamard, &BlockAgg::cat0);
    emit("cat0.flat_equality", false, hadamard && flat, &BlockAgg::cat0_flat);
    emit("geodesic.pair_convexity", true, hadamard, &BlockAgg::convexity);
}

// ---- ready-made suites per space ----

inline void validate_euclidean(ValidationReport& report, std::uint64_t cases,
                               std::uint64_t seed, int workers) {
    EuclideanSpace space(3);
    run_property_suite(
        report, "euclidean", cases, seed, workers, true, true,
        [&](RngStream& s, double u, double v) {
            auto pt = [&] {
                EuclideanPoint p(3);
                for (double& c : p) c = 3.0 * s.next_gaussian();
                return p;
            };
            return measure_case(space, pt(), pt(), pt(), pt(), u, v, true, true);
        });
}

inline void validate_spd(ValidationReport& report, std::uint64_t cases,
                         std::uint64_t seed, int workers) {
    SpdSpace space(3);
    SpdPoint eye = SpdPoint::identity(3);
    run_property_suite(
        report, "spd", cases, seed, workers, true, true,
        [&](RngStream& s, double u, double v) {
            auto pt = [&] {
                Mat w = sample_wishart_matrix(cholesky_lower(eye.matrix()), 5, s);
                w *= 1.0 / 5.0;
                return SpdPoint::from_matrix(w);
            };
            return measure_case(space, pt(), pt(), pt(), pt(), u, v, true, true);
        });
}

inline void validate_tree(ValidationReport& report, std::uint64_t cases,
                          std::uint64_t seed, int workers) {
    run_property_suite(
        report, "tree", cases, seed, workers, true, false,
        [&](RngStream& s, double u, double v) {
            int m = 2 + static_cast<int>(s.next_below(24));
            std::vector<TreeEdge> edges;
            for (int vtx = 1; vtx < m; ++vtx)
                edges.push_back(
                    {static_cast<int>(s.next_below(static_cast<std::uint32_t>(vtx))),
                     vtx, 0.1 + 2.9 * s.next_double()});
            WeightedTree tree(m, std::move(edges));
            TreeSpace space(tree);
            auto pt = [&] {
                if (tree.edge_count() == 0 || s.next_below(3) == 0)
                    return TreePoint::at_vertex(static_cast<int>(
                        s.next_below(static_cast<std::uint32_t>(tree.vertex_count()))));
                int e = static_cast<int>(
                    s.next_below(static_cast<std::uint32_t>(tree.edge_count())));
                return tree.make_point(e, (0.02 + 0.96 * s.next_double()) *
                                              tree.edge(e).weight);
            };
            return measure_case(space, pt(), pt(), pt(), pt(), u, v, true, false);
        });
}

// Infinite 3-regular tree probed through spanning subtrees of random walks.
inline void validate_tree_words(ValidationReport& report, std::uint64_t cases,
                                std::uint64_t seed, int workers) {
    run_property_suite(
        report, "tree3", cases, seed, workers, true, false,
        [&](RngStream& s, double u, double v) {
            std::vector<TreeWord> words;
            for (int i = 0; i < 4; ++i)
                words.push_back(tree_walk_3regular(
                    TreeWord::origin(), 2 + static_cast<int>(s.next_below(10)),
                    WalkLaw::UniformMove, s));
            SpannedSubtree span = materialize_spanning_subtree(words);
            TreeSpace space(span.tree);
            return measure_case(space, span.point_of(0), span.point_of(1),
                                span.point_of(2), span.point_of(3), u, v, true,
                                false);
        });
}

inline void validate_circle(ValidationReport& report, std::uint64_t cases,
                            std::uint64_t seed, int workers) {
    CircleSpace space;
    run_property_suite(
        report, "circle", cases, seed, workers, false, false,
        [&](RngStream& s, double u, double v) {
            auto pt = [&] {
                return CirclePoint::from_angle(2.0 * CircleSpace::pi * s.next_double());
            };
            return measure_case(space, pt(), pt(), pt(), pt(), u, v, false, false);
        });
}

// Worker-count independence of the deterministic reducer.
inline void validate_determinism(ValidationReport& report, std::uint64_t seed) {
    auto run = [&](int workers) {
        return parallel_mc(5000, 1, workers, [&](std::uint64_t i, double* out) {
            RngStream s = make_stream(seed, "det-check", i);
            out[0] = s.next_gaussian() + s.next_double();
        });
    };
    auto a = run(1), b = run(4), c = run(8);
    InvariantResult r;
    r.space = "harness";
    r.invariant = "determinism.worker_count";
    r.cases = 3;
    bool same = a[0].mean == b[0].mean && b[0].mean == c[0].mean &&
                a[0].std_error == b[0].std_error && b[0].std_error == c[0].std_error;
    r.violations = same ? 0 : 1;
    report.results.push_back(std::move(r));
}

// Appendix-style exact-mean vs grid-oracle agreement on fuzzed trees.
inline void validate_tree_mean_oracle(ValidationReport& report, std::uint64_t trees,
                                      std::uint64_t seed, int workers) {
    struct Out {
        int value_bad = 0;
        int argmin_bad = 0;
        int visit_bad = 0;
    };
    std::vector<Out> outs(trees);
    parallel_for_indexed(trees, workers, [&](std::uint64_t i) {
        RngStream s = make_stream(seed, "tree-oracle", i);
        int m = 2 + static_cast<int>(s.next_below(29));
        std::vector<TreeEdge> edges;
        for (int vtx = 1; vtx < m; ++vtx)
            edges.push_back(
                {static_cast<int>(s.next_below(static_cast<std::uint32_t>(vtx))), vtx,
                 0.1 + 2.9 * s.next_double()});
        WeightedTree tree(m, std::move(edges));
        TreeSpace space(tree);
        int n = 1 + static_cast<int>(s.next_below(10));
        std::vector<TreePoint> pts;
        for (int j = 0; j < n; ++j) {
            if (tree.edge_count() == 0 || s.next_below(3) == 0)
                pts.push_back(TreePoint::at_vertex(static_cast<int>(
                    s.next_below(static_cast<std::uint32_t>(tree.vertex_count())))));
            else {
                int e = static_cast<int>(
                    s.next_below(static_cast<std::uint32_t>(tree.edge_count())));
                pts.push_back(tree.make_point(
                    e, (0.02 + 0.96 * s.next_double()) * tree.edge(e).weight));
            }
        }
        std::vector<double> wts(pts.size(), 1.0);
        auto res = tree_frechet_mean_traced(tree, pts, wts);
        double step = 1e-3 * tree.min_edge_weight();
        WeightedDataset<TreePoint> data(pts, wts);
        auto [gp, gval] =
            brute_force_frechet_mean(space, data, tree_grid_candidates(tree, step));
        double fval = frechet_functional(space, data, res.point);
        if (!(fval <= gval + 1e-4)) outs[i].value_bad = 1;
        if (!(space.distance(res.point, gp) <= step + 1e-9)) outs[i].argmin_bad = 1;
        if (!(res.vertex_visits <= tree.vertex_count())) outs[i].visit_bad = 1;
    });
    auto emit = [&](const char* name, int Out::*field) {
        InvariantResult r;
        r.space = "tree";
        r.invariant = name;
        r.cases = trees;
        for (const Out& o : outs) r.violations += static_cast<std::uint64_t>(o.*field);
        report.results.push_back(std::move(r));
    };
    emit("mean.value_vs_grid_oracle", &Out::value_bad);
    emit("mean.argmin_within_grid_step", &Out::argmin_bad);
    emit("mean.visits_within_vertex_count", &Out::visit_bad);
}

}  // namespace hadamard
