#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "hadamard/circle.hpp"
#include "hadamard/io.hpp"
#include "hadamard/monte_carlo.hpp"
#include "hadamard/samplers.hpp"
#include "hadamard/shrinkage.hpp"
#include "hadamard/spd.hpp"
#include "hadamard/tree.hpp"
#include "hadamard/tree_word.hpp"

namespace hadamard {

inline int default_workers() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

inline const char* walk_law_name(WalkLaw law) {
    return law == WalkLaw::Lazy ? "lazy" : "uniform";
}

// ---------------------------------------------------------------------------
// Metric-tree two-group experiment: the risk-ratio table over shrinkage
// points at fixed word distances, the adaptive two-point mean, and the
// fixed-weight oracle toward the prior mean.
// ---------------------------------------------------------------------------

struct Table1Spec {
    std::vector<int> k_sigma_list{1, 5, 10, 15, 20, 25, 30};
    int k_tau = 15;
    std::vector<int> psi_distances{0, 1, 4, 8, 16, 32};
    bool include_xbar = true;
    bool include_oracle = true;
    WalkLaw law = WalkLaw::UniformMove;
    std::uint64_t reps = 20000;
    std::uint64_t seed = 1;
    int workers = default_workers();
};

struct Table1Cell {
    int k_sigma = 0;
    std::string column;     // "d=0", ..., "xbar", "oracle"
    double ratio = 0.0;     // E[loss] / sigma^2
    double std_error = 0.0; // of the ratio
    double sigma2 = 0.0;
    std::uint64_t replicates = 0;
};

inline std::vector<Table1Cell> run_table1(const Table1Spec& spec) {
    require(spec.k_tau >= 0 && spec.reps >= 1, "bad table spec");
    std::vector<Table1Cell> cells;
    const int n_groups = 2;

    for (int k_sigma : spec.k_sigma_list) {
        const double sigma2 =
            walk_distance_distribution(k_sigma, spec.law).second_moment();
        const double tau2 = walk_distance_distribution(spec.k_tau, spec.law).second_moment();
        const double rho_x2 =
            walk_distance_distribution(spec.k_tau + k_sigma, spec.law).second_moment();
        const double oracle_t = oracle_weight(sigma2, rho_x2, tau2).value;

        std::size_t width = spec.psi_distances.size() + (spec.include_xbar ? 1 : 0) +
                            (spec.include_oracle ? 1 : 0);
        require(width >= 1, "table spec selects no columns");
        const std::vector<double> sig_groups(n_groups, sigma2);

        auto res = parallel_mc(spec.reps, width, spec.workers, [&](std::uint64_t i,
                                                                   double* out) {
            // per-group walk streams: (tag, row, group, replicate)
            TreeWord theta[2], X[2];
            for (int g = 0; g < n_groups; ++g) {
                RngStream st = make_stream(spec.seed, "table1", k_sigma, g, i);
                theta[g] = tree_walk_3regular(TreeWord::origin(), spec.k_tau, spec.law, st);
                X[g] = tree_walk_3regular(theta[g], k_sigma, spec.law, st);
            }
            // span every word the estimators touch (origin always included)
            std::vector<TreeWord> words{X[0], X[1], theta[0], theta[1]};
            const std::size_t psi_base = words.size();
            for (int d : spec.psi_distances) words.push_back(word_ray(d));
            SpannedSubtree span = materialize_spanning_subtree(words);
            TreeSpace ts(span.tree);
            ProductSpace<TreeSpace> p2(n_groups, ts);
            std::vector<TreePoint> Xp{span.point_of(0), span.point_of(1)};
            std::vector<TreePoint> theta_p{span.point_of(2), span.point_of(3)};
            TreePoint mu = TreePoint::at_vertex(0);  // origin interns first
            using Spec = ShrinkageSpec<TreePoint>;

            std::size_t w = 0;
            auto loss_of = [&](const std::vector<TreePoint>& delta) {
                double d = p2.distance(theta_p, delta);
                return d * d;
            };
            for (std::size_t c = 0; c < spec.psi_distances.size(); ++c, ++w) {
                TreePoint psi = span.point_of(psi_base + c);
                auto est = geodesic_js(p2, Xp, Spec::fixed({psi}, sig_groups));
                double loss = loss_of(est.points);
                // per-replicate loss audit against the (a)+(b)+(c) bound
                double dxt = p2.distance(Xp, theta_p);
                double dtp = p2.distance(theta_p, est.resolved_psi);
                require(loss <= js_loss_certificate(est.weight_applied, dxt * dxt,
                                                    est.sigma2, dtp * dtp) +
                                    1e-9,
                        "loss certificate violated");
                out[w] = loss;
            }
            if (spec.include_xbar) {
                auto est = geodesic_js(p2, Xp, Spec::adaptive(sig_groups));
                double loss = loss_of(est.points);
                double dxt = p2.distance(Xp, theta_p);
                double dtp = p2.distance(theta_p, est.resolved_psi);
                require(loss <= js_loss_certificate(est.weight_applied, dxt * dxt,
                                                    est.sigma2, dtp * dtp) +
                                    1e-9,
                        "loss certificate violated");
                out[w++] = loss;
            }
            if (spec.include_oracle) {
                auto est = geodesic_js(p2, Xp, Spec::oracle_mu(mu, oracle_t));
                double loss = loss_of(est.points);
                double dxt = p2.distance(Xp, theta_p);
                double dtp = p2.distance(theta_p, est.resolved_psi);
                double dxp = p2.distance(Xp, est.resolved_psi);
                require(loss <= cat0_loss_bound(est.weight_applied, dxt * dxt,
                                                dtp * dtp, dxp * dxp) +
                                    1e-9,
                        "CAT(0) loss bound violated");
                out[w++] = loss;
            }
        });

        std::size_t w = 0;
        auto push = [&](const std::string& col) {
            cells.push_back({k_sigma, col, res[w].mean / sigma2,
                             res[w].std_error / sigma2, sigma2, spec.reps});
            ++w;
        };
        for (int d : spec.psi_distances) push("d=" + std::to_string(d));
        if (spec.include_xbar) push("xbar");
        if (spec.include_oracle) push("oracle");
    }
    return cells;
}

inline std::vector<CsvRow> table1_csv_rows(const Table1Spec& spec,
                                           const std::vector<Table1Cell>& cells) {
    std::vector<CsvRow> rows;
    for (const auto& c : cells) {
        CsvRow r;
        r.experiment = "table1";
        r.n = 2;
        r.alpha_or_ksigma = std::to_string(c.k_sigma);
        r.shrink_point = c.column;
        r.estimator = c.column == "oracle" ? "oracle_fixed_weight" : "geodesic_js";
        r.mean_loss = c.ratio;
        r.std_error = c.std_error;
        r.replicates = c.replicates;
        r.seed = spec.seed;
        rows.push_back(std::move(r));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Wishart / log-Euclidean experiments.
// Hierarchical model: k Psi_i ~ Wishart_k(I, k) iid,
//                    (k+alpha) X_i | Psi_i ~ Wishart_k(Psi_i, k+alpha).
// theta_i = exp(E[log X_i | Psi_i]) has no closed form; the MC oracle
// estimates it per draw.
// ---------------------------------------------------------------------------

struct SpdModelConstants {
    double sigma2_bar = 0.0;  // E_Psi V2(X|Psi), the weight's "known" variance
    Mat mu_log;               // log of E2 theta
    double rho_x_mu2 = 0.0;   // E d(X, mu)^2
    double rho_theta_mu2 = 0.0;  // E d(theta, mu)^2
    double best_t = 0.0;         // oracle weight from the moments above
    int psi_draws = 0;
    int oracle_reps = 0;
};

namespace detail {

inline Mat log_of_scaled_wishart(const Mat& chol, int df, RngStream& s) {
    Mat w = sample_wishart_matrix(chol, df, s);
    w *= 1.0 / static_cast<double>(df);
    return SpdPoint::from_matrix(w).log();
}

inline double frob_sq(const Mat& m) {
    double v = 0.0;
    for (double x : m.a) v += x * x;
    return v;
}

}  // namespace detail

// One pass over prior draws estimating the model-level constants.
inline SpdModelConstants spd_model_constants(int k, int alpha, int psi_draws,
                                             int oracle_reps, std::uint64_t seed,
                                             int workers) {
    require(psi_draws >= 2 && oracle_reps >= 2, "bad constants spec");
    const int df = k + alpha;
    const Mat eye_chol = cholesky_lower(Mat::identity(k));

    struct Acc {
        Mat sum_log_theta;
        double sum_sigma2 = 0.0;
        double sum_theta_sq = 0.0;
        Mat sum_log_x;
        double sum_x_sq = 0.0;
    };
    std::vector<Acc> accs(static_cast<std::size_t>(psi_draws),
                          Acc{Mat(k), 0.0, 0.0, Mat(k), 0.0});
    parallel_for_indexed(psi_draws, workers, [&](std::uint64_t d) {
        RngStream sp = make_stream(seed, "spd-const/psi", alpha, d);
        Mat psi_m = sample_wishart_matrix(eye_chol, k, sp);
        psi_m *= 1.0 / static_cast<double>(k);
        SpdPoint psi = SpdPoint::from_matrix(psi_m);
        Mat chol = cholesky_lower(psi.matrix());
        RngStream sx = make_stream(seed, "spd-const/x", alpha, d);
        Acc& a = accs[d];
        Mat acc_log(k);
        double acc_sq = 0.0;
        for (int r = 0; r < oracle_reps; ++r) {
            Mat lx = detail::log_of_scaled_wishart(chol, df, sx);
            acc_log += lx;
            acc_sq += detail::frob_sq(lx);
        }
        Mat log_theta = acc_log;
        log_theta *= 1.0 / oracle_reps;
        double mean_sq = acc_sq / oracle_reps;
        double sig = (mean_sq - detail::frob_sq(log_theta)) * oracle_reps /
                     (oracle_reps - 1.0);
        a.sum_log_theta = log_theta;
        a.sum_sigma2 = sig;
        a.sum_theta_sq = detail::frob_sq(log_theta);
        a.sum_log_x = acc_log;
        a.sum_x_sq = acc_sq;
    });

    Mat mu_log(k), sum_log_x(k);
    double sigma2_bar = 0.0, theta_sq = 0.0, x_sq = 0.0;
    double total_x = static_cast<double>(psi_draws) * oracle_reps;
    for (const Acc& a : accs) {
        mu_log += a.sum_log_theta;
        sigma2_bar += a.sum_sigma2;
        theta_sq += a.sum_theta_sq;
        sum_log_x += a.sum_log_x;
        x_sq += a.sum_x_sq;
    }
    mu_log *= 1.0 / psi_draws;
    sigma2_bar /= psi_draws;
    theta_sq /= psi_draws;
    sum_log_x *= 1.0 / total_x;
    x_sq /= total_x;

    SpdModelConstants out;
    out.sigma2_bar = sigma2_bar;
    out.mu_log = mu_log;
    out.rho_theta_mu2 = theta_sq - detail::frob_sq(mu_log);
    double cross = 0.0;
    for (std::size_t i = 0; i < mu_log.a.size(); ++i)
        cross += sum_log_x.a[i] * mu_log.a[i];
    out.rho_x_mu2 = x_sq - 2.0 * cross + detail::frob_sq(mu_log);
    out.best_t = oracle_weight(sigma2_bar, out.rho_x_mu2, out.rho_theta_mu2).value;
    out.psi_draws = psi_draws;
    out.oracle_reps = oracle_reps;
    return out;
}

struct SpdBayesSpec {
    int k = 3;
    std::vector<int> alphas{0, 2, 8};
    std::vector<int> n_list{1, 2, 3, 5, 7, 10, 15, 20, 30, 50};
    std::vector<double> psi_scalars{0.1, 1.0, 10.0, 100.0};
    bool include_xbar = true;
    bool include_mu = true;
    bool include_best = true;  // fixed optimal weight toward mu
    std::uint64_t outer = 400;
    std::uint64_t inner = 50;
    int oracle_reps = 1500;       // per-Psi_i conditional-moment draws
    int const_psi_draws = 400;    // model-constants pass
    int const_oracle_reps = 1500;
    std::uint64_t seed = 1;
    int workers = default_workers();
};

struct SpdBayesRow {
    int alpha = 0;
    int n = 0;
    std::string estimator;  // "x", "psi=0.1I", ..., "xbar", "mu", "best"
    double mean_loss = 0.0;
    double std_error = 0.0;
    std::uint64_t replicates = 0;  // outer count (losses are inner-averaged)
};

inline std::vector<SpdBayesRow> run_spd_bayes(const SpdBayesSpec& spec) {
    std::vector<SpdBayesRow> rows;
    const int k = spec.k;
    const Mat eye_chol = cholesky_lower(Mat::identity(k));

    for (int alpha : spec.alphas) {
        SpdModelConstants mc = spd_model_constants(
            k, alpha, spec.const_psi_draws, spec.const_oracle_reps, spec.seed,
            spec.workers);
        const int df = k + alpha;

        std::vector<std::string> names{"x"};
        std::vector<Mat> fixed_logs;  // per psi scalar
        for (double c : spec.psi_scalars) {
            Mat lg = Mat::identity(k);
            lg *= std::log(c);
            fixed_logs.push_back(lg);
            names.push_back("psi=" + format_double(c) + "I");
        }
        if (spec.include_xbar) names.push_back("xbar");
        if (spec.include_mu) names.push_back("mu");
        if (spec.include_best) names.push_back("best");

        for (int n : spec.n_list) {
            const std::size_t width = names.size();
            const double sigma2_sum = mc.sigma2_bar * n;
            auto res = parallel_mc(
                spec.outer, width, spec.workers, [&](std::uint64_t o, double* out) {
                    // prior draw and conditional moments for this outer replicate
                    std::vector<Mat> chols, log_thetas;
                    chols.reserve(n);
                    log_thetas.reserve(n);
                    for (int i = 0; i < n; ++i) {
                        RngStream sp = make_stream(spec.seed, "spd-bayes/psi", alpha,
                                                   (o << 8) + i, n);
                        Mat pm = sample_wishart_matrix(eye_chol, k, sp);
                        pm *= 1.0 / k;
                        Mat chol = cholesky_lower(pm);
                        RngStream so = make_stream(spec.seed, "spd-bayes/oracle", alpha,
                                                   (o << 8) + i, n);
                        Mat acc(k);
                        for (int r = 0; r < spec.oracle_reps; ++r)
                            acc += detail::log_of_scaled_wishart(chol, df, so);
                        acc *= 1.0 / spec.oracle_reps;
                        log_thetas.push_back(std::move(acc));
                        chols.push_back(std::move(chol));
                    }
                    std::vector<double> acc_loss(width, 0.0);
                    std::vector<Mat> lX(n, Mat(k));
                    for (std::uint64_t j = 0; j < spec.inner; ++j) {
                        RngStream sx = make_stream(spec.seed, "spd-bayes/x", alpha,
                                                   (o << 16) + j, n);
                        Mat lbar(k);
                        for (int i = 0; i < n; ++i) {
                            lX[i] = detail::log_of_scaled_wishart(chols[i], df, sx);
                            lbar += lX[i];
                        }
                        lbar *= 1.0 / n;
                        std::size_t w = 0;
                        auto add_estimator = [&](const Mat& psi_log, bool fixed_w,
                                                 double tfix) {
                            double d2 = 0.0;
                            for (int i = 0; i < n; ++i)
                                d2 += detail::frob_sq(lX[i] - psi_log);
                            double t = fixed_w ? tfix : js_weight(sigma2_sum, d2);
                            double loss = 0.0;
                            for (int i = 0; i < n; ++i) {
                                Mat delta = lX[i];
                                delta *= (1.0 - t);
                                Mat p = psi_log;
                                p *= t;
                                delta += p;
                                loss += detail::frob_sq(delta - log_thetas[i]);
                            }
                            acc_loss[w++] += loss / n;
                        };
                        // identity estimator
                        {
                            double loss = 0.0;
                            for (int i = 0; i < n; ++i)
                                loss += detail::frob_sq(lX[i] - log_thetas[i]);
                            acc_loss[w++] += loss / n;
                        }
                        for (const Mat& fl : fixed_logs) add_estimator(fl, false, 0.0);
                        if (spec.include_xbar) add_estimator(lbar, false, 0.0);
                        if (spec.include_mu) add_estimator(mc.mu_log, false, 0.0);
                        if (spec.include_best) add_estimator(mc.mu_log, true, mc.best_t);
                    }
                    for (std::size_t w = 0; w < width; ++w)
                        out[w] = acc_loss[w] / static_cast<double>(spec.inner);
                });
            for (std::size_t w = 0; w < width; ++w)
                rows.push_back({alpha, n, names[w], res[w].mean, res[w].std_error,
                                spec.outer});
        }
    }
    return rows;
}

struct SpdFreqSpec {
    int k = 3;
    std::vector<int> n_list{2, 5, 8, 10, 15, 20, 25, 30, 40, 50};
    std::vector<double> psi_scalars{10.0, 100.0};
    bool include_xbar = true;
    int psi_draws = 100;
    std::uint64_t inner = 600;
    int oracle_reps = 1200;
    std::uint64_t seed = 1;
    int workers = default_workers();
};

struct SpdFreqRow {
    int n = 0;
    std::string shrink_point;
    double proportion = 0.0;  // of Psi draws where delta_JS beats X
    int dominating = 0;
    int psi_draws = 0;
};

inline std::vector<SpdFreqRow> run_spd_freq(const SpdFreqSpec& spec) {
    std::vector<SpdFreqRow> rows;
    const int k = spec.k;
    const int df = k;  // X_i = W_i / k with W_i ~ Wishart(Psi_i, k)
    const Mat eye_chol = cholesky_lower(Mat::identity(k));

    std::vector<std::string> names;
    for (double c : spec.psi_scalars) names.push_back("psi=" + format_double(c) + "I");
    if (spec.include_xbar) names.push_back("xbar");
    const std::size_t width = names.size();

    for (int n : spec.n_list) {
        // wins[d * width + w] = 1 when the estimator beats X at Psi draw d
        std::vector<int> wins(spec.psi_draws * width, 0);
        parallel_for_indexed(spec.psi_draws, spec.workers, [&](std::uint64_t d) {
            std::vector<Mat> chols, log_thetas;
            double sigma2_sum = 0.0;
            for (int i = 0; i < n; ++i) {
                RngStream sp = make_stream(spec.seed, "spd-freq/psi", d, i, n);
                Mat pm = sample_wishart_matrix(eye_chol, k, sp);
                pm *= 1.0 / k;
                Mat chol = cholesky_lower(pm);
                RngStream so = make_stream(spec.seed, "spd-freq/oracle", d, i, n);
                Mat acc(k);
                double acc_sq = 0.0;
                for (int r = 0; r < spec.oracle_reps; ++r) {
                    Mat lx = detail::log_of_scaled_wishart(chol, df, so);
                    acc += lx;
                    acc_sq += detail::frob_sq(lx);
                }
                acc *= 1.0 / spec.oracle_reps;
                double sig = (acc_sq / spec.oracle_reps - detail::frob_sq(acc)) *
                             spec.oracle_reps / (spec.oracle_reps - 1.0);
                sigma2_sum += sig;
                log_thetas.push_back(std::move(acc));
                chols.push_back(std::move(chol));
            }
            std::vector<double> diff(width, 0.0);  // sum of (loss_js - loss_x)
            std::vector<Mat> lX(n, Mat(k));
            for (std::uint64_t j = 0; j < spec.inner; ++j) {
                RngStream sx = make_stream(spec.seed, "spd-freq/x", d, j, n);
                Mat lbar(k);
                for (int i = 0; i < n; ++i) {
                    lX[i] = detail::log_of_scaled_wishart(chols[i], df, sx);
                    lbar += lX[i];
                }
                lbar *= 1.0 / n;
                double loss_x = 0.0;
                for (int i = 0; i < n; ++i)
                    loss_x += detail::frob_sq(lX[i] - log_thetas[i]);
                std::size_t w = 0;
                auto eval = [&](const Mat& psi_log) {
                    double d2 = 0.0;
                    for (int i = 0; i < n; ++i) d2 += detail::frob_sq(lX[i] - psi_log);
                    double t = js_weight(sigma2_sum, d2);
                    double loss = 0.0;
                    for (int i = 0; i < n; ++i) {
                        Mat delta = lX[i];
                        delta *= (1.0 - t);
                        Mat p = psi_log;
                        p *= t;
                        delta += p;
                        loss += detail::frob_sq(delta - log_thetas[i]);
                    }
                    diff[w++] += loss - loss_x;
                };
                for (double c : spec.psi_scalars) {
                    Mat lg = Mat::identity(k);
                    lg *= std::log(c);
                    eval(lg);
                }
                if (spec.include_xbar) eval(lbar);
            }
            for (std::size_t w = 0; w < width; ++w)
                wins[d * width + w] = diff[w] < 0.0 ? 1 : 0;
        });
        for (std::size_t w = 0; w < width; ++w) {
            int dominating = 0;
            for (int d = 0; d < spec.psi_draws; ++d) dominating += wins[d * width + w];
            rows.push_back({n, names[w],
                            static_cast<double>(dominating) / spec.psi_draws,
                            dominating, spec.psi_draws});
        }
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Counterexample demos.
// ---------------------------------------------------------------------------

struct TripodReport {
    double d_ab = 0.0;
    double d_ac = 0.0;
    bool mean_is_center = false;
    double conditional_mean_offset = 0.0;  // from center toward B
    double tower_gap = 0.0;
    std::string note;
};

// Tripod with arms 1 (A), 2 (B), 1 (C): the tower rule fails. X uniform on
// {A,B,C}; Y indicates X=B. E2(X|Y) is {center w.p. 2/3, B w.p. 1/3}, whose
// mean sits strictly between the mean of X (the center) and B.
inline TripodReport demo_tripod() {
    WeightedTree t(4, {{0, 1, 1.0}, {0, 2, 2.0}, {0, 3, 1.0}});
    TreeSpace ts(t);
    TreePoint A = TreePoint::at_vertex(1), B = TreePoint::at_vertex(2),
              C = TreePoint::at_vertex(3), center = TreePoint::at_vertex(0);
    TripodReport r;
    r.d_ab = tree_distance(t, A, B);
    r.d_ac = tree_distance(t, A, C);
    TreePoint mean = tree_frechet_mean(t, {A, B, C});
    r.mean_is_center = mean.is_vertex() && mean.vertex == 0;
    TreePoint cond = tree_frechet_mean(t, {center, B}, {2.0 / 3.0, 1.0 / 3.0});
    r.conditional_mean_offset = tree_distance(t, cond, center);
    r.tower_gap = tree_distance(t, mean, cond);
    r.note =
        "direct minimization places the conditional-law mean 2/3 toward B, not on "
        "the C arm; the tower rule fails with gap 2/3";
    return r;
}

struct CircleRiskPoint {
    double t = 0.0;
    double risk = 0.0;
    double std_error = 0.0;
};

struct CircleDemoResult {
    std::vector<CircleRiskPoint> antipodal;  // psi at angle pi
    std::vector<CircleRiskPoint> at_mean;    // psi at angle 0
    std::uint64_t replicates = 0;
    std::uint64_t seed = 0;
};

// X at angle Unif[-pi/2, pi/2], true mean (1,0). Shrinking toward the
// antipode inflates risk for every t > 0; shrinking toward the mean helps.
inline CircleDemoResult demo_circle(const std::vector<double>& t_grid,
                                    std::uint64_t reps, std::uint64_t seed,
                                    int workers = default_workers()) {
    CircleSpace circle;
    CirclePoint mean = CirclePoint::from_angle(0.0);
    CirclePoint antipode = CirclePoint::from_angle(CircleSpace::pi);
    CircleDemoResult out;
    out.replicates = reps;
    out.seed = seed;

    std::size_t width = 2 * t_grid.size();
    auto res = parallel_mc(reps, width, workers, [&](std::uint64_t i, double* o) {
        RngStream s = make_stream(seed, "circle", i);
        double angle = (s.next_double() - 0.5) * CircleSpace::pi;
        CirclePoint X = CirclePoint::from_angle(angle);
        for (std::size_t g = 0; g < t_grid.size(); ++g) {
            double d1 = circle.distance(circle.interpolate(X, antipode, t_grid[g]), mean);
            double d2 = circle.distance(circle.interpolate(X, mean, t_grid[g]), mean);
            o[2 * g] = d1 * d1;
            o[2 * g + 1] = d2 * d2;
        }
    });
    for (std::size_t g = 0; g < t_grid.size(); ++g) {
        out.antipodal.push_back({t_grid[g], res[2 * g].mean, res[2 * g].std_error});
        out.at_mean.push_back({t_grid[g], res[2 * g + 1].mean, res[2 * g + 1].std_error});
    }
    return out;
}

}  // namespace hadamard
