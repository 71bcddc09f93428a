#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "hadamard/product.hpp"
#include "hadamard/rng.hpp"
#include "hadamard/tolerance.hpp"

namespace hadamard {

struct MeanSe {
    double mean = 0.0;
    double std_error = 0.0;
};

// Monte Carlo mean loss with its standard error and full provenance.
struct RiskEstimate {
    double mean_loss = 0.0;
    double std_error = 0.0;
    std::uint64_t replicates = 0;
    std::uint64_t seed = 0;
    std::string estimator;
    std::size_t n_groups = 0;
    std::string psi_desc;
};

// Deterministic parallel map-reduce: replicate i is a pure function of i, and
// block sums are combined in block order, so results are bitwise identical
// for any worker count. fn(i, out) writes `width` values.
template <class F>
std::vector<MeanSe> parallel_mc(std::uint64_t reps, std::size_t width, int workers,
                                F&& fn) {
    require(reps >= 1, "need at least one replicate");
    require(width >= 1, "need at least one output");
    constexpr std::uint64_t block_size = 256;
    const std::uint64_t n_blocks = (reps + block_size - 1) / block_size;
    std::vector<double> block_sum(n_blocks * width, 0.0);
    std::vector<double> block_sumsq(n_blocks * width, 0.0);

    auto run_block = [&](std::uint64_t b) {
        std::vector<double> out(width);
        double* sums = &block_sum[b * width];
        double* sqs = &block_sumsq[b * width];
        const std::uint64_t hi = std::min(reps, (b + 1) * block_size);
        for (std::uint64_t i = b * block_size; i < hi; ++i) {
            fn(i, out.data());
            for (std::size_t w = 0; w < width; ++w) {
                sums[w] += out[w];
                sqs[w] += out[w] * out[w];
            }
        }
    };

    if (workers <= 1 || n_blocks == 1) {
        for (std::uint64_t b = 0; b < n_blocks; ++b) run_block(b);
    } else {
        std::atomic<std::uint64_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::uint64_t b = next.fetch_add(1);
                if (b >= n_blocks) return;
                run_block(b);
            }
        };
        std::vector<std::thread> pool;
        int count = std::min<int>(workers, static_cast<int>(n_blocks));
        pool.reserve(count);
        for (int w = 0; w < count; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<MeanSe> result(width);
    const double n = static_cast<double>(reps);
    for (std::size_t w = 0; w < width; ++w) {
        double s = 0.0, sq = 0.0;
        for (std::uint64_t b = 0; b < n_blocks; ++b) {
            s += block_sum[b * width + w];
            sq += block_sumsq[b * width + w];
        }
        double mean = s / n;
        double var = reps > 1 ? std::max(0.0, (sq - n * mean * mean) / (n - 1.0)) : 0.0;
        result[w] = {mean, std::sqrt(var / n)};
    }
    return result;
}

// Parallel loop where task i writes only its own slot; deterministic because
// outputs are indexed, not accumulated.
template <class F>
void parallel_for_indexed(std::uint64_t count, int workers, F&& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::uint64_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int n = std::min<int>(workers, static_cast<int>(count));
    pool.reserve(n);
    for (int w = 0; w < n; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

// Frequentist risk E[ d(theta, delta(X))^2 ] at a fixed theta, in the
// 1/n-normalized product metric. The conditional sampler and estimator are
// callables; replicate i draws from its own derived stream.
template <GeodesicSpace S, class CondSampler, class Estimator>
RiskEstimate mc_frequentist_risk(const ProductSpace<S>& spaces,
                                 const typename ProductSpace<S>::point_type& theta,
                                 CondSampler&& cond, Estimator&& est,
                                 std::uint64_t reps, std::uint64_t seed, int workers,
                                 std::string_view tag) {
    require(reps >= 1, "reps must be >= 1");
    auto res = parallel_mc(reps, 1, workers, [&](std::uint64_t i, double* out) {
        RngStream stream = make_stream(seed, tag, i);
        auto X = cond(theta, stream);
        auto delta = est(X);
        double d = spaces.distance(theta, delta);
        out[0] = d * d;
    });
    RiskEstimate r;
    r.mean_loss = res[0].mean;
    r.std_error = res[0].std_error;
    r.replicates = reps;
    r.seed = seed;
    r.n_groups = spaces.size();
    return r;
}

// Bayes risk: theta ~ prior, X | theta ~ conditional, loss averaged over both.
template <GeodesicSpace S, class PriorSampler, class CondSampler, class Estimator>
RiskEstimate mc_bayes_risk(const ProductSpace<S>& spaces, PriorSampler&& prior,
                           CondSampler&& cond, Estimator&& est, std::uint64_t reps,
                           std::uint64_t seed, int workers, std::string_view tag) {
    require(reps >= 1, "reps must be >= 1");
    auto res = parallel_mc(reps, 1, workers, [&](std::uint64_t i, double* out) {
        RngStream stream = make_stream(seed, tag, i);
        auto theta = prior(stream);
        auto X = cond(theta, stream);
        auto delta = est(X);
        double d = spaces.distance(theta, delta);
        out[0] = d * d;
    });
    RiskEstimate r;
    r.mean_loss = res[0].mean;
    r.std_error = res[0].std_error;
    r.replicates = reps;
    r.seed = seed;
    r.n_groups = spaces.size();
    return r;
}

}  // namespace hadamard
