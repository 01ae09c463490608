// Shared synthetic fixtures for tests: small encoders, linear models over
// one-hot bucket features, and start examples.
#pragma once

#include <memory>
#include <random>
#include <vector>

#include "graphevade/classifiers.hpp"
#include "graphevade/encoder.hpp"
#include "graphevade/graphs.hpp"
#include "graphevade/heuristics.hpp"

namespace gevtest {

using namespace graphevade;

// Encoder with `n_features` numeric features of `n_buckets` buckets each
// (boundaries 1, 2, ..., n_buckets-1) and `n_apps` apps.
inline std::shared_ptr<const FeatureEncoder> make_test_encoder(int n_features, int n_buckets,
                                                               int n_apps = 0) {
    auto enc = std::make_shared<FeatureEncoder>();
    enc->requested_buckets = n_buckets;
    for (int i = 0; i < n_features; ++i) {
        FeatureEncoder::NumericFeature f;
        f.name = "f" + std::to_string(i);
        for (int b = 1; b < n_buckets; ++b) f.boundaries.push_back(static_cast<double>(b));
        enc->numeric.push_back(std::move(f));
    }
    for (int a = 0; a < n_apps; ++a) enc->apps.push_back("app" + std::to_string(a));
    return enc;
}

inline LinearModel random_linear_over(const FeatureEncoder& enc, std::mt19937_64& rng,
                                      double weight_scale = 1.0) {
    std::uniform_real_distribution<double> u(-weight_scale, weight_scale);
    LinearModel m;
    m.feature_names = enc.one_hot_names();
    m.weights.resize(enc.one_hot_width());
    for (auto& w : m.weights) w = u(rng);
    m.bias = u(rng);
    return m;
}

inline BucketedExample random_example(std::shared_ptr<const FeatureEncoder> enc,
                                      std::mt19937_64& rng) {
    BucketedExample x;
    x.encoder = enc;
    for (const auto& f : enc->numeric) {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(f.n_buckets()) - 1);
        x.buckets.push_back(pick(rng));
    }
    std::bernoulli_distribution coin(0.5);
    for (std::size_t a = 0; a < enc->apps.size(); ++a) x.app_bits.push_back(coin(rng));
    return x;
}

// Goal over bucketed examples through the one-hot projection.
inline GoalFn<BucketedExample> bucket_goal(const Model& model, GoalPredicate goal) {
    return [model, goal](const BucketedExample& x) {
        return evaluate_goal(goal, model, one_hot(x));
    };
}

inline Heuristic<BucketedExample> bucket_linear_heuristic(const LinearModel& model,
                                                          GoalPredicate goal,
                                                          const NormSpec& norm) {
    double theta = goal_threshold(goal);
    auto raw = [model, norm, theta](const BucketedExample& x) {
        return linear_robustness(model, one_hot(x), norm, theta);
    };
    return goal_aware<BucketedExample>(raw, bucket_goal(model, goal), true, "S = R^m");
}

}  // namespace gevtest
