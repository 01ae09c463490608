#pragma once

#include <cmath>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace graphevade {

// Linear discriminant f(x) = w . x + b over named features.
struct LinearModel {
    std::vector<double> weights;
    double bias = 0.0;
    std::vector<std::string> feature_names;
};

// Kernel expansion f(x) = sum_i coef_i exp(-gamma ||x - sv_i||^2) + intercept.
struct RbfSvmModel {
    std::vector<std::vector<double>> support_vectors;
    std::vector<double> dual_coefs;
    double gamma = 1.0;
    double intercept = 0.0;
    std::vector<std::string> feature_names;
};

using Model = std::variant<LinearModel, RbfSvmModel>;

const std::vector<std::string>& feature_names(const Model& m);
std::size_t input_dim(const Model& m);

double discriminant(const LinearModel& m, std::span<const double> x);
double discriminant(const RbfSvmModel& m, std::span<const double> x);
double discriminant(const Model& m, std::span<const double> x);

std::vector<double> gradient(const LinearModel& m, std::span<const double> x);
std::vector<double> gradient(const RbfSvmModel& m, std::span<const double> x);
std::vector<double> gradient(const Model& m, std::span<const double> x);

// Numerically stable logistic sigmoid.
inline double sigmoid(double y) {
    if (y >= 0.0) return 1.0 / (1.0 + std::exp(-y));
    double e = std::exp(y);
    return e / (1.0 + e);
}

// Inverse sigmoid; p must be in (0, 1).
double logit(double p);

// Decision F(x) = 1 iff f(x) > theta, with theta derived from a confidence
// value d: theta = logit(d).
struct DecisionRule {
    double confidence_threshold = 0.5;
    double theta() const { return logit(confidence_threshold); }
};

int decide(const Model& m, const DecisionRule& rule, std::span<const double> x);

// Adversary's target condition: reach class t with confidence above l.
//   t = 1: sigma(f(x)) > l        (strict)
//   t = 0: sigma(f(x)) <= 1 - l
struct GoalPredicate {
    int target_class = 0;
    double confidence_level = 0.5;
};

bool evaluate_goal(const GoalPredicate& goal, const Model& m, std::span<const double> x);

// Discriminant level set the goal crosses: f(x) = goal_threshold(goal).
// For t=1 that is logit(l); for t=0, logit(1-l) = -logit(l).
double goal_threshold(const GoalPredicate& goal);

// Serialized model file: {"kind": "linear"|"svm_rbf", ...}. Unknown fields
// are rejected at load time.
struct ModelFile {
    Model model;
    DecisionRule rule;
};

ModelFile load_model_json(const std::string& text);
ModelFile load_model_file(const std::string& path);
std::string save_model_json(const ModelFile& mf);

}  // namespace graphevade
