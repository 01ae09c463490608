#include "graphevade/classifiers.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace graphevade {

namespace {

void check_dim(std::size_t expected, std::size_t got) {
    if (expected != got)
        throw std::invalid_argument("input dimension mismatch: model expects " +
                                    std::to_string(expected) + ", got " + std::to_string(got));
}

}  // namespace

const std::vector<std::string>& feature_names(const Model& m) {
    return std::visit([](const auto& mm) -> const std::vector<std::string>& {
        return mm.feature_names;
    }, m);
}

std::size_t input_dim(const Model& m) {
    if (const auto* lin = std::get_if<LinearModel>(&m)) return lin->weights.size();
    const auto& svm = std::get<RbfSvmModel>(m);
    return svm.support_vectors.empty() ? 0 : svm.support_vectors.front().size();
}

double discriminant(const LinearModel& m, std::span<const double> x) {
    check_dim(m.weights.size(), x.size());
    double acc = m.bias;
    for (std::size_t i = 0; i < x.size(); ++i) acc += m.weights[i] * x[i];
    return acc;
}

double discriminant(const RbfSvmModel& m, std::span<const double> x) {
    double acc = m.intercept;
    for (std::size_t i = 0; i < m.support_vectors.size(); ++i) {
        const auto& sv = m.support_vectors[i];
        check_dim(sv.size(), x.size());
        double d2 = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            double d = x[j] - sv[j];
            d2 += d * d;
        }
        acc += m.dual_coefs[i] * std::exp(-m.gamma * d2);
    }
    return acc;
}

double discriminant(const Model& m, std::span<const double> x) {
    return std::visit([&](const auto& mm) { return discriminant(mm, x); }, m);
}

std::vector<double> gradient(const LinearModel& m, std::span<const double> x) {
    check_dim(m.weights.size(), x.size());
    return m.weights;
}

std::vector<double> gradient(const RbfSvmModel& m, std::span<const double> x) {
    std::vector<double> grad(x.size(), 0.0);
    for (std::size_t i = 0; i < m.support_vectors.size(); ++i) {
        const auto& sv = m.support_vectors[i];
        check_dim(sv.size(), x.size());
        double d2 = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            double d = x[j] - sv[j];
            d2 += d * d;
        }
        double k = m.dual_coefs[i] * std::exp(-m.gamma * d2) * (-2.0 * m.gamma);
        for (std::size_t j = 0; j < x.size(); ++j) grad[j] += k * (x[j] - sv[j]);
    }
    return grad;
}

std::vector<double> gradient(const Model& m, std::span<const double> x) {
    return std::visit([&](const auto& mm) { return gradient(mm, x); }, m);
}

double logit(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("logit: argument must be in (0, 1)");
    return std::log(p / (1.0 - p));
}

int decide(const Model& m, const DecisionRule& rule, std::span<const double> x) {
    return discriminant(m, x) > rule.theta() ? 1 : 0;
}

bool evaluate_goal(const GoalPredicate& goal, const Model& m, std::span<const double> x) {
    double conf = sigmoid(discriminant(m, x));
    if (goal.target_class == 1) return conf > goal.confidence_level;
    return conf <= 1.0 - goal.confidence_level;
}

double goal_threshold(const GoalPredicate& goal) {
    double t = logit(goal.confidence_level);
    return goal.target_class == 1 ? t : -t;
}

namespace {

using nlohmann::json;

void reject_unknown_fields(const json& j, const std::set<std::string>& allowed) {
    for (const auto& [key, _] : j.items())
        if (!allowed.count(key))
            throw std::invalid_argument("model file: unknown field '" + key + "'");
}

std::vector<std::string> parse_names(const json& j) {
    return j.at("feature_names").get<std::vector<std::string>>();
}

}  // namespace

ModelFile load_model_json(const std::string& text) {
    json j = json::parse(text);
    std::string kind = j.at("kind").get<std::string>();
    ModelFile mf;
    if (j.contains("confidence_threshold"))
        mf.rule.confidence_threshold = j.at("confidence_threshold").get<double>();

    if (kind == "linear") {
        reject_unknown_fields(j, {"kind", "feature_names", "weights", "bias",
                                  "confidence_threshold"});
        LinearModel m;
        m.feature_names = parse_names(j);
        m.weights = j.at("weights").get<std::vector<double>>();
        m.bias = j.at("bias").get<double>();
        if (m.weights.size() != m.feature_names.size())
            throw std::invalid_argument("model file: weights/feature_names length mismatch");
        mf.model = std::move(m);
    } else if (kind == "svm_rbf") {
        reject_unknown_fields(j, {"kind", "feature_names", "support_vectors", "dual_coefs",
                                  "gamma", "intercept", "confidence_threshold"});
        RbfSvmModel m;
        m.feature_names = parse_names(j);
        m.support_vectors = j.at("support_vectors").get<std::vector<std::vector<double>>>();
        m.dual_coefs = j.at("dual_coefs").get<std::vector<double>>();
        m.gamma = j.at("gamma").get<double>();
        m.intercept = j.at("intercept").get<double>();
        if (m.support_vectors.size() != m.dual_coefs.size())
            throw std::invalid_argument("model file: support_vectors/dual_coefs length mismatch");
        if (!(m.gamma > 0.0))
            throw std::invalid_argument("model file: gamma must be positive");
        for (const auto& sv : m.support_vectors)
            if (sv.size() != m.feature_names.size())
                throw std::invalid_argument("model file: support vector dimension mismatch");
        mf.model = std::move(m);
    } else {
        throw std::invalid_argument("model file: unknown kind '" + kind + "'");
    }
    return mf;
}

ModelFile load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_model_json(ss.str());
}

std::string save_model_json(const ModelFile& mf) {
    json j;
    j["confidence_threshold"] = mf.rule.confidence_threshold;
    if (const auto* lin = std::get_if<LinearModel>(&mf.model)) {
        j["kind"] = "linear";
        j["feature_names"] = lin->feature_names;
        j["weights"] = lin->weights;
        j["bias"] = lin->bias;
    } else {
        const auto& svm = std::get<RbfSvmModel>(mf.model);
        j["kind"] = "svm_rbf";
        j["feature_names"] = svm.feature_names;
        j["support_vectors"] = svm.support_vectors;
        j["dual_coefs"] = svm.dual_coefs;
        j["gamma"] = svm.gamma;
        j["intercept"] = svm.intercept;
    }
    return j.dump(2);
}

}  // namespace graphevade
