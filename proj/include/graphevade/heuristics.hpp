#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphevade/classifiers.hpp"
#include "graphevade/norms.hpp"
#include "graphevade/search.hpp"

namespace graphevade {

// Exact distance from x to the level set f(x) = theta of a linear model:
// |f(x) - theta| / ||w||_q with q the Hoelder conjugate of the cost norm.
inline double linear_robustness(const LinearModel& model, std::span<const double> x,
                                const NormSpec& norm, double theta = 0.0) {
    double denom = dual_norm_of(norm, model.weights);
    if (denom == 0.0)
        throw std::invalid_argument("linear_robustness: zero weight vector has no decision boundary");
    return std::abs(discriminant(model, x) - theta) / denom;
}

// First-order Taylor approximation of the distance to the boundary for a
// differentiable model: |f(x) - theta| / ||grad f(x)||_q. Can overestimate,
// so it never carries an admissibility certificate.
inline double taylor_robustness(const Model& model, std::span<const double> x,
                                const NormSpec& norm, double theta = 0.0) {
    std::vector<double> grad = gradient(model, x);
    double denom = dual_norm_of(norm, grad);
    if (denom == 0.0)
        throw std::invalid_argument("taylor_robustness: zero gradient (stationary point)");
    return std::abs(discriminant(model, x) - theta) / denom;
}

// Wraps a raw lower bound into the heuristic the search consumes: zero on
// goal nodes, the raw value elsewhere.
template <class State>
Heuristic<State> goal_aware(std::function<double(const State&)> h_raw, GoalFn<State> goal,
                            bool admissible, std::string note = "") {
    Heuristic<State> h;
    h.estimate = [h_raw = std::move(h_raw), goal = std::move(goal)](const State& s) {
        return goal(s) ? 0.0 : h_raw(s);
    };
    h.admissible = admissible;
    h.note = std::move(note);
    return h;
}

// Optional clamp to the graph's declared minimum edge cost on non-goal
// nodes; sound since any goal is at least one edge away.
template <class State>
Heuristic<State> clamp_to_min_edge_cost(Heuristic<State> h, GoalFn<State> goal,
                                        double min_edge_cost) {
    Heuristic<State> out = h;
    out.estimate = [inner = h.estimate, goal, min_edge_cost](const State& s) {
        double v = inner(s);
        if (v < min_edge_cost && !goal(s)) return min_edge_cost;
        return v;
    };
    return out;
}

// Sentinel for states already decided as the target class; the most negative
// finite score keeps the ordering total while sorting goal nodes first.
inline constexpr double kConfidenceSentinel = std::numeric_limits<double>::lowest();

// Black-box scoring for greedy search / hill climbing: only needs query
// access to f(x). Lower means closer to the target class. Not admissible and
// not consistent; never usable for optimality labels.
template <class State>
Heuristic<State> confidence_heuristic(std::function<double(const State&)> f_of,
                                      int target_class,
                                      std::function<int(const State&)> decide_of) {
    Heuristic<State> h;
    h.estimate = [f_of = std::move(f_of), target_class,
                  decide_of = std::move(decide_of)](const State& s) {
        if (decide_of(s) == target_class) return kConfidenceSentinel;
        double f = f_of(s);
        return target_class == 0 ? f : -f;
    };
    h.admissible = false;
    h.note = "confidence-based, query access only";
    return h;
}

// Static weighting: multiply the heuristic by eps >= 1. With an admissible
// base the found cost is at most eps times the MAC.
template <class State>
Heuristic<State> epsilon_weight(const Heuristic<State>& h, double eps) {
    if (eps < 1.0) throw std::invalid_argument("epsilon_weight: epsilon must be >= 1");
    Heuristic<State> out = h;
    out.estimate = [inner = h.estimate, eps](const State& s) { return eps * inner(s); };
    out.epsilon = h.epsilon * eps;
    return out;
}

struct AdmissibilityViolation {
    std::string node;
    double h = 0.0;
    double mac = 0.0;
    std::vector<std::string> witness_path;
};

struct AdmissibilityReport {
    std::vector<AdmissibilityViolation> violations;
    std::size_t inconclusive = 0;  // no goal reachable within the depth cap
    std::size_t checked = 0;
};

// Empirical check of h(x) <= C_G(x, g*) against the exhaustive oracle.
// Samples with no reachable goal within the cap are reported as inconclusive.
template <class State>
AdmissibilityReport audit_admissibility(const Heuristic<State>& h, const Graph<State>& graph,
                                        const GoalFn<State>& goal,
                                        const std::vector<State>& samples,
                                        std::size_t depth_cap, double tol = 1e-9) {
    AdmissibilityReport report;
    for (const State& s : samples) {
        auto mac = exhaustive_mac_witness(graph, goal, s, depth_cap);
        if (!mac) {
            ++report.inconclusive;
            continue;
        }
        ++report.checked;
        double hv = h(s);
        if (hv > mac->cost + tol) {
            AdmissibilityViolation v;
            v.node = graph.key(s);
            v.h = hv;
            v.mac = mac->cost;
            for (const State& p : mac->path) v.witness_path.push_back(graph.key(p));
            report.violations.push_back(std::move(v));
        }
    }
    return report;
}

struct ConsistencyViolation {
    std::string node;
    std::string child;
    double h_u = 0.0;
    double edge_cost = 0.0;
    double h_v = 0.0;
};

struct ConsistencyReport {
    std::vector<ConsistencyViolation> violations;
    std::size_t checked = 0;  // edges
};

// Checks h(u) <= w(u, v) + h(v) on every edge out of the sampled nodes.
template <class State>
ConsistencyReport audit_consistency(const Heuristic<State>& h, const Graph<State>& graph,
                                    const std::vector<State>& sample_nodes,
                                    double tol = 1e-9) {
    ConsistencyReport report;
    for (const State& u : sample_nodes) {
        double hu = h(u);
        for (auto& [v, w] : graph.expand(u)) {
            ++report.checked;
            double hv = h(v);
            if (hu > w + hv + tol)
                report.violations.push_back({graph.key(u), graph.key(v), hu, w, hv});
        }
    }
    return report;
}

}  // namespace graphevade
