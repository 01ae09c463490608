#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphevade/graph.hpp"

namespace graphevade {

enum class Algorithm { UCS, GREEDY, ASTAR, WEIGHTED_ASTAR };

inline std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::UCS: return "ucs";
        case Algorithm::GREEDY: return "greedy";
        case Algorithm::ASTAR: return "astar";
        case Algorithm::WEIGHTED_ASTAR: return "wastar";
    }
    return "?";
}

enum class SearchStatus { FOUND, EXHAUSTED, EXPANSION_CAP, NO_GOAL_REACHABLE };

inline std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::FOUND: return "FOUND";
        case SearchStatus::EXHAUSTED: return "EXHAUSTED";
        case SearchStatus::EXPANSION_CAP: return "EXPANSION_CAP";
        case SearchStatus::NO_GOAL_REACHABLE: return "NO_GOAL_REACHABLE";
    }
    return "?";
}

enum class GuaranteeKind { OPTIMAL, EPSILON_BOUNDED, NONE };

struct Guarantee {
    GuaranteeKind kind = GuaranteeKind::NONE;
    double epsilon = 1.0;  // EPSILON_BOUNDED only

    static Guarantee optimal() { return {GuaranteeKind::OPTIMAL, 1.0}; }
    static Guarantee epsilon_bounded(double e) { return {GuaranteeKind::EPSILON_BOUNDED, e}; }
    static Guarantee none() { return {GuaranteeKind::NONE, 1.0}; }
    std::string label() const {
        switch (kind) {
            case GuaranteeKind::OPTIMAL: return "OPTIMAL";
            case GuaranteeKind::EPSILON_BOUNDED:
                return "EPSILON_BOUNDED(" + std::to_string(epsilon) + ")";
            case GuaranteeKind::NONE: return "NONE";
        }
        return "?";
    }
};

// Frontier capacity 1 gives hill climbing, B gives beam search, absent keeps
// the frontier unbounded.
struct SearchConfig {
    Algorithm algorithm = Algorithm::UCS;
    double epsilon = 1.0;  // WEIGHTED_ASTAR only, must be >= 1
    std::optional<std::size_t> queue_capacity;
    std::optional<std::size_t> max_expansions;
};

template <class State>
struct SearchResult {
    SearchStatus status = SearchStatus::EXHAUSTED;
    std::optional<State> adversarial;
    std::vector<State> path;
    double path_cost = 0.0;
    std::size_t expansions = 0;
    std::size_t max_open_size = 0;
    double wall_time_ms = 0.0;
    Guarantee guarantee = Guarantee::none();
};

// Node cost estimate consumed by the search. `admissible` marks a certified
// lower bound on the remaining path cost; `epsilon` tracks accumulated static
// weighting applied on top of an admissible base (1 when unweighted).
template <class State>
struct Heuristic {
    std::function<double(const State&)> estimate;
    bool admissible = false;
    double epsilon = 1.0;
    std::string note;  // superset of the input domain the bound holds over

    double operator()(const State& s) const { return estimate(s); }
};

template <class State>
Heuristic<State> zero_heuristic() {
    return {[](const State&) { return 0.0; }, true, 1.0, "identically zero"};
}

// score(v, v') as a function of the accumulated path cost g(v') = g(v) + w
// and the child state.
template <class State>
using ScoreFn = std::function<double(double g_child, const State& child)>;

template <class State>
ScoreFn<State> make_score(Algorithm algorithm, double epsilon, Heuristic<State> h) {
    switch (algorithm) {
        case Algorithm::UCS:
            return [](double g, const State&) { return g; };
        case Algorithm::GREEDY:
            return [h](double, const State& s) { return h(s); };
        case Algorithm::ASTAR:
            return [h](double g, const State& s) { return g + h(s); };
        case Algorithm::WEIGHTED_ASTAR:
            if (epsilon < 1.0)
                throw std::invalid_argument("weighted A* requires epsilon >= 1");
            return [h, epsilon](double g, const State& s) { return g + epsilon * h(s); };
    }
    throw std::logic_error("unreachable");
}

// Generalized best-first search. Goal test happens on pop; children already
// known are updated when the new score is strictly lower, and closed nodes
// are reopened. Ties are broken FIFO via a monotone insertion counter. With
// a bounded frontier, entries evicted after an expansion are dropped; if a
// dropped state is generated again later it is treated as unseen.
template <class State>
SearchResult<State> bf_star(const Graph<State>& graph, const ScoreFn<State>& score,
                            const GoalFn<State>& goal, const State& start,
                            const SearchConfig& config) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();

    enum class Where : std::uint8_t { Open, Closed, Evicted };
    struct Node {
        State state;
        double g;
        double score;
        std::string parent;  // empty for the start node
        std::uint64_t seq;
        Where where;
    };
    struct OpenItem {
        double score;
        std::uint64_t seq;
        std::string key;
        bool operator<(const OpenItem& o) const {
            if (score != o.score) return score < o.score;
            return seq < o.seq;
        }
    };

    std::unordered_map<std::string, Node> nodes;
    std::set<OpenItem> open;
    std::uint64_t counter = 0;

    SearchResult<State> result;

    auto finish = [&](SearchStatus status) {
        result.status = status;
        result.wall_time_ms =
            std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        return result;
    };
    auto reconstruct = [&](const std::string& goal_key) {
        std::vector<State> rev;
        std::string k = goal_key;
        while (true) {
            const Node& n = nodes.at(k);
            rev.push_back(n.state);
            if (n.parent.empty()) break;
            k = n.parent;
        }
        result.path.assign(rev.rbegin(), rev.rend());
        result.adversarial = result.path.back();
        result.path_cost = nodes.at(goal_key).g;
    };

    const std::string start_key = graph.key(start);
    double start_score = score(0.0, start);
    nodes.emplace(start_key, Node{start, 0.0, start_score, "", counter, Where::Open});
    open.insert({start_score, counter, start_key});
    ++counter;
    result.max_open_size = 1;

    while (!open.empty()) {
        OpenItem top = *open.begin();
        open.erase(open.begin());
        Node& cur = nodes.at(top.key);
        cur.where = Where::Closed;

        if (goal(cur.state)) {
            reconstruct(top.key);
            return finish(SearchStatus::FOUND);
        }
        if (config.max_expansions && result.expansions >= *config.max_expansions)
            return finish(SearchStatus::EXPANSION_CAP);
        ++result.expansions;

        const double g_cur = cur.g;
        for (auto& [child, w] : graph.expand(cur.state)) {
            const double g_child = g_cur + w;
            const double s_child = score(g_child, child);
            std::string ck = graph.key(child);
            auto it = nodes.find(ck);
            if (it == nodes.end() || it->second.where == Where::Evicted) {
                Node n{std::move(child), g_child, s_child, top.key, counter, Where::Open};
                open.insert({s_child, counter, ck});
                ++counter;
                if (it == nodes.end())
                    nodes.emplace(std::move(ck), std::move(n));
                else
                    it->second = std::move(n);
            } else if (s_child < it->second.score) {
                Node& n = it->second;
                if (n.where == Where::Open)
                    open.erase({n.score, n.seq, ck});
                n.score = s_child;
                n.g = g_child;
                n.parent = top.key;
                n.seq = counter;
                ++counter;
                n.where = Where::Open;
                open.insert({s_child, n.seq, ck});
            }
        }

        if (result.max_open_size < open.size()) result.max_open_size = open.size();
        if (config.queue_capacity) {
            while (open.size() > *config.queue_capacity) {
                auto worst = std::prev(open.end());
                nodes.at(worst->key).where = Where::Evicted;
                open.erase(worst);
            }
        }
    }

    // With an unbounded frontier an empty queue means the reachable set was
    // enumerated in full.
    return finish(config.queue_capacity ? SearchStatus::EXHAUSTED
                                        : SearchStatus::NO_GOAL_REACHABLE);
}

// Labels the optimality guarantee the configuration warrants and runs BF*.
template <class State>
SearchResult<State> run_search(const Graph<State>& graph, const Heuristic<State>& h,
                               const GoalFn<State>& goal, const State& start,
                               const SearchConfig& config) {
    auto score = make_score(config.algorithm, config.epsilon, h);
    auto result = bf_star(graph, score, goal, start, config);

    Guarantee g = Guarantee::none();
    if (!config.queue_capacity) {
        switch (config.algorithm) {
            case Algorithm::UCS:
                g = Guarantee::optimal();
                break;
            case Algorithm::ASTAR:
                if (h.admissible)
                    g = h.epsilon > 1.0 ? Guarantee::epsilon_bounded(h.epsilon)
                                        : Guarantee::optimal();
                break;
            case Algorithm::WEIGHTED_ASTAR:
                if (h.admissible) {
                    double eps = config.epsilon * h.epsilon;
                    g = eps > 1.0 ? Guarantee::epsilon_bounded(eps) : Guarantee::optimal();
                }
                break;
            case Algorithm::GREEDY:
                break;
        }
    }
    result.guarantee = g;
    return result;
}

template <class State>
struct MacWitness {
    double cost = 0.0;
    std::vector<State> path;
};

// Brute-force oracle: minimal path cost to any goal node within `depth_cap`
// hops, by layered relaxation with per-node best-cost memoization.
template <class State>
std::optional<MacWitness<State>> exhaustive_mac_witness(const Graph<State>& graph,
                                                        const GoalFn<State>& goal,
                                                        const State& start,
                                                        std::size_t depth_cap) {
    struct Best {
        State state;
        double cost;
        std::string parent;
    };
    constexpr double kTol = 1e-12;

    std::unordered_map<std::string, Best> best;
    const std::string start_key = graph.key(start);
    best.emplace(start_key, Best{start, 0.0, ""});

    std::vector<std::string> frontier{start_key};
    for (std::size_t depth = 0; depth < depth_cap && !frontier.empty(); ++depth) {
        std::vector<std::string> next;
        for (const auto& k : frontier) {
            Best cur = best.at(k);  // copy: `best` may rehash during expansion
            for (auto& [child, w] : graph.expand(cur.state)) {
                double c = cur.cost + w;
                std::string ck = graph.key(child);
                auto it = best.find(ck);
                if (it == best.end()) {
                    best.emplace(ck, Best{std::move(child), c, k});
                    next.push_back(std::move(ck));
                } else if (c < it->second.cost - kTol) {
                    it->second.cost = c;
                    it->second.parent = k;
                    next.push_back(std::move(ck));
                }
            }
        }
        frontier = std::move(next);
    }

    std::optional<std::string> best_goal;
    for (const auto& [k, b] : best) {
        if (!goal(b.state)) continue;
        if (!best_goal || b.cost < best.at(*best_goal).cost) best_goal = k;
    }
    if (!best_goal) return std::nullopt;

    MacWitness<State> out;
    out.cost = best.at(*best_goal).cost;
    std::vector<State> rev;
    for (std::string k = *best_goal;;) {
        const Best& b = best.at(k);
        rev.push_back(b.state);
        if (b.parent.empty()) break;
        k = b.parent;
    }
    out.path.assign(rev.rbegin(), rev.rend());
    return out;
}

template <class State>
std::optional<double> exhaustive_mac(const Graph<State>& graph, const GoalFn<State>& goal,
                                     const State& start, std::size_t depth_cap) {
    auto w = exhaustive_mac_witness(graph, goal, start, depth_cap);
    if (!w) return std::nullopt;
    return w->cost;
}

// Follows a uniformly random child at every step until a goal node is hit or
// the step cap runs out. Baseline only; no guarantees.
template <class State>
SearchResult<State> random_path_search(const Graph<State>& graph, const GoalFn<State>& goal,
                                       const State& start, std::uint64_t seed,
                                       std::size_t max_steps) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    std::mt19937_64 rng(seed);

    SearchResult<State> result;
    result.path.push_back(start);
    State cur = start;
    double cost = 0.0;
    for (std::size_t step = 0;; ++step) {
        if (goal(cur)) {
            result.status = SearchStatus::FOUND;
            result.adversarial = cur;
            result.path_cost = cost;
            break;
        }
        if (step >= max_steps) {
            result.status = SearchStatus::EXPANSION_CAP;
            result.path.clear();
            break;
        }
        auto children = graph.expand(cur);
        if (children.empty()) {
            result.status = SearchStatus::EXHAUSTED;
            result.path.clear();
            break;
        }
        ++result.expansions;
        std::uniform_int_distribution<std::size_t> pick(0, children.size() - 1);
        auto& [child, w] = children[pick(rng)];
        cost += w;
        cur = std::move(child);
        result.path.push_back(cur);
    }
    result.wall_time_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    return result;
}

// Recomputes the cost of a result path through the graph; used to check path
// integrity.
template <class State>
double replay_path_cost(const Graph<State>& graph, const std::vector<State>& path) {
    double cost = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        std::string want = graph.key(path[i + 1]);
        bool found = false;
        for (auto& [child, w] : graph.expand(path[i])) {
            if (graph.key(child) == want) {
                cost += w;
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error("replay_path_cost: path step is not a graph edge");
    }
    return cost;
}

}  // namespace graphevade
