// Command-line driver: minimal-cost evasion search over transformation
// graphs, plus heuristic audits and encoder fitting.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphevade/classifiers.hpp"
#include "graphevade/encoder.hpp"
#include "graphevade/graphs.hpp"
#include "graphevade/heuristics.hpp"
#include "graphevade/reports.hpp"
#include "graphevade/search.hpp"

using namespace graphevade;
using nlohmann::json;

namespace {

struct CommonOpts {
    std::string model_path;
    std::string data_path;
    std::string graph_spec = "bucket";  // graph name or config JSON path
    std::string encoder_path;
    std::string algorithm = "astar";
    double epsilon = 1.0;
    std::size_t beam_width = 10;
    double confidence = 0.5;
    int target_class = 0;
    std::optional<std::size_t> max_expansions;
    std::string norm;  // empty: take the graph config's cost norm
    std::string heuristic = "auto";
    std::uint64_t seed = 1;
    std::string out_path;  // empty: stdout
    bool timings = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--model", o.model_path, "model JSON")->required();
    cmd->add_option("--data", o.data_path, "CSV dataset, or trace file for trace graphs")
        ->required();
    cmd->add_option("--graph", o.graph_spec, "graph config JSON, or bucket|dollar|trace");
    cmd->add_option("--encoder", o.encoder_path, "encoder JSON (bucket/dollar graphs)");
    cmd->add_option("--algorithm", o.algorithm, "ucs|astar|wastar|greedy|hillclimb|beam");
    cmd->add_option("--epsilon", o.epsilon, "weight for wastar (>= 1)");
    cmd->add_option("--beam-width", o.beam_width, "frontier capacity for beam");
    cmd->add_option("--confidence", o.confidence, "goal confidence level l");
    cmd->add_option("--target-class", o.target_class, "class the adversary wants");
    cmd->add_option("--max-expansions", o.max_expansions, "expansion cap");
    cmd->add_option("--max-iterations", o.max_expansions, "alias for --max-expansions");
    cmd->add_option("--norm", o.norm, "cost norm override: l1|l2|linf");
    cmd->add_option("--heuristic", o.heuristic, "auto|zero|distance|taylor|confidence|random");
    cmd->add_option("--seed", o.seed, "RNG seed");
    cmd->add_option("--out", o.out_path, "output path (default stdout)");
    cmd->add_flag("--timings", o.timings, "report wall-clock runtime per example");
}

SearchConfig search_config(const CommonOpts& o) {
    SearchConfig cfg;
    cfg.max_expansions = o.max_expansions;
    if (o.algorithm == "ucs") {
        cfg.algorithm = Algorithm::UCS;
    } else if (o.algorithm == "astar") {
        cfg.algorithm = Algorithm::ASTAR;
    } else if (o.algorithm == "wastar") {
        cfg.algorithm = Algorithm::WEIGHTED_ASTAR;
        cfg.epsilon = o.epsilon;
    } else if (o.algorithm == "greedy") {
        cfg.algorithm = Algorithm::GREEDY;
    } else if (o.algorithm == "hillclimb") {
        cfg.algorithm = Algorithm::GREEDY;
        cfg.queue_capacity = 1;
    } else if (o.algorithm == "beam") {
        cfg.algorithm = Algorithm::GREEDY;
        if (o.beam_width == 0) throw std::invalid_argument("--beam-width must be positive");
        cfg.queue_capacity = o.beam_width;
    } else {
        throw std::invalid_argument("unknown algorithm: " + o.algorithm);
    }
    return cfg;
}

GraphConfig resolve_graph(const CommonOpts& o) {
    GraphConfig cfg;
    if (o.graph_spec == "bucket" || o.graph_spec == "dollar" || o.graph_spec == "trace") {
        cfg.graph = o.graph_spec;
        cfg.dollar = DollarCostSpec::defaults();
    } else {
        cfg = load_graph_config_file(o.graph_spec);
    }
    if (!o.norm.empty()) cfg.cost_norm = norm_kind_from_string(o.norm);
    return cfg;
}

std::ostream& open_out(const CommonOpts& o, std::ofstream& file) {
    if (o.out_path.empty()) return std::cout;
    file.open(o.out_path);
    if (!file) throw std::runtime_error("cannot write " + o.out_path);
    return file;
}

// Deterministic per-node noise in [0, 2) for the random-search baseline.
double key_noise(const std::string& key, std::uint64_t seed) {
    std::uint64_t z = std::hash<std::string>{}(key) + seed * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return 2.0 * static_cast<double>(z >> 11) / 9007199254740992.0;
}

template <class State>
Heuristic<State> random_heuristic(const Graph<State>& graph, std::uint64_t seed) {
    Heuristic<State> h;
    h.estimate = [key = graph.key, seed](const State& s) { return key_noise(key(s), seed); };
    h.admissible = false;
    h.note = "uniform noise in [0, 2)";
    return h;
}

// Everything needed to attack one state space: the graph, the goal, the
// feature map into the model's input, and an optional dollar spec for edits.
template <class State>
struct Problem {
    Graph<State> graph;
    GoalFn<State> goal_fn;
    std::function<double(const State&)> f_of;
    std::function<int(const State&)> decide_of;
    std::vector<State> starts;
    std::vector<std::string> ids;
    const DollarCostSpec* dollar = nullptr;
    std::function<std::vector<std::string>(const std::vector<State>&)> edits_of;
};

template <class State>
Heuristic<State> build_heuristic(const CommonOpts& o, const Problem<State>& p,
                                 const ModelFile& mf, const GraphConfig& gcfg,
                                 const GoalPredicate& goal,
                                 std::function<std::vector<double>(const State&)> features) {
    std::string name = o.heuristic;
    if (name == "auto") {
        if (o.algorithm == "greedy" || o.algorithm == "hillclimb" || o.algorithm == "beam")
            name = "confidence";
        else if (gcfg.graph == "bucket" && std::holds_alternative<LinearModel>(mf.model))
            name = "distance";
        else if (std::holds_alternative<RbfSvmModel>(mf.model))
            name = "taylor";
        else
            name = "zero";
    }
    if (name == "zero") return zero_heuristic<State>();
    if (name == "random") return random_heuristic(p.graph, o.seed);
    if (name == "confidence")
        return confidence_heuristic<State>(p.f_of, goal.target_class, p.decide_of);

    NormSpec norm{gcfg.cost_norm, {}};
    double theta = goal_threshold(goal);
    if (name == "distance") {
        const auto* lin = std::get_if<LinearModel>(&mf.model);
        if (!lin)
            throw std::invalid_argument("--heuristic distance requires a linear model");
        // The closed-form distance is a sound lower bound only when edge
        // costs are the matching norm in feature space.
        bool admissible = gcfg.graph == "bucket";
        auto raw = [model = *lin, features, norm, theta](const State& s) {
            return linear_robustness(model, features(s), norm, theta);
        };
        return goal_aware<State>(raw, p.goal_fn, admissible,
                                 admissible ? "bound over all of feature space" : "");
    }
    if (name == "taylor") {
        auto raw = [model = mf.model, features, norm, theta](const State& s) {
            return taylor_robustness(model, features(s), norm, theta);
        };
        return goal_aware<State>(raw, p.goal_fn, false, "first-order approximation");
    }
    throw std::invalid_argument("unknown heuristic: " + name);
}

template <class State>
AttackRecord attack_one(const Problem<State>& p, const Heuristic<State>& h,
                        const SearchConfig& cfg, const State& start, const std::string& id,
                        bool timings) {
    AttackRecord r;
    r.example_id = id;
    r.initial_confidence = sigmoid(p.f_of(start));
    auto res = run_search(p.graph, h, p.goal_fn, start, cfg);
    r.status = to_string(res.status);
    r.expansions = res.expansions;
    r.max_open_size = res.max_open_size;
    r.runtime_ms = timings ? res.wall_time_ms : 0.0;
    r.guarantee = res.guarantee.label();
    if (res.status == SearchStatus::FOUND) {
        if (!p.goal_fn(res.path.back()))
            throw std::runtime_error("internal error: FOUND path does not satisfy the goal");
        r.path_cost = res.path_cost;
        r.num_changes = res.path.size() - 1;
        r.edits = p.edits_of(res.path);
    }
    return r;
}

struct LoadedBucketProblem {
    ModelFile mf;
    std::shared_ptr<const FeatureEncoder> enc;
    GraphConfig gcfg;
    GoalPredicate goal;
    Problem<BucketedExample> p;
    std::shared_ptr<DollarCostSpec> dollar_spec;
};

struct LoadedTraceProblem {
    ModelFile mf;
    GraphConfig gcfg;
    GoalPredicate goal;
    Problem<PacketTrace> p;
};

LoadedBucketProblem load_bucket_problem(const CommonOpts& o, const GraphConfig& gcfg) {
    LoadedBucketProblem L;
    L.gcfg = gcfg;
    L.mf = load_model_file(o.model_path);
    if (o.encoder_path.empty())
        throw std::invalid_argument("--encoder is required for bucket/dollar graphs");
    L.enc = std::make_shared<FeatureEncoder>(load_encoder_file(o.encoder_path));
    L.goal = GoalPredicate{o.target_class, o.confidence};

    CsvSchema schema;
    for (const auto& f : L.enc->numeric) schema.numeric_names.push_back(f.name);
    if (!L.enc->apps.empty()) {
        auto inferred = infer_csv_schema(o.data_path, "apps");
        if (inferred.app_column) schema.app_column = "apps";
    }
    auto rows = load_csv(o.data_path, schema);

    const bool keep_raw = gcfg.graph == "dollar";
    if (gcfg.graph == "dollar") {
        L.dollar_spec = std::make_shared<DollarCostSpec>(gcfg.dollar);
        L.p.graph = make_dollar_graph(*L.dollar_spec);
        L.p.dollar = L.dollar_spec.get();
    } else {
        L.p.graph = make_bucket_graph(gcfg.cost_norm);
    }
    Model model = L.mf.model;
    DecisionRule rule = L.mf.rule;
    GoalPredicate goal = L.goal;
    L.p.f_of = [model](const BucketedExample& x) { return discriminant(model, one_hot(x)); };
    L.p.decide_of = [model, rule](const BucketedExample& x) {
        return decide(model, rule, one_hot(x));
    };
    L.p.goal_fn = [model, goal](const BucketedExample& x) {
        return evaluate_goal(goal, model, one_hot(x));
    };
    const DollarCostSpec* dspec = L.p.dollar;
    L.p.edits_of = [dspec](const std::vector<BucketedExample>& path) {
        return path_to_edits(path, dspec);
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
        L.p.starts.push_back(encode(L.enc, rows[i], keep_raw));
        L.p.ids.push_back(std::to_string(i));
    }
    return L;
}

LoadedTraceProblem load_trace_problem(const CommonOpts& o, const GraphConfig& gcfg) {
    LoadedTraceProblem L;
    L.gcfg = gcfg;
    L.mf = load_model_file(o.model_path);
    L.goal = GoalPredicate{o.target_class, o.confidence};
    L.p.graph = make_trace_graph();
    Model model = L.mf.model;
    DecisionRule rule = L.mf.rule;
    GoalPredicate goal = L.goal;
    L.p.f_of = [model](const PacketTrace& t) {
        return discriminant(model, cumul_features(t));
    };
    L.p.decide_of = [model, rule](const PacketTrace& t) {
        return decide(model, rule, cumul_features(t));
    };
    L.p.goal_fn = [model, goal](const PacketTrace& t) {
        return evaluate_goal(goal, model, cumul_features(t));
    };
    L.p.edits_of = [](const std::vector<PacketTrace>& path) { return path_to_edits(path); };
    auto traces = load_traces(o.data_path);
    for (std::size_t i = 0; i < traces.size(); ++i) {
        L.p.starts.push_back(std::move(traces[i]));
        L.p.ids.push_back(std::to_string(i));
    }
    return L;
}

template <class State>
int run_attack(const CommonOpts& o, const ModelFile& mf, const GraphConfig& gcfg,
               const GoalPredicate& goal, const Problem<State>& p,
               std::function<std::vector<double>(const State&)> features) {
    auto h = build_heuristic(o, p, mf, gcfg, goal, features);
    auto cfg = search_config(o);
    const int source_class = 1 - goal.target_class;
    std::ofstream file;
    std::ostream& out = open_out(o, file);
    for (std::size_t i = 0; i < p.starts.size(); ++i) {
        if (p.decide_of(p.starts[i]) != source_class) continue;
        auto r = attack_one(p, h, cfg, p.starts[i], p.ids[i], o.timings);
        out << to_json(r).dump() << "\n";
    }
    return 0;
}

int cmd_attack(const CommonOpts& o) {
    auto gcfg = resolve_graph(o);
    if (gcfg.graph == "trace") {
        auto L = load_trace_problem(o, gcfg);
        return run_attack<PacketTrace>(o, L.mf, gcfg, L.goal, L.p, cumul_features);
    }
    auto L = load_bucket_problem(o, gcfg);
    return run_attack<BucketedExample>(o, L.mf, gcfg, L.goal, L.p,
                                       [](const BucketedExample& x) { return one_hot(x); });
}

int cmd_compare(const CommonOpts& o, bool random_baseline, int reps) {
    auto gcfg = resolve_graph(o);
    if (gcfg.graph == "trace")
        throw std::invalid_argument("compare works on bucket/dollar graphs");
    auto L = load_bucket_problem(o, gcfg);
    auto features = [](const BucketedExample& x) { return one_hot(x); };
    const int source_class = 1 - L.goal.target_class;

    struct Variant {
        std::string name;
        CommonOpts opts;
    };
    std::vector<Variant> variants;
    auto mk = [&](std::string name, std::string algorithm, double eps, std::string heuristic) {
        CommonOpts v = o;
        v.algorithm = std::move(algorithm);
        v.epsilon = eps;
        v.heuristic = std::move(heuristic);
        variants.push_back({std::move(name), std::move(v)});
    };
    mk("ucs", "ucs", 1.0, "zero");
    mk("astar", "astar", 1.0, o.heuristic == "auto" ? "distance" : o.heuristic);
    for (double eps : {2.0, 3.0, 5.0, 10.0})
        mk("wastar(e=" + std::to_string(static_cast<int>(eps)) + ")", "wastar", eps,
           o.heuristic == "auto" ? "distance" : o.heuristic);
    mk("hillclimb", "hillclimb", 1.0, "confidence");

    std::vector<std::size_t> attacked;
    for (std::size_t i = 0; i < L.p.starts.size(); ++i)
        if (L.p.decide_of(L.p.starts[i]) == source_class) attacked.push_back(i);

    // UCS first: its costs are the optimal baseline for the ratio column.
    std::vector<double> optimal(attacked.size(), -1.0);

    std::ofstream file;
    std::ostream& out = open_out(o, file);
    char line[256];
    std::snprintf(line, sizeof line, "%-14s %8s %12s %10s %12s\n", "algorithm", "solved",
                  "mean_ratio", "max_ratio", "mean_expans");
    out << line;

    auto report = [&](const std::string& name, const std::vector<double>& costs,
                      const std::vector<double>& expans) {
        std::size_t solved = 0, ratio_n = 0;
        double ratio_sum = 0.0, ratio_max = 0.0, exp_sum = 0.0;
        for (std::size_t k = 0; k < costs.size(); ++k) {
            exp_sum += expans[k];
            if (costs[k] < 0.0) continue;
            ++solved;
            if (optimal[k] > 0.0) {
                double ratio = costs[k] / optimal[k];
                ratio_sum += ratio;
                ratio_max = std::max(ratio_max, ratio);
                ++ratio_n;
            }
        }
        std::snprintf(line, sizeof line, "%-14s %5zu/%-2zu %12.4f %10.4f %12.1f\n",
                      name.c_str(), solved, costs.size(),
                      ratio_n ? ratio_sum / static_cast<double>(ratio_n) : 0.0, ratio_max,
                      costs.empty() ? 0.0 : exp_sum / static_cast<double>(costs.size()));
        out << line;
    };

    for (const auto& variant : variants) {
        auto h = build_heuristic<BucketedExample>(variant.opts, L.p, L.mf, gcfg, L.goal,
                                                  features);
        auto cfg = search_config(variant.opts);
        std::vector<double> costs, expans;
        for (std::size_t k = 0; k < attacked.size(); ++k) {
            auto res = run_search(L.p.graph, h, L.p.goal_fn, L.p.starts[attacked[k]], cfg);
            bool found = res.status == SearchStatus::FOUND;
            costs.push_back(found ? res.path_cost : -1.0);
            expans.push_back(static_cast<double>(res.expansions));
            if (variant.name == "ucs" && found) optimal[k] = res.path_cost;
        }
        report(variant.name, costs, expans);
    }

    if (random_baseline) {
        std::vector<double> costs, expans;
        for (int rep = 0; rep < reps; ++rep) {
            CommonOpts v = o;
            v.algorithm = "greedy";
            v.heuristic = "random";
            v.seed = o.seed + static_cast<std::uint64_t>(rep);
            auto h = build_heuristic<BucketedExample>(v, L.p, L.mf, gcfg, L.goal, features);
            auto cfg = search_config(v);
            for (std::size_t k = 0; k < attacked.size(); ++k) {
                auto res = run_search(L.p.graph, h, L.p.goal_fn, L.p.starts[attacked[k]], cfg);
                costs.push_back(res.status == SearchStatus::FOUND ? res.path_cost : -1.0);
                expans.push_back(static_cast<double>(res.expansions));
            }
        }
        // ratios for rep r, example k index into optimal via k
        std::size_t solved = 0, ratio_n = 0;
        double ratio_sum = 0.0, ratio_max = 0.0, exp_sum = 0.0;
        for (std::size_t j = 0; j < costs.size(); ++j) {
            exp_sum += expans[j];
            if (costs[j] < 0.0) continue;
            ++solved;
            double opt = optimal[j % attacked.size()];
            if (opt > 0.0) {
                double ratio = costs[j] / opt;
                ratio_sum += ratio;
                ratio_max = std::max(ratio_max, ratio);
                ++ratio_n;
            }
        }
        std::snprintf(line, sizeof line, "random(%dx)%4s %5zu/%-2zu %12.4f %10.4f %12.1f\n",
                      reps, "", solved, costs.size(),
                      ratio_n ? ratio_sum / static_cast<double>(ratio_n) : 0.0, ratio_max,
                      costs.empty() ? 0.0 : exp_sum / static_cast<double>(costs.size()));
        out << line;
    }
    return 0;
}

int cmd_audit(const CommonOpts& o, std::size_t samples, std::size_t depth_cap) {
    auto gcfg = resolve_graph(o);
    if (gcfg.graph == "trace")
        throw std::invalid_argument("audit works on bucket/dollar graphs");
    auto L = load_bucket_problem(o, gcfg);
    auto features = [](const BucketedExample& x) { return one_hot(x); };
    auto h = build_heuristic<BucketedExample>(o, L.p, L.mf, gcfg, L.goal, features);
    if (o.epsilon != 1.0) h = epsilon_weight(h, o.epsilon);

    // Sample nodes uniformly over the bucketed domain.
    std::mt19937_64 rng(o.seed);
    std::vector<BucketedExample> nodes;
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < samples; ++i) {
        BucketedExample x;
        x.encoder = L.enc;
        for (const auto& f : L.enc->numeric) {
            std::uniform_int_distribution<int> pick(0, static_cast<int>(f.n_buckets()) - 1);
            x.buckets.push_back(pick(rng));
        }
        for (std::size_t a = 0; a < L.enc->apps.size(); ++a) x.app_bits.push_back(coin(rng));
        if (gcfg.graph == "dollar") {
            // raw value at the low end of each bucket keeps edges well defined
            for (std::size_t j = 0; j < L.enc->numeric.size(); ++j) {
                const auto& b = L.enc->numeric[j].boundaries;
                int bk = x.buckets[j];
                x.raw.push_back(bk == 0 ? (b.empty() ? 0.0 : b.front() - 1.0)
                                        : b[static_cast<std::size_t>(bk) - 1]);
            }
        }
        nodes.push_back(std::move(x));
    }

    auto adm = audit_admissibility(h, L.p.graph, L.p.goal_fn, nodes, depth_cap);
    auto cons = audit_consistency(h, L.p.graph, nodes);

    json j;
    j["heuristic_admissible_declared"] = h.admissible;
    j["admissibility"] = to_json(adm);
    j["consistency"] = to_json(cons);
    std::ofstream file;
    std::ostream& out = open_out(o, file);
    out << j.dump(2) << "\n";

    if (!adm.violations.empty()) {
        if (!h.admissible) {
            std::cerr << "non-admissible heuristic: " << adm.violations.size()
                      << " violation(s) permitted\n";
            return 0;
        }
        std::cerr << "admissibility audit failed: " << adm.violations.size()
                  << " violation(s)\n";
        return 1;
    }
    return 0;
}

int cmd_encode(const CommonOpts& o, bool fit, int buckets, const std::string& apps_column) {
    std::ofstream file;
    std::ostream& out = open_out(o, file);
    if (fit) {
        auto schema = infer_csv_schema(o.data_path, apps_column);
        auto rows = load_csv(o.data_path, schema);
        std::vector<std::string> apps;
        if (schema.app_column) {
            std::set<std::string> seen;
            for (const auto& r : rows)
                for (const auto& a : r.app_list) seen.insert(a);
            apps.assign(seen.begin(), seen.end());
        }
        auto enc = fit_encoder(rows, schema.numeric_names, apps, buckets);
        out << save_encoder_json(enc) << "\n";
        return 0;
    }
    if (o.encoder_path.empty())
        throw std::invalid_argument("encode: pass --fit to fit, or --encoder to apply");
    auto enc = std::make_shared<FeatureEncoder>(load_encoder_file(o.encoder_path));
    CsvSchema schema;
    for (const auto& f : enc->numeric) schema.numeric_names.push_back(f.name);
    if (!enc->apps.empty()) {
        auto inferred = infer_csv_schema(o.data_path, apps_column);
        if (inferred.app_column) schema.app_column = apps_column;
    }
    auto rows = load_csv(o.data_path, schema);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        auto x = encode(enc, rows[i]);
        auto d = decode(x);
        json j;
        j["example_id"] = std::to_string(i);
        j["buckets"] = x.buckets;
        json intervals = json::object();
        for (const auto& [name, interval] : d.intervals) intervals[name] = interval;
        j["intervals"] = intervals;
        j["apps"] = d.present_apps;
        out << j.dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal-cost evasion search over transformation graphs"};
    app.require_subcommand(1);

    CommonOpts attack_opts;
    auto* attack = app.add_subcommand("attack", "search for minimal-cost evasions");
    add_common(attack, attack_opts);

    CommonOpts compare_opts;
    bool random_baseline = false;
    int reps = 10;
    auto* compare = app.add_subcommand("compare", "algorithm comparison table");
    add_common(compare, compare_opts);
    compare->add_flag("--random-baseline", random_baseline,
                      "add a seeded random-heuristic baseline");
    compare->add_option("--reps", reps, "repetitions for the random baseline");

    CommonOpts audit_opts;
    std::size_t samples = 500, depth_cap = 6;
    auto* audit = app.add_subcommand("audit", "admissibility and consistency audits");
    add_common(audit, audit_opts);
    audit->add_option("--samples", samples, "sampled nodes");
    audit->add_option("--depth-cap", depth_cap, "oracle depth cap");

    auto* enc_cmd = app.add_subcommand("encode", "fit or apply a feature encoder");
    std::string enc_data, enc_encoder, enc_out, apps_column = "apps";
    bool enc_fit = false;
    int enc_buckets = 20;
    enc_cmd->add_option("--data", enc_data, "CSV dataset")->required();
    enc_cmd->add_option("--encoder", enc_encoder, "encoder JSON to apply");
    enc_cmd->add_flag("--fit", enc_fit, "fit a new encoder from the data");
    enc_cmd->add_option("--buckets", enc_buckets, "buckets per feature when fitting");
    enc_cmd->add_option("--apps-column", apps_column, "name of the app-list column");
    enc_cmd->add_option("--out", enc_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*attack) return cmd_attack(attack_opts);
        if (*compare) return cmd_compare(compare_opts, random_baseline, reps);
        if (*audit) return cmd_audit(audit_opts, samples, depth_cap);
        if (*enc_cmd) {
            CommonOpts o;
            o.data_path = enc_data;
            o.encoder_path = enc_encoder;
            o.out_path = enc_out;
            return cmd_encode(o, enc_fit, enc_buckets, apps_column);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
