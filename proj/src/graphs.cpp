#include "graphevade/graphs.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace graphevade {

std::string bucketed_key(const BucketedExample& x) {
    KeyBuilder kb;
    for (int b : x.buckets) kb.add(b);
    for (bool a : x.app_bits) kb.add(a);
    return std::move(kb).str();
}

namespace {

std::string dollar_key(const BucketedExample& x) {
    KeyBuilder kb;
    for (int b : x.buckets) kb.add(b);
    for (bool a : x.app_bits) kb.add(a);
    for (double r : x.raw) kb.add(r);
    return std::move(kb).str();
}

}  // namespace

double bucket_edge_cost(NormKind cost_norm) {
    switch (cost_norm) {
        case NormKind::L1: return 2.0;
        case NormKind::L2: return std::sqrt(2.0);
        case NormKind::LInf: return 1.0;
        case NormKind::WeightedL1:
            throw std::invalid_argument("bucket graph: weighted costs are not norm-constant");
    }
    throw std::logic_error("unreachable");
}

Graph<BucketedExample> make_bucket_graph(NormKind cost_norm) {
    const double cost = bucket_edge_cost(cost_norm);
    Graph<BucketedExample> g;
    g.description = "bucket graph, " + to_string(cost_norm) + " edge cost";
    g.min_edge_cost = cost;
    g.key = [](const BucketedExample& x) { return bucketed_key(x); };
    g.expand = [cost](const BucketedExample& x) {
        std::vector<std::pair<BucketedExample, double>> children;
        const FeatureEncoder& enc = *x.encoder;
        for (std::size_t i = 0; i < enc.numeric.size(); ++i) {
            const int top = static_cast<int>(enc.numeric[i].n_buckets()) - 1;
            if (x.buckets[i] > 0) {
                BucketedExample c = x;
                c.raw.clear();
                --c.buckets[i];
                children.emplace_back(std::move(c), cost);
            }
            if (x.buckets[i] < top) {
                BucketedExample c = x;
                c.raw.clear();
                ++c.buckets[i];
                children.emplace_back(std::move(c), cost);
            }
        }
        for (std::size_t a = 0; a < enc.apps.size(); ++a) {
            BucketedExample c = x;
            c.raw.clear();
            c.app_bits[a] = !c.app_bits[a];
            children.emplace_back(std::move(c), cost);
        }
        return children;
    };
    return g;
}

DollarCostSpec DollarCostSpec::defaults() {
    DollarCostSpec spec;
    spec.mutable_features = {"user_tweeted", "user_replied", "likes_per_tweet",
                             "retweets_per_tweet"};
    spec.unit_prices = {{"user_tweeted", 2.0},
                        {"user_replied", 2.0},
                        {"likes_per_tweet", 0.025},
                        {"retweets_per_tweet", 0.025}};
    return spec;
}

Graph<BucketedExample> make_dollar_graph(DollarCostSpec spec) {
    Graph<BucketedExample> g;
    g.description = "dollar-cost graph (increase-only)";
    g.key = [](const BucketedExample& x) { return dollar_key(x); };
    g.expand = [spec = std::move(spec)](const BucketedExample& x) {
        if (x.raw.empty())
            throw std::invalid_argument("dollar graph: example carries no raw feature values");
        std::vector<std::pair<BucketedExample, double>> children;
        const FeatureEncoder& enc = *x.encoder;
        for (const auto& name : spec.mutable_features) {
            auto idx = enc.numeric_index(name);
            if (!idx)
                throw std::invalid_argument("dollar graph: unknown mutable feature '" + name +
                                            "'");
            auto price_it = spec.unit_prices.find(name);
            if (price_it == spec.unit_prices.end())
                throw std::invalid_argument("dollar graph: no unit price for '" + name + "'");
            const auto& feature = enc.numeric[*idx];
            const int top = static_cast<int>(feature.n_buckets()) - 1;
            const int b = x.buckets[*idx];
            if (b >= top) continue;  // already in the top bucket
            // Lowest endpoint of the destination bucket; the raw-value delta
            // is a lower bound on the units the adversary must add.
            const double endpoint = feature.boundaries[static_cast<std::size_t>(b)];
            const double delta = endpoint - x.raw[*idx];
            const double edge_cost = delta * price_it->second;
            BucketedExample c = x;
            ++c.buckets[*idx];
            c.raw[*idx] = endpoint;
            children.emplace_back(std::move(c), edge_cost);
        }
        return children;
    };
    return g;
}

std::string trace_key(const PacketTrace& x) {
    std::string s;
    s.reserve(x.packets.size());
    for (int p : x.packets) s += p > 0 ? '+' : '-';
    return s;
}

Graph<PacketTrace> make_trace_graph() {
    Graph<PacketTrace> g;
    g.description = "packet-insertion graph, unit edge cost";
    g.min_edge_cost = 1.0;
    g.key = trace_key;
    g.expand = [](const PacketTrace& x) {
        std::vector<std::pair<PacketTrace, double>> children;
        std::set<std::string> seen;
        const std::size_t len = x.packets.size();
        for (std::size_t pos = 0; pos <= len; ++pos) {
            for (int dir : {+1, -1}) {
                PacketTrace c;
                c.packets.reserve(len + 1);
                c.packets.insert(c.packets.end(), x.packets.begin(),
                                 x.packets.begin() + static_cast<std::ptrdiff_t>(pos));
                c.packets.push_back(dir);
                c.packets.insert(c.packets.end(),
                                 x.packets.begin() + static_cast<std::ptrdiff_t>(pos),
                                 x.packets.end());
                if (seen.insert(trace_key(c)).second)
                    children.emplace_back(std::move(c), 1.0);
            }
        }
        return children;
    };
    return g;
}

std::vector<double> cumul_features(const PacketTrace& x) {
    if (x.packets.empty())
        throw std::invalid_argument("cumul_features: empty trace");
    const std::size_t len = x.packets.size();
    std::vector<double> cumul(len);
    double acc = 0.0;
    std::size_t n_in = 0, n_out = 0;
    for (std::size_t i = 0; i < len; ++i) {
        acc += x.packets[i];
        cumul[i] = acc;
        (x.packets[i] > 0 ? n_out : n_in)++;
    }
    std::vector<double> features;
    features.reserve(kCumulDim);
    features.push_back(static_cast<double>(n_in));
    features.push_back(static_cast<double>(n_out));
    // 100 equidistant sample positions over packet indices [1, len].
    for (int k = 0; k < 100; ++k) {
        double pos = len == 1 ? 1.0
                              : 1.0 + static_cast<double>(k) / 99.0 *
                                          static_cast<double>(len - 1);
        double fi = pos - 1.0;
        auto lo = static_cast<std::size_t>(std::floor(fi));
        double frac = fi - static_cast<double>(lo);
        double v = frac == 0.0 || lo + 1 >= len
                       ? cumul[lo]
                       : cumul[lo] * (1.0 - frac) + cumul[lo + 1] * frac;
        features.push_back(v);
    }
    return features;
}

std::vector<std::string> cumul_feature_names() {
    std::vector<std::string> names{"n_incoming", "n_outgoing"};
    for (int k = 0; k < 100; ++k) {
        char tmp[16];
        std::snprintf(tmp, sizeof tmp, "cumul_%02d", k);
        names.emplace_back(tmp);
    }
    return names;
}

namespace {

std::string fmt_dollars(double v) {
    char tmp[48];
    std::snprintf(tmp, sizeof tmp, "$%.3f", v);
    return tmp;
}

}  // namespace

std::vector<std::string> path_to_edits(const std::vector<BucketedExample>& path,
                                       const DollarCostSpec* dollar) {
    std::vector<std::string> edits;
    for (std::size_t step = 0; step + 1 < path.size(); ++step) {
        const BucketedExample& a = path[step];
        const BucketedExample& b = path[step + 1];
        const FeatureEncoder& enc = *a.encoder;
        for (std::size_t i = 0; i < enc.numeric.size(); ++i) {
            if (a.buckets[i] == b.buckets[i]) continue;
            std::string line = enc.numeric[i].name + ": " +
                               bucket_interval(enc.numeric[i], a.buckets[i]) + " -> " +
                               bucket_interval(enc.numeric[i], b.buckets[i]);
            if (dollar && !a.raw.empty() && !b.raw.empty()) {
                double price = dollar->unit_prices.at(enc.numeric[i].name);
                line += " (" + fmt_dollars((b.raw[i] - a.raw[i]) * price) + ")";
            }
            edits.push_back(std::move(line));
        }
        for (std::size_t j = 0; j < enc.apps.size(); ++j) {
            if (a.app_bits[j] == b.app_bits[j]) continue;
            edits.push_back("app " + enc.apps[j] + ": " +
                            (a.app_bits[j] ? "present -> absent" : "absent -> present"));
        }
    }
    return edits;
}

std::vector<std::string> path_to_edits(const std::vector<PacketTrace>& path) {
    std::vector<std::string> edits;
    for (std::size_t step = 0; step + 1 < path.size(); ++step) {
        const auto& a = path[step].packets;
        const auto& b = path[step + 1].packets;
        // First position where the sequences diverge is the insertion point.
        std::size_t pos = 0;
        while (pos < a.size() && a[pos] == b[pos]) ++pos;
        edits.push_back("insert " + std::string(b[pos] > 0 ? "outgoing" : "incoming") +
                        " dummy packet at position " + std::to_string(pos));
    }
    return edits;
}

using nlohmann::json;

GraphConfig load_graph_config_json(const std::string& text) {
    json j = json::parse(text);
    GraphConfig cfg;
    cfg.graph = j.at("graph").get<std::string>();
    if (cfg.graph != "bucket" && cfg.graph != "dollar" && cfg.graph != "trace")
        throw std::invalid_argument("graph config: unknown graph '" + cfg.graph + "'");
    if (j.contains("cost_norm"))
        cfg.cost_norm = norm_kind_from_string(j.at("cost_norm").get<std::string>());
    cfg.dollar = DollarCostSpec::defaults();
    if (j.contains("mutable_features"))
        cfg.dollar.mutable_features = j.at("mutable_features").get<std::vector<std::string>>();
    if (j.contains("unit_prices"))
        cfg.dollar.unit_prices = j.at("unit_prices").get<std::map<std::string, double>>();
    return cfg;
}

GraphConfig load_graph_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph config: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_graph_config_json(ss.str());
}

std::vector<PacketTrace> load_traces(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open trace file: " + path);
    std::vector<PacketTrace> traces;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        PacketTrace t;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            int v = std::stoi(cell);
            if (v != 1 && v != -1)
                throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                         ": packet direction must be +-1");
            t.packets.push_back(v);
        }
        traces.push_back(std::move(t));
    }
    return traces;
}

}  // namespace graphevade
