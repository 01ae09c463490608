#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "graphevade/encoder.hpp"
#include "graphevade/graph.hpp"
#include "graphevade/norms.hpp"
#include "graphevade/search.hpp"

namespace graphevade {

std::string bucketed_key(const BucketedExample& x);

// Atomic bucket moves (one feature +-1, down before up) and app-pair flips.
// Every child differs from its parent by exactly two one-hot bits, so the
// edge cost is constant: 2 for L1, sqrt(2) for L2, 1 for Linf.
Graph<BucketedExample> make_bucket_graph(NormKind cost_norm);

double bucket_edge_cost(NormKind cost_norm);

// Increase-only transformations on purchasable features, priced per unit of
// raw change up to the destination bucket's lowest endpoint. Path costs are
// lower bounds on the dollar cost of the chain.
struct DollarCostSpec {
    std::vector<std::string> mutable_features;
    std::map<std::string, double> unit_prices;

    // tweets $2, replies $2, retweet/like $0.025
    static DollarCostSpec defaults();
};

Graph<BucketedExample> make_dollar_graph(DollarCostSpec spec);

// Sequence of packet direction symbols: +1 outgoing, -1 incoming.
struct PacketTrace {
    std::vector<int> packets;
};

std::string trace_key(const PacketTrace& x);

// Insert one dummy packet (either direction) at any position, cost 1 per
// insertion. Children producing identical sequences are deduplicated.
Graph<PacketTrace> make_trace_graph();

// CUMUL representation: [incoming count, outgoing count] followed by 100
// samples of the piecewise-linear interpolation of the cumulative direction
// sum at equidistant positions over [1, len].
std::vector<double> cumul_features(const PacketTrace& x);

inline constexpr std::size_t kCumulDim = 102;

std::vector<std::string> cumul_feature_names();

// One line per path step, naming the changed feature/app/insertion. Dollar
// edit lines carry the per-step cost.
std::vector<std::string> path_to_edits(const std::vector<BucketedExample>& path,
                                       const DollarCostSpec* dollar = nullptr);
std::vector<std::string> path_to_edits(const std::vector<PacketTrace>& path);

// Graph config JSON: {"graph": "bucket"|"dollar"|"trace", "cost_norm": ...,
// "mutable_features": [...], "unit_prices": {...}}.
struct GraphConfig {
    std::string graph = "bucket";
    NormKind cost_norm = NormKind::L1;
    DollarCostSpec dollar;
};

GraphConfig load_graph_config_json(const std::string& text);
GraphConfig load_graph_config_file(const std::string& path);

// Trace file: one trace per line, comma-separated +-1.
std::vector<PacketTrace> load_traces(const std::string& path);

}  // namespace graphevade
