#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <stdexcept>

#include "fixtures.hpp"
#include "graphevade/graphs.hpp"
#include "graphevade/search.hpp"

using namespace graphevade;
using namespace gevtest;

namespace {

double one_hot_distance(const BucketedExample& a, const BucketedExample& b, NormKind norm) {
    auto va = one_hot(a);
    auto vb = one_hot(b);
    std::vector<double> diff(va.size());
    for (std::size_t i = 0; i < va.size(); ++i) diff[i] = va[i] - vb[i];
    return norm_of(NormSpec{norm, {}}, diff);
}

std::shared_ptr<const FeatureEncoder> dollar_encoder() {
    auto enc = std::make_shared<FeatureEncoder>();
    enc->numeric.push_back({"user_tweeted", {8.0, 20.0}});
    enc->numeric.push_back({"likes_per_tweet", {2.5, 10.0}});
    enc->requested_buckets = 3;
    return enc;
}

}  // namespace

TEST_CASE("bucket graph children and edge costs") {
    auto enc = make_test_encoder(3, 4, 2);
    auto g = make_bucket_graph(NormKind::L1);

    BucketedExample mid;
    mid.encoder = enc;
    mid.buckets = {1, 2, 1};
    mid.app_bits = {false, true};
    auto children = g.expand(mid);
    CHECK(children.size() == 2 * 3 + 2);  // two moves per feature plus app flips

    // every edge flips exactly two one-hot bits
    for (const auto& [child, cost] : children) {
        CHECK(cost == 2.0);
        CHECK(one_hot_distance(mid, child, NormKind::L1) == 2.0);
        CHECK(one_hot_distance(mid, child, NormKind::LInf) == 1.0);
        CHECK(one_hot_distance(mid, child, NormKind::L2) ==
              doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    }

    // down-move comes before up-move for each feature
    CHECK(children[0].first.buckets == std::vector<int>{0, 2, 1});
    CHECK(children[1].first.buckets == std::vector<int>{2, 2, 1});

    BucketedExample corner;
    corner.encoder = enc;
    corner.buckets = {0, 0, 3};
    corner.app_bits = {false, false};
    CHECK(g.expand(corner).size() == 3 + 2);  // one move per feature at the extremes

    CHECK(bucket_edge_cost(NormKind::L2) == doctest::Approx(std::sqrt(2.0)));
    CHECK(bucket_edge_cost(NormKind::LInf) == 1.0);
    CHECK_THROWS_AS(bucket_edge_cost(NormKind::WeightedL1), std::invalid_argument);
}

TEST_CASE("bucketed_key identifies states and ignores raw values") {
    auto enc = make_test_encoder(2, 3, 1);
    BucketedExample a;
    a.encoder = enc;
    a.buckets = {0, 2};
    a.app_bits = {true};
    BucketedExample b = a;
    b.raw = {0.5, 99.0};
    CHECK(bucketed_key(a) == bucketed_key(b));
    b.buckets[1] = 1;
    CHECK(bucketed_key(a) != bucketed_key(b));
    b.buckets[1] = 2;
    b.app_bits[0] = false;
    CHECK(bucketed_key(a) != bucketed_key(b));
}

TEST_CASE("dollar graph prices the raw gap to the next bucket") {
    auto enc = dollar_encoder();
    DollarCostSpec spec;
    spec.mutable_features = {"user_tweeted", "likes_per_tweet"};
    spec.unit_prices = {{"user_tweeted", 2.0}, {"likes_per_tweet", 0.025}};
    auto g = make_dollar_graph(spec);

    BucketedExample x;
    x.encoder = enc;
    x.buckets = {0, 1};
    x.app_bits = {};
    x.raw = {5.0, 6.0};
    auto children = g.expand(x);
    REQUIRE(children.size() == 2);

    // 5 tweets -> 8 tweets at $2 each
    CHECK(children[0].second == doctest::Approx(6.0));
    CHECK(children[0].first.buckets == std::vector<int>{1, 1});
    CHECK(children[0].first.raw[0] == 8.0);

    // 6 likes/tweet -> 10 at $0.025 each
    CHECK(children[1].second == doctest::Approx(0.1));
    CHECK(children[1].first.raw[1] == 10.0);

    // increase-only: features already in the top bucket stay put
    BucketedExample top;
    top.encoder = enc;
    top.buckets = {2, 2};
    top.raw = {30.0, 12.0};
    CHECK(g.expand(top).empty());

    BucketedExample no_raw;
    no_raw.encoder = enc;
    no_raw.buckets = {0, 0};
    CHECK_THROWS_AS(g.expand(no_raw), std::invalid_argument);

    DollarCostSpec bad = spec;
    bad.mutable_features.push_back("followers");
    CHECK_THROWS_AS(make_dollar_graph(bad).expand(x), std::invalid_argument);

    auto defaults = DollarCostSpec::defaults();
    CHECK(defaults.unit_prices.at("user_tweeted") == 2.0);
    CHECK(defaults.unit_prices.at("likes_per_tweet") == 0.025);
}

TEST_CASE("dollar graph search reports an unreachable goal") {
    auto enc = dollar_encoder();
    DollarCostSpec spec;
    spec.mutable_features = {"user_tweeted"};
    spec.unit_prices = {{"user_tweeted", 2.0}};
    auto g = make_dollar_graph(spec);

    BucketedExample x;
    x.encoder = enc;
    x.buckets = {0, 0};
    x.raw = {1.0, 1.0};
    auto never = [](const BucketedExample&) { return false; };
    auto r = run_search(g, zero_heuristic<BucketedExample>(), GoalFn<BucketedExample>(never),
                        x, SearchConfig{Algorithm::UCS});
    CHECK(r.status == SearchStatus::NO_GOAL_REACHABLE);
    CHECK(r.expansions == 3);  // buckets 0, 1, 2 of the single mutable feature
}

TEST_CASE("trace graph insertion children") {
    auto g = make_trace_graph();

    PacketTrace t{{+1, +1}};
    auto children = g.expand(t);
    REQUIRE(children.size() == 4);  // six insertions, three collapse to +++
    std::set<std::string> keys;
    for (const auto& [c, cost] : children) {
        CHECK(cost == 1.0);
        CHECK(c.packets.size() == 3);
        keys.insert(trace_key(c));
    }
    CHECK(keys == std::set<std::string>{"+++", "-++", "+-+", "++-"});

    // +1 insertion at a position precedes the -1 insertion there
    CHECK(trace_key(children[0].first) == "+++");
    CHECK(trace_key(children[1].first) == "-++");

    CHECK(g.expand(PacketTrace{{}}).size() == 2);

    // parent is a subsequence of every child
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coin(0, 1);
    PacketTrace parent;
    for (int i = 0; i < 12; ++i) parent.packets.push_back(coin(rng) ? +1 : -1);
    for (const auto& [c, cost] : g.expand(parent)) {
        auto it = c.packets.begin();
        bool subseq = true;
        for (int p : parent.packets) {
            it = std::find(it, c.packets.end(), p);
            if (it == c.packets.end()) {
                subseq = false;
                break;
            }
            ++it;
        }
        CHECK(subseq);
    }
}

TEST_CASE("cumul features") {
    auto f = cumul_features(PacketTrace{{+1, +1, +1, +1}});
    REQUIRE(f.size() == kCumulDim);
    CHECK(f[0] == 0.0);  // incoming
    CHECK(f[1] == 4.0);  // outgoing
    // cumulative sum is the straight line 1..4, so samples interpolate it exactly
    CHECK(f[2] == doctest::Approx(1.0));
    CHECK(f.back() == doctest::Approx(4.0));
    for (int k = 0; k < 100; ++k)
        CHECK(f[static_cast<std::size_t>(2 + k)] ==
              doctest::Approx(1.0 + 3.0 * k / 99.0).epsilon(1e-12));

    auto g = cumul_features(PacketTrace{{+1, -1}});
    CHECK(g[0] == 1.0);
    CHECK(g[1] == 1.0);
    CHECK(g[2] == doctest::Approx(1.0));   // cumul (1, 0): starts at 1
    CHECK(g.back() == doctest::Approx(0.0));
    CHECK(g[51] == doctest::Approx(1.0 - 49.0 / 99.0));

    auto h = cumul_features(PacketTrace{{-1}});
    CHECK(h[0] == 1.0);
    CHECK(h[1] == 0.0);
    for (int k = 0; k < 100; ++k) CHECK(h[static_cast<std::size_t>(2 + k)] == -1.0);

    CHECK_THROWS_AS(cumul_features(PacketTrace{{}}), std::invalid_argument);

    auto names = cumul_feature_names();
    REQUIRE(names.size() == kCumulDim);
    CHECK(names[0] == "n_incoming");
    CHECK(names[1] == "n_outgoing");
    CHECK(names[2] == "cumul_00");
    CHECK(names.back() == "cumul_99");
}

TEST_CASE("path_to_edits renders bucket moves, app flips and insertions") {
    auto enc = make_test_encoder(2, 3, 1);
    BucketedExample a;
    a.encoder = enc;
    a.buckets = {0, 1};
    a.app_bits = {false};
    BucketedExample b = a;
    b.buckets = {1, 1};
    BucketedExample c = b;
    c.app_bits = {true};
    auto edits = path_to_edits(std::vector<BucketedExample>{a, b, c});
    REQUIRE(edits.size() == 2);
    CHECK(edits[0] == "f0: [min, 1] -> (1, 2]");
    CHECK(edits[1] == "app app0: absent -> present");

    // edit count tracks the path cost: L1 cost 2 per change
    double cost = 2.0 * static_cast<double>(edits.size());
    CHECK(cost == 4.0);

    auto denc = dollar_encoder();
    DollarCostSpec spec;
    spec.mutable_features = {"user_tweeted"};
    spec.unit_prices = {{"user_tweeted", 2.0}};
    BucketedExample d0;
    d0.encoder = denc;
    d0.buckets = {0, 0};
    d0.raw = {5.0, 1.0};
    auto g = make_dollar_graph(spec);
    auto step = g.expand(d0)[0];
    auto dollar_edits =
        path_to_edits(std::vector<BucketedExample>{d0, step.first}, &spec);
    REQUIRE(dollar_edits.size() == 1);
    CHECK(dollar_edits[0] == "user_tweeted: [min, 8] -> (8, 20] ($6.000)");

    auto trace_edits = path_to_edits(
        std::vector<PacketTrace>{PacketTrace{{+1, +1}}, PacketTrace{{+1, -1, +1}}});
    REQUIRE(trace_edits.size() == 1);
    CHECK(trace_edits[0] == "insert incoming dummy packet at position 1");
}

TEST_CASE("graph config and trace file loading") {
    auto cfg = load_graph_config_json(R"({"graph": "bucket", "cost_norm": "linf"})");
    CHECK(cfg.graph == "bucket");
    CHECK(cfg.cost_norm == NormKind::LInf);

    auto dcfg = load_graph_config_json(
        R"({"graph": "dollar", "mutable_features": ["x"], "unit_prices": {"x": 1.5}})");
    CHECK(dcfg.dollar.mutable_features == std::vector<std::string>{"x"});
    CHECK(dcfg.dollar.unit_prices.at("x") == 1.5);

    CHECK_THROWS_AS(load_graph_config_json(R"({"graph": "mesh"})"), std::invalid_argument);

    const char* path = "test_graphs_traces.txt";
    {
        std::ofstream out(path);
        out << "1,-1,1\n";
        out << "\n";
        out << "-1,-1\n";
    }
    auto traces = load_traces(path);
    REQUIRE(traces.size() == 2);
    CHECK(traces[0].packets == std::vector<int>{1, -1, 1});
    CHECK(traces[1].packets == std::vector<int>{-1, -1});
    {
        std::ofstream out(path);
        out << "1,2\n";
    }
    CHECK_THROWS(load_traces(path));
    std::remove(path);
}

TEST_CASE("search over the bucket graph reaches a goal optimally") {
    std::mt19937_64 rng(23);
    auto enc = make_test_encoder(3, 5, 2);
    for (int trial = 0; trial < 20; ++trial) {
        auto model = random_linear_over(*enc, rng);
        GoalPredicate goal{1, 0.5};
        auto x = random_example(enc, rng);
        auto goal_fn = bucket_goal(model, goal);
        if (goal_fn(x)) continue;  // already misclassified, nothing to search for
        auto g = make_bucket_graph(NormKind::L1);

        auto ucs = run_search(g, zero_heuristic<BucketedExample>(), goal_fn, x,
                              SearchConfig{Algorithm::UCS});
        auto astar = run_search(g, bucket_linear_heuristic(model, goal, NormSpec::l1()),
                                goal_fn, x, SearchConfig{Algorithm::ASTAR});
        if (ucs.status != SearchStatus::FOUND) {
            CHECK(astar.status == ucs.status);
            continue;
        }
        REQUIRE(astar.status == SearchStatus::FOUND);
        CHECK(astar.path_cost == doctest::Approx(ucs.path_cost).epsilon(1e-12));
        CHECK(astar.guarantee.kind == GuaranteeKind::OPTIMAL);
        // every path step is one atomic change at the constant edge cost
        CHECK(ucs.path_cost ==
              doctest::Approx(2.0 * static_cast<double>(ucs.path.size() - 1)));
        CHECK(goal_fn(ucs.path.back()));
        CHECK_FALSE(goal_fn(ucs.path.front()));
    }
}
