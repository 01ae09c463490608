// Generates a self-consistent fixture set (dataset, encoder, models, graph
// configs, traces) for CLI tests and demos.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphevade/classifiers.hpp"
#include "graphevade/encoder.hpp"
#include "graphevade/graphs.hpp"

using namespace graphevade;
using nlohmann::json;

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fixture generator: dataset, encoder, models, graph configs, traces"};
    std::string out_dir = ".";
    std::uint64_t seed = 1;
    int n_rows = 40;
    int n_buckets = 5;
    int n_traces = 10;
    int trace_len = 40;
    app.add_option("--out-dir", out_dir, "output directory");
    app.add_option("--seed", seed, "RNG seed");
    app.add_option("--rows", n_rows, "dataset rows");
    app.add_option("--buckets", n_buckets, "buckets per feature");
    app.add_option("--traces", n_traces, "number of packet traces");
    app.add_option("--trace-len", trace_len, "packets per trace");
    CLI11_PARSE(app, argc, argv);

    try {
        std::mt19937_64 rng(seed);
        const std::vector<std::string> features{"user_tweeted", "user_replied",
                                                "likes_per_tweet", "retweets_per_tweet"};
        const std::vector<std::string> apps{"browser", "mobile"};

        std::uniform_real_distribution<double> tweets(0.0, 200.0);
        std::uniform_real_distribution<double> replies(0.0, 100.0);
        std::uniform_real_distribution<double> likes(0.0, 20.0);
        std::uniform_real_distribution<double> retweets(0.0, 10.0);
        std::bernoulli_distribution coin(0.5);

        std::vector<RawRow> rows;
        std::string csv = "user_tweeted,user_replied,likes_per_tweet,retweets_per_tweet,apps\n";
        for (int i = 0; i < n_rows; ++i) {
            RawRow r;
            r.numeric = {std::floor(tweets(rng)), std::floor(replies(rng)), likes(rng),
                         retweets(rng)};
            if (coin(rng)) r.app_list.push_back("browser");
            if (coin(rng)) r.app_list.push_back("mobile");
            char line[160];
            std::snprintf(line, sizeof line, "%g,%g,%.3f,%.3f,", r.numeric[0], r.numeric[1],
                          r.numeric[2], r.numeric[3]);
            csv += line;
            for (std::size_t a = 0; a < r.app_list.size(); ++a)
                csv += (a ? "|" : "") + r.app_list[a];
            csv += "\n";
            rows.push_back(std::move(r));
        }
        write_file(out_dir + "/data.csv", csv);

        auto enc = std::make_shared<FeatureEncoder>(
            fit_encoder(rows, features, apps, n_buckets));
        write_file(out_dir + "/encoder.json", save_encoder_json(*enc));

        // Linear model over the one-hot layout, bias centred on the median
        // discriminant so both classes are populated.
        std::uniform_real_distribution<double> wdist(-1.0, 1.0);
        LinearModel lin;
        lin.feature_names = enc->one_hot_names();
        lin.weights.resize(enc->one_hot_width());
        for (auto& w : lin.weights) w = wdist(rng);
        std::vector<double> scores;
        for (const auto& r : rows) {
            auto x = one_hot(encode(enc, r));
            double s = 0.0;
            for (std::size_t j = 0; j < x.size(); ++j) s += lin.weights[j] * x[j];
            scores.push_back(s);
        }
        std::nth_element(scores.begin(), scores.begin() + scores.size() / 2, scores.end());
        lin.bias = -scores[scores.size() / 2];
        write_file(out_dir + "/model_linear.json",
                   save_model_json(ModelFile{lin, DecisionRule{0.5}}));

        RbfSvmModel rbf;
        rbf.feature_names = enc->one_hot_names();
        rbf.gamma = 0.1;
        std::uniform_int_distribution<std::size_t> pick(0, rows.size() - 1);
        std::uniform_real_distribution<double> cdist(-2.0, 2.0);
        for (int i = 0; i < 6; ++i) {
            rbf.support_vectors.push_back(one_hot(encode(enc, rows[pick(rng)])));
            rbf.dual_coefs.push_back(cdist(rng));
        }
        Model rm = rbf;
        std::vector<double> rscores;
        for (const auto& r : rows) rscores.push_back(discriminant(rm, one_hot(encode(enc, r))));
        std::nth_element(rscores.begin(), rscores.begin() + rscores.size() / 2, rscores.end());
        rbf.intercept = -rscores[rscores.size() / 2];
        write_file(out_dir + "/model_rbf.json",
                   save_model_json(ModelFile{rbf, DecisionRule{0.5}}));

        write_file(out_dir + "/graph_bucket.json",
                   json{{"graph", "bucket"}, {"cost_norm", "l1"}}.dump(2) + "\n");
        auto dspec = DollarCostSpec::defaults();
        write_file(out_dir + "/graph_dollar.json",
                   json{{"graph", "dollar"},
                        {"mutable_features", dspec.mutable_features},
                        {"unit_prices", dspec.unit_prices}}
                           .dump(2) +
                       "\n");
        write_file(out_dir + "/graph_trace.json", json{{"graph", "trace"}}.dump(2) + "\n");

        std::string traces;
        std::vector<PacketTrace> trace_set;
        for (int t = 0; t < n_traces; ++t) {
            PacketTrace tr;
            for (int p = 0; p < trace_len; ++p) tr.packets.push_back(coin(rng) ? 1 : -1);
            for (int p = 0; p < trace_len; ++p)
                traces += (p ? "," : "") + std::to_string(tr.packets[p]);
            traces += "\n";
            trace_set.push_back(std::move(tr));
        }
        write_file(out_dir + "/traces.txt", traces);

        // Linear monitor over CUMUL features. Incoming padding pushes the
        // discriminant down, so insertion attacks toward class 0 terminate.
        LinearModel mon;
        mon.feature_names = cumul_feature_names();
        mon.weights.assign(kCumulDim, 0.0);
        mon.weights[0] = -0.4;  // n_incoming
        mon.weights[1] = 0.15;  // n_outgoing
        std::uniform_real_distribution<double> small(-0.02, 0.02);
        for (std::size_t j = 2; j < kCumulDim; ++j) mon.weights[j] = small(rng);
        std::vector<double> tscores;
        for (const auto& tr : trace_set) {
            auto x = cumul_features(tr);
            double s = 0.0;
            for (std::size_t j = 0; j < x.size(); ++j) s += mon.weights[j] * x[j];
            tscores.push_back(s);
        }
        std::nth_element(tscores.begin(), tscores.begin() + tscores.size() / 2, tscores.end());
        mon.bias = -tscores[tscores.size() / 2] + 0.5;
        write_file(out_dir + "/model_trace.json",
                   save_model_json(ModelFile{mon, DecisionRule{0.5}}));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
