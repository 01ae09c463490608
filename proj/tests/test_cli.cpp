// End-to-end tests driving the CLI binary. argv: <cli-binary> <fixtures-binary>.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string g_cli;
std::string g_fixtures;
std::string g_dir;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.output.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<json> parse_jsonl(const std::string& text) {
    std::vector<json> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty()) out.push_back(json::parse(line));
    return out;
}

std::string fx(const std::string& name) { return g_dir + "/" + name; }

std::string common_bucket_flags() {
    return " --model " + fx("model_linear.json") + " --data " + fx("data.csv") +
           " --encoder " + fx("encoder.json") + " --graph " + fx("graph_bucket.json");
}

}  // namespace

TEST_CASE("attack emits one valid record per source-class example") {
    auto r = run(g_cli + " attack" + common_bucket_flags() + " --algorithm astar");
    REQUIRE(r.exit_code == 0);
    auto records = parse_jsonl(r.output);
    REQUIRE(!records.empty());
    for (const auto& rec : records) {
        for (const char* field :
             {"example_id", "initial_confidence", "status", "path_cost", "num_changes",
              "expansions", "max_open_size", "runtime_ms", "guarantee", "edits"})
            CHECK(rec.contains(field));
        std::string status = rec["status"];
        CHECK((status == "FOUND" || status == "EXHAUSTED" || status == "EXPANSION_CAP" ||
               status == "NO_GOAL_REACHABLE"));
        CHECK(rec["runtime_ms"] == 0.0);  // timings are off by default
        if (status == "FOUND") {
            CHECK(rec["guarantee"] == "OPTIMAL");
            // L1 bucket edges cost 2: change count is half the path cost
            CHECK(rec["path_cost"].get<double>() ==
                  2.0 * rec["num_changes"].get<double>());
            CHECK(rec["edits"].size() == rec["num_changes"].get<std::size_t>());
        }
    }
}

TEST_CASE("attack output is byte-identical across runs") {
    std::string out1 = g_dir + "/run1.jsonl", out2 = g_dir + "/run2.jsonl";
    std::string flags = common_bucket_flags() +
                        " --algorithm wastar --epsilon 3 --confidence 0.75 --seed 42";
    REQUIRE(run(g_cli + " attack" + flags + " --out " + out1).exit_code == 0);
    REQUIRE(run(g_cli + " attack" + flags + " --out " + out2).exit_code == 0);
    CHECK(slurp(out1) == slurp(out2));
    CHECK(!slurp(out1).empty());
}

TEST_CASE("high-confidence goal never finds cheaper paths") {
    auto base = parse_jsonl(
        run(g_cli + " attack" + common_bucket_flags() + " --algorithm ucs --heuristic zero")
            .output);
    auto high = parse_jsonl(run(g_cli + " attack" + common_bucket_flags() +
                                " --algorithm ucs --heuristic zero --confidence 0.75")
                                .output);
    REQUIRE(base.size() == high.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (base[i]["status"] != "FOUND" || high[i]["status"] != "FOUND") continue;
        CHECK(high[i]["path_cost"].get<double>() >= base[i]["path_cost"].get<double>());
    }
}

TEST_CASE("hill climbing honors the iteration cap") {
    auto r = run(g_cli + " attack --model " + fx("model_trace.json") + " --data " +
                 fx("traces.txt") + " --graph trace --algorithm hillclimb" +
                 " --max-iterations 5000");
    REQUIRE(r.exit_code == 0);
    auto records = parse_jsonl(r.output);
    REQUIRE(!records.empty());
    for (const auto& rec : records) {
        CHECK(rec["expansions"].get<std::size_t>() <= 5000);
        CHECK(rec["guarantee"] == "NONE");
        if (rec["status"] == "FOUND")
            CHECK(rec["num_changes"].get<double>() == rec["path_cost"].get<double>());
    }
}

TEST_CASE("compare table lists every algorithm") {
    auto r = run(g_cli + " compare" + common_bucket_flags() + " --random-baseline --seed 3");
    REQUIRE(r.exit_code == 0);
    for (const char* name :
         {"ucs", "astar", "wastar(e=2)", "wastar(e=3)", "wastar(e=5)", "wastar(e=10)",
          "hillclimb", "random(10x)"})
        CHECK(r.output.find(name) != std::string::npos);
}

TEST_CASE("audit exit codes") {
    std::string flags = common_bucket_flags() + " --samples 40 --depth-cap 4 --seed 9";

    auto ok = run(g_cli + " audit" + flags);
    CHECK(ok.exit_code == 0);
    auto report = json::parse(ok.output);
    CHECK(report["admissibility"]["violations"].empty());
    CHECK(report["consistency"]["violations"].empty());
    CHECK(report["admissibility"]["checked"].get<int>() +
              report["admissibility"]["inconclusive"].get<int>() ==
          40);

    // non-admissible heuristic: violations allowed, banner, exit 0
    auto taylor = run(g_cli + " audit --model " + fx("model_rbf.json") + " --data " +
                      fx("data.csv") + " --encoder " + fx("encoder.json") + " --graph " +
                      fx("graph_bucket.json") + " --heuristic taylor --samples 40" +
                      " --depth-cap 4 --seed 9");
    CHECK(taylor.exit_code == 0);

    // inflating an admissible heuristic must trip the audit
    auto inflated = run(g_cli + " audit" + flags + " --heuristic distance --epsilon 10");
    CHECK(inflated.exit_code == 1);
    CHECK(inflated.output.find("admissibility audit failed") != std::string::npos);
}

TEST_CASE("encode fits pinned quantile boundaries and applies them") {
    std::string csv = g_dir + "/quant.csv";
    {
        std::ofstream out(csv);
        out << "x\n";
        for (int i = 1; i <= 100; ++i) out << i << "\n";
    }
    std::string enc_path = g_dir + "/quant_encoder.json";
    auto fit = run(g_cli + " encode --data " + csv + " --fit --buckets 4 --out " + enc_path);
    REQUIRE(fit.exit_code == 0);
    auto enc = json::parse(slurp(enc_path));
    auto b = enc["features"]["x"].get<std::vector<double>>();
    REQUIRE(b.size() == 3);
    CHECK(b[0] == doctest::Approx(25.75));
    CHECK(b[1] == doctest::Approx(50.5));
    CHECK(b[2] == doctest::Approx(75.25));

    auto applied = run(g_cli + " encode --data " + csv + " --encoder " + enc_path);
    REQUIRE(applied.exit_code == 0);
    auto rows = parse_jsonl(applied.output);
    REQUIRE(rows.size() == 100);
    CHECK(rows[0]["buckets"] == json::array({0}));
    CHECK(rows[0]["intervals"]["x"] == "[min, 25.75]");
    CHECK(rows[30]["intervals"]["x"] == "(25.75, 50.5]");
    CHECK(rows[99]["intervals"]["x"] == "(75.25, max]");
}

TEST_CASE("config errors exit nonzero with a message") {
    auto bad_alg = run(g_cli + " attack" + common_bucket_flags() + " --algorithm bogus");
    CHECK(bad_alg.exit_code == 2);
    CHECK(bad_alg.output.find("unknown algorithm") != std::string::npos);

    auto bad_model = run(g_cli + " attack --model /nonexistent.json --data " + fx("data.csv") +
                         " --encoder " + fx("encoder.json"));
    CHECK(bad_model.exit_code == 2);

    auto bad_eps = run(g_cli + " attack" + common_bucket_flags() +
                       " --algorithm wastar --epsilon 0.5");
    CHECK(bad_eps.exit_code == 2);

    auto no_encoder = run(g_cli + " attack --model " + fx("model_linear.json") + " --data " +
                          fx("data.csv"));
    CHECK(no_encoder.exit_code == 2);
    CHECK(no_encoder.output.find("--encoder") != std::string::npos);

    CHECK(run(g_cli + " attack").exit_code != 0);  // missing required flags
}

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <cli-binary> <fixtures-binary> [doctest args]\n",
                     argv[0]);
        return 1;
    }
    g_cli = argv[1];
    g_fixtures = argv[2];

    char tmpl[] = "/tmp/graphevade-cli-XXXXXX";
    if (!mkdtemp(tmpl)) {
        std::perror("mkdtemp");
        return 1;
    }
    g_dir = tmpl;
    auto gen = run(g_fixtures + " --out-dir " + g_dir + " --seed 7");
    if (gen.exit_code != 0) {
        std::fprintf(stderr, "fixture generation failed:\n%s\n", gen.output.c_str());
        return 1;
    }

    doctest::Context ctx;
    ctx.applyCommandLine(argc - 2, argv + 2);
    return ctx.run();
}
