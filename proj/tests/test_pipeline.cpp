#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "hashnet/config.hpp"
#include "hashnet/error.hpp"
#include "hashnet/ingest.hpp"
#include "hashnet/pipeline.hpp"
#include "hashnet/synth.hpp"

using namespace hashnet;
namespace fs = std::filesystem;

namespace {

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() /
                ("hashnet_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    const fs::path &path() const { return path_; }

private:
    static inline int counter_ = 0;
    fs::path path_;
};

void write_file(const fs::path &p, const std::string &text) {
    fs::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << text;
}

std::string read_file(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SynthCorpus athens_like() {
    return generate_corpus(
        synth_config_from_json(load_json_file(fs::path(HASHNET_FIXTURES) / "athens_like.json")));
}

void write_corpus(const SynthCorpus &c, const fs::path &dir) {
    std::ostringstream t, a, f;
    write_tweets(t, c.tweets);
    write_accounts(a, c.accounts);
    write_follows(f, c.follows);
    write_file(dir / "tweets.jsonl", t.str());
    write_file(dir / "accounts.jsonl", a.str());
    write_file(dir / "follows.jsonl", f.str());
}

RunConfig config_for(const fs::path &corpus_dir, const fs::path &out) {
    RunConfig c;
    apply_run_config(c, load_json_file(fs::path(HASHNET_FIXTURES) / "athens_like_run.json"),
                     HASHNET_FIXTURES);
    c.tweets = corpus_dir / "tweets.jsonl";
    c.accounts = corpus_dir / "accounts.jsonl";
    c.follows = corpus_dir / "follows.jsonl";
    c.output_dir = out;
    return c;
}

int run_cli(const std::string &args, const fs::path &log) {
    const std::string cmd =
        std::string(HASHNET_CLI) + " " + args + " > '" + log.string() + "' 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST(Pipeline, AthensLikeFixture) {
    TempDir tmp;
    write_corpus(athens_like(), tmp.path() / "corpus");
    auto config = config_for(tmp.path() / "corpus", tmp.path() / "out");
    auto run = run_analysis(config);
    EXPECT_EQ(run.report.summary.node_count, 527u);
    EXPECT_EQ(run.report.summary.edge_count, 1947u);
    for (const char *name : {"report.json", "report.txt", "metrics.csv", "distributions.json",
                             "network.graphml", "network.dot", "network_edges.csv",
                             "layer_F_edges.csv", "layer_M_edges.csv", "layer_R_edges.csv",
                             "manifest.json"})
        EXPECT_TRUE(run.files.count(name)) << name;
    write_output_tree(run.files, config.output_dir);
    for (const auto &[name, contents] : run.files)
        EXPECT_EQ(read_file(config.output_dir / name), contents);

    auto again = run_analysis(config);
    EXPECT_EQ(again.files, run.files);
}

TEST(Pipeline, EveryOutputCarriesSchemaVersion) {
    TempDir tmp;
    write_corpus(athens_like(), tmp.path() / "corpus");
    auto run = run_analysis(config_for(tmp.path() / "corpus", tmp.path() / "out"));
    for (const auto &[name, contents] : run.files) {
        if (name.ends_with(".json")) {
            EXPECT_EQ(nlohmann::json::parse(contents)["schema_version"], kSchemaVersion) << name;
        } else if (name.ends_with(".graphml") || name.ends_with(".dot")) {
            EXPECT_NE(contents.find("schema_version"), std::string::npos) << name;
        }
    }
    auto manifest = nlohmann::json::parse(run.files.at("manifest.json"));
    EXPECT_EQ(manifest["files"].size(), run.files.size() - 1);
}

TEST(Pipeline, IndicatorsMatchIndependentRecount) {
    TempDir tmp;
    const SynthCorpus corpus = athens_like();
    write_corpus(corpus, tmp.path() / "corpus");
    auto config = config_for(tmp.path() / "corpus", tmp.path() / "out");
    config.layers = {RelationKind::Follows, RelationKind::Mentions, RelationKind::Replies};
    auto run = run_analysis(config);
    const auto &ci = run.report.community;

    // Recount from the raw records without the layer builder.
    std::set<std::string> authors;
    std::size_t with_url = 0;
    std::set<std::pair<std::string, std::string>> conv, all;
    for (const auto &t : corpus.tweets) {
        authors.insert(t.author_id);
        with_url += t.url_count > 0;
        auto add = [&](const std::optional<std::string> &x) {
            if (x && *x != t.author_id)
                conv.emplace(t.author_id, *x);
        };
        for (const auto &m : t.mentioned_account_ids)
            add(m);
        add(t.retweet_of_author_id);
        add(t.reply_to_author_id);
    }
    all = conv;
    for (const auto &f : corpus.follows)
        if (authors.count(f.follower_id) && authors.count(f.followed_id))
            all.emplace(f.follower_id, f.followed_id);
    std::set<std::string> conv_nodes, all_nodes(authors);
    for (const auto &[s, t] : conv) {
        conv_nodes.insert(s);
        conv_nodes.insert(t);
        all_nodes.insert(t);
    }

    const double url = static_cast<double>(with_url) / static_cast<double>(corpus.tweets.size());
    const double edge_ratio = static_cast<double>(conv.size()) / static_cast<double>(all.size());
    const double vertex_ratio =
        static_cast<double>(conv_nodes.size()) / static_cast<double>(all_nodes.size());
    EXPECT_DOUBLE_EQ(*ci.url_tweet_fraction, url);
    EXPECT_DOUBLE_EQ(*ci.interactivity_edge_ratio, edge_ratio);
    EXPECT_DOUBLE_EQ(*ci.interactivity_vertex_ratio, vertex_ratio);

    // Largest weak component by repeated label propagation.
    std::map<std::string, std::string> label;
    for (const auto &n : all_nodes)
        label[n] = n;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto &[s, t] : all) {
            auto lo = std::min(label[s], label[t]);
            if (label[s] != lo || label[t] != lo) {
                label[s] = label[t] = lo;
                changed = true;
            }
        }
    }
    std::map<std::string, std::size_t> sizes;
    for (const auto &[n, l] : label)
        ++sizes[l];
    std::size_t largest = 0;
    for (const auto &[l, s] : sizes)
        largest = std::max(largest, s);
    const double share = static_cast<double>(largest) / static_cast<double>(all_nodes.size());
    EXPECT_DOUBLE_EQ(*ci.main_component_node_share, share);

    const auto &th = run.report.thresholds;
    EXPECT_EQ(ci.verdicts.informational, url >= th.url_tweet_fraction);
    EXPECT_EQ(ci.verdicts.interactive, edge_ratio >= th.interactivity_edge_ratio);
    EXPECT_EQ(ci.verdicts.membership, share >= th.main_component_node_share);
    EXPECT_EQ(ci.verdicts.high_centers,
              ci.high_center_max_over_mean && *ci.high_center_max_over_mean >= th.high_center_max_over_mean);
}

TEST(Pipeline, EmptyCorpusFails) {
    TempDir tmp;
    write_file(tmp.path() / "corpus/tweets.jsonl", "");
    write_file(tmp.path() / "corpus/accounts.jsonl", "");
    write_file(tmp.path() / "corpus/follows.jsonl", "");
    try {
        run_analysis(config_for(tmp.path() / "corpus", tmp.path() / "out"));
        FAIL();
    } catch (const InputError &e) {
        EXPECT_STREQ(e.what(), "empty corpus after filtering");
    }
}

TEST(Pipeline, FailedWriteRemovesPartialOutput) {
    TempDir tmp;
    fs::create_directories(tmp.path() / "out" / "b.txt"); // a directory where a file should go
    EXPECT_THROW(write_output_tree({{"a.txt", "1"}, {"b.txt", "2"}}, tmp.path() / "out"), InputError);
    EXPECT_FALSE(fs::exists(tmp.path() / "out" / "a.txt"));
}

TEST(Pipeline, ExitCodes) {
    EXPECT_EQ(exit_code_for(ConvergenceError("pagerank", 0.1)), 2);
    EXPECT_EQ(exit_code_for(UndefinedMetricError("x")), 2);
    EXPECT_EQ(exit_code_for(UndefinedRatioError("x")), 2);
    EXPECT_EQ(exit_code_for(InputError("x")), 1);
    EXPECT_EQ(exit_code_for(ValidationError("f", "x")), 1);
}

TEST(Cli, SubcommandsAndExitCodes) {
    TempDir tmp;
    const fs::path log = tmp.path() / "log.txt";
    const std::string fixtures = HASHNET_FIXTURES;
    const std::string corpus = (tmp.path() / "corpus").string();
    const std::string out = (tmp.path() / "out").string();

    ASSERT_EQ(run_cli("synth --config " + fixtures + "/athens_like.json --out " + corpus, log), 0);
    const std::string support = " --config " + fixtures + "/athens_like_run.json --accounts " +
                                corpus + "/accounts.jsonl --follows " + corpus + "/follows.jsonl";
    const std::string inputs = support + " --tweets " + corpus + "/tweets.jsonl";

    ASSERT_EQ(run_cli("analyze" + inputs + " --out " + out, log), 0);
    EXPECT_NE(read_file(log).find("METRICS OF THE F NETWORK"), std::string::npos);
    EXPECT_TRUE(fs::exists(fs::path(out) / "report.json"));

    EXPECT_EQ(run_cli("compare " + out + "/report.json " + out + "/report.json", log), 0);
    EXPECT_NE(read_file(log).find("\"equal\""), std::string::npos);

    EXPECT_EQ(run_cli("export" + inputs + " --format edge-csv", log), 0);
    EXPECT_EQ(read_file(log).rfind("source,target\n", 0), 0u);
    EXPECT_EQ(run_cli("export" + inputs + " --format gexf", log), 1);

    // Convergence failure maps to exit code 2 and leaves no output behind.
    const std::string failed = (tmp.path() / "failed").string();
    EXPECT_EQ(run_cli("analyze" + inputs + " --pagerank-tolerance 1e-300 --pagerank-max-iterations 1"
                      " --out " + failed, log),
              2);
    EXPECT_FALSE(fs::exists(fs::path(failed) / "report.json"));

    write_file(tmp.path() / "empty.jsonl", "");
    EXPECT_EQ(run_cli("analyze" + support + " --tweets " + (tmp.path() / "empty.jsonl").string() +
                          " --out " + failed,
                      log),
              1);
    EXPECT_NE(read_file(log).find("empty corpus after filtering"), std::string::npos);

    EXPECT_EQ(run_cli("analyze --tweets /nonexistent.jsonl --accounts x --follows y --out " + failed, log), 1);
    EXPECT_EQ(run_cli("analyze" + inputs + " --top-k 0 --out " + failed, log), 1);
    EXPECT_NE(read_file(log).find("analysis.top_k"), std::string::npos);
    EXPECT_EQ(run_cli("frobnicate", log), 1);
}
