#include "hashnet/synth.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <optional>
#include <random>
#include <unordered_set>

#include "hashnet/error.hpp"

namespace hashnet {

namespace {

// Portable draws on top of mt19937_64, whose output sequence is fixed by the
// standard. The std:: distributions are implementation-defined, so they are
// avoided to keep corpora identical across standard libraries.
class Random {
public:
    explicit Random(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::size_t index(std::size_t n) {
        auto i = static_cast<std::size_t>(uniform() * static_cast<double>(n));
        return i < n ? i : n - 1;
    }

    bool chance(double p) { return uniform() < p; }

    // Knuth's multiplication method; fine for the small means used here.
    std::int64_t poisson(double mean) {
        if (mean <= 0.0)
            return 0;
        const double limit = std::exp(-mean);
        std::int64_t k = 0;
        double p = uniform();
        while (p > limit) {
            ++k;
            p *= uniform();
        }
        return k;
    }

private:
    std::mt19937_64 engine_;
};

// Fenwick tree over nonnegative weights with weighted sampling.
class WeightedSampler {
public:
    explicit WeightedSampler(std::size_t n) : tree_(n + 1, 0.0), weight_(n, 0.0) {
        while ((std::size_t{1} << (log_ + 1)) <= n)
            ++log_;
    }

    void set(std::size_t i, double w) {
        const double delta = w - weight_[i];
        weight_[i] = w;
        for (std::size_t k = i + 1; k < tree_.size(); k += k & (~k + 1))
            tree_[k] += delta;
    }

    double total() const {
        double s = 0.0;
        for (std::size_t k = tree_.size() - 1; k > 0; k -= k & (~k + 1))
            s += tree_[k];
        return s;
    }

    /// Index i such that prefix(i) <= u * total < prefix(i + 1).
    std::size_t sample(double u) const {
        double target = u * total();
        std::size_t pos = 0;
        for (std::size_t step = std::size_t{1} << log_; step > 0; step >>= 1) {
            if (pos + step < tree_.size() && tree_[pos + step] <= target) {
                pos += step;
                target -= tree_[pos];
            }
        }
        // Rounding can land past the last positive weight.
        while (pos >= weight_.size() || weight_[pos] <= 0.0) {
            if (pos == 0)
                break;
            --pos;
        }
        return pos;
    }

private:
    std::vector<double> tree_;
    std::vector<double> weight_;
    std::size_t log_ = 0;
};

std::string padded_id(char prefix, std::size_t i, int width) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%c%0*zu", prefix, width, i);
    return buf;
}

void check_probability(const char *field, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw ValidationError(field, "must be a probability in [0, 1]");
}

constexpr std::array<const char *, 16> kWords{
    "acropolis", "news",   "tonight", "concert", "traffic", "metro", "protest", "sunny",
    "music",     "museum", "market",  "update",  "live",    "photo", "coffee",  "parliament"};

} // namespace

void SynthConfig::validate() const {
    if (account_count < 1)
        throw ValidationError("account_count", "must be at least 1");
    const auto &m = category_mix;
    for (double f : {m.org, m.jmb, m.oi, m.other})
        if (!(f >= 0.0))
            throw ValidationError("category_mix", "fractions must be nonnegative");
    if (std::abs(m.org + m.jmb + m.oi + m.other - 1.0) > 1e-9)
        throw ValidationError("category_mix", "fractions must sum to 1");
    if (!(follow_attachment_exponent >= 0.0) || !std::isfinite(follow_attachment_exponent))
        throw ValidationError("follow_attachment_exponent", "must be finite and >= 0");
    const double max_edges =
        static_cast<double>(account_count) * static_cast<double>(account_count - 1);
    if (follow_edges_target < 0 || static_cast<double>(follow_edges_target) > max_edges)
        throw ValidationError("follow_edges_target", "must lie in [0, N(N-1)]");
    if (!(tweets_per_account_mean > 0.0) || !std::isfinite(tweets_per_account_mean))
        throw ValidationError("tweets_per_account_mean", "must be > 0");
    check_probability("mention_rate", mention_rate);
    check_probability("retweet_rate", retweet_rate);
    check_probability("reply_rate", reply_rate);
    check_probability("url_rate", url_rate);
    if (hashtag.empty() || hashtag == "#")
        throw ValidationError("hashtag", "must be nonempty");
    for (char c : hashtag)
        if (std::isspace(static_cast<unsigned char>(c)))
            throw ValidationError("hashtag", "must not contain whitespace");
    if (!(window_start < window_end))
        throw ValidationError("window", "window_start must precede window_end");
}

SynthCorpus generate_corpus(const SynthConfig &config) {
    config.validate();
    Random rng(config.seed);
    const auto n = static_cast<std::size_t>(config.account_count);
    const int width = std::max(5, static_cast<int>(std::to_string(n).size()));
    std::string tag = config.hashtag;
    if (tag.front() == '#')
        tag.erase(0, 1);
    for (char &c : tag)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

    SynthCorpus corpus;
    std::vector<std::string> ids(n);
    for (std::size_t i = 0; i < n; ++i)
        ids[i] = padded_id('u', i + 1, width);

    // Follow graph.
    const double alpha = config.follow_attachment_exponent;
    std::vector<std::size_t> in_degree(n, 0);
    std::unordered_set<std::uint64_t> present;
    WeightedSampler attach(n);
    auto attach_weight = [&](std::size_t v) {
        return std::pow(static_cast<double>(in_degree[v] + 1), alpha);
    };
    auto add_follow = [&](std::size_t u, std::size_t v) {
        if (u == v || !present.insert(static_cast<std::uint64_t>(u) * n + v).second)
            return false;
        corpus.follows.push_back({ids[u], ids[v]});
        ++in_degree[v];
        attach.set(v, attach_weight(v));
        return true;
    };

    const auto target = static_cast<std::size_t>(config.follow_edges_target);
    // Half the edges come from arrivals following earlier accounts; the rest
    // have arbitrary followers, which closes cycles the growth phase cannot.
    const std::size_t growth = target / 2;
    if (n > 0)
        attach.set(0, attach_weight(0));
    for (std::size_t i = 1; i < n; ++i) {
        // Spread the growth budget evenly; node i can follow at most i others.
        const std::size_t quota = growth * i / (n - 1) - growth * (i - 1) / (n - 1);
        const std::size_t want = std::min(quota, i);
        if (want == i) {
            for (std::size_t v = 0; v < i; ++v)
                add_follow(i, v);
        } else {
            std::size_t placed = 0;
            for (std::size_t attempts = 0; placed < want && attempts < 64 * want + 64; ++attempts)
                placed += add_follow(i, attach.sample(rng.uniform())) ? 1 : 0;
        }
        attach.set(i, attach_weight(i));
    }
    for (std::size_t attempts = 0; corpus.follows.size() < target && attempts < 64 * target + 64;
         ++attempts)
        add_follow(rng.index(n), attach.sample(rng.uniform()));
    // Dense targets can defeat rejection sampling; finish deterministically.
    for (std::size_t u = 0; u < n && corpus.follows.size() < target; ++u)
        for (std::size_t v = 0; v < n && corpus.follows.size() < target; ++v)
            add_follow(u, v);

    // Conversation targets are drawn proportional to in-degree + 1.
    WeightedSampler popularity(n);
    for (std::size_t v = 0; v < n; ++v)
        popularity.set(v, static_cast<double>(in_degree[v] + 1));
    auto draw_other = [&](std::size_t self) -> std::optional<std::size_t> {
        if (n < 2)
            return std::nullopt;
        for (int attempt = 0; attempt < 64; ++attempt) {
            std::size_t v = popularity.sample(rng.uniform());
            if (v != self)
                return v;
        }
        return (self + 1) % n;
    };

    const double span = static_cast<double>(config.window_end - config.window_start);
    std::size_t tweet_no = 0;
    std::vector<std::int64_t> tweet_counts(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        const std::int64_t count = 1 + rng.poisson(config.tweets_per_account_mean - 1.0);
        tweet_counts[a] = count;
        for (std::int64_t k = 0; k < count; ++k) {
            TweetRecord t;
            t.tweet_id = padded_id('t', ++tweet_no, 7);
            t.author_id = ids[a];
            auto offset = static_cast<Timestamp>(rng.uniform() * span);
            t.timestamp = config.window_start + std::min<Timestamp>(offset, static_cast<Timestamp>(span) - 1);
            t.hashtags.push_back(tag);

            std::string text;
            if (rng.chance(config.retweet_rate)) {
                if (auto v = draw_other(a)) {
                    t.retweet_of_author_id = ids[*v];
                    text += "RT @" + ids[*v] + ": ";
                }
            }
            if (rng.chance(config.reply_rate)) {
                if (auto v = draw_other(a)) {
                    t.reply_to_author_id = ids[*v];
                    text = "@" + ids[*v] + " " + text;
                }
            }
            if (rng.chance(config.mention_rate)) {
                if (auto v = draw_other(a)) {
                    t.mentioned_account_ids.push_back(ids[*v]);
                    text += "with @" + ids[*v] + " ";
                }
            }
            const std::size_t words = 3 + rng.index(6);
            for (std::size_t w = 0; w < words; ++w)
                text += std::string(kWords[rng.index(kWords.size())]) + " ";
            text += "#" + tag;
            if (rng.chance(config.url_rate)) {
                t.url_count = rng.chance(0.15) ? 2 : 1;
                for (std::int64_t u = 0; u < t.url_count; ++u)
                    text += " http://t.co/" + padded_id('x', tweet_no * 2 + static_cast<std::size_t>(u), 6);
            }
            t.text = std::move(text);
            corpus.tweets.push_back(std::move(t));
        }
    }

    const auto &mix = config.category_mix;
    for (std::size_t a = 0; a < n; ++a) {
        AccountRecord acct;
        acct.account_id = ids[a];
        acct.screen_name = "user_" + ids[a].substr(1);
        const double u = rng.uniform();
        if (u < mix.org)
            acct.category = Category::Org;
        else if (u < mix.org + mix.jmb)
            acct.category = Category::Jmb;
        else if (u < mix.org + mix.jmb + mix.oi)
            acct.category = Category::Oi;
        else
            acct.category = Category::Other;
        acct.followers_count_global = static_cast<std::int64_t>(std::floor(std::exp(rng.uniform() * 9.0))) +
                                      static_cast<std::int64_t>(in_degree[a]) * 25;
        acct.statuses_count_global =
            static_cast<std::int64_t>(std::floor(std::exp(rng.uniform() * 10.0))) + tweet_counts[a];
        corpus.accounts.push_back(std::move(acct));
    }
    return corpus;
}

} // namespace hashnet
