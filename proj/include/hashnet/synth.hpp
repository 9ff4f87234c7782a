#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hashnet/records.hpp"

namespace hashnet {

struct CategoryMix {
    double org = 0.15;
    double jmb = 0.25;
    double oi = 0.55;
    double other = 0.05;
};

/// Parameters for a synthetic hashtag corpus.
struct SynthConfig {
    std::uint64_t seed = 1;
    std::int64_t account_count = 527;
    CategoryMix category_mix;
    double follow_attachment_exponent = 1.0;
    std::int64_t follow_edges_target = 1947;
    double tweets_per_account_mean = 2.0;
    double mention_rate = 0.3;
    double retweet_rate = 0.1;
    double reply_rate = 0.012;
    double url_rate = 0.429;
    std::string hashtag = "athens";
    Timestamp window_start = 1298000000; // 2011-02-18
    Timestamp window_end = 1300600000;

    /// Throws ValidationError naming the first offending field.
    void validate() const;
};

struct SynthCorpus {
    std::vector<TweetRecord> tweets;
    std::vector<AccountRecord> accounts;
    std::vector<FollowPair> follows;
};

/// Deterministic in the seed (the same config always yields the same bytes).
///
/// Accounts arrive one at a time and follow earlier accounts with probability
/// proportional to (in-degree + 1)^exponent until half the edge target is
/// placed; the remainder pairs a uniformly drawn follower with a target drawn
/// by the same rule over all accounts. Every account
/// tweets at least once with the configured hashtag; mention, retweet and
/// reply targets are drawn proportional to in-degree + 1.
SynthCorpus generate_corpus(const SynthConfig &config);

} // namespace hashnet
