#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "hashnet/network.hpp"
#include "hashnet/records.hpp"

namespace hashnet {

// Corpus files are JSON Lines: one object per line, blank lines ignored.
// Field names are documented in docs/corpus-format.md.

/// Parses a tweets file. Records keep file order; hashtags are lowercased
/// and stripped of a leading '#'.
/// Throws ParseError (with line number) or DuplicateKeyError.
std::vector<TweetRecord> parse_tweet_stream(std::istream &in);

struct SupportData {
    std::vector<AccountRecord> accounts; // first-seen order, last record wins
    std::vector<FollowPair> follows;     // file order, exact duplicates dropped
    std::size_t rejected_rows = 0;
    std::vector<std::string> warnings;
};

/// Parses the accounts and follows files. Self-follow rows are dropped with
/// a warning; anything malformed raises ParseError.
SupportData parse_support_files(std::istream &accounts, std::istream &follows);

/// One tweet id per line; blank lines and lines starting with '#' are skipped.
std::set<std::string> parse_exclusion_list(std::istream &in);

/// Keeps tweets carrying the include hashtag, inside the window, not manually
/// excluded, and free of every exclude term (hashtags and lowercased
/// whitespace-delimited text tokens, whole-token and case-insensitive).
std::vector<TweetRecord> filter_corpus(const std::vector<TweetRecord> &tweets,
                                       const FilterQuery &query);

/// Builds F, M and R from a filtered corpus. Edge multiplicity is discarded;
/// retweet targets count as mentions. Follow pairs with an endpoint outside
/// the authors are ignored.
LayeredNetwork build_layered_network(const std::vector<TweetRecord> &tweets,
                                     const std::vector<AccountRecord> &accounts,
                                     const std::vector<FollowPair> &follows);

/// Writers for the same schemas, one record per line.
void write_tweets(std::ostream &out, const std::vector<TweetRecord> &tweets);
void write_accounts(std::ostream &out, const std::vector<AccountRecord> &accounts);
void write_follows(std::ostream &out, const std::vector<FollowPair> &follows);

} // namespace hashnet
