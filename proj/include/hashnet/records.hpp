#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace hashnet {

/// Seconds since the Unix epoch, UTC.
using Timestamp = std::int64_t;

enum class Category { Org, Jmb, Oi, Other, Unlabeled };

std::string_view to_string(Category c);
/// Accepts "ORG", "JMB", "OI", "OTHER", "UNLABELED" (case-insensitive).
std::optional<Category> parse_category(std::string_view s);

struct TweetRecord {
    std::string tweet_id;
    std::string author_id;
    Timestamp timestamp = 0;
    std::string text;
    std::vector<std::string> hashtags; // lowercase, no '#'
    std::vector<std::string> mentioned_account_ids;
    std::optional<std::string> retweet_of_author_id;
    std::optional<std::string> reply_to_author_id;
    std::int64_t url_count = 0;

    bool operator==(const TweetRecord &) const = default;
};

struct AccountRecord {
    std::string account_id;
    std::string screen_name;
    std::int64_t followers_count_global = 0;
    std::int64_t statuses_count_global = 0;
    Category category = Category::Unlabeled;

    bool operator==(const AccountRecord &) const = default;
};

struct FollowPair {
    std::string follower_id;
    std::string followed_id;

    bool operator==(const FollowPair &) const = default;
    auto operator<=>(const FollowPair &) const = default;
};

/// Hashtag search with keyword exclusions and a manual removal list.
/// The time window is half-open: [window_start, window_end).
struct FilterQuery {
    std::string include_hashtag;
    std::vector<std::string> exclude_terms;
    std::set<std::string> exclude_tweet_ids;
    Timestamp window_start = std::numeric_limits<Timestamp>::min();
    Timestamp window_end = std::numeric_limits<Timestamp>::max();

    /// Throws ValidationError on an empty hashtag or an empty window.
    void validate() const;
};

} // namespace hashnet
