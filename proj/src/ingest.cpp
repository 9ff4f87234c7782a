#include "hashnet/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "hashnet/error.hpp"

namespace hashnet {

namespace {

using nlohmann::json;

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool is_blank(const std::string &line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

bool has_space(const std::string &s) {
    return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

// Calls fn(line_number, object) for every nonblank line.
template <typename Fn>
void for_each_record(std::istream &in, Fn &&fn) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line))
            continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::parse_error &e) {
            throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
        }
        if (!obj.is_object())
            throw ParseError(line_no, "record is not a JSON object");
        fn(line_no, obj);
    }
}

class Fields {
public:
    Fields(const json &obj, std::size_t line) : obj_(obj), line_(line) {}

    std::string required_string(const char *key) const {
        auto it = obj_.find(key);
        if (it == obj_.end() || !it->is_string())
            fail(std::string("missing or non-string field '") + key + "'");
        auto s = it->get<std::string>();
        if (s.empty())
            fail(std::string("field '") + key + "' is empty");
        return s;
    }

    std::string optional_string(const char *key, std::string fallback = {}) const {
        auto it = obj_.find(key);
        if (it == obj_.end() || it->is_null())
            return fallback;
        if (!it->is_string())
            fail(std::string("field '") + key + "' must be a string");
        return it->get<std::string>();
    }

    std::optional<std::string> nullable_id(const char *key) const {
        auto it = obj_.find(key);
        if (it == obj_.end() || it->is_null())
            return std::nullopt;
        if (!it->is_string() || it->get<std::string>().empty())
            fail(std::string("field '") + key + "' must be null or a nonempty string");
        return it->get<std::string>();
    }

    std::int64_t integer(const char *key, bool required, bool nonnegative) const {
        auto it = obj_.find(key);
        if (it == obj_.end() || it->is_null()) {
            if (required)
                fail(std::string("missing field '") + key + "'");
            return 0;
        }
        if (!it->is_number_integer())
            fail(std::string("field '") + key + "' must be an integer");
        auto v = it->get<std::int64_t>();
        if (nonnegative && v < 0)
            fail(std::string("field '") + key + "' must be >= 0");
        return v;
    }

    std::vector<std::string> string_list(const char *key) const {
        auto it = obj_.find(key);
        if (it == obj_.end() || it->is_null())
            return {};
        if (!it->is_array())
            fail(std::string("field '") + key + "' must be an array");
        std::vector<std::string> out;
        for (const auto &el : *it) {
            if (!el.is_string() || el.get<std::string>().empty())
                fail(std::string("field '") + key + "' must hold nonempty strings");
            out.push_back(el.get<std::string>());
        }
        return out;
    }

    [[noreturn]] void fail(const std::string &what) const { throw ParseError(line_, what); }

private:
    const json &obj_;
    std::size_t line_;
};

std::string normalize_tag(std::string tag) {
    if (!tag.empty() && tag.front() == '#')
        tag.erase(0, 1);
    return lowercase(std::move(tag));
}

} // namespace

std::vector<TweetRecord> parse_tweet_stream(std::istream &in) {
    std::vector<TweetRecord> tweets;
    std::unordered_set<std::string> seen;
    for_each_record(in, [&](std::size_t line, const json &obj) {
        Fields f(obj, line);
        TweetRecord t;
        t.tweet_id = f.required_string("tweet_id");
        t.author_id = f.required_string("author_id");
        t.timestamp = f.integer("timestamp", true, false);
        t.text = f.optional_string("text");
        for (auto &tag : f.string_list("hashtags")) {
            auto norm = normalize_tag(tag);
            if (norm.empty() || has_space(norm))
                f.fail("hashtag '" + tag + "' is empty or contains whitespace");
            t.hashtags.push_back(std::move(norm));
        }
        t.mentioned_account_ids = f.string_list("mentions");
        t.retweet_of_author_id = f.nullable_id("retweet_of");
        t.reply_to_author_id = f.nullable_id("reply_to");
        t.url_count = f.integer("urls", false, true);
        if (!seen.insert(t.tweet_id).second)
            throw DuplicateKeyError(line, t.tweet_id);
        tweets.push_back(std::move(t));
    });
    return tweets;
}

SupportData parse_support_files(std::istream &accounts, std::istream &follows) {
    SupportData data;

    std::unordered_map<std::string, std::size_t> slot;
    for_each_record(accounts, [&](std::size_t line, const json &obj) {
        Fields f(obj, line);
        AccountRecord a;
        a.account_id = f.required_string("account_id");
        a.screen_name = f.optional_string("screen_name");
        a.followers_count_global = f.integer("followers", false, true);
        a.statuses_count_global = f.integer("statuses", false, true);
        auto cat = f.optional_string("category", "UNLABELED");
        auto parsed = parse_category(cat);
        if (!parsed)
            f.fail("unknown category '" + cat + "'");
        a.category = *parsed;
        auto [it, inserted] = slot.try_emplace(a.account_id, data.accounts.size());
        if (inserted)
            data.accounts.push_back(std::move(a));
        else
            data.accounts[it->second] = std::move(a);
    });

    std::set<FollowPair> seen;
    for_each_record(follows, [&](std::size_t line, const json &obj) {
        Fields f(obj, line);
        FollowPair p{f.required_string("follower_id"), f.required_string("followed_id")};
        if (p.follower_id == p.followed_id) {
            ++data.rejected_rows;
            data.warnings.push_back("follows line " + std::to_string(line) +
                                    ": self-follow by '" + p.follower_id + "' dropped");
            return;
        }
        if (seen.insert(p).second)
            data.follows.push_back(std::move(p));
    });
    return data;
}

std::set<std::string> parse_exclusion_list(std::istream &in) {
    std::set<std::string> ids;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r\n");
        if (first == std::string::npos || line[first] == '#')
            continue;
        auto last = line.find_last_not_of(" \t\r\n");
        ids.insert(line.substr(first, last - first + 1));
    }
    return ids;
}

void FilterQuery::validate() const {
    if (include_hashtag.empty() || include_hashtag == "#")
        throw ValidationError("include_hashtag", "must be nonempty");
    if (!(window_start < window_end))
        throw ValidationError("window", "window_start must precede window_end");
}

std::vector<TweetRecord> filter_corpus(const std::vector<TweetRecord> &tweets,
                                       const FilterQuery &query) {
    query.validate();
    const std::string include = normalize_tag(query.include_hashtag);
    std::unordered_set<std::string> excluded;
    for (const auto &term : query.exclude_terms)
        excluded.insert(normalize_tag(term));

    auto mentions_excluded_term = [&](const TweetRecord &t) {
        for (const auto &tag : t.hashtags)
            if (excluded.count(lowercase(tag)))
                return true;
        std::istringstream words(t.text);
        std::string token;
        while (words >> token)
            if (excluded.count(lowercase(token)))
                return true;
        return false;
    };

    std::vector<TweetRecord> kept;
    for (const auto &t : tweets) {
        if (t.timestamp < query.window_start || t.timestamp >= query.window_end)
            continue;
        if (query.exclude_tweet_ids.count(t.tweet_id))
            continue;
        bool tagged = std::any_of(t.hashtags.begin(), t.hashtags.end(),
                                  [&](const std::string &tag) { return lowercase(tag) == include; });
        if (!tagged || mentions_excluded_term(t))
            continue;
        kept.push_back(t);
    }
    return kept;
}

LayeredNetwork build_layered_network(const std::vector<TweetRecord> &tweets,
                                     const std::vector<AccountRecord> &accounts,
                                     const std::vector<FollowPair> &follows) {
    std::set<std::string> core;
    for (const auto &t : tweets)
        core.insert(t.author_id);

    EdgeList follow_edges;
    for (const auto &p : follows)
        if (core.count(p.follower_id) && core.count(p.followed_id))
            follow_edges.emplace_back(p.follower_id, p.followed_id);

    EdgeList mention_edges;
    EdgeList reply_edges;
    for (const auto &t : tweets) {
        for (const auto &m : t.mentioned_account_ids)
            mention_edges.emplace_back(t.author_id, m);
        if (t.retweet_of_author_id)
            mention_edges.emplace_back(t.author_id, *t.retweet_of_author_id);
        if (t.reply_to_author_id)
            reply_edges.emplace_back(t.author_id, *t.reply_to_author_id);
    }

    std::set<std::string> incident(core.begin(), core.end());
    for (const auto *list : {&mention_edges, &reply_edges})
        for (const auto &[s, t] : *list)
            if (s != t)
                incident.insert(t);

    std::map<std::string, AccountRecord> attributes;
    for (const auto &a : accounts)
        if (incident.count(a.account_id))
            attributes.insert_or_assign(a.account_id, a);

    return LayeredNetwork::make(std::move(core), follow_edges, mention_edges, reply_edges,
                                std::move(attributes));
}

} // namespace hashnet

namespace hashnet {

void write_tweets(std::ostream &out, const std::vector<TweetRecord> &tweets) {
    for (const auto &t : tweets) {
        nlohmann::ordered_json j;
        j["tweet_id"] = t.tweet_id;
        j["author_id"] = t.author_id;
        j["timestamp"] = t.timestamp;
        j["text"] = t.text;
        j["hashtags"] = t.hashtags;
        j["mentions"] = t.mentioned_account_ids;
        j["retweet_of"] = t.retweet_of_author_id ? nlohmann::ordered_json(*t.retweet_of_author_id)
                                                 : nlohmann::ordered_json(nullptr);
        j["reply_to"] = t.reply_to_author_id ? nlohmann::ordered_json(*t.reply_to_author_id)
                                             : nlohmann::ordered_json(nullptr);
        j["urls"] = t.url_count;
        out << j.dump() << '\n';
    }
}

void write_accounts(std::ostream &out, const std::vector<AccountRecord> &accounts) {
    for (const auto &a : accounts) {
        nlohmann::ordered_json j;
        j["account_id"] = a.account_id;
        j["screen_name"] = a.screen_name;
        j["followers"] = a.followers_count_global;
        j["statuses"] = a.statuses_count_global;
        j["category"] = std::string(to_string(a.category));
        out << j.dump() << '\n';
    }
}

void write_follows(std::ostream &out, const std::vector<FollowPair> &follows) {
    for (const auto &p : follows) {
        nlohmann::ordered_json j;
        j["follower_id"] = p.follower_id;
        j["followed_id"] = p.followed_id;
        out << j.dump() << '\n';
    }
}

} // namespace hashnet
