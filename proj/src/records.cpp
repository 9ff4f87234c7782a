#include "hashnet/records.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace hashnet {

std::string_view to_string(Category c) {
    switch (c) {
    case Category::Org:
        return "ORG";
    case Category::Jmb:
        return "JMB";
    case Category::Oi:
        return "OI";
    case Category::Other:
        return "OTHER";
    case Category::Unlabeled:
        return "UNLABELED";
    }
    return "UNLABELED";
}

std::optional<Category> parse_category(std::string_view s) {
    std::string up(s);
    std::transform(up.begin(), up.end(), up.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (Category c : {Category::Org, Category::Jmb, Category::Oi, Category::Other,
                       Category::Unlabeled})
        if (to_string(c) == up)
            return c;
    if (up == "J/MB")
        return Category::Jmb;
    return std::nullopt;
}

} // namespace hashnet
