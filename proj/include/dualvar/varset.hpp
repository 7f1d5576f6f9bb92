#ifndef DUALVAR_VARSET_HPP
#define DUALVAR_VARSET_HPP

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dualvar {

// Ordered list of distinct variable names. The position of a name is the
// exponent slot used by every monomial over the set, so a VarSet is fixed at
// construction and shared (via shared_ptr) by all polynomials built over it.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty())
            throw std::invalid_argument("VarSet: empty variable list");
        for (const auto& n : names_)
            if (!valid_identifier(n))
                throw std::invalid_argument("VarSet: invalid variable name '" + n + "'");
        auto sorted = names_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("VarSet: duplicate variable name");
    }

    static bool valid_identifier(std::string_view s) {
        if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
            return false;
        return std::all_of(s.begin(), s.end(), [](char c) {
            return std::isalnum(static_cast<unsigned char>(c));
        });
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name)
                return i;
        return std::nullopt;
    }

    bool contains(std::string_view name) const { return index_of(name).has_value(); }

    // Index of a name that must exist.
    std::size_t index(std::string_view name) const {
        auto i = index_of(name);
        if (!i)
            throw std::invalid_argument("VarSet: unknown variable '" + std::string(name) + "'");
        return *i;
    }

    std::vector<std::size_t> indices(const std::vector<std::string>& block) const {
        std::vector<std::size_t> out;
        out.reserve(block.size());
        for (const auto& n : block)
            out.push_back(index(n));
        return out;
    }

    // A name not present in the set: `base` itself if free, else base0, base1, ...
    std::string fresh_name(const std::string& base) const {
        if (!contains(base))
            return base;
        for (int k = 0;; ++k) {
            std::ostringstream os;
            os << base << k;
            if (!contains(os.str()))
                return os.str();
        }
    }

    bool operator==(const VarSet& o) const { return names_ == o.names_; }
    bool operator!=(const VarSet& o) const { return !(*this == o); }

private:
    std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_varset(std::vector<std::string> names) {
    return std::make_shared<const VarSet>(std::move(names));
}

// Split a comma-separated list, e.g. "x,y,z".
inline VarSetPtr make_varset(const std::string& comma_list) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : comma_list) {
        if (c == ',') {
            names.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    names.push_back(cur);
    return make_varset(std::move(names));
}

inline bool same_varset(const VarSetPtr& a, const VarSetPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace dualvar

#endif
