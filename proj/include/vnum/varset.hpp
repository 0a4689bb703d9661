#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vnum/errors.hpp"

namespace vnum {

/// Ordered set of variable labels. The index order is fixed and total;
/// all monomials and ideals are expressed against one VarSet.
///
/// Coefficients are never represented anywhere in this library: every
/// computation is characteristic-independent monomial combinatorics.
class VarSet {
  public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) {
            throw InvalidInput("VarSet requires at least one variable");
        }
        std::unordered_set<std::string_view> seen;
        for (const auto& name : names_) {
            if (!seen.insert(name).second) {
                throw InvalidInput("duplicate variable label: " + name);
            }
        }
    }

    /// x1..xn (or another one-letter prefix).
    static VarSet standard(int n, const std::string& prefix = "x") {
        if (n < 1) {
            throw InvalidInput("VarSet::standard requires n >= 1");
        }
        std::vector<std::string> names;
        names.reserve(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) {
            names.push_back(prefix + std::to_string(i));
        }
        return VarSet(std::move(names));
    }

    /// Two-block set x1..xn, y1..ym.
    static VarSet mixed_blocks(int n, int m) {
        if (n < 1 || m < 0) {
            throw InvalidInput("mixed VarSet requires n >= 1 and m >= 0");
        }
        std::vector<std::string> names;
        names.reserve(static_cast<size_t>(n + m));
        for (int i = 1; i <= n; ++i) {
            names.push_back("x" + std::to_string(i));
        }
        for (int j = 1; j <= m; ++j) {
            names.push_back("y" + std::to_string(j));
        }
        return VarSet(std::move(names));
    }

    int count() const { return static_cast<int>(names_.size()); }

    const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }

    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> index_of(std::string_view label) const {
        for (int i = 0; i < count(); ++i) {
            if (names_[static_cast<size_t>(i)] == label) {
                return i;
            }
        }
        return std::nullopt;
    }

    bool operator==(const VarSet& other) const { return names_ == other.names_; }
    bool operator!=(const VarSet& other) const { return !(*this == other); }

  private:
    std::vector<std::string> names_;
};

inline void require_same_vars(const VarSet& a, const VarSet& b, const char* op) {
    if (a != b) {
        throw InvalidInput(std::string(op) + ": operands live in different variable sets");
    }
}

}  // namespace vnum
