#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace eccf {

/// Dense integer handle into an Interner. The tag keeps the user, item and
/// category id spaces distinct at compile time.
template <class Tag>
struct Handle {
    std::uint32_t value = 0;

    constexpr Handle() = default;
    constexpr explicit Handle(std::uint32_t v) : value(v) {}

    friend constexpr bool operator==(Handle a, Handle b) { return a.value == b.value; }
    friend constexpr auto operator<=>(Handle a, Handle b) { return a.value <=> b.value; }
};

struct UserTag {};
struct ItemTag {};
struct CategoryTag {};

using UserId = Handle<UserTag>;
using ItemId = Handle<ItemTag>;
using CategoryId = Handle<CategoryTag>;

namespace detail {
struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
        return std::hash<std::string_view>{}(s);
    }
};
struct StringEq {
    using is_transparent = void;
    bool operator()(std::string_view a, std::string_view b) const noexcept { return a == b; }
};
} // namespace detail

/// Bijective string <-> dense handle table. Handles are assigned 0..N-1 in
/// first-seen order so downstream matrices can be array-indexed.
template <class Tag>
class Interner {
public:
    Handle<Tag> intern(std::string_view name) {
        if (name.empty())
            throw std::invalid_argument("cannot intern an empty identifier");
        auto it = index_.find(name);
        if (it != index_.end())
            return Handle<Tag>(it->second);
        auto id = static_cast<std::uint32_t>(names_.size());
        names_.emplace_back(name);
        index_.emplace(names_.back(), id);
        return Handle<Tag>(id);
    }

    std::optional<Handle<Tag>> find(std::string_view name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            return std::nullopt;
        return Handle<Tag>(it->second);
    }

    const std::string& name(Handle<Tag> h) const { return names_.at(h.value); }

    std::size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::uint32_t, detail::StringHash, detail::StringEq> index_;
};

} // namespace eccf
