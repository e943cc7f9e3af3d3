// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace docanno::pdf {

struct Object;

struct Ref {
    int num = 0;
    int gen = 0;
    friend auto operator<=>(const Ref&, const Ref&) = default;
};

struct Name {
    std::string value;
    friend bool operator==(const Name&, const Name&) = default;
};

/// Raw string bytes after escape processing.
struct String {
    std::string bytes;
    bool hex = false;
};

/// Content-stream operator keyword (also `true`/`false`/`null` before conversion).
struct Keyword {
    std::string value;
};

using Array = std::vector<Object>;
using ArrayPtr = std::shared_ptr<const Array>;

struct Dict;
using DictPtr = std::shared_ptr<const Dict>;

struct Stream;
using StreamPtr = std::shared_ptr<const Stream>;

struct Object {
    using Value = std::variant<std::monostate, bool, std::int64_t, double, String, Name, ArrayPtr,
                               DictPtr, StreamPtr, Ref, Keyword>;
    Value value;

    Object() = default;
    template <typename T>
    Object(T v) : value(std::move(v)) {}  // NOLINT(google-explicit-constructor)

    bool is_null() const { return std::holds_alternative<std::monostate>(value); }
    bool is_number() const {
        return std::holds_alternative<std::int64_t>(value) || std::holds_alternative<double>(value);
    }
    bool is_ref() const { return std::holds_alternative<Ref>(value); }

    std::optional<double> number() const;
    std::optional<std::int64_t> integer() const;
    // Pointers refer into the object; temporaries are rejected.
    const Name* name() const& { return std::get_if<Name>(&value); }
    const String* string() const& { return std::get_if<String>(&value); }
    const Array* array() const&;
    const Dict* dict() const&;  // also returns a stream's dictionary
    const Stream* stream() const&;
    const Ref* ref() const& { return std::get_if<Ref>(&value); }
    const Keyword* keyword() const& { return std::get_if<Keyword>(&value); }
    const Name* name() const&& = delete;
    const String* string() const&& = delete;
    const Array* array() const&& = delete;
    const Dict* dict() const&& = delete;
    const Stream* stream() const&& = delete;
    const Ref* ref() const&& = delete;
    const Keyword* keyword() const&& = delete;
};

struct Dict {
    std::map<std::string, Object> entries;

    const Object* find(const std::string& key) const {
        auto it = entries.find(key);
        return it == entries.end() ? nullptr : &it->second;
    }
    bool contains(const std::string& key) const { return entries.contains(key); }
};

struct Stream {
    Dict dict;
    std::string raw;  // encoded bytes between `stream` and `endstream`
};

}  // namespace docanno::pdf
