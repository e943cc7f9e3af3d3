// SPDX-License-Identifier: Apache-2.0
#include "pdf/object.hpp"

namespace docanno::pdf {

std::optional<double> Object::number() const {
    if (auto* i = std::get_if<std::int64_t>(&value)) return static_cast<double>(*i);
    if (auto* d = std::get_if<double>(&value)) return *d;
    return std::nullopt;
}

std::optional<std::int64_t> Object::integer() const {
    if (auto* i = std::get_if<std::int64_t>(&value)) return *i;
    if (auto* d = std::get_if<double>(&value)) return static_cast<std::int64_t>(*d);
    return std::nullopt;
}

const Array* Object::array() const& {
    if (auto* a = std::get_if<ArrayPtr>(&value)) return a->get();
    return nullptr;
}

const Dict* Object::dict() const& {
    if (auto* d = std::get_if<DictPtr>(&value)) return d->get();
    if (auto* s = std::get_if<StreamPtr>(&value)) return &(*s)->dict;
    return nullptr;
}

const Stream* Object::stream() const& {
    if (auto* s = std::get_if<StreamPtr>(&value)) return s->get();
    return nullptr;
}

}  // namespace docanno::pdf
