// SPDX-License-Identifier: Apache-2.0
#include "pdf/document.hpp"

#include <algorithm>
#include <cstring>

#include "docanno/error.hpp"
#include "pdf/filters.hpp"
#include "pdf/lexer.hpp"

namespace docanno::pdf {
namespace {

constexpr int kMaxResolveDepth = 32;
constexpr int kMaxXrefSections = 512;
constexpr std::size_t kMaxPageDepth = 64;

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedPdf, what); }

bool name_is(const Object* obj, const char* name) {
    return obj && obj->name() && obj->name()->value == name;
}

}  // namespace

Document::Document(std::string_view data) : data_(data) {
    const auto header = data_.substr(0, std::min<std::size_t>(data_.size(), 1024)).find("%PDF-");
    if (header == std::string_view::npos) malformed("missing %PDF- header");

    bool ok = false;
    const std::size_t sx = data_.rfind("startxref");
    if (sx != std::string_view::npos) {
        Lexer lex(data_, sx + 9);
        if (auto offset = lex.try_integer()) {
            try {
                ok = load_xref_chain(static_cast<std::size_t>(*offset));
            } catch (const Error& e) {
                if (e.code() == ErrorCode::EncryptedPdf) throw;
                ok = false;
            }
        }
    }
    if (!ok || !trailer_ || !trailer_->contains("Root")) reconstruct();
    if (!trailer_) malformed("no trailer dictionary");
    if (trailer_->contains("Encrypt")) throw Error(ErrorCode::EncryptedPdf, "document is encrypted");

    try {
        collect_pages();
    } catch (const Error& e) {
        if (reconstructed_ || e.code() != ErrorCode::MalformedPdf) throw;
        pages_.clear();
    }
    if (pages_.empty() && !reconstructed_) {
        reconstruct();
        collect_pages();
    }
    if (pages_.empty()) malformed("document has no pages");
}

bool Document::load_xref_chain(std::size_t start) {
    std::vector<std::size_t> visited;
    std::optional<std::size_t> next = start;
    DictPtr newest_trailer;
    int sections = 0;
    while (next && ++sections < kMaxXrefSections) {
        const std::size_t pos = *next;
        next.reset();
        if (pos >= data_.size() || std::find(visited.begin(), visited.end(), pos) != visited.end()) break;
        visited.push_back(pos);

        Lexer lex(data_, pos);
        Dict section_trailer;
        if (lex.accept_keyword("xref")) {
            parse_xref_table(lex.pos(), section_trailer);
            // hybrid files: an xref stream supplementing the table
            if (const Object* stm = section_trailer.find("XRefStm")) {
                if (auto off = stm->integer()) {
                    Object obj = parse_indirect_at(static_cast<std::size_t>(*off), -1);
                    if (const Stream* s = obj.stream()) parse_xref_stream(*s);
                }
            }
        } else {
            Object obj = parse_indirect_at(pos, -1);
            const Stream* s = obj.stream();
            if (!s || !name_is(s->dict.find("Type"), "XRef")) return false;
            parse_xref_stream(*s);
            section_trailer = s->dict;
        }
        if (!newest_trailer) newest_trailer = std::make_shared<Dict>(section_trailer);
        if (const Object* prev = section_trailer.find("Prev")) {
            if (auto off = prev->integer(); off && *off >= 0) next = static_cast<std::size_t>(*off);
        }
    }
    trailer_ = newest_trailer;
    return trailer_ != nullptr && !xref_.empty();
}

std::size_t Document::parse_xref_table(std::size_t pos, Dict& trailer_out) {
    Lexer lex(data_, pos);
    for (;;) {
        if (lex.accept_keyword("trailer")) {
            Object t = lex.read_object();
            if (!t.dict()) malformed("trailer is not a dictionary");
            trailer_out = *t.dict();
            return lex.pos();
        }
        auto first = lex.try_integer();
        auto count = lex.try_integer();
        if (!first || !count) malformed("bad xref subsection header");
        for (std::int64_t i = 0; i < *count; ++i) {
            auto offset = lex.try_integer();
            auto gen = lex.try_integer();
            lex.skip_whitespace();
            if (!offset || !gen || lex.pos() >= data_.size()) malformed("bad xref entry");
            const char kind = data_[lex.pos()];
            lex.seek(lex.pos() + 1);
            const int num = static_cast<int>(*first + i);
            if (kind == 'n' && *offset > 0 && !xref_.contains(num)) {
                xref_[num] = XrefEntry{XrefEntry::Kind::Offset, static_cast<std::size_t>(*offset), 0};
            } else if (kind != 'n' && kind != 'f') {
                malformed("bad xref entry type");
            }
        }
    }
}

void Document::parse_xref_stream(const Stream& stream) {
    const std::string data = decode_stream(stream);
    const Array* w = stream.dict.find("W") ? stream.dict.find("W")->array() : nullptr;
    if (!w || w->size() != 3) malformed("xref stream without /W");
    std::array<int, 3> widths{};
    for (int i = 0; i < 3; ++i) widths[i] = static_cast<int>((*w)[i].integer().value_or(0));
    const int row = widths[0] + widths[1] + widths[2];
    if (row <= 0) malformed("xref stream with empty rows");

    std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
    if (const Object* index = stream.dict.find("Index"); index && index->array()) {
        const Array& idx = *index->array();
        for (std::size_t i = 0; i + 1 < idx.size(); i += 2) {
            ranges.emplace_back(idx[i].integer().value_or(0), idx[i + 1].integer().value_or(0));
        }
    } else {
        const Object* size = stream.dict.find("Size");
        ranges.emplace_back(0, size ? size->integer().value_or(0) : 0);
    }

    std::size_t pos = 0;
    auto field = [&](int width, std::int64_t fallback) {
        if (width == 0) return fallback;
        std::int64_t v = 0;
        for (int i = 0; i < width; ++i) v = (v << 8) | static_cast<unsigned char>(data[pos++]);
        return v;
    };
    for (auto [first, count] : ranges) {
        for (std::int64_t i = 0; i < count; ++i) {
            if (pos + static_cast<std::size_t>(row) > data.size()) return;
            const std::int64_t type = field(widths[0], 1);
            const std::int64_t f2 = field(widths[1], 0);
            const std::int64_t f3 = field(widths[2], 0);
            const int num = static_cast<int>(first + i);
            if (xref_.contains(num)) continue;
            if (type == 1) {
                xref_[num] = XrefEntry{XrefEntry::Kind::Offset, static_cast<std::size_t>(f2), 0};
            } else if (type == 2) {
                xref_[num] = XrefEntry{XrefEntry::Kind::Compressed, static_cast<std::size_t>(f2),
                                       static_cast<int>(f3)};
            }
        }
    }
}

void Document::reconstruct() {
    reconstructed_ = true;
    xref_.clear();
    cache_.clear();
    objstm_index_.clear();
    objstm_data_.clear();
    auto merged = std::make_shared<Dict>();

    std::size_t pos = 0;
    while ((pos = data_.find(" obj", pos)) != std::string_view::npos) {
        // walk back over "<num> <gen>"
        std::size_t p = pos;
        auto back_digits = [&](std::size_t& q) {
            const std::size_t end = q;
            while (q > 0 && data_[q - 1] >= '0' && data_[q - 1] <= '9') --q;
            return q < end;
        };
        std::size_t gen_start = p;
        if (back_digits(gen_start) && gen_start > 0 && is_pdf_whitespace(static_cast<unsigned char>(data_[gen_start - 1]))) {
            std::size_t num_end = gen_start - 1;
            while (num_end > 0 && is_pdf_whitespace(static_cast<unsigned char>(data_[num_end - 1]))) --num_end;
            std::size_t num_start = num_end;
            if (back_digits(num_start)) {
                const int num = std::atoi(std::string(data_.substr(num_start, num_end - num_start)).c_str());
                xref_[num] = XrefEntry{XrefEntry::Kind::Offset, num_start, 0};
            }
        }
        pos += 4;
    }

    // objects inside object streams
    for (const auto& [num, entry] : std::map<int, XrefEntry>(xref_)) {
        Object obj;
        try {
            obj = parse_indirect_at(entry.offset, num);
        } catch (const Error&) {
            continue;
        }
        const Stream* s = obj.stream();
        if (!s) continue;
        if (name_is(s->dict.find("Type"), "ObjStm")) {
            const int n = static_cast<int>(s->dict.find("N") ? s->dict.find("N")->integer().value_or(0) : 0);
            for (int i = 0; i < n; ++i) {
                try {
                    load_compressed(num, i, -1);
                } catch (const Error&) {
                    break;
                }
            }
            if (auto it = objstm_index_.find(num); it != objstm_index_.end()) {
                for (std::size_t i = 0; i < it->second.size(); ++i) {
                    const int inner = it->second[i].first;
                    if (!xref_.contains(inner) || xref_[inner].kind == XrefEntry::Kind::Compressed) {
                        xref_[inner] = XrefEntry{XrefEntry::Kind::Compressed, static_cast<std::size_t>(num),
                                                 static_cast<int>(i)};
                    }
                }
            }
        } else if (name_is(s->dict.find("Type"), "XRef")) {
            for (const auto& [k, v] : s->dict.entries) merged->entries.insert_or_assign(k, v);
        }
    }

    pos = 0;
    while ((pos = data_.find("trailer", pos)) != std::string_view::npos) {
        Lexer lex(data_, pos + 7);
        try {
            Object t = lex.read_object();
            if (const Dict* d = t.dict()) {
                for (const auto& [k, v] : d->entries) merged->entries.insert_or_assign(k, v);
            }
        } catch (const Error&) {
        }
        pos += 7;
    }
    cache_.clear();

    if (!merged->contains("Root")) {
        for (const auto& [num, entry] : xref_) {
            try {
                Object obj = get(Ref{num, 0});
                if (const Dict* d = obj.dict(); d && name_is(d->find("Type"), "Catalog")) {
                    merged->entries["Root"] = Ref{num, 0};
                    break;
                }
            } catch (const Error&) {
            }
        }
    }
    trailer_ = merged;
}

Object Document::parse_indirect_at(std::size_t offset, int expected_num) const {
    if (offset >= data_.size()) malformed("object offset out of range");
    Lexer lex(data_, offset);
    auto num = lex.try_integer();
    auto gen = lex.try_integer();
    if (!num || !gen || !lex.accept_keyword("obj")) {
        malformed("expected indirect object at offset " + std::to_string(offset));
    }
    if (expected_num >= 0 && *num != expected_num) {
        malformed("xref points to object " + std::to_string(*num) + " instead of " +
                  std::to_string(expected_num));
    }
    Object obj = lex.read_object();
    const Dict* dict = obj.dict();
    if (dict && lex.accept_keyword("stream")) {
        std::size_t start = lex.pos();
        if (start < data_.size() && data_[start] == '\r') ++start;
        if (start < data_.size() && data_[start] == '\n') ++start;

        std::optional<std::size_t> length;
        if (const Object* len = dict->find("Length")) {
            Object resolved = len->is_ref() && len->ref()->num != *num ? resolve(*len) : *len;
            if (auto v = resolved.integer(); v && *v >= 0) length = static_cast<std::size_t>(*v);
        }
        bool length_ok = false;
        if (length && start + *length <= data_.size()) {
            Lexer check(data_, start + *length);
            length_ok = check.accept_keyword("endstream");
        }
        if (!length_ok) {
            const std::size_t end = data_.find("endstream", start);
            if (end == std::string_view::npos) malformed("unterminated stream");
            std::size_t stop = end;
            if (stop > start && data_[stop - 1] == '\n') --stop;
            if (stop > start && data_[stop - 1] == '\r') --stop;
            length = stop - start;
        }
        auto stream = std::make_shared<Stream>();
        stream->dict = *dict;
        stream->raw.assign(data_.substr(start, *length));
        return StreamPtr(std::move(stream));
    }
    return obj;
}

Object Document::load_compressed(int stream_num, int index, int expected_num) const {
    auto idx_it = objstm_index_.find(stream_num);
    if (idx_it == objstm_index_.end()) {
        Object container = get(Ref{stream_num, 0});
        const Stream* s = container.stream();
        if (!s) malformed("object stream " + std::to_string(stream_num) + " missing");
        std::string decoded = decode_stream(*s);
        const std::int64_t n = s->dict.find("N") ? s->dict.find("N")->integer().value_or(0) : 0;
        const std::int64_t first = s->dict.find("First") ? s->dict.find("First")->integer().value_or(0) : 0;
        std::vector<std::pair<int, std::size_t>> entries;
        Lexer header(decoded);
        for (std::int64_t i = 0; i < n; ++i) {
            auto num = header.try_integer();
            auto off = header.try_integer();
            if (!num || !off) break;
            entries.emplace_back(static_cast<int>(*num), static_cast<std::size_t>(first + *off));
        }
        idx_it = objstm_index_.emplace(stream_num, std::move(entries)).first;
        objstm_data_.emplace(stream_num, std::move(decoded));
    }
    const auto& entries = idx_it->second;
    if (index < 0 || static_cast<std::size_t>(index) >= entries.size()) malformed("object stream index out of range");
    if (expected_num >= 0 && entries[index].first != expected_num) malformed("object stream entry mismatch");
    const std::string& data = objstm_data_.at(stream_num);
    Lexer lex(data, entries[index].second);
    return lex.read_object();
}

Object Document::get(Ref ref) const {
    if (auto it = cache_.find(ref.num); it != cache_.end()) return it->second;
    auto entry = xref_.find(ref.num);
    if (entry == xref_.end()) return std::monostate{};
    if (std::find(resolving_.begin(), resolving_.end(), ref.num) != resolving_.end() ||
        resolving_.size() > kMaxResolveDepth) {
        malformed("circular object reference " + std::to_string(ref.num));
    }
    resolving_.push_back(ref.num);
    Object obj;
    try {
        obj = entry->second.kind == XrefEntry::Kind::Offset
                  ? parse_indirect_at(entry->second.offset, ref.num)
                  : load_compressed(static_cast<int>(entry->second.offset), entry->second.index, ref.num);
    } catch (...) {
        resolving_.pop_back();
        throw;
    }
    resolving_.pop_back();
    cache_.emplace(ref.num, obj);
    return obj;
}

Object Document::resolve(const Object& obj) const {
    Object current = obj;
    for (int depth = 0; current.is_ref(); ++depth) {
        if (depth > kMaxResolveDepth) malformed("reference chain too long");
        current = get(*current.ref());
    }
    return current;
}

Object Document::lookup(const Dict& dict, const std::string& key) const {
    const Object* o = dict.find(key);
    return o ? resolve(*o) : Object{};
}

std::string Document::decode_stream(const Stream& stream) const {
    Object filter = lookup(stream.dict, "Filter");
    Object params = lookup(stream.dict, "DecodeParms");
    std::vector<FilterStep> steps;
    std::vector<Object> param_objs;
    if (const Name* n = filter.name()) {
        steps.push_back({n->value, nullptr});
        param_objs.push_back(params);
    } else if (const Array* a = filter.array()) {
        const Array* pa = params.array();
        for (std::size_t i = 0; i < a->size(); ++i) {
            Object f = resolve((*a)[i]);
            if (!f.name()) malformed("filter entry is not a name");
            steps.push_back({f.name()->value, nullptr});
            param_objs.push_back(pa && i < pa->size() ? resolve((*pa)[i]) : Object{});
        }
    }
    std::string data = stream.raw;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        steps[i].params = param_objs[i].dict();
        data = apply_filter(data, steps[i]);
    }
    return data;
}

std::optional<std::array<double, 4>> Document::read_box(const Dict& dict, const std::string& key) const {
    Object box = lookup(dict, key);
    const Array* a = box.array();
    if (!a || a->size() != 4) return std::nullopt;
    std::array<double, 4> out{};
    for (int i = 0; i < 4; ++i) {
        auto v = resolve((*a)[i]).number();
        if (!v) return std::nullopt;
        out[i] = *v;
    }
    // normalise so that [0],[1] is the lower-left corner
    if (out[0] > out[2]) std::swap(out[0], out[2]);
    if (out[1] > out[3]) std::swap(out[1], out[3]);
    return out;
}

void Document::collect_pages() {
    pages_.clear();
    Object root = lookup(*trailer_, "Root");
    const Dict* catalog = root.dict();
    if (!catalog) malformed("missing document catalog");
    const Object* pages_ref = catalog->find("Pages");
    if (!pages_ref) malformed("catalog has no page tree");
    std::vector<Ref> stack;
    walk_pages(*pages_ref, Object{}, std::nullopt, std::nullopt, std::nullopt, stack);
}

void Document::walk_pages(const Object& node_obj, const Object& inherited_resources,
                          std::optional<std::array<double, 4>> media,
                          std::optional<std::array<double, 4>> crop, std::optional<int> rotate,
                          std::vector<Ref>& stack) {
    if (stack.size() > kMaxPageDepth) malformed("page tree too deep");
    Ref ref{};
    if (const Ref* r = node_obj.ref()) {
        if (std::find(stack.begin(), stack.end(), *r) != stack.end()) malformed("page tree cycle");
        ref = *r;
    }
    Object node = resolve(node_obj);
    const Dict* dict = node.dict();
    if (!dict) return;
    stack.push_back(ref);

    Object resources = dict->contains("Resources") ? lookup(*dict, "Resources") : inherited_resources;
    if (auto m = read_box(*dict, "MediaBox")) media = m;
    if (auto c = read_box(*dict, "CropBox")) crop = c;
    if (auto r = lookup(*dict, "Rotate").integer()) rotate = static_cast<int>(*r);

    Object kids = lookup(*dict, "Kids");
    const bool is_tree = name_is(dict->find("Type"), "Pages") || (kids.array() && !name_is(dict->find("Type"), "Page"));
    if (is_tree) {
        if (const Array* a = kids.array()) {
            for (const Object& kid : *a) walk_pages(kid, resources, media, crop, rotate, stack);
        }
    } else {
        PageNode page;
        page.ref = ref;
        if (const auto* dp = std::get_if<DictPtr>(&node.value)) {
            page.dict = *dp;
        } else {
            page.dict = std::make_shared<Dict>(*dict);
        }
        page.resources = resources;
        if (media) page.media_box = *media;
        page.crop_box = crop;
        page.rotate = rotate.value_or(0);
        pages_.push_back(std::move(page));
    }
    stack.pop_back();
}

}  // namespace docanno::pdf
