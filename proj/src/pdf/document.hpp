// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdf/object.hpp"

namespace docanno::pdf {

/// Page dictionary with inheritable attributes resolved.
struct PageNode {
    Ref ref;
    DictPtr dict;
    Object resources;  // resolved dictionary or null
    std::array<double, 4> media_box{0, 0, 612, 792};
    std::optional<std::array<double, 4>> crop_box;
    int rotate = 0;
};

/// Random-access view over a PDF file: cross-reference table, trailer, object
/// resolution and the flattened page tree. Not thread-safe; create one per
/// extraction.
class Document {
public:
    /// Throws Error(MalformedPdf) when no usable structure is found and
    /// Error(EncryptedPdf) when the trailer declares encryption.
    explicit Document(std::string_view data);

    const Dict& trailer() const { return *trailer_; }

    /// Follows indirect references (bounded depth); non-references are returned as-is.
    Object resolve(const Object& obj) const;
    Object get(Ref ref) const;

    /// Resolved dictionary entry, or null object.
    Object lookup(const Dict& dict, const std::string& key) const;

    std::string decode_stream(const Stream& stream) const;

    const std::vector<PageNode>& pages() const { return pages_; }

    /// True when the cross-reference data was unusable and objects were found by scanning.
    bool reconstructed() const { return reconstructed_; }

private:
    struct XrefEntry {
        enum class Kind { Offset, Compressed } kind = Kind::Offset;
        std::size_t offset = 0;  // file offset, or object stream number
        int index = 0;           // index within object stream
    };

    bool load_xref_chain(std::size_t start);
    std::size_t parse_xref_table(std::size_t pos, Dict& trailer_out);
    void parse_xref_stream(const Stream& stream);
    void reconstruct();
    void collect_pages();
    void walk_pages(const Object& node, const Object& inherited_resources,
                    std::optional<std::array<double, 4>> media, std::optional<std::array<double, 4>> crop,
                    std::optional<int> rotate, std::vector<Ref>& stack);

    Object parse_indirect_at(std::size_t offset, int expected_num) const;
    Object load_compressed(int stream_num, int index, int expected_num) const;
    std::optional<std::array<double, 4>> read_box(const Dict& dict, const std::string& key) const;

    std::string_view data_;
    std::map<int, XrefEntry> xref_;
    DictPtr trailer_;
    std::vector<PageNode> pages_;
    bool reconstructed_ = false;

    mutable std::map<int, Object> cache_;
    mutable std::map<int, std::vector<std::pair<int, std::size_t>>> objstm_index_;
    mutable std::map<int, std::string> objstm_data_;
    mutable std::vector<int> resolving_;
};

}  // namespace docanno::pdf
