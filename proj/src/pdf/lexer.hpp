// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "pdf/object.hpp"

namespace docanno::pdf {

inline bool is_pdf_whitespace(unsigned char c) {
    return c == 0 || c == '\t' || c == '\n' || c == '\f' || c == '\r' || c == ' ';
}

inline bool is_pdf_delimiter(unsigned char c) {
    return c == '(' || c == ')' || c == '<' || c == '>' || c == '[' || c == ']' || c == '{' ||
           c == '}' || c == '/' || c == '%';
}

/// Reads PDF objects from a byte buffer. Indirect references (`n g R`) are
/// recognised when `allow_refs` is set; content streams disable them.
class Lexer {
public:
    explicit Lexer(std::string_view data, std::size_t pos = 0, bool allow_refs = true)
        : data_(data), pos_(pos), allow_refs_(allow_refs) {}

    std::size_t pos() const { return pos_; }
    void seek(std::size_t pos) { pos_ = pos; }
    bool at_end() { skip_whitespace(); return pos_ >= data_.size(); }
    std::string_view data() const { return data_; }

    void skip_whitespace();

    /// Next object or keyword; nullopt at end of input. Throws Error(MalformedPdf).
    std::optional<Object> next();

    /// Like next() but keyword tokens other than true/false/null are an error.
    Object read_object();

    /// Consumes `keyword` (after whitespace) or returns false leaving position unchanged.
    bool accept_keyword(std::string_view keyword);

    /// Reads an unsigned decimal integer token, if one is next.
    std::optional<std::int64_t> try_integer();

private:
    Object read_after_start(unsigned char c);
    Object read_number();
    String read_literal_string();
    String read_hex_string();
    Name read_name();
    Object read_array();
    Object read_dict();
    std::string read_regular();

    std::string_view data_;
    std::size_t pos_;
    bool allow_refs_;
    int depth_ = 0;
};

}  // namespace docanno::pdf
