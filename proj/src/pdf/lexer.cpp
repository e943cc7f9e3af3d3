// SPDX-License-Identifier: Apache-2.0
#include "pdf/lexer.hpp"

#include <charconv>
#include <cstdlib>

#include "docanno/error.hpp"

namespace docanno::pdf {
namespace {

constexpr int kMaxNesting = 256;

[[noreturn]] void malformed(const std::string& what, std::size_t pos) {
    throw Error(ErrorCode::MalformedPdf, what + " at offset " + std::to_string(pos));
}

int hex_value(unsigned char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

bool is_regular(unsigned char c) { return !is_pdf_whitespace(c) && !is_pdf_delimiter(c); }

bool looks_numeric(std::string_view s) {
    if (s.empty()) return false;
    bool digit = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c >= '0' && c <= '9') {
            digit = true;
        } else if (c == '+' || c == '-') {
            // sign may repeat in sloppy writers ("--5"); only leading positions
            if (digit || s.find('.') < i) return false;
        } else if (c != '.') {
            return false;
        }
    }
    return digit;
}

// Number parsing that tolerates sloppy real-world forms like "4." or "-.5".
Object parse_number(std::string_view s) {
    std::size_t start = 0;
    bool negative = false;
    while (start < s.size() && (s[start] == '+' || s[start] == '-')) {
        negative = negative != (s[start] == '-');
        ++start;
    }
    const std::string_view body = s.substr(start);
    if (body.find('.') == std::string_view::npos) {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
        if (ec == std::errc() && ptr == body.data() + body.size()) return negative ? -v : v;
        // overflow: fall through to real
    }
    std::string copy(body);
    double v = std::strtod(copy.c_str(), nullptr);
    return negative ? -v : v;
}

}  // namespace

void Lexer::skip_whitespace() {
    while (pos_ < data_.size()) {
        const auto c = static_cast<unsigned char>(data_[pos_]);
        if (is_pdf_whitespace(c)) {
            ++pos_;
        } else if (c == '%') {
            while (pos_ < data_.size() && data_[pos_] != '\n' && data_[pos_] != '\r') ++pos_;
        } else {
            break;
        }
    }
}

std::string Lexer::read_regular() {
    const std::size_t start = pos_;
    while (pos_ < data_.size() && is_regular(static_cast<unsigned char>(data_[pos_]))) ++pos_;
    return std::string(data_.substr(start, pos_ - start));
}

std::optional<std::int64_t> Lexer::try_integer() {
    const std::size_t saved = pos_;
    skip_whitespace();
    const std::size_t start = pos_;
    while (pos_ < data_.size() && data_[pos_] >= '0' && data_[pos_] <= '9') ++pos_;
    if (pos_ == start ||
        (pos_ < data_.size() && is_regular(static_cast<unsigned char>(data_[pos_])))) {
        pos_ = saved;
        return std::nullopt;
    }
    std::int64_t v = 0;
    std::from_chars(data_.data() + start, data_.data() + pos_, v);
    return v;
}

bool Lexer::accept_keyword(std::string_view keyword) {
    const std::size_t saved = pos_;
    skip_whitespace();
    if (data_.substr(pos_, keyword.size()) == keyword) {
        const std::size_t end = pos_ + keyword.size();
        if (end >= data_.size() || !is_regular(static_cast<unsigned char>(data_[end]))) {
            pos_ = end;
            return true;
        }
    }
    pos_ = saved;
    return false;
}

std::optional<Object> Lexer::next() {
    skip_whitespace();
    if (pos_ >= data_.size()) return std::nullopt;
    return read_after_start(static_cast<unsigned char>(data_[pos_]));
}

Object Lexer::read_object() {
    auto obj = next();
    if (!obj) malformed("unexpected end of data", pos_);
    if (const Keyword* kw = obj->keyword()) malformed("unexpected keyword '" + kw->value + "'", pos_);
    return std::move(*obj);
}

Object Lexer::read_after_start(unsigned char c) {
    switch (c) {
        case '(':
            return read_literal_string();
        case '<':
            if (pos_ + 1 < data_.size() && data_[pos_ + 1] == '<') return read_dict();
            return read_hex_string();
        case '/':
            return read_name();
        case '[':
            return read_array();
        case ')':
        case '>':
        case ']':
        case '}':
            // Stray closing delimiter: report as keyword so callers can resync.
            ++pos_;
            return Keyword{std::string(1, static_cast<char>(c))};
        case '{':
            ++pos_;
            return Keyword{"{"};
        default:
            break;
    }
    const std::size_t start = pos_;
    std::string word = read_regular();
    if (word.empty()) malformed("unexpected character", start);
    if (looks_numeric(word)) {
        Object number = parse_number(word);
        if (allow_refs_ && std::holds_alternative<std::int64_t>(number.value) &&
            word.find_first_of("+-") == std::string::npos) {
            const std::size_t after = pos_;
            if (auto gen = try_integer()) {
                if (accept_keyword("R")) {
                    return Ref{static_cast<int>(std::get<std::int64_t>(number.value)),
                               static_cast<int>(*gen)};
                }
            }
            pos_ = after;
        }
        return number;
    }
    if (word == "true") return true;
    if (word == "false") return false;
    if (word == "null") return std::monostate{};
    return Keyword{std::move(word)};
}

String Lexer::read_literal_string() {
    ++pos_;  // '('
    String out;
    int nesting = 1;
    while (pos_ < data_.size()) {
        char c = data_[pos_++];
        if (c == '(') {
            ++nesting;
        } else if (c == ')') {
            if (--nesting == 0) return out;
        } else if (c == '\\') {
            if (pos_ >= data_.size()) break;
            char e = data_[pos_++];
            switch (e) {
                case 'n': out.bytes += '\n'; continue;
                case 'r': out.bytes += '\r'; continue;
                case 't': out.bytes += '\t'; continue;
                case 'b': out.bytes += '\b'; continue;
                case 'f': out.bytes += '\f'; continue;
                case '\r':
                    if (pos_ < data_.size() && data_[pos_] == '\n') ++pos_;
                    continue;
                case '\n':
                    continue;
                default:
                    break;
            }
            if (e >= '0' && e <= '7') {
                int v = e - '0';
                for (int i = 0; i < 2 && pos_ < data_.size() && data_[pos_] >= '0' &&
                                data_[pos_] <= '7';
                     ++i) {
                    v = v * 8 + (data_[pos_++] - '0');
                }
                out.bytes += static_cast<char>(v & 0xFF);
                continue;
            }
            out.bytes += e;
            continue;
        } else if (c == '\r') {
            // end-of-line in a literal string is normalised to LF
            if (pos_ < data_.size() && data_[pos_] == '\n') ++pos_;
            c = '\n';
        }
        out.bytes += c;
    }
    malformed("unterminated string", pos_);
}

String Lexer::read_hex_string() {
    ++pos_;  // '<'
    String out;
    out.hex = true;
    int pending = -1;
    while (pos_ < data_.size()) {
        const auto c = static_cast<unsigned char>(data_[pos_++]);
        if (c == '>') {
            if (pending >= 0) out.bytes += static_cast<char>(pending << 4);
            return out;
        }
        if (is_pdf_whitespace(c)) continue;
        const int v = hex_value(c);
        if (v < 0) malformed("invalid hex string", pos_ - 1);
        if (pending < 0) {
            pending = v;
        } else {
            out.bytes += static_cast<char>((pending << 4) | v);
            pending = -1;
        }
    }
    malformed("unterminated hex string", pos_);
}

Name Lexer::read_name() {
    ++pos_;  // '/'
    Name out;
    while (pos_ < data_.size() && is_regular(static_cast<unsigned char>(data_[pos_]))) {
        char c = data_[pos_++];
        if (c == '#' && pos_ + 1 < data_.size()) {
            const int hi = hex_value(static_cast<unsigned char>(data_[pos_]));
            const int lo = hex_value(static_cast<unsigned char>(data_[pos_ + 1]));
            if (hi >= 0 && lo >= 0) {
                out.value += static_cast<char>((hi << 4) | lo);
                pos_ += 2;
                continue;
            }
        }
        out.value += c;
    }
    return out;
}

Object Lexer::read_array() {
    if (++depth_ > kMaxNesting) malformed("nesting too deep", pos_);
    ++pos_;  // '['
    auto items = std::make_shared<Array>();
    for (;;) {
        skip_whitespace();
        if (pos_ >= data_.size()) malformed("unterminated array", pos_);
        if (data_[pos_] == ']') {
            ++pos_;
            break;
        }
        auto obj = next();
        if (!obj) malformed("unterminated array", pos_);
        items->push_back(std::move(*obj));
    }
    --depth_;
    return ArrayPtr(std::move(items));
}

Object Lexer::read_dict() {
    if (++depth_ > kMaxNesting) malformed("nesting too deep", pos_);
    pos_ += 2;  // '<<'
    auto dict = std::make_shared<Dict>();
    for (;;) {
        skip_whitespace();
        if (pos_ >= data_.size()) malformed("unterminated dictionary", pos_);
        if (data_[pos_] == '>' && pos_ + 1 < data_.size() && data_[pos_ + 1] == '>') {
            pos_ += 2;
            break;
        }
        if (data_[pos_] != '/') {
            // Junk between entries; skip one token and keep going.
            if (!next()) malformed("unterminated dictionary", pos_);
            continue;
        }
        Name key = read_name();
        skip_whitespace();
        if (pos_ < data_.size() && data_[pos_] == '>' && pos_ + 1 < data_.size() &&
            data_[pos_ + 1] == '>') {
            dict->entries[key.value] = std::monostate{};
            continue;
        }
        auto value = next();
        if (!value) malformed("unterminated dictionary", pos_);
        dict->entries[key.value] = std::move(*value);
    }
    --depth_;
    return DictPtr(std::move(dict));
}

}  // namespace docanno::pdf
