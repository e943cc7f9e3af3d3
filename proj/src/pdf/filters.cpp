// SPDX-License-Identifier: Apache-2.0
#include "pdf/filters.hpp"

#include <array>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include <zlib.h>

#include "docanno/error.hpp"

namespace docanno::pdf {
namespace {

int int_param(const Dict* params, const char* key, int fallback) {
    if (!params) return fallback;
    if (const Object* o = params->find(key)) {
        if (auto v = o->integer()) return static_cast<int>(*v);
    }
    return fallback;
}

}  // namespace

std::string flate_decode(std::string_view input) {
    z_stream zs{};
    if (inflateInit(&zs) != Z_OK) throw Error(ErrorCode::MalformedPdf, "zlib init failed");
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(input.data()));
    zs.avail_in = static_cast<uInt>(input.size());
    std::string out;
    std::array<char, 16384> buf{};
    int rc = Z_OK;
    while (rc == Z_OK) {
        zs.next_out = reinterpret_cast<Bytef*>(buf.data());
        zs.avail_out = static_cast<uInt>(buf.size());
        rc = inflate(&zs, Z_NO_FLUSH);
        out.append(buf.data(), buf.size() - zs.avail_out);
        if (rc == Z_BUF_ERROR && zs.avail_in == 0) break;  // truncated stream: keep what we have
    }
    inflateEnd(&zs);
    if (rc != Z_STREAM_END && rc != Z_BUF_ERROR && out.empty()) {
        throw Error(ErrorCode::MalformedPdf, "corrupt FlateDecode stream");
    }
    return out;
}

std::string flate_encode(std::string_view input) {
    uLongf size = compressBound(static_cast<uLong>(input.size()));
    std::string out(size, '\0');
    if (compress2(reinterpret_cast<Bytef*>(out.data()), &size,
                  reinterpret_cast<const Bytef*>(input.data()), static_cast<uLong>(input.size()),
                  Z_BEST_COMPRESSION) != Z_OK) {
        throw Error(ErrorCode::Io, "zlib compression failed");
    }
    out.resize(size);
    return out;
}

std::string lzw_decode(std::string_view input, int early_change) {
    std::vector<std::string> table;
    auto reset = [&] {
        table.clear();
        for (int i = 0; i < 256; ++i) table.emplace_back(1, static_cast<char>(i));
        table.emplace_back();  // 256 clear
        table.emplace_back();  // 257 eod
    };
    reset();
    std::string out;
    int code_len = 9;
    std::uint32_t bit_buf = 0;
    int bit_count = 0;
    std::size_t pos = 0;
    int prev = -1;
    for (;;) {
        while (bit_count < code_len && pos < input.size()) {
            bit_buf = (bit_buf << 8) | static_cast<unsigned char>(input[pos++]);
            bit_count += 8;
        }
        if (bit_count < code_len) break;
        const int code = static_cast<int>((bit_buf >> (bit_count - code_len)) & ((1u << code_len) - 1));
        bit_count -= code_len;
        if (code == 256) {
            reset();
            code_len = 9;
            prev = -1;
            continue;
        }
        if (code == 257) break;
        std::string entry;
        if (code < static_cast<int>(table.size())) {
            entry = table[code];
            if (prev >= 0) table.push_back(table[prev] + entry[0]);
        } else if (prev >= 0 && code == static_cast<int>(table.size())) {
            entry = table[prev] + table[prev][0];
            table.push_back(entry);
        } else {
            throw Error(ErrorCode::MalformedPdf, "corrupt LZW stream");
        }
        out += entry;
        prev = code;
        const int size = static_cast<int>(table.size()) + early_change;
        if (size >= 4096) {
            code_len = 12;
        } else if (size >= 2048) {
            code_len = 12;
        } else if (size >= 1024) {
            code_len = 11;
        } else if (size >= 512) {
            code_len = 10;
        }
    }
    return out;
}

std::string ascii_hex_decode(std::string_view input) {
    std::string out;
    int pending = -1;
    for (char ch : input) {
        const auto c = static_cast<unsigned char>(ch);
        if (c == '>') break;
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else continue;
        if (pending < 0) {
            pending = v;
        } else {
            out += static_cast<char>((pending << 4) | v);
            pending = -1;
        }
    }
    if (pending >= 0) out += static_cast<char>(pending << 4);
    return out;
}

std::string ascii85_decode(std::string_view input) {
    std::string out;
    std::uint32_t tuple = 0;
    int count = 0;
    for (std::size_t i = 0; i < input.size(); ++i) {
        const char c = input[i];
        if (c == '~') break;
        if (c == 'z' && count == 0) {
            out.append(4, '\0');
            continue;
        }
        if (c < '!' || c > 'u') continue;
        tuple = tuple * 85 + static_cast<std::uint32_t>(c - '!');
        if (++count == 5) {
            for (int s = 24; s >= 0; s -= 8) out += static_cast<char>((tuple >> s) & 0xFF);
            tuple = 0;
            count = 0;
        }
    }
    if (count > 1) {
        for (int k = count; k < 5; ++k) tuple = tuple * 85 + 84;
        for (int k = 0; k < count - 1; ++k) out += static_cast<char>((tuple >> (24 - 8 * k)) & 0xFF);
    }
    return out;
}

std::string run_length_decode(std::string_view input) {
    std::string out;
    std::size_t i = 0;
    while (i < input.size()) {
        const int len = static_cast<unsigned char>(input[i++]);
        if (len == 128) break;
        if (len < 128) {
            const std::size_t n = std::min<std::size_t>(len + 1, input.size() - i);
            out.append(input.substr(i, n));
            i += n;
        } else if (i < input.size()) {
            out.append(257 - len, input[i++]);
        }
    }
    return out;
}

std::string apply_predictor(std::string data, int predictor, int colors, int bits, int columns) {
    if (predictor <= 1) return data;
    const int bpp = std::max(1, (colors * bits + 7) / 8);
    const std::size_t row_len = static_cast<std::size_t>((columns * colors * bits + 7) / 8);
    if (predictor == 2) {
        if (bits != 8) throw Error(ErrorCode::UnsupportedFeature, "TIFF predictor with bits != 8");
        for (std::size_t row = 0; row + row_len <= data.size(); row += row_len) {
            for (std::size_t i = bpp; i < row_len; ++i) {
                data[row + i] = static_cast<char>(data[row + i] + data[row + i - bpp]);
            }
        }
        return data;
    }
    std::string out;
    std::string prev(row_len, '\0');
    std::size_t pos = 0;
    while (pos < data.size()) {
        const int type = static_cast<unsigned char>(data[pos++]);
        std::string row = data.substr(pos, row_len);
        pos += row_len;
        row.resize(row_len, '\0');
        for (std::size_t i = 0; i < row_len; ++i) {
            const int a = i >= static_cast<std::size_t>(bpp) ? static_cast<unsigned char>(row[i - bpp]) : 0;
            const int b = static_cast<unsigned char>(prev[i]);
            const int c = i >= static_cast<std::size_t>(bpp) ? static_cast<unsigned char>(prev[i - bpp]) : 0;
            int x = static_cast<unsigned char>(row[i]);
            switch (type) {
                case 0: break;
                case 1: x += a; break;
                case 2: x += b; break;
                case 3: x += (a + b) / 2; break;
                case 4: {
                    const int p = a + b - c;
                    const int pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
                    x += (pa <= pb && pa <= pc) ? a : (pb <= pc ? b : c);
                    break;
                }
                default:
                    throw Error(ErrorCode::MalformedPdf, "invalid PNG predictor row type");
            }
            row[i] = static_cast<char>(x & 0xFF);
        }
        out += row;
        prev = std::move(row);
    }
    return out;
}

std::string apply_filter(std::string_view input, const FilterStep& step) {
    const std::string& name = step.name;
    std::string out;
    if (name == "FlateDecode" || name == "Fl") {
        out = flate_decode(input);
    } else if (name == "LZWDecode" || name == "LZW") {
        out = lzw_decode(input, int_param(step.params, "EarlyChange", 1));
    } else if (name == "ASCIIHexDecode" || name == "AHx") {
        return ascii_hex_decode(input);
    } else if (name == "ASCII85Decode" || name == "A85") {
        return ascii85_decode(input);
    } else if (name == "RunLengthDecode" || name == "RL") {
        return run_length_decode(input);
    } else {
        throw Error(ErrorCode::UnsupportedFeature, "unsupported stream filter " + name);
    }
    const int predictor = int_param(step.params, "Predictor", 1);
    if (predictor > 1) {
        out = apply_predictor(std::move(out), predictor, int_param(step.params, "Colors", 1),
                              int_param(step.params, "BitsPerComponent", 8),
                              int_param(step.params, "Columns", 1));
    }
    return out;
}

}  // namespace docanno::pdf
