// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "pdf/object.hpp"

namespace docanno::pdf {

struct FilterStep {
    std::string name;
    const Dict* params = nullptr;  // /DecodeParms entry, may be null
};

/// Applies one decoding filter. Throws Error(UnsupportedFeature) for filters
/// that are not stream-level codecs we implement (image codecs, Crypt).
std::string apply_filter(std::string_view input, const FilterStep& step);

std::string flate_decode(std::string_view input);
std::string lzw_decode(std::string_view input, int early_change);
std::string ascii_hex_decode(std::string_view input);
std::string ascii85_decode(std::string_view input);
std::string run_length_decode(std::string_view input);
std::string apply_predictor(std::string data, int predictor, int colors, int bits, int columns);

/// zlib deflate, used by the synthetic writer.
std::string flate_encode(std::string_view input);

}  // namespace docanno::pdf
