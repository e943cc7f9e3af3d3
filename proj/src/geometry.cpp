// SPDX-License-Identifier: Apache-2.0
#include "docanno/geometry.hpp"

#include <cmath>

#include "docanno/error.hpp"

namespace docanno {

Bounds rescale_bounds(const Bounds& b, const Size& from, const Size& to) {
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(from.width) || !positive(from.height) || !positive(to.width) || !positive(to.height)) {
        throw Error(ErrorCode::InvalidDimensions, "page dimensions must be positive");
    }
    const double sx = to.width / from.width;
    const double sy = to.height / from.height;
    return {b.left * sx, b.top * sy, b.right * sx, b.bottom * sy};
}

}  // namespace docanno
