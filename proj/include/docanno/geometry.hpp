// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>

namespace docanno {

/// Axis-aligned rectangle in page points, origin top-left, y growing downward.
struct Bounds {
    double left = 0.0;
    double top = 0.0;
    double right = 0.0;
    double bottom = 0.0;

    static constexpr Bounds from_xywh(double x, double y, double w, double h) {
        return {x, y, x + w, y + h};
    }

    constexpr double width() const { return right - left; }
    constexpr double height() const { return bottom - top; }
    constexpr double area() const { return width() * height(); }
    constexpr bool is_ordered() const { return left <= right && top <= bottom; }

    friend constexpr bool operator==(const Bounds&, const Bounds&) = default;
};

struct Size {
    double width = 0.0;
    double height = 0.0;

    friend constexpr bool operator==(const Size&, const Size&) = default;
};

/// Area of the overlap of two rectangles; 0 when they are disjoint or only touch.
constexpr double intersection_area(const Bounds& a, const Bounds& b) {
    const double w = std::min(a.right, b.right) - std::max(a.left, b.left);
    const double h = std::min(a.bottom, b.bottom) - std::max(a.top, b.top);
    return (w > 0.0 && h > 0.0) ? w * h : 0.0;
}

/// Intersection over union. Degenerate (zero-area) boxes have IoU 0 with everything.
constexpr double iou(const Bounds& a, const Bounds& b) {
    const double area_a = a.area();
    const double area_b = b.area();
    if (!(area_a > 0.0) || !(area_b > 0.0)) return 0.0;
    const double inter = intersection_area(a, b);
    return inter / (area_a + area_b - inter);
}

constexpr Bounds union_of(const Bounds& a, const Bounds& b) {
    return {std::min(a.left, b.left), std::min(a.top, b.top), std::max(a.right, b.right),
            std::max(a.bottom, b.bottom)};
}

constexpr Bounds expanded(const Bounds& b, double by) {
    return {b.left - by, b.top - by, b.right + by, b.bottom + by};
}

constexpr Bounds clamped(const Bounds& b, const Size& page) {
    return {std::clamp(b.left, 0.0, page.width), std::clamp(b.top, 0.0, page.height),
            std::clamp(b.right, 0.0, page.width), std::clamp(b.bottom, 0.0, page.height)};
}

/// Maps bounds between two frames of the same page (e.g. points to canvas pixels).
/// Throws Error(InvalidDimensions) when any dimension is not strictly positive.
Bounds rescale_bounds(const Bounds& b, const Size& from, const Size& to);

}  // namespace docanno
