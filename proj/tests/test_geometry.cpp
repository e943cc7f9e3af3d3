// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "docanno/error.hpp"
#include "docanno/geometry.hpp"
#include "support/support.hpp"

using namespace docanno;
using docanno::testing::Rng;
using docanno::testing::uniform;

TEST(Bounds, FromXywhAndExtents) {
    const Bounds b = Bounds::from_xywh(10, 20, 30, 40);
    EXPECT_EQ(b, (Bounds{10, 20, 40, 60}));
    EXPECT_DOUBLE_EQ(b.width(), 30);
    EXPECT_DOUBLE_EQ(b.height(), 40);
    EXPECT_DOUBLE_EQ(b.area(), 1200);
    EXPECT_TRUE(b.is_ordered());
    EXPECT_FALSE((Bounds{5, 0, 4, 1}).is_ordered());
}

TEST(Bounds, IntersectionAndIou) {
    const Bounds a{0, 0, 10, 10}, b{5, 5, 15, 15};
    EXPECT_DOUBLE_EQ(intersection_area(a, b), 25);
    EXPECT_DOUBLE_EQ(iou(a, b), 25.0 / 175.0);
    EXPECT_DOUBLE_EQ(iou(a, a), 1.0);
    EXPECT_EQ(intersection_area(a, Bounds{10, 0, 20, 10}), 0.0);
}

TEST(Bounds, DegenerateIouIsZero) {
    const Bounds line{0, 0, 10, 0};
    EXPECT_EQ(iou(line, line), 0.0);
    EXPECT_EQ(iou(line, Bounds{0, 0, 10, 10}), 0.0);
}

TEST(Bounds, ClampedToPage) {
    EXPECT_EQ(clamped(Bounds{-3, 4, 700, 900}, Size{612, 792}), (Bounds{0, 4, 612, 792}));
}

TEST(RescaleBounds, Identity) {
    EXPECT_EQ(rescale_bounds({10, 10, 20, 20}, {100, 200}, {100, 200}), (Bounds{10, 10, 20, 20}));
}

TEST(RescaleBounds, PureScaling) {
    EXPECT_EQ(rescale_bounds({10, 10, 20, 20}, {100, 200}, {200, 100}), (Bounds{20, 5, 40, 10}));
}

TEST(RescaleBounds, RejectsNonPositiveDimensions) {
    for (const Size bad : {Size{0, 10}, Size{10, -1}, Size{std::nan(""), 1}}) {
        try {
            rescale_bounds({0, 0, 1, 1}, bad, {10, 10});
            FAIL() << "expected InvalidDimensions";
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidDimensions);
        }
        EXPECT_THROW(rescale_bounds({0, 0, 1, 1}, {10, 10}, bad), Error);
    }
}

namespace {

double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST(RescaleBounds, RoundTripProperty) {
    Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        const Size from{uniform(rng, 1, 2000), uniform(rng, 1, 2000)};
        const Size to{uniform(rng, 1, 5000), uniform(rng, 1, 5000)};
        const double l = uniform(rng, 0, from.width), t = uniform(rng, 0, from.height);
        const Bounds b{l, t, uniform(rng, l, from.width), uniform(rng, t, from.height)};
        const Bounds back = rescale_bounds(rescale_bounds(b, from, to), to, from);
        EXPECT_LE(rel_err(back.left, b.left), 1e-9);
        EXPECT_LE(rel_err(back.top, b.top), 1e-9);
        EXPECT_LE(rel_err(back.right, b.right), 1e-9);
        EXPECT_LE(rel_err(back.bottom, b.bottom), 1e-9);
    }
}

TEST(RescaleBounds, CompositionProperty) {
    Rng rng(8);
    for (int i = 0; i < 2000; ++i) {
        const Size a{uniform(rng, 1, 2000), uniform(rng, 1, 2000)};
        const Size b{uniform(rng, 1, 2000), uniform(rng, 1, 2000)};
        const Size c{uniform(rng, 1, 2000), uniform(rng, 1, 2000)};
        const Bounds box{uniform(rng, 0, 100), uniform(rng, 0, 100), uniform(rng, 100, 900), uniform(rng, 100, 900)};
        const Bounds two = rescale_bounds(rescale_bounds(box, a, b), b, c);
        const Bounds one = rescale_bounds(box, a, c);
        EXPECT_LE(rel_err(two.left, one.left), 1e-9);
        EXPECT_LE(rel_err(two.top, one.top), 1e-9);
        EXPECT_LE(rel_err(two.right, one.right), 1e-9);
        EXPECT_LE(rel_err(two.bottom, one.bottom), 1e-9);
    }
}
