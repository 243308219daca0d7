#pragma once

#include "mull/common.hpp"

#include <vector>

namespace mull {

// Intensity 0.5 is reserved as the "hole" sentinel inside puzzle grids.
constexpr double kHoleSentinel = 0.5;

struct ToyImage {
    int height = 0;
    int width = 0;
    std::vector<double> cells;  // row-major, each in [0, 1]

    ToyImage() = default;
    ToyImage(int h, int w, double fill = 0.0)
        : height(h), width(w), cells(static_cast<size_t>(h) * w, fill) {}

    double& at(int r, int c) { return cells[static_cast<size_t>(r) * width + c]; }
    double at(int r, int c) const { return cells[static_cast<size_t>(r) * width + c]; }

    bool operator==(const ToyImage& o) const {
        return height == o.height && width == o.width && cells == o.cells;
    }

    void validate() const {
        if (static_cast<size_t>(height) * width != cells.size())
            throw DataError("ToyImage: height*width != cells length");
        for (double v : cells)
            if (!(v >= 0.0 && v <= 1.0)) throw DataError("ToyImage: intensity outside [0,1]");
    }
};

// 90-degree clockwise rotation; square grids only.
inline ToyImage rotate90(const ToyImage& img) {
    if (img.height != img.width) throw DataError("rotate90 requires a square grid");
    ToyImage out(img.height, img.width);
    for (int r = 0; r < img.height; ++r)
        for (int c = 0; c < img.width; ++c) out.at(c, img.height - 1 - r) = img.at(r, c);
    return out;
}

// Cyclic shift: positive dr moves content down, positive dc moves it right.
inline ToyImage shift_wrap(const ToyImage& img, int dr, int dc) {
    ToyImage out(img.height, img.width);
    for (int r = 0; r < img.height; ++r) {
        int rr = ((r + dr) % img.height + img.height) % img.height;
        for (int c = 0; c < img.width; ++c) {
            int cc = ((c + dc) % img.width + img.width) % img.width;
            out.at(rr, cc) = img.at(r, c);
        }
    }
    return out;
}

inline ToyImage extract_patch(const ToyImage& img, int r0, int c0, int h, int w) {
    ToyImage out(h, w);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) out.at(r, c) = img.at(r0 + r, c0 + c);
    return out;
}

inline ToyImage insert_patch(const ToyImage& img, const ToyImage& patch, int r0, int c0) {
    ToyImage out = img;
    for (int r = 0; r < patch.height; ++r)
        for (int c = 0; c < patch.width; ++c) out.at(r0 + r, c0 + c) = patch.at(r, c);
    return out;
}

}  // namespace mull
