#pragma once

#include <cstdint>
#include <vector>

namespace genaug {

// Decoded 8-bit RGB raster, interleaved row-major. Channels are fixed at 3.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> data; // width * height * 3 bytes

    Image() = default;
    Image(int w, int h) : width(w), height(h), data(static_cast<size_t>(w) * h * 3) {}

    static Image filled(int w, int h, uint8_t r, uint8_t g, uint8_t b) {
        Image img(w, h);
        for (size_t i = 0; i < img.data.size(); i += 3) {
            img.data[i] = r;
            img.data[i + 1] = g;
            img.data[i + 2] = b;
        }
        return img;
    }

    uint8_t* px(int x, int y) { return data.data() + (static_cast<size_t>(y) * width + x) * 3; }
    const uint8_t* px(int x, int y) const { return data.data() + (static_cast<size_t>(y) * width + x) * 3; }

    size_t pixel_count() const { return static_cast<size_t>(width) * height; }

    bool operator==(const Image& o) const = default;
};

inline uint8_t clamp_u8(double v) {
    if (v <= 0.0) return 0;
    if (v >= 255.0) return 255;
    return static_cast<uint8_t>(v + 0.5);
}

// Rec. 601 luma of a [0,1]-scaled or [0,255]-scaled triple; unit follows input.
inline double luminance(double r, double g, double b) { return 0.299 * r + 0.587 * g + 0.114 * b; }

// Bilinear resample to an exact target size (half-pixel-center convention,
// clamp-to-edge). Returns the input untouched when sizes already match.
Image resize_bilinear(const Image& src, int out_w, int out_h);

// Scales so min(width, height) == shortest_side, aspect preserved, other side
// rounded to the nearest pixel (floor 1).
Image resize_shortest_side(const Image& src, int shortest_side);

} // namespace genaug
