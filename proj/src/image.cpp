#include "image.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace genaug {

Image resize_bilinear(const Image& src, int out_w, int out_h) {
    if (out_w < 1 || out_h < 1) fail(Errc::invalid_config, "resize target must be at least 1x1");
    if (out_w == src.width && out_h == src.height) return src;

    Image dst(out_w, out_h);
    const double sx = static_cast<double>(src.width) / out_w;
    const double sy = static_cast<double>(src.height) / out_h;

    for (int y = 0; y < out_h; ++y) {
        double fy = (y + 0.5) * sy - 0.5;
        fy = std::clamp(fy, 0.0, static_cast<double>(src.height - 1));
        const int y0 = static_cast<int>(fy);
        const int y1 = std::min(y0 + 1, src.height - 1);
        const double wy = fy - y0;
        for (int x = 0; x < out_w; ++x) {
            double fx = (x + 0.5) * sx - 0.5;
            fx = std::clamp(fx, 0.0, static_cast<double>(src.width - 1));
            const int x0 = static_cast<int>(fx);
            const int x1 = std::min(x0 + 1, src.width - 1);
            const double wx = fx - x0;

            const uint8_t* p00 = src.px(x0, y0);
            const uint8_t* p10 = src.px(x1, y0);
            const uint8_t* p01 = src.px(x0, y1);
            const uint8_t* p11 = src.px(x1, y1);
            uint8_t* out = dst.px(x, y);
            for (int c = 0; c < 3; ++c) {
                const double top = p00[c] + (p10[c] - p00[c]) * wx;
                const double bot = p01[c] + (p11[c] - p01[c]) * wx;
                out[c] = clamp_u8(top + (bot - top) * wy);
            }
        }
    }
    return dst;
}

Image resize_shortest_side(const Image& src, int shortest_side) {
    if (shortest_side < 1) fail(Errc::invalid_config, "shortest_side must be >= 1");
    const int cur_min = std::min(src.width, src.height);
    if (cur_min == shortest_side) return src;

    const double scale = static_cast<double>(shortest_side) / cur_min;
    int out_w, out_h;
    if (src.width <= src.height) {
        out_w = shortest_side;
        out_h = std::max(1, static_cast<int>(std::lround(src.height * scale)));
    } else {
        out_h = shortest_side;
        out_w = std::max(1, static_cast<int>(std::lround(src.width * scale)));
    }
    return resize_bilinear(src, out_w, out_h);
}

} // namespace genaug
