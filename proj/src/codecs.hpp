#pragma once

#include <filesystem>

#include "image.hpp"

namespace genaug {

// Decodes a PNG or JPEG file to 8-bit RGB. Grayscale inputs are replicated to
// three channels; alpha is dropped; 16-bit PNG is reduced to 8-bit.
Image decode_image(const std::filesystem::path& path);

// Writes an RGB PNG. Encoding settings are fixed so output bytes are a pure
// function of pixel content.
void encode_png(const Image& img, const std::filesystem::path& path);

// decode_image followed by resize_shortest_side.
Image decode_and_resize(const std::filesystem::path& path, int shortest_side);

} // namespace genaug
