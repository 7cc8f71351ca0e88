#include "dataset.hpp"

#include <algorithm>
#include <cctype>
#include <system_error>

#include "codecs.hpp"
#include "error.hpp"

namespace genaug {
namespace {

bool has_image_extension(const std::filesystem::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

} // namespace

DatasetHandle scan_dataset(const std::filesystem::path& dir, DomainTag tag) {
    std::error_code ec;
    std::filesystem::directory_iterator it(dir, ec);
    if (ec) fail(Errc::io, "cannot read directory " + dir.string() + ": " + ec.message());

    DatasetHandle handle;
    handle.root = dir;
    handle.domain_tag = tag;
    for (const auto& entry : it) {
        if (!entry.is_regular_file()) continue;
        if (has_image_extension(entry.path())) {
            handle.file_list.push_back(entry.path());
        } else {
            ++handle.skipped_files;
        }
    }
    std::sort(handle.file_list.begin(), handle.file_list.end(),
              [](const auto& a, const auto& b) { return a.string() < b.string(); });
    if (handle.file_list.empty()) fail(Errc::dataset_empty, "no image files in " + dir.string());
    return handle;
}

std::vector<std::filesystem::path> sample_paths(const DatasetHandle& handle, size_t n, Rng& rng) {
    const size_t total = handle.file_list.size();
    std::vector<std::filesystem::path> out;
    out.reserve(n);
    if (n <= total) {
        // partial Fisher-Yates over an index vector
        std::vector<size_t> idx(total);
        for (size_t i = 0; i < total; ++i) idx[i] = i;
        for (size_t i = 0; i < n; ++i) {
            const size_t j = i + static_cast<size_t>(rng.uniform_int(0, static_cast<int64_t>(total - i - 1)));
            std::swap(idx[i], idx[j]);
            out.push_back(handle.file_list[idx[i]]);
        }
    } else {
        for (size_t i = 0; i < n; ++i) {
            out.push_back(handle.file_list[static_cast<size_t>(rng.uniform_int(0, static_cast<int64_t>(total - 1)))]);
        }
    }
    return out;
}

std::vector<Image> sample(const DatasetHandle& handle, size_t n, int shortest_side, Rng& rng) {
    if (n < 1) fail(Errc::invalid_config, "sample count must be >= 1");
    std::vector<Image> out;
    out.reserve(n);
    for (const auto& path : sample_paths(handle, n, rng)) {
        out.push_back(decode_and_resize(path, shortest_side));
    }
    return out;
}

} // namespace genaug
