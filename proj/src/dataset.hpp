#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "image.hpp"
#include "rng.hpp"

namespace genaug {

enum class DomainTag { synthetic, real };

// Immutable listing of the image files in a dataset directory. The file list
// is sorted lexicographically so sampling is reproducible across filesystems.
struct DatasetHandle {
    std::filesystem::path root;
    std::vector<std::filesystem::path> file_list;
    DomainTag domain_tag = DomainTag::synthetic;
    size_t skipped_files = 0; // non-image entries ignored during the scan
};

// Lists *.png/*.jpg/*.jpeg (case-insensitive) in dir. Throws DatasetEmpty when
// no image files are found and IoError when the directory is unreadable.
DatasetHandle scan_dataset(const std::filesystem::path& dir, DomainTag tag);

// Draws n paths: uniformly without replacement when n <= |file_list|, with
// replacement otherwise. Order is determined solely by the rng state.
std::vector<std::filesystem::path> sample_paths(const DatasetHandle& handle, size_t n, Rng& rng);

// sample_paths followed by decode_and_resize on each draw.
std::vector<Image> sample(const DatasetHandle& handle, size_t n, int shortest_side, Rng& rng);

} // namespace genaug
