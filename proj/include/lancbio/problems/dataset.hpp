#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lancbio/vec.hpp"

namespace lancbio {

/// Row-major feature matrix with integer labels.
struct Dataset {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<double> features;  // n * dim
  std::vector<int> labels;       // n

  const double* row(std::size_t i) const { return &features[i * dim]; }
};

/// Gaussian class clusters, deterministic in the seed. Class means sit at
/// separation * (+-e_{k mod dim}); sample i belongs to class i mod classes.
Dataset gen_classification_data(std::size_t n, std::size_t dim, std::size_t classes,
                                std::uint64_t seed, double separation = 1.0);

/// IDX-format loader (big-endian magic 0x803 for u8 image tensors and 0x801
/// for u8 label vectors). Features are scaled to [0,1] and flattened
/// row-major. Throws BadMagicError / TruncatedFileError / CountMismatchError.
Dataset load_idx(const std::string& images_path, const std::string& labels_path);

/// IDX writers for crafted fixtures and data export.
void write_idx_images(const std::string& path, std::size_t count, std::size_t rows,
                      std::size_t cols, const std::vector<std::uint8_t>& pixels);
void write_idx_labels(const std::string& path, const std::vector<std::uint8_t>& labels);

/// CSV dataset: header row, comma-separated doubles, final column integer label.
Dataset load_csv_dataset(const std::string& path);

}  // namespace lancbio
