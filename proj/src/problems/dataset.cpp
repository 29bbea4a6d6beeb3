#include "lancbio/problems/dataset.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lancbio/errors.hpp"
#include "lancbio/rng.hpp"

namespace lancbio {

Dataset gen_classification_data(std::size_t n, std::size_t dim, std::size_t classes,
                                std::uint64_t seed, double separation) {
  Rng rng(seed);
  Dataset ds;
  ds.n = n;
  ds.dim = dim;
  ds.features.resize(n * dim);
  ds.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = i % classes;
    const std::size_t axis = k % dim;
    const double sign = (k < dim) ? 1.0 : -1.0;
    double* row = &ds.features[i * dim];
    for (std::size_t j = 0; j < dim; ++j) row[j] = rng.normal();
    row[axis] += sign * separation;
    ds.labels[i] = static_cast<int>(k);
  }
  return ds;
}

namespace {

std::uint32_t read_be32(std::ifstream& in, const std::string& path) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4))
    throw TruncatedFileError("unexpected end of file: " + path);
  return (std::uint32_t(b[0]) << 24) | (std::uint32_t(b[1]) << 16) |
         (std::uint32_t(b[2]) << 8) | std::uint32_t(b[3]);
}

void write_be32(std::ofstream& out, std::uint32_t v) {
  const unsigned char b[4] = {static_cast<unsigned char>(v >> 24),
                              static_cast<unsigned char>(v >> 16),
                              static_cast<unsigned char>(v >> 8),
                              static_cast<unsigned char>(v)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

}  // namespace

Dataset load_idx(const std::string& images_path, const std::string& labels_path) {
  std::ifstream img(images_path, std::ios::binary);
  if (!img) throw TruncatedFileError("cannot open " + images_path);
  if (read_be32(img, images_path) != 0x00000803u)
    throw BadMagicError("bad magic in " + images_path);
  const std::uint32_t count = read_be32(img, images_path);
  const std::uint32_t rows = read_be32(img, images_path);
  const std::uint32_t cols = read_be32(img, images_path);

  std::ifstream lab(labels_path, std::ios::binary);
  if (!lab) throw TruncatedFileError("cannot open " + labels_path);
  if (read_be32(lab, labels_path) != 0x00000801u)
    throw BadMagicError("bad magic in " + labels_path);
  const std::uint32_t lcount = read_be32(lab, labels_path);
  if (lcount != count)
    throw CountMismatchError("image/label counts disagree: " +
                             std::to_string(count) + " vs " + std::to_string(lcount));

  Dataset ds;
  ds.n = count;
  ds.dim = static_cast<std::size_t>(rows) * cols;
  ds.features.resize(ds.n * ds.dim);
  ds.labels.resize(ds.n);

  std::vector<unsigned char> buf(ds.dim);
  for (std::size_t i = 0; i < ds.n; ++i) {
    if (!img.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(ds.dim)))
      throw TruncatedFileError("truncated pixel data in " + images_path);
    for (std::size_t j = 0; j < ds.dim; ++j)
      ds.features[i * ds.dim + j] = static_cast<double>(buf[j]) / 255.0;
  }
  for (std::size_t i = 0; i < ds.n; ++i) {
    unsigned char l;
    if (!lab.read(reinterpret_cast<char*>(&l), 1))
      throw TruncatedFileError("truncated label data in " + labels_path);
    ds.labels[i] = static_cast<int>(l);
  }
  return ds;
}

void write_idx_images(const std::string& path, std::size_t count, std::size_t rows,
                      std::size_t cols, const std::vector<std::uint8_t>& pixels) {
  if (pixels.size() != count * rows * cols)
    throw ShapeMismatchError("pixel buffer does not match count*rows*cols");
  std::ofstream out(path, std::ios::binary);
  write_be32(out, 0x00000803u);
  write_be32(out, static_cast<std::uint32_t>(count));
  write_be32(out, static_cast<std::uint32_t>(rows));
  write_be32(out, static_cast<std::uint32_t>(cols));
  out.write(reinterpret_cast<const char*>(pixels.data()),
            static_cast<std::streamsize>(pixels.size()));
}

void write_idx_labels(const std::string& path, const std::vector<std::uint8_t>& labels) {
  std::ofstream out(path, std::ios::binary);
  write_be32(out, 0x00000801u);
  write_be32(out, static_cast<std::uint32_t>(labels.size()));
  out.write(reinterpret_cast<const char*>(labels.data()),
            static_cast<std::streamsize>(labels.size()));
}

Dataset load_csv_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TruncatedFileError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw TruncatedFileError("empty CSV: " + path);

  Dataset ds;
  std::vector<double> row;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    row.clear();
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() < 2) throw ShapeMismatchError("CSV row needs features + label");
    if (ds.dim == 0) ds.dim = row.size() - 1;
    if (row.size() - 1 != ds.dim)
      throw ShapeMismatchError("inconsistent CSV column count in " + path);
    ds.features.insert(ds.features.end(), row.begin(), row.end() - 1);
    ds.labels.push_back(static_cast<int>(row.back()));
    ++ds.n;
  }
  return ds;
}

}  // namespace lancbio
