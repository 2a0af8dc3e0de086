#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "srlsoa/matrix.hpp"

namespace srlsoa {

// Hyperspectral cube: height x width x bands reflectance grid, stored
// band-sequential (all pixels of band 0, then band 1, ...). Values are
// float32 on disk and in memory; numerical work promotes to double via
// flatten_pixels.
//
// On-disk HSIC format (little-endian):
//   magic "HSIC" | version u8 = 1 | height u32 | width u32 | bands u32
//   then height*width*bands float32, band-sequential. Header is 17 bytes.
struct HsiCube {
  std::uint32_t height = 0;
  std::uint32_t width = 0;
  std::uint32_t bands = 0;
  std::vector<float> values;

  float at(std::size_t row, std::size_t col, std::size_t band) const {
    return values[band * static_cast<std::size_t>(height) * width +
                  row * static_cast<std::size_t>(width) + col];
  }
  float& at(std::size_t row, std::size_t col, std::size_t band) {
    return values[band * static_cast<std::size_t>(height) * width +
                  row * static_cast<std::size_t>(width) + col];
  }
  std::size_t pixel_count() const {
    return static_cast<std::size_t>(height) * width;
  }
};

// Ground-truth class map paired with a cube. 0 = unannotated, 1..C = class.
// Nonzero ids must form the contiguous set {1..C}.
//
// On-disk HSIL format (little-endian):
//   magic "HSIL" | version u8 = 1 | height u32 | width u32
//   then height*width u16 labels, row-major.
struct LabelMap {
  std::uint32_t height = 0;
  std::uint32_t width = 0;
  std::vector<std::uint16_t> labels;

  std::uint16_t at(std::size_t row, std::size_t col) const {
    return labels[row * static_cast<std::size_t>(width) + col];
  }
  std::uint16_t num_classes() const;
};

// Disjoint train/test partition of the annotated pixels, by flat pixel
// index (row * width + col). Both lists are sorted ascending.
struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

// Sorted list of distinct 0-based band indices.
struct BandList {
  std::vector<std::size_t> indices;
};

HsiCube load_cube(const std::filesystem::path& path);
void save_cube(const HsiCube& cube, const std::filesystem::path& path);

LabelMap load_labels(const std::filesystem::path& path);
void save_labels(const LabelMap& labels, const std::filesystem::path& path);

// Returns the cube with the listed bands deleted; remaining bands keep
// their order and values.
HsiCube remove_bands(const HsiCube& cube, const BandList& drop);

// Per-band min-max scaling to [0,1] over the whole cube. Constant bands
// map to 0. Idempotent.
HsiCube normalize(const HsiCube& cube);

// M x N matrix, row p = spectrum of flat pixel p, M = height*width.
Matrix flatten_pixels(const HsiCube& cube);

// Draws round(fraction * #annotated) training pixels uniformly without
// replacement (seeded, reproducible). Any class with >= 2 annotated pixels
// that misses the draw is rescued deterministically: its lowest flat index
// replaces the highest-index train member of the largest-count class (ties
// on count broken by smallest class id). test = annotated \ train.
SplitIndices sample_split(const LabelMap& labels, double fraction, std::uint64_t seed);

// Parses a 1-based inclusive range list such as "104-108,150-163,220" into
// 0-based band indices. Empty string gives an empty list.
BandList parse_band_ranges(const std::string& ranges);

// Shipped water-absorption removal defaults, keyed by dataset name
// ("indian_pines" or "salinas_a").
std::string default_drop_ranges(const std::string& dataset);

void validate_labels(const LabelMap& labels);

}  // namespace srlsoa
