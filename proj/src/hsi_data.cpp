#include "srlsoa/hsi_data.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>

#include "srlsoa/error.hpp"
#include "srlsoa/io_util.hpp"
#include "srlsoa/rng.hpp"

namespace srlsoa {

namespace {

constexpr char kCubeMagic[4] = {'H', 'S', 'I', 'C'};
constexpr char kLabelMagic[4] = {'H', 'S', 'I', 'L'};
constexpr std::uint8_t kFormatVersion = 1;

std::ifstream open_for_read(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorCode::MissingFile, path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
  }
  return in;
}

void read_magic(std::istream& in, const char expected[4], const std::string& what) {
  char magic[4] = {0, 0, 0, 0};
  in.read(magic, 4);
  if (!in || !std::equal(magic, magic + 4, expected)) {
    throw Error(ErrorCode::BadMagic, "not a " + what + " file");
  }
  std::uint8_t version = 0;
  if (!read_u8(in, version) || version != kFormatVersion) {
    throw Error(ErrorCode::BadMagic, what + " version unsupported");
  }
}

void check_no_trailing(std::istream& in, const std::string& what) {
  if (in.peek() != EOF) {
    throw Error(ErrorCode::TruncatedPayload, what + ": trailing bytes after payload");
  }
}

}  // namespace

std::uint16_t LabelMap::num_classes() const {
  std::uint16_t max_id = 0;
  for (std::uint16_t v : labels) max_id = std::max(max_id, v);
  return max_id;
}

HsiCube load_cube(const std::filesystem::path& path) {
  std::ifstream in = open_for_read(path);
  read_magic(in, kCubeMagic, "HSIC");

  HsiCube cube;
  if (!read_u32_le(in, cube.height) || !read_u32_le(in, cube.width) ||
      !read_u32_le(in, cube.bands)) {
    throw Error(ErrorCode::TruncatedPayload, "HSIC header incomplete");
  }
  if (cube.height == 0 || cube.width == 0 || cube.bands == 0) {
    throw Error(ErrorCode::BadMagic, "HSIC dimensions must be positive");
  }

  const std::size_t count =
      static_cast<std::size_t>(cube.height) * cube.width * cube.bands;
  cube.values.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!read_f32_le(in, cube.values[i])) {
      throw Error(ErrorCode::TruncatedPayload,
                  "HSIC payload shorter than header declares");
    }
    if (!std::isfinite(cube.values[i])) {
      throw Error(ErrorCode::NonFiniteValue,
                  "HSIC value at index " + std::to_string(i));
    }
  }
  check_no_trailing(in, "HSIC");
  return cube;
}

void save_cube(const HsiCube& cube, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
  out.write(kCubeMagic, 4);
  write_u8(out, kFormatVersion);
  write_u32_le(out, cube.height);
  write_u32_le(out, cube.width);
  write_u32_le(out, cube.bands);
  for (float v : cube.values) write_f32_le(out, v);
  out.flush();
  if (!out) throw Error(ErrorCode::IoFailure, "write failed: " + path.string());
}

LabelMap load_labels(const std::filesystem::path& path) {
  std::ifstream in = open_for_read(path);
  read_magic(in, kLabelMagic, "HSIL");

  LabelMap map;
  if (!read_u32_le(in, map.height) || !read_u32_le(in, map.width)) {
    throw Error(ErrorCode::TruncatedPayload, "HSIL header incomplete");
  }
  if (map.height == 0 || map.width == 0) {
    throw Error(ErrorCode::BadMagic, "HSIL dimensions must be positive");
  }
  const std::size_t count = static_cast<std::size_t>(map.height) * map.width;
  map.labels.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!read_u16_le(in, map.labels[i])) {
      throw Error(ErrorCode::TruncatedPayload,
                  "HSIL payload shorter than header declares");
    }
  }
  check_no_trailing(in, "HSIL");
  validate_labels(map);
  return map;
}

void save_labels(const LabelMap& labels, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
  out.write(kLabelMagic, 4);
  write_u8(out, kFormatVersion);
  write_u32_le(out, labels.height);
  write_u32_le(out, labels.width);
  for (std::uint16_t v : labels.labels) write_u16_le(out, v);
  out.flush();
  if (!out) throw Error(ErrorCode::IoFailure, "write failed: " + path.string());
}

void validate_labels(const LabelMap& labels) {
  const std::uint16_t c = labels.num_classes();
  std::vector<bool> seen(static_cast<std::size_t>(c) + 1, false);
  for (std::uint16_t v : labels.labels) seen[v] = true;
  for (std::uint16_t id = 1; id <= c; ++id) {
    if (!seen[id]) {
      throw Error(ErrorCode::ParseError,
                  "class ids not contiguous: missing " + std::to_string(id));
    }
  }
}

HsiCube remove_bands(const HsiCube& cube, const BandList& drop) {
  for (std::size_t b : drop.indices) {
    if (b >= cube.bands) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "drop band " + std::to_string(b) + " of " + std::to_string(cube.bands));
    }
  }
  std::vector<bool> dropped(cube.bands, false);
  for (std::size_t b : drop.indices) dropped[b] = true;

  HsiCube out;
  out.height = cube.height;
  out.width = cube.width;
  const std::size_t pixels = cube.pixel_count();
  out.values.reserve(cube.values.size());
  std::uint32_t kept = 0;
  for (std::uint32_t b = 0; b < cube.bands; ++b) {
    if (dropped[b]) continue;
    const float* src = cube.values.data() + static_cast<std::size_t>(b) * pixels;
    out.values.insert(out.values.end(), src, src + pixels);
    ++kept;
  }
  out.bands = kept;
  return out;
}

HsiCube normalize(const HsiCube& cube) {
  HsiCube out = cube;
  const std::size_t pixels = cube.pixel_count();
  for (std::uint32_t b = 0; b < cube.bands; ++b) {
    float* band = out.values.data() + static_cast<std::size_t>(b) * pixels;
    float lo = band[0], hi = band[0];
    for (std::size_t p = 1; p < pixels; ++p) {
      lo = std::min(lo, band[p]);
      hi = std::max(hi, band[p]);
    }
    if (hi == lo) {
      std::fill(band, band + pixels, 0.0f);
      continue;
    }
    const double scale = 1.0 / (static_cast<double>(hi) - static_cast<double>(lo));
    for (std::size_t p = 0; p < pixels; ++p) {
      band[p] = static_cast<float>((static_cast<double>(band[p]) - lo) * scale);
    }
  }
  return out;
}

Matrix flatten_pixels(const HsiCube& cube) {
  const std::size_t pixels = cube.pixel_count();
  Matrix m(pixels, cube.bands);
  for (std::uint32_t b = 0; b < cube.bands; ++b) {
    const float* band = cube.values.data() + static_cast<std::size_t>(b) * pixels;
    for (std::size_t p = 0; p < pixels; ++p) {
      m.at(p, b) = static_cast<double>(band[p]);
    }
  }
  return m;
}

SplitIndices sample_split(const LabelMap& labels, double fraction, std::uint64_t seed) {
  std::vector<std::size_t> annotated;
  for (std::size_t i = 0; i < labels.labels.size(); ++i) {
    if (labels.labels[i] != 0) annotated.push_back(i);
  }
  if (annotated.empty()) {
    throw Error(ErrorCode::EmptyAnnotation, "label map has no annotated pixels");
  }

  const std::size_t n_train = static_cast<std::size_t>(
      std::llround(fraction * static_cast<double>(annotated.size())));

  // Partial Fisher-Yates: the first n_train slots become the train draw.
  Rng rng(seed);
  std::vector<std::size_t> pool = annotated;
  for (std::size_t i = 0; i < n_train && i + 1 < pool.size(); ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.next_below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  std::set<std::size_t> train(pool.begin(), pool.begin() + std::min(n_train, pool.size()));

  // Per-class annotated counts and lowest annotated index.
  std::map<std::uint16_t, std::size_t> annotated_count;
  std::map<std::uint16_t, std::size_t> lowest_index;
  for (std::size_t i : annotated) {
    const std::uint16_t c = labels.labels[i];
    annotated_count[c]++;
    if (!lowest_index.count(c)) lowest_index[c] = i;
    else lowest_index[c] = std::min(lowest_index[c], i);
  }

  // Rescue pass, ascending class id: any class with >= 2 annotated pixels
  // absent from train gets its lowest flat index swapped in for the
  // highest-index member of the largest-count train class.
  for (const auto& [cls, count] : annotated_count) {
    if (count < 2) continue;
    bool present = false;
    for (std::size_t i : train) {
      if (labels.labels[i] == cls) { present = true; break; }
    }
    if (present) continue;

    std::map<std::uint16_t, std::size_t> train_count;
    for (std::size_t i : train) train_count[labels.labels[i]]++;
    std::uint16_t donor = 0;
    std::size_t best = 0;
    for (const auto& [c, n] : train_count) {
      if (n > best) { best = n; donor = c; }
    }
    if (donor == 0) continue;  // empty train draw, nothing to swap

    std::size_t victim = 0;
    bool found = false;
    for (std::size_t i : train) {
      if (labels.labels[i] == donor && (!found || i > victim)) {
        victim = i;
        found = true;
      }
    }
    train.erase(victim);
    train.insert(lowest_index[cls]);
  }

  SplitIndices split;
  split.train.assign(train.begin(), train.end());
  for (std::size_t i : annotated) {
    if (!train.count(i)) split.test.push_back(i);
  }
  return split;
}

BandList parse_band_ranges(const std::string& ranges) {
  BandList out;
  if (ranges.empty()) return out;
  std::set<std::size_t> indices;
  std::size_t pos = 0;
  while (pos <= ranges.size()) {
    std::size_t comma = ranges.find(',', pos);
    if (comma == std::string::npos) comma = ranges.size();
    const std::string item = ranges.substr(pos, comma - pos);
    if (item.empty()) {
      throw Error(ErrorCode::ParseError, "empty entry in band range list");
    }
    long lo = 0, hi = 0;
    const std::size_t dash = item.find('-');
    try {
      if (dash == std::string::npos) {
        lo = hi = std::stol(item);
      } else {
        lo = std::stol(item.substr(0, dash));
        hi = std::stol(item.substr(dash + 1));
      }
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad band range entry '" + item + "'");
    }
    if (lo < 1 || hi < lo) {
      throw Error(ErrorCode::ParseError, "bad band range entry '" + item + "'");
    }
    for (long b = lo; b <= hi; ++b) indices.insert(static_cast<std::size_t>(b - 1));
    pos = comma + 1;
    if (comma == ranges.size()) break;
  }
  out.indices.assign(indices.begin(), indices.end());
  return out;
}

std::string default_drop_ranges(const std::string& dataset) {
  // Water-absorption removal lists, 1-based inclusive. Indian Pines drops
  // 20 of 220 bands, Salinas-A drops 20 of 224.
  if (dataset == "indian_pines") return "104-108,150-163,220";
  if (dataset == "salinas_a") return "108-112,154-167,224";
  throw Error(ErrorCode::BadConfig, "unknown dataset '" + dataset + "'");
}

}  // namespace srlsoa
