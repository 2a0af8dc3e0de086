#pragma once

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

namespace srlsoa {

// Little-endian scalar IO for the binary file formats. The byte order is
// part of the format, not the host, so each value goes through an explicit
// byte shuffle.

inline void write_u8(std::ostream& out, std::uint8_t v) {
  out.put(static_cast<char>(v));
}

inline void write_u16_le(std::ostream& out, std::uint16_t v) {
  char b[2] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF)};
  out.write(b, 2);
}

inline void write_u32_le(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(b, 4);
}

inline void write_f32_le(std::ostream& out, float v) {
  std::uint32_t bits;
  std::memcpy(&bits, &v, 4);
  write_u32_le(out, bits);
}

inline void write_f64_le(std::ostream& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((bits >> (8 * i)) & 0xFF);
  out.write(b, 8);
}

inline bool read_u8(std::istream& in, std::uint8_t& v) {
  int c = in.get();
  if (c == EOF) return false;
  v = static_cast<std::uint8_t>(c);
  return true;
}

inline bool read_u16_le(std::istream& in, std::uint16_t& v) {
  unsigned char b[2];
  if (!in.read(reinterpret_cast<char*>(b), 2)) return false;
  v = static_cast<std::uint16_t>(b[0] | (b[1] << 8));
  return true;
}

inline bool read_u32_le(std::istream& in, std::uint32_t& v) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) return false;
  v = static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
      (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
  return true;
}

inline bool read_f32_le(std::istream& in, float& v) {
  std::uint32_t bits;
  if (!read_u32_le(in, bits)) return false;
  std::memcpy(&v, &bits, 4);
  return true;
}

inline bool read_f64_le(std::istream& in, double& v) {
  unsigned char b[8];
  if (!in.read(reinterpret_cast<char*>(b), 8)) return false;
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  std::memcpy(&v, &bits, 8);
  return true;
}

// Writes `content` to `path` via a sibling temp file and rename, so readers
// never observe a partially written artifact.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// Shortest round-trippable decimal form of a double, for CSV output.
std::string format_double(double v);

}  // namespace srlsoa
