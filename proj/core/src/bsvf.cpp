#include "fraclab/bsvf.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <optional>

#include "fraclab/error.hpp"

namespace fraclab {

namespace {

constexpr std::array<char, 4> kMagic = {'B', 'S', 'V', 'F'};

void put_u32(std::ostream& out, std::uint32_t v) {
  std::array<unsigned char, 4> bytes{};
  for (int i = 0; i < 4; ++i) bytes[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

void put_f64(std::ostream& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  std::array<unsigned char, 8> bytes{};
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(bits >> (8 * i));
  out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

template <std::size_t N>
std::array<unsigned char, N> get_bytes(std::istream& in, const char* what) {
  std::array<unsigned char, N> bytes{};
  if (!in.read(reinterpret_cast<char*>(bytes.data()), N)) {
    throw FormatError(std::string("BSVF: truncated while reading ") + what);
  }
  return bytes;
}

std::uint32_t get_u32(std::istream& in, const char* what) {
  const auto bytes = get_bytes<4>(in, what);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes[i]) << (8 * i);
  return v;
}

double get_f64(std::istream& in, const char* what) {
  const auto bytes = get_bytes<8>(in, what);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  return std::bit_cast<double>(v);
}

}  // namespace

void write_bsvf(std::ostream& out, const RealField& field) {
  out.write(kMagic.data(), kMagic.size());
  put_u32(out, kBsvfVersion);
  put_u32(out, static_cast<std::uint32_t>(field.grid().n()));
  put_f64(out, field.grid().length());
  for (double v : field.values()) put_f64(out, v);
  if (!out) throw FormatError("BSVF: write failed");
}

void write_bsvf(const std::filesystem::path& path, const RealField& field) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("BSVF: cannot open " + path.string() + " for writing");
  write_bsvf(out, field);
}

RealField read_bsvf(std::istream& in) {
  const auto magic = get_bytes<4>(in, "magic");
  if (std::memcmp(magic.data(), kMagic.data(), 4) != 0) {
    throw FormatError("BSVF: bad magic");
  }
  const std::uint32_t version = get_u32(in, "version");
  if (version != kBsvfVersion) {
    throw FormatError("BSVF: unsupported version " + std::to_string(version));
  }
  const std::uint32_t n = get_u32(in, "n");
  const double length = get_f64(in, "L");
  if (n > (1u << 15)) throw FormatError("BSVF: grid size " + std::to_string(n) + " too large");
  std::optional<Grid2D> grid;
  try {
    grid.emplace(static_cast<int>(n), length);
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("BSVF: ") + e.what());
  }
  std::vector<double> values(grid->size());
  for (auto& v : values) v = get_f64(in, "values");
  return RealField(*grid, std::move(values));
}

RealField read_bsvf(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("BSVF: cannot open " + path.string());
  return read_bsvf(in);
}

}  // namespace fraclab
