#pragma once

#include <filesystem>
#include <cstdint>
#include <iosfwd>

#include "fraclab/grid.hpp"

namespace fraclab {

// BSVF field file: "BSVF", u32 version (1), u32 n, f64 L, then n^2 f64 values
// row-major. All integers and floats little-endian.
inline constexpr std::uint32_t kBsvfVersion = 1;

void write_bsvf(std::ostream& out, const RealField& field);
void write_bsvf(const std::filesystem::path& path, const RealField& field);

/// Throws FormatError on bad magic, unsupported version, invalid grid, or
/// truncated data.
RealField read_bsvf(std::istream& in);
RealField read_bsvf(const std::filesystem::path& path);

}  // namespace fraclab
