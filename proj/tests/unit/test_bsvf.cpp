#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <sstream>

#include "fraclab/bsvf.hpp"
#include "fraclab/error.hpp"

using namespace fraclab;

namespace {
RealField sample_field() {
  RealField f(Grid2D(8, 3.5));
  double v = -1.25;
  for (auto& x : f.values()) x = (v += 0.375);
  return f;
}
}  // namespace

TEST(Bsvf, RoundTripIsBitwise) {
  const RealField f = sample_field();
  std::stringstream buffer;
  write_bsvf(buffer, f);
  const RealField g = read_bsvf(buffer);
  EXPECT_EQ(g.grid(), f.grid());
  for (std::size_t i = 0; i < f.values().size(); ++i) EXPECT_EQ(g.values()[i], f.values()[i]);
}

TEST(Bsvf, HeaderLayoutIsLittleEndian) {
  std::stringstream buffer;
  write_bsvf(buffer, sample_field());
  const std::string bytes = buffer.str();
  ASSERT_EQ(bytes.size(), 4u + 4u + 4u + 8u + 64u * 8u);
  EXPECT_EQ(bytes.substr(0, 4), "BSVF");
  EXPECT_EQ(static_cast<unsigned char>(bytes[4]), 1u);
  EXPECT_EQ(static_cast<unsigned char>(bytes[8]), 8u);
  EXPECT_EQ(bytes[9], 0);
}

TEST(Bsvf, RejectsCorruptInput) {
  std::stringstream good;
  write_bsvf(good, sample_field());
  const std::string bytes = good.str();

  std::stringstream bad_magic(std::string("XSVF") + bytes.substr(4));
  EXPECT_THROW(read_bsvf(bad_magic), FormatError);

  std::string v2 = bytes;
  v2[4] = 2;
  std::stringstream bad_version(v2);
  EXPECT_THROW(read_bsvf(bad_version), FormatError);

  std::stringstream truncated(bytes.substr(0, bytes.size() - 3));
  EXPECT_THROW(read_bsvf(truncated), FormatError);

  std::string odd = bytes;
  odd[8] = 12;  // not a power of two
  std::stringstream bad_grid(odd);
  EXPECT_THROW(read_bsvf(bad_grid), FormatError);
}

TEST(Bsvf, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "fraclab_test_roundtrip.bsvf";
  write_bsvf(path, sample_field());
  const RealField g = read_bsvf(path);
  EXPECT_EQ(g.values()[3], sample_field().values()[3]);
  std::filesystem::remove(path);
  EXPECT_THROW(read_bsvf(path), FormatError);
}
