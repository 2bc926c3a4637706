#pragma once

// DTC (distance-to-corner) probability tables for the capture-free,
// shortest-path game. Row i holds the distribution of the number of moves a
// side with distance array decode(i) needs to bring any piece home when it
// always picks the child with the smallest expected DTC.

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include "zweistein/distance.hpp"

namespace zweistein {

inline constexpr int kDtcBuckets = 20;

using DtcPdf = std::array<double, kDtcBuckets>;

double expected_dtc(std::span<const double, kDtcBuckets> pdf) noexcept;

// Moves all mass one bucket up. Throws if bucket 19 carries mass.
DtcPdf right_shift(const DtcPdf& pdf);

// 15625 x 20 row-major table of binary64 values.
template <typename Tag>
class DtcTable {
 public:
  DtcTable() : values_(static_cast<std::size_t>(kTableRows) * kDtcBuckets, 0.0) {}

  std::span<const double, kDtcBuckets> row(TableIndex idx) const noexcept { return row(idx.value); }
  std::span<const double, kDtcBuckets> row(int idx) const noexcept {
    return std::span<const double, kDtcBuckets>(values_.data() + static_cast<std::size_t>(idx) * kDtcBuckets,
                                                kDtcBuckets);
  }
  std::span<double, kDtcBuckets> mutable_row(int idx) noexcept {
    return std::span<double, kDtcBuckets>(values_.data() + static_cast<std::size_t>(idx) * kDtcBuckets,
                                          kDtcBuckets);
  }
  std::span<const double> values() const noexcept { return values_; }
  std::span<double> mutable_values() noexcept { return values_; }

  friend bool operator==(const DtcTable&, const DtcTable&) = default;

 private:
  std::vector<double> values_;
};

struct PdfTag {};
struct CdfTag {};
using PdfTable = DtcTable<PdfTag>;
using CdfTable = DtcTable<CdfTag>;

struct Tables {
  PdfTable pdf;
  CdfTable cdf;

  friend bool operator==(const Tables&, const Tables&) = default;
};

// Row 0 (every piece captured) is never computed and stays all-zero.
PdfTable build_pdf_table();
CdfTable cdf_from_pdf(const PdfTable& pdf);
Tables build_tables();

enum class TableIoErrorCode { Io, BadMagic, BadVersion, BadShape, Truncated, ChecksumMismatch };

class TableIoError : public std::runtime_error {
 public:
  TableIoError(TableIoErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  TableIoErrorCode code() const noexcept { return code_; }

 private:
  TableIoErrorCode code_;
};

inline constexpr std::uint32_t kTableFormatVersion = 1;

// Little-endian: "ZWST", version, rows, width (u32 each), pdf values, cdf
// values (binary64), CRC32 of everything before it.
std::vector<std::uint8_t> serialize_tables(const Tables& tables);
Tables deserialize_tables(std::span<const std::uint8_t> bytes);

void save_tables(const std::filesystem::path& path, const Tables& tables);
Tables load_tables(const std::filesystem::path& path);

}  // namespace zweistein
