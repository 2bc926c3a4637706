#include "zweistein/table.hpp"

#include <zlib.h>

#include <bit>
#include <cstring>
#include <fstream>
#include <limits>

namespace zweistein {

double expected_dtc(std::span<const double, kDtcBuckets> pdf) noexcept {
  double sum = 0.0;
  for (int i = 0; i < kDtcBuckets; ++i) sum += i * pdf[i];
  return sum;
}

DtcPdf right_shift(const DtcPdf& pdf) {
  if (pdf[kDtcBuckets - 1] != 0.0) throw std::overflow_error("mass overflow beyond DTC 19");
  DtcPdf out{};
  for (int i = 0; i + 1 < kDtcBuckets; ++i) out[i + 1] = pdf[i];
  return out;
}

namespace {

class PdfBuilder {
 public:
  PdfBuilder() : visited_(kTableRows, false) {}

  PdfTable run() {
    for (int idx = 1; idx < kTableRows; ++idx) search(decode(TableIndex(idx)));
    return std::move(table_);
  }

 private:
  DtcPdf search(const DistanceArray& arr) {
    if (!arr.encodable()) {
      DtcPdf home{};
      home[0] = 1.0;
      return home;
    }
    const int idx = encode(arr).value;
    if (visited_[idx]) return load(idx);

    const LabelSet alive = arr.alive();
    // Extended-precision accumulation rounds each bucket once, so rows such as
    // 25/216 come out as the nearest double.
    std::array<long double, kDtcBuckets> sum{};
    for (int dice = 1; dice <= 6; ++dice) {
      const LabelSet movable = movable_labels(alive, DiceRoll(dice));
      double min_exp = std::numeric_limits<double>::infinity();
      DtcPdf min_pdf{};
      for (int label = 1; label <= kLabels; ++label) {
        if (!movable.contains(label)) continue;
        const DistanceArray child =
            arr.with(label, PieceDistance::on_board(arr.of(label).distance() - 1));
        const DtcPdf child_pdf = search(child);
        const double e = expected_dtc(child_pdf);
        // Strict: the lowest label keeps ties.
        if (e < min_exp) {
          min_exp = e;
          min_pdf = child_pdf;
        }
      }
      for (int i = 0; i < kDtcBuckets; ++i) sum[i] += min_pdf[i];
    }
    DtcPdf mean{};
    for (int i = 0; i < kDtcBuckets; ++i) mean[i] = static_cast<double>(sum[i] / 6.0L);
    const DtcPdf result = right_shift(mean);
    auto row = table_.mutable_row(idx);
    std::copy(result.begin(), result.end(), row.begin());
    visited_[idx] = true;
    return result;
  }

  DtcPdf load(int idx) const {
    DtcPdf out;
    const auto row = table_.row(idx);
    std::copy(row.begin(), row.end(), out.begin());
    return out;
  }

  PdfTable table_;
  std::vector<bool> visited_;
};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_f64(std::vector<std::uint8_t>& out, double d) {
  const auto v = std::bit_cast<std::uint64_t>(d);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(std::span<const std::uint8_t> in, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(in[at + i]) << (8 * i);
  return v;
}

double get_f64(std::span<const std::uint8_t> in, std::size_t at) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(in[at + i]) << (8 * i);
  return std::bit_cast<double>(v);
}

std::uint32_t crc32_of(std::span<const std::uint8_t> bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, bytes.data(), static_cast<uInt>(bytes.size()));
  return static_cast<std::uint32_t>(crc);
}

constexpr std::size_t kHeaderBytes = 16;
constexpr std::size_t kValuesPerTable = static_cast<std::size_t>(kTableRows) * kDtcBuckets;
constexpr std::size_t kFileBytes = kHeaderBytes + 2 * kValuesPerTable * 8 + 4;

}  // namespace

PdfTable build_pdf_table() { return PdfBuilder().run(); }

CdfTable cdf_from_pdf(const PdfTable& pdf) {
  CdfTable cdf;
  for (int idx = 0; idx < kTableRows; ++idx) {
    const auto in = pdf.row(idx);
    auto out = cdf.mutable_row(idx);
    double acc = 0.0;
    for (int i = 0; i < kDtcBuckets; ++i) {
      acc += in[i];
      out[i] = acc;
    }
  }
  return cdf;
}

Tables build_tables() {
  Tables t;
  t.pdf = build_pdf_table();
  t.cdf = cdf_from_pdf(t.pdf);
  return t;
}

std::vector<std::uint8_t> serialize_tables(const Tables& tables) {
  std::vector<std::uint8_t> out;
  out.reserve(kFileBytes);
  out.insert(out.end(), {'Z', 'W', 'S', 'T'});
  put_u32(out, kTableFormatVersion);
  put_u32(out, kTableRows);
  put_u32(out, kDtcBuckets);
  for (double v : tables.pdf.values()) put_f64(out, v);
  for (double v : tables.cdf.values()) put_f64(out, v);
  put_u32(out, crc32_of(out));
  return out;
}

Tables deserialize_tables(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), "ZWST", 4) != 0)
    throw TableIoError(TableIoErrorCode::BadMagic, "bad magic");
  if (bytes.size() < kHeaderBytes) throw TableIoError(TableIoErrorCode::Truncated, "truncated table file");
  if (get_u32(bytes, 4) != kTableFormatVersion)
    throw TableIoError(TableIoErrorCode::BadVersion,
                       "unsupported table version " + std::to_string(get_u32(bytes, 4)));
  if (get_u32(bytes, 8) != kTableRows || get_u32(bytes, 12) != kDtcBuckets)
    throw TableIoError(TableIoErrorCode::BadShape, "unexpected table shape");
  if (bytes.size() < kFileBytes) throw TableIoError(TableIoErrorCode::Truncated, "truncated table file");
  if (bytes.size() > kFileBytes) throw TableIoError(TableIoErrorCode::BadShape, "trailing bytes after table data");
  if (crc32_of(bytes.first(kFileBytes - 4)) != get_u32(bytes, kFileBytes - 4))
    throw TableIoError(TableIoErrorCode::ChecksumMismatch, "checksum mismatch");

  Tables t;
  std::size_t at = kHeaderBytes;
  for (double& v : t.pdf.mutable_values()) {
    v = get_f64(bytes, at);
    at += 8;
  }
  for (double& v : t.cdf.mutable_values()) {
    v = get_f64(bytes, at);
    at += 8;
  }
  return t;
}

void save_tables(const std::filesystem::path& path, const Tables& tables) {
  const auto bytes = serialize_tables(tables);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw TableIoError(TableIoErrorCode::Io, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw TableIoError(TableIoErrorCode::Io, "write failed: " + path.string());
}

Tables load_tables(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TableIoError(TableIoErrorCode::Io, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return deserialize_tables(bytes);
}

}  // namespace zweistein
