#include "snapshot.h"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace frds {

namespace {

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out += static_cast<char>((v >> (8 * i)) & 0xff);
}

void put_f64(std::string& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof(bits));
  for (int i = 0; i < 8; ++i) out += static_cast<char>((bits >> (8 * i)) & 0xff);
}

std::uint32_t get_u32(const unsigned char* p) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | p[i];
  return v;
}

double get_f64(const unsigned char* p) {
  std::uint64_t bits = 0;
  for (int i = 7; i >= 0; --i) bits = (bits << 8) | p[i];
  double v;
  std::memcpy(&v, &bits, sizeof(v));
  return v;
}

constexpr std::size_t kHeaderSize = 56;

}  // namespace

void write_snapshot(const std::string& path, const PhysicalField& field, double time) {
  std::string blob;
  blob.reserve(kHeaderSize + field.values.size() * 8);
  blob.append(kSnapshotMagic, sizeof(kSnapshotMagic));
  put_u32(blob, kSnapshotVersion);
  put_u32(blob, static_cast<std::uint32_t>(field.grid.n()));
  put_f64(blob, field.grid.a1());
  put_f64(blob, field.grid.b1());
  put_f64(blob, field.grid.a2());
  put_f64(blob, field.grid.b2());
  put_f64(blob, time);
  for (double v : field.values) put_f64(blob, v);

  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  f.write(blob.data(), static_cast<std::streamsize>(blob.size()));
  if (!f) throw IoError("write failed: " + path);
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for reading: " + path);
  std::vector<unsigned char> blob((std::istreambuf_iterator<char>(f)),
                                  std::istreambuf_iterator<char>());
  if (f.bad()) throw IoError("read failed: " + path);
  if (blob.size() < kHeaderSize) throw FormatError("snapshot truncated: " + path);
  if (std::memcmp(blob.data(), kSnapshotMagic, sizeof(kSnapshotMagic)) != 0)
    throw FormatError("not a field snapshot: " + path);
  const std::uint32_t version = get_u32(blob.data() + 8);
  if (version != kSnapshotVersion) throw FormatError("unsupported snapshot version: " + path);
  const std::uint32_t n = get_u32(blob.data() + 12);
  if (n < 4 || n % 2 != 0 || n > (1u << 16)) throw FormatError("bad grid size in snapshot: " + path);
  const double a1 = get_f64(blob.data() + 16);
  const double b1 = get_f64(blob.data() + 24);
  const double a2 = get_f64(blob.data() + 32);
  const double b2 = get_f64(blob.data() + 40);
  const double time = get_f64(blob.data() + 48);
  const std::size_t expected = kHeaderSize + static_cast<std::size_t>(n) * n * 8;
  if (blob.size() != expected) throw FormatError("snapshot payload size mismatch: " + path);
  if (!std::isfinite(a1) || !std::isfinite(b1) || !std::isfinite(a2) || !std::isfinite(b2) ||
      !(b1 > a1) || !(b2 > a2))
    throw FormatError("bad domain bounds in snapshot: " + path);

  Snapshot snap{PhysicalField(GridSpec(static_cast<int>(n), a1, b1, a2, b2)), time};
  const unsigned char* p = blob.data() + kHeaderSize;
  for (std::size_t i = 0; i < snap.field.values.size(); ++i, p += 8)
    snap.field.values[i] = get_f64(p);
  return snap;
}

void write_heatmap(const std::string& path, const PhysicalField& field,
                   std::optional<std::pair<double, double>> range,
                   std::optional<CropRect> crop) {
  const GridSpec& g = field.grid;
  const int n = g.n();

  int j1_lo = 0, j1_hi = n, j2_lo = 0, j2_hi = n;
  if (crop) {
    if (!(crop->x1_hi > crop->x1_lo) || !(crop->x2_hi > crop->x2_lo))
      throw ConfigError("heatmap: empty crop rectangle");
    auto first_at_least = [](double lo, double a, double h) {
      return static_cast<int>(std::ceil((lo - a) / h - 1e-12));
    };
    auto first_not_below = [](double hi, double a, double h) {
      // First index with x >= hi, i.e. one past the kept range.
      return static_cast<int>(std::ceil((hi - a) / h - 1e-12));
    };
    j1_lo = std::max(0, first_at_least(crop->x1_lo, g.a1(), g.spacing1()));
    j1_hi = std::min(n, first_not_below(crop->x1_hi, g.a1(), g.spacing1()));
    j2_lo = std::max(0, first_at_least(crop->x2_lo, g.a2(), g.spacing2()));
    j2_hi = std::min(n, first_not_below(crop->x2_hi, g.a2(), g.spacing2()));
    if (j1_lo >= j1_hi || j2_lo >= j2_hi)
      throw ConfigError("heatmap: crop rectangle contains no grid nodes");
  }
  const int width = j1_hi - j1_lo;
  const int height = j2_hi - j2_lo;

  double lo, hi;
  if (range) {
    lo = range->first;
    hi = range->second;
    if (!(hi >= lo)) throw ConfigError("heatmap: range max below range min");
  } else {
    lo = field.at(j1_lo, j2_lo);
    hi = lo;
    for (int j1 = j1_lo; j1 < j1_hi; ++j1)
      for (int j2 = j2_lo; j2 < j2_hi; ++j2) {
        const double v = field.at(j1, j2);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
  }

  std::string blob = "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  blob.reserve(blob.size() + static_cast<std::size_t>(width) * height);
  const double span = hi - lo;
  for (int row = 0; row < height; ++row) {
    const int j2 = j2_hi - 1 - row;  // top row carries the largest x2
    for (int j1 = j1_lo; j1 < j1_hi; ++j1) {
      int byte;
      const double v = field.at(j1, j2);
      if (span <= 0.0 || !std::isfinite(span)) {
        byte = 128;
      } else if (!std::isfinite(v)) {
        byte = 0;
      } else {
        const double t = std::min(1.0, std::max(0.0, (v - lo) / span));
        byte = static_cast<int>(std::lround(t * 255.0));
      }
      blob += static_cast<char>(static_cast<unsigned char>(byte));
    }
  }

  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  f.write(blob.data(), static_cast<std::streamsize>(blob.size()));
  if (!f) throw IoError("write failed: " + path);
}

}  // namespace frds
