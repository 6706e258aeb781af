#pragma once

#include <optional>
#include <string>

#include "field.h"

namespace frds {

// Binary field snapshot, fixed 56-byte header followed by the payload:
//   bytes 0..7   magic "FRDFSNAP"
//   bytes 8..11  u32 format version (currently 1), little endian
//   bytes 12..15 u32 n, little endian
//   bytes 16..47 f64 a1, b1, a2, b2, little endian
//   bytes 48..55 f64 simulation time, little endian
//   payload      n*n f64 little endian, row-major (x1 outer, x2 inner)
inline constexpr char kSnapshotMagic[8] = {'F', 'R', 'D', 'F', 'S', 'N', 'A', 'P'};
inline constexpr unsigned kSnapshotVersion = 1;

void write_snapshot(const std::string& path, const PhysicalField& field, double time);

struct Snapshot {
  PhysicalField field;
  double time = 0.0;
};

Snapshot read_snapshot(const std::string& path);

// Rectangular node selection: keep nodes with lo <= x < hi on each axis.
struct CropRect {
  double x1_lo, x1_hi, x2_lo, x2_hi;
};

// 8-bit binary PGM (P5). Values map linearly from [lo, hi] onto 0..255 and
// clamp outside; with no fixed range the field's own min/max are used, and a
// constant field renders mid-gray. Image rows run top to bottom in order of
// decreasing x2; columns left to right in order of increasing x1.
void write_heatmap(const std::string& path, const PhysicalField& field,
                   std::optional<std::pair<double, double>> range = std::nullopt,
                   std::optional<CropRect> crop = std::nullopt);

}  // namespace frds
