#pragma once

#include <cstdint>
#include <string>

#include "mhd1d/types.hpp"

namespace mhd1d::snapshot {

// Flat little-endian binary snapshot. Layout, all numeric payloads f64:
//   bytes 0..7   magic "MHD1SNAP"
//   bytes 8..11  format version (u32, currently 1)
//   bytes 12..15 node count N (u32)
//   then L, t, lambda, mu, nu, gamma (6 x f64)
//   then the arrays J, u, w1, w2, h1, h2, P, rho0 (8 x N x f64)
// Writing and re-reading is byte-identical; readers reject wrong magic,
// version, or truncated payloads.
inline constexpr char kMagic[8] = {'M', 'H', 'D', '1', 'S', 'N', 'A', 'P'};
inline constexpr std::uint32_t kVersion = 1;

struct SnapshotData {
    Grid grid;
    Params params;
    State state;
};

void write_snapshot(const std::string& path, const State& s, const Grid& grid, const Params& p);

SnapshotData read_snapshot(const std::string& path);

}  // namespace mhd1d::snapshot
