#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vesselkin/params.hpp"

namespace vesselkin {

/// On-disk state container.  Little-endian layout:
///   "VKIN" | u32 version | u32 kind | i32 Nr Nth Nv | f64 r0 r1 vmax
///   | f64 time | i64 step | ModelParams block (14 f64)
///   | arrays (f64, row-major (i,j,k,l)): p, c, b,
///     inner_in, inner_out, outer_in, outer_out (each Nth*Nv^2)
///   | u64 total byte length (truncation check)
/// Heat-lab snapshots carry Nv = 0 and only the c array.
struct SnapshotData {
    static constexpr uint32_t kVersion = 1;
    enum Kind : uint32_t { snapshot = 1, checkpoint = 2 };

    uint32_t kind = snapshot;
    int32_t Nr = 0, Nth = 0, Nv = 0;
    double r0 = 0, r1 = 0, vmax = 0;
    double time = 0;
    int64_t step = 0;
    ModelParams mp;
    std::vector<double> p;   // Nr*Nth*Nv*Nv
    std::vector<double> c;   // Nr*Nth
    std::vector<double> b;   // Nr*Nth
    std::vector<double> inner_in, inner_out, outer_in, outer_out;  // Nth*Nv*Nv
};

void write_snapshot(const std::string& path, const SnapshotData& s);
SnapshotData read_snapshot(const std::string& path);  // throws ConfigError on damage

} // namespace vesselkin
