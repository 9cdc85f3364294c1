#pragma once

#include <iosfwd>
#include <string>

#include "vesselkin/config.hpp"
#include "vesselkin/snapshot.hpp"

namespace vesselkin {

struct RunOptions {
    std::string resume_path;   // checkpoint to resume from (direct mode)
    long checkpoint_at = -1;   // write checkpoint.vkin at this step (direct mode)
    int nthreads = 1;
};

struct RunOutcome {
    int exit_code = 0;
    std::string failure;  // empty on success
};

/// Execute the configured mode; writes snap_*.vkin, diag.jsonl and
/// summary.json into cfg.out_dir.  The summary is written on every exit path.
RunOutcome run(const RunConfig& cfg, const RunOptions& opt = {});

/// Admissibility + dry validation; prints K1, K2, CFL limits.  Returns the
/// would-be exit code.
int check(const RunConfig& cfg, std::ostream& os);

/// Columnar export with 17-significant-digit floats.
/// fields: rho | c | b | j | vslice (vslice needs cell indices i, j).
void export_csv(const SnapshotData& s, const std::string& field, std::ostream& os,
                int at_i = -1, int at_j = -1);

/// Time series of one diagnostic from a diag.jsonl file.
void export_diag_series(const std::string& diag_path, const std::string& field,
                        std::ostream& os);

/// Print a human-readable digest of a run directory's diagnostics.
int print_diag_digest(const std::string& run_dir, std::ostream& os);

} // namespace vesselkin
