#pragma once

#include <functional>
#include <vector>

#include "vesselkin/diffusion.hpp"
#include "vesselkin/kinetic.hpp"

namespace vesselkin {

// ---------------------------------------------------------------------------
// admissibility

/// Dedicated quadrature for the K constants (finer than the solver grid).
struct KQuadSpec {
    int N = 256;
    double vmax = 0;  // 0 = auto
};

/// K1 = max_{v.n>0} |v.n| e^{-(b/s)|v-v0|^2} / int_{v.n<0} |v.n| e^{..} window dv
double compute_K1(const ModelParams& mp, const KQuadSpec& q, const Vec2& n = {1, 0});
/// K2 = int_{v.n>0} window dv
double compute_K2(const ModelParams& mp, const KQuadSpec& q, const Vec2& n = {1, 0});

struct AdmissibilityReport {
    double K1 = 0, K2 = 0;
    bool pass = false;
    double product() const { return K1 * K2; }
};

/// Worst case over the outer-ring normals of the run grid.
AdmissibilityReport check_admissibility(const AnnulusGrid& xg, const ModelParams& mp,
                                        const KQuadSpec& q);

// ---------------------------------------------------------------------------
// coupled problem

struct CoupledProblem {
    ModelParams mp;
    InitFn p0{};
    std::function<double(double r, double th)> c0{};
    NeumannData data;
    BcKind bc = BcKind::nonlocal;
    TraceFn g_inner{}, g_outer{};  // fixed-g mode
    double T = 1.0;
    int nsteps = 0;
    int snapshots = 10;
    StepControls ctl;
    HeatControls heat;
    int nthreads = 1;
    double picard_tol = 1e-6;
    int picard_max = 12;
    bool require_admissible = true;
    KQuadSpec kquad;
};

struct PicardState {
    int iterations = 0;  // final iterate index m
    bool converged = false;
    std::vector<double> p_dist;      // sup over snapshots of ||p_m - p_{m-1}||_L1, m = 2..
    std::vector<double> c_dist;      // sup over snapshots of ||c_m - c_{m-1}||_L2
    std::vector<double> p_norm;      // sup over snapshots of ||p_m||_L1
    std::vector<double> trace_l1;    // inner incoming-trace L1 per iterate (bc0-e2)
};

struct CoupledResult {
    KineticRunResult kin;                        // last iterate / the march
    std::vector<std::vector<double>> c_series;   // c at every step, [0..N][nx]
    std::vector<std::vector<double>> b_series;   // b at every step, [0..N][nx]
    std::vector<double> c_snap_times;
    std::vector<Concentration> c_snaps;
    PicardState picard;
    AdmissibilityReport adm;
    double force_sup = 0;           // sup over the run of |F|
    double continuum_residual = 0;  // max per-step continuum mass residual (direct)
};

/// Global-in-time Picard iteration (p_1 = 0, c_1 = pure heat solve).
CoupledResult picard_solve(const CoupledProblem& prob, const AnnulusGrid& xg,
                           const VelocityGrid& vg);

/// Resumable state of the direct march at the start of step `step`.
/// The traces carry the previous step's applied inflow, from which the
/// inner-ring re-emission marginal is recovered on resume.
struct MarchState {
    TipDensity p;
    Concentration c;
    std::vector<double> b;
    BoundaryTrace inner, outer;
    int step = 0;
};

/// Production time march: per step, c advances with j(p^n), then p advances
/// with F(c^{n+1}), alpha(c^{n+1}), b^n and boundary operators lagged one step.
/// Pass `resume` to continue from a checkpointed state; `captured` (with
/// capture_at >= 0) receives the state at the start of that step.
CoupledResult direct_coupled_march(const CoupledProblem& prob, const AnnulusGrid& xg,
                                   const VelocityGrid& vg,
                                   bool eval_continuum_residual = false,
                                   const MarchState* resume = nullptr,
                                   long capture_at = -1, MarchState* captured = nullptr);

/// ||a - b||_L1 over the phase-space measure.
double l1_distance(const TipDensity& a, const TipDensity& b, const AnnulusGrid& xg,
                   const VelocityGrid& vg);

} // namespace vesselkin
