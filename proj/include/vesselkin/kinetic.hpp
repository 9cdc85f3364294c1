#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "vesselkin/fields.hpp"
#include "vesselkin/grid.hpp"
#include "vesselkin/params.hpp"

namespace vesselkin {

// ---------------------------------------------------------------------------
// step controls / CFL

struct StepControls {
    double dt = 0;
    double safety = 0.3;
    enum class Splitting { strang, lie } splitting = Splitting::strang;
};

struct CflLimits {
    double transport = 0;  // min(dr, r0*dth)/vmax
    double drift = 0;      // dv / max_cells(|Fx - b vx| + |Fy - b vy|)
    double diffusion = 0;  // dv^2/(4 sigma)

    double min() const;
};

CflLimits cfl_limits(const AnnulusGrid& xg, const VelocityGrid& vg,
                     const ModelParams& mp, double force_sup);
double cfl_dt(const AnnulusGrid& xg, const VelocityGrid& vg, const ModelParams& mp,
              double force_sup, double safety);

// ---------------------------------------------------------------------------
// boundary geometry and the nonlocal BC operators

/// Per-ring boundary data: half-space partitions (the normal rotates with
/// theta), the Maxwellian inflow profile e^{-(beta/sigma)|v - v0loc|^2}, and
/// for the outer ring the weighted flux function f1(v) = (v.n) window(v).
struct RingGeometry {
    bool outer = false;
    double face_len = 0;                   // boundary cell arc length
    std::vector<HalfSpaceQuadrature> hs;   // Nth entries
    std::vector<Vec2> v0loc;               // Nth
    std::vector<double> eprof;             // Nth*Nv2
    std::vector<double> f1;                // Nth*Nv2 (outer ring only)
};

struct BoundaryConstants {
    std::vector<double> I0;  // inner ring, > 0
    std::vector<double> I1;  // outer ring, < 0
};

struct BoundaryGeometry {
    RingGeometry inner, outer;
    BoundaryConstants consts;
};

BoundaryGeometry make_boundary_geometry(const AnnulusGrid& xg, const VelocityGrid& vg,
                                        const ModelParams& mp);
BoundaryConstants compute_boundary_constants(const AnnulusGrid& xg, const VelocityGrid& vg,
                                             const ModelParams& mp);

struct BcApplyResult {
    double residual = 0;  // identity residual by quadrature re-evaluation
    long clamp_count = 0;
    double clamp_max = 0;
};

/// Inner ring: p^- = (e/I0)[rho - int_{v.n>0} p^+]; fills tr.in. The marginal
/// identity int p^- + int p^+ = rho holds to quadrature precision (up to the
/// recorded clamp).
BcApplyResult apply_inner_bc(BoundaryTrace& tr, const RingGeometry& ring,
                             const BoundaryConstants& bc, std::span<const double> rho_r0);

/// Inner ring, re-emission form: the bracket rho - int p^+ is supplied
/// directly (the lagged incoming marginal); `applied` receives the
/// re-quadratured incoming marginal.
BcApplyResult apply_inner_bc_bracket(BoundaryTrace& tr, const RingGeometry& ring,
                                     const BoundaryConstants& bc,
                                     std::span<const double> bracket,
                                     std::vector<double>* applied = nullptr);

/// Incoming marginal of a density's boundary cells (the re-emission seed).
std::vector<double> incoming_marginal(const TipDensity& p, const AnnulusGrid& xg,
                                      const VelocityGrid& vg, const RingGeometry& inner);

/// Outer ring: p^- = (e/|I1|)[j0 - int_{v.n>0} f1 p^+]; fills tr.in. The flux
/// identity int |f1| p^- + int f1 p^+ = j0 holds to quadrature precision.
BcApplyResult apply_outer_bc(BoundaryTrace& tr, const RingGeometry& ring,
                             const BoundaryConstants& bc, std::span<const double> j0);

/// j0(theta) = v_0 alpha(c(r1,theta)) p(r1,theta,v0loc), p interpolated
/// bilinearly on the velocity grid.
std::vector<double> compute_j0(std::span<const double> c_r1, const TipDensity& p,
                               const AnnulusGrid& xg, const VelocityGrid& vg,
                               const RingGeometry& outer_ring, const ModelParams& mp);

/// Bilinear interpolation of one cell's velocity distribution at v.
double interp_velocity(const double* pv, const VelocityGrid& vg, const Vec2& v);

// ---------------------------------------------------------------------------
// sub-steps

struct StepLedger {
    double mass_in = 0, mass_out = 0;  // boundary flux * dt, this step
    double mass_reaction = 0;          // reaction + source mass change, this step
    double inflow_sup = 0;             // sup over applied ghosts (run max)
    double inflow_weighted_sup = 0;    // sup (1+|v|^2)^{mu/2} ghost (run max)
    double inflow_l1k = 0;             // accumulated kinetic-measure L1 of inflow
    double inflow_l2k_sq = 0;          // accumulated kinetic-measure L2^2 of inflow
    double bc_res_inner = 0, bc_res_outer = 0;  // run max identity residuals
    long clamp_count = 0;
    double clamp_max = 0;
    double weight_mu = 3.0;

    void reset_step() { mass_in = mass_out = mass_reaction = 0; }
};

/// First-order upwind finite-volume advection in polar coordinates at fixed v.
/// Incoming boundary faces read tr->in; outgoing boundary-cell values are
/// written to tr->out.  Angular face velocities carry the dth/(2 sin(dth/2))
/// metric factor so constant states are exact.
void transport_step(TipDensity& p, const AnnulusGrid& xg, const VelocityGrid& vg,
                    BoundaryTrace& inner, BoundaryTrace& outer, double dt,
                    StepLedger& led, int nthreads = 1);

/// Velocity-space drift-diffusion with Scharfetter-Gummel face fluxes and
/// zero-flux box boundary; conserves the per-cell velocity mass exactly.
void velocity_step(TipDensity& p, const AnnulusGrid& xg, const VelocityGrid& vg,
                   const ForceField& F, double beta, double sigma, double dt,
                   int nthreads = 1);

using SourceFn = std::function<double(double r, double th, double vx, double vy, double t)>;

/// Separable reaction rate r(x,v) = gain_x[x] * nu_v[v] - loss_x[x]; any empty
/// span contributes zero.  Source h integrates exactly for frozen r, h.
struct ReactionCoeffs {
    std::span<const double> gain_x{};
    std::span<const double> nu_v{};
    std::span<const double> loss_x{};
    double loss_const = 0;
    SourceFn h{};
};

/// Exact exponential integrator: p' = p e^{r dt} + dt h phi1(r dt).
void reaction_step(TipDensity& p, const AnnulusGrid& xg, const VelocityGrid& vg,
                   const ReactionCoeffs& rc, double t, double dt, StepLedger& led);

/// One Strang (or Lie) composition; ghost traces must be prepared beforehand.
void fp_step(TipDensity& p, const AnnulusGrid& xg, const VelocityGrid& vg,
             const ForceField& F, double beta, double sigma, const ReactionCoeffs& rc,
             BoundaryTrace& inner, BoundaryTrace& outer, const StepControls& ctl,
             StepLedger& led, int nthreads = 1);

// ---------------------------------------------------------------------------
// linear Fokker-Planck runs

enum class BcKind { fixed_g, nonlocal };

using TraceFn = std::function<double(double th, double vx, double vy, double t)>;
using InitFn = std::function<double(double r, double th, double vx, double vy)>;
using ForceFn = std::function<Vec2(double r, double th, double t)>;

struct LinearProblemSpec {
    InitFn p0{};
    TraceFn g_inner{}, g_outer{};  // fixed-g inflow data
    SourceFn h{};
    ForceFn force{};
    double a_const = 0;       // absorption a in a*p (positive = decay)
    double a_minus_inf = 0;   // ||a^-||_inf for the L^inf bound diagnostics
    /// nonlocal mode: given outer flux datum j0(theta, t)
    std::function<double(double th, double t)> j0_data{};
    /// nonlocal mode: per-step lagged inputs (Picard iterate); when absent
    /// the run self-lags by one time step
    const std::vector<std::vector<double>>* lag_inner_bracket = nullptr;
    const std::vector<std::vector<double>>* lag_j0 = nullptr;
    const std::vector<std::vector<double>>* lag_outer_phi = nullptr;
    /// frozen per-step coefficient series (Picard iterate); values frozen on
    /// [t_s, t_{s+1})
    const std::vector<std::vector<double>>* alpha_series = nullptr;  // alpha(c_{m-1})(x)
    const std::vector<double>* nu_v = nullptr;                       // nu(v)
    const std::vector<std::vector<double>>* b_series = nullptr;      // b_{m-1}(x)
    double gamma = 0;
    const std::vector<ForceField>* force_series = nullptr;
    /// what to capture at full step resolution
    bool capture_rho = false;   // rho at t_0..t_N
    bool capture_j = false;     // j at t_0..t_{N-1}
    bool capture_pv0 = false;   // p(r1, theta, v0loc) at t_0..t_{N-1}
    const ModelParams* flux_params = nullptr;  // for capture_j / capture_pv0
};

struct StepRecord {
    double t = 0;
    double mass = 0;
    double mass_in = 0, mass_out = 0, mass_reaction = 0;
    double linf = 0;
    double min_p = 0;
};

struct KineticRunResult {
    std::vector<double> snap_times;
    std::vector<TipDensity> snaps;
    std::vector<BoundaryTrace> snap_inner, snap_outer;
    std::vector<StepRecord> steps;
    StepLedger ledger;
    // full-resolution boundary series (nonlocal runs; one entry per step):
    // the clamped bracket applied at r0, the j0 used at r1, and this run's own
    // outgoing weighted flux at r1 (inputs for the next Picard iterate).
    std::vector<std::vector<double>> inner_bracket_series;
    std::vector<std::vector<double>> j0_series;
    std::vector<std::vector<double>> outgoing_phi_series;
    double inner_trace_l1 = 0;  // plain-measure L1 of the inner incoming trace
    // optional captures
    std::vector<std::vector<double>> rho_series;  // [0..N][nx]
    std::vector<std::vector<double>> j_series;    // [0..N-1][nx]
    std::vector<std::vector<double>> pv0_series;  // [0..N-1][Nth]
};

TipDensity make_initial_density(const InitFn& p0, const AnnulusGrid& xg,
                                const VelocityGrid& vg);

/// March the linear problem over [0,T] with nsteps fixed steps.
KineticRunResult solve_linear_fp(const LinearProblemSpec& spec, const AnnulusGrid& xg,
                                 const VelocityGrid& vg, const ModelParams& mp,
                                 BcKind bc, double T, int nsteps, const StepControls& ctl,
                                 int snapshots, int nthreads = 1);

/// Fill ghost traces from fixed-g data at time t.
void fill_fixed_traces(BoundaryTrace& tr, const RingGeometry& ring, const AnnulusGrid& xg,
                       const VelocityGrid& vg, const TraceFn& g, double t, StepLedger& led);

/// Record outgoing traces (boundary cell values on each ring's outgoing set).
void record_outgoing_traces(const TipDensity& p, const AnnulusGrid& xg,
                            const VelocityGrid& vg, const BoundaryGeometry& bg,
                            BoundaryTrace& inner, BoundaryTrace& outer);

void track_inflow_norms(const BoundaryTrace& tr, const RingGeometry& ring,
                        const VelocityGrid& vg, double dt, StepLedger& led);

} // namespace vesselkin
