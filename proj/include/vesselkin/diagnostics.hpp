#pragma once

#include <span>
#include <vector>

#include "vesselkin/diffusion.hpp"
#include "vesselkin/kinetic.hpp"

namespace vesselkin {

// ---------------------------------------------------------------------------
// balance laws

struct MassBalanceTerms {
    double dmdt = 0;      // (m_after - m_before)/dt
    double inflow = 0;    // int_{G-} |v.n| g
    double outflow = 0;   // int_{G+} |v.n| Tr p
    double source = 0;    // int h
    double absorb = 0;    // int a p  (a = loss - gain*nu)
    double residual() const { return std::abs(dmdt - (inflow - outflow + source - absorb)); }
};

/// Continuum-form mass balance over one step; traces are the applied ones,
/// the density midpoint-in-time.
MassBalanceTerms mass_balance_terms(const TipDensity& before, const TipDensity& after,
                                    const BoundaryTrace& inner, const BoundaryTrace& outer,
                                    const BoundaryGeometry& bg, const AnnulusGrid& xg,
                                    const VelocityGrid& vg, const ReactionCoeffs& rc,
                                    double t, double dt);

/// Per-step ledger residual |dm - (in - out + reaction)| from consecutive step
/// records; returns the max (absolute) over the run.
double max_ledger_mass_residual(std::span<const StepRecord> steps, double mass0);

struct MomentumBalanceTerms {
    double dmdt = 0;
    double inflow = 0, outflow = 0;
    double source = 0;
    double friction = 0;   // beta mu m^mu
    double absorb = 0;     // int a |v|^mu p
    double diffusion = 0;  // mu (mu - 2 + N) sigma m^{mu-2}
    double forcing = 0;    // mu int F.v |v|^{mu-2} p
    double residual() const {
        return std::abs(dmdt - (inflow - outflow + source - friction - absorb +
                                diffusion + forcing));
    }
};

/// Momentum balance (mu in {1,2}); for mu = 1 the |v|^{mu-2} weight uses the
/// regularized 1/max(|v|, dv/2).
MomentumBalanceTerms momentum_balance_terms(const TipDensity& before, const TipDensity& after,
                                            const BoundaryTrace& inner,
                                            const BoundaryTrace& outer,
                                            const BoundaryGeometry& bg, const AnnulusGrid& xg,
                                            const VelocityGrid& vg, const ReactionCoeffs& rc,
                                            const ForceField& F, double beta, double sigma,
                                            int mu, double t, double dt);

/// Discrete ||grad_v p||^2 compatible with the centered diffusion stencil:
/// for the pure velocity-diffusion step, <p, Lp> = -sigma * this.
double v_gradient_sq(const TipDensity& p, const AnnulusGrid& xg, const VelocityGrid& vg);

struct L2IdentityTerms {
    double dnorm2_dt = 0;   // (||p'||^2 - ||p||^2)/dt
    double inflow = 0, outflow = 0;  // kinetic-measure integrals of g^2 / (Tr p)^2
    double source = 0;      // 2 int h p
    double absorb = 0;      // 2 int a p^2
    double growth = 0;      // N beta ||p||^2
    double gradient = 0;    // 2 sigma ||grad_v p||^2
    double residual() const {
        return std::abs(dnorm2_dt - (inflow - outflow + source - absorb + growth - gradient));
    }
};

L2IdentityTerms l2_identity_terms(const TipDensity& before, const TipDensity& after,
                                  const BoundaryTrace& inner, const BoundaryTrace& outer,
                                  const BoundaryGeometry& bg, const AnnulusGrid& xg,
                                  const VelocityGrid& vg, const ReactionCoeffs& rc,
                                  double beta, double sigma, double t, double dt);

// ---------------------------------------------------------------------------
// interpolation inequalities (discrete, constructive constants)

struct InterpMargins {
    double mlp1 = 0;          // || |v|^l p ||_1 <= ||p||_1^{1-l/mu} || |v|^mu p ||_1^{l/mu}
    double vinf = 0;          // sup_x int |v| p dv vs split bound
    double inf = 0;           // sup_x int p dv vs split bound
    double interp = 0;        // ||Y_{mu-1}||_inf <= ||p||^{1/mu} ||Y_mu||^{1-1/mu}
    double mlpinf_ratio = 0;  // implied constant of the L^{(N+mu)/(N+l)} bound
};

InterpMargins interpolation_report(const TipDensity& p, const AnnulusGrid& xg,
                                   const VelocityGrid& vg, double mu, double ell);

// ---------------------------------------------------------------------------
// a-priori bound suite

struct BoundSuiteData {
    double p0_l1 = 0, p0_l2 = 0, p0_linf = 0;
    double p0_weighted = 0;  // ||(1+|v|^2)^{mu/2} p0||_inf
    double g_l1k = 0, g_l2k_sq = 0, g_linf = 0, g_weighted = 0;
    double a_minus_inf = 0, beta = 0, sigma = 0, force_sup = 0;
    double mu = 3, N = 2;

    /// Growth rate of the weighted sup bound:
    /// A = (N ||F|| + beta) mu + sigma mu (mu + 2 + N) + N beta + ||a^-||.
    double weighted_rate() const {
        return (N * force_sup + beta) * mu + sigma * mu * (mu + 2.0 + N) + N * beta +
               a_minus_inf;
    }
    double weighted_B() const { return std::max(p0_weighted, g_weighted); }
};

struct BoundMargins {
    double l1_bound = 0, l1_obs = 0;
    double l2_bound = 0, l2_obs = 0;
    double linf_bound = 0, linf_obs = 0;
    double weighted_bound = 0, weighted_obs = 0;
    double l1_margin() const { return l1_bound - l1_obs; }
    double l2_margin() const { return l2_bound - l2_obs; }
    double linf_margin() const { return linf_bound - linf_obs; }
    double weighted_margin() const { return weighted_bound - weighted_obs; }
};

/// Evaluates (lp1) for q in {1,2,inf}, (linf) and the Prop-3.4 weighted bound
/// at time t for one snapshot.
BoundMargins bound_suite(const TipDensity& p, const AnnulusGrid& xg, const VelocityGrid& vg,
                         double t, const BoundSuiteData& data);

// ---------------------------------------------------------------------------
// heat decay + misc

struct HeatDecayReport {
    double maxnorm_margin = 0;       // min_t (||u0||_inf - ||u(t)||_inf)
    double energy_max_increase = 0;  // max consecutive increase of ||u||_2
    double mean_drift = 0;           // max |mean(t) - mean(0)|
    std::vector<double> grad_ratio;  // ||grad u(t)||_2 sqrt(t) / ||u0||_2
};

HeatDecayReport heat_decay_report(const HeatRunResult& run, const AnnulusGrid& xg,
                                  std::span<const double> grad_times);

/// Least-squares slope of log(y) against log(t).
double fit_loglog_slope(std::span<const double> t, std::span<const double> y);

struct BoundaryIdentityResiduals {
    double inner = 0, outer = 0;
};

/// Re-evaluate both ring identities from stored traces and the inputs used.
BoundaryIdentityResiduals boundary_identity_check(const BoundaryTrace& inner,
                                                  const BoundaryTrace& outer,
                                                  const BoundaryGeometry& bg,
                                                  const VelocityGrid& vg,
                                                  std::span<const double> rho_used,
                                                  std::span<const double> j0_used);

/// Per-snapshot diagnostics record (serialized by the run driver).
struct SnapshotDiagRecord {
    double t = 0;
    double mass = 0, l1 = 0, l2 = 0, linf = 0;
    double min_p = 0, min_c = 0;
    std::vector<double> moments;  // m^0 .. m^{mu_max}
    double weighted_sup = 0;      // mu = 3
    double linf_bound_margin = 0;
    double weighted_bound_margin = 0;
    InterpMargins interp;
    double bc_res_inner = 0, bc_res_outer = 0;
    long clamp_count = 0;
    double clamp_max = 0;
    double mass_residual_ledger = 0;
};

} // namespace vesselkin
