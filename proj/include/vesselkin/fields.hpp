#pragma once

#include <functional>
#include <span>
#include <vector>

#include "vesselkin/grid.hpp"
#include "vesselkin/params.hpp"

namespace vesselkin {

/// Phase-space density p(x,v,t).  Layout: x-cell major, velocity cell minor,
/// linear index idx(i,j)*nv + kl.
struct TipDensity {
    int nx = 0, nv = 0;
    double time = 0;
    std::vector<double> v;

    TipDensity() = default;
    TipDensity(int nx_, int nv_) : nx(nx_), nv(nv_), v(size_t(nx_) * nv_, 0.0) {}
    double* cell(int x) { return v.data() + size_t(x) * nv; }
    const double* cell(int x) const { return v.data() + size_t(x) * nv; }
    std::span<const double> cell_span(int x) const { return {cell(x), size_t(nv)}; }
};

struct Concentration {
    int nx = 0;
    double time = 0;
    std::vector<double> v;

    Concentration() = default;
    explicit Concentration(int nx_) : nx(nx_), v(nx_, 0.0) {}
};

/// b(x,t) = int_0^t rho(x,s) ds, updated by the trapezoid rule.
struct AnastomosisAccumulator {
    double time = 0;
    std::vector<double> b;

    AnastomosisAccumulator() = default;
    explicit AnastomosisAccumulator(int nx) : b(nx, 0.0) {}
};

/// Traces of p on one boundary ring (all Nth cells), stored on the full
/// velocity grid with zeros off the respective half-space.
struct BoundaryTrace {
    int nth = 0, nv = 0;
    std::vector<double> out;  // outgoing trace (upwind boundary-cell values)
    std::vector<double> in;   // incoming trace (applied ghost values)

    BoundaryTrace() = default;
    BoundaryTrace(int nth_, int nv_)
        : nth(nth_), nv(nv_), out(size_t(nth_) * nv_, 0.0), in(size_t(nth_) * nv_, 0.0) {}
    double* out_at(int j) { return out.data() + size_t(j) * nv; }
    double* in_at(int j) { return in.data() + size_t(j) * nv; }
    const double* out_at(int j) const { return out.data() + size_t(j) * nv; }
    const double* in_at(int j) const { return in.data() + size_t(j) * nv; }
};

/// Chemotactic force per spatial cell, Cartesian components.
struct ForceField {
    std::vector<double> fx, fy;
    double sup = 0;  // max |F| over cells

    bool empty() const { return fx.empty(); }
};

// -- pointwise coefficients ---------------------------------------------------

/// alpha(c) = alpha1 * (c/cR) / (1 + c/cR).  Rejects c < 0.
double branching_rate(double c, const ModelParams& mp);

/// nu(v): Gaussian of width eps_nu centered at the (global) v0, unit mass.
double regularized_delta(const Vec2& v, const ModelParams& mp);

/// Fermi-Dirac window w(v) = 1/(1 + e^{|v - chi v0|^2 / sigma_v^2}),
/// evaluated in log-space; values below 1e-300 flush to 0.
double fermi_weight(const Vec2& v, const ModelParams& mp);

// -- field-level evaluations --------------------------------------------------

std::vector<double> alpha_field(const Concentration& c, const ModelParams& mp);
std::vector<double> nu_field(const VelocityGrid& vg, const ModelParams& mp);
std::vector<double> fermi_field(const VelocityGrid& vg, const ModelParams& mp);
/// |v| * w(v) per velocity cell (integrand of the tip flux).
std::vector<double> speed_fermi_field(const VelocityGrid& vg, const ModelParams& mp);

/// F(c) = d1 (1 + gamma1 c)^{-q1} grad_x c, polar central differences with
/// ghost values from the Neumann data (dc/dr = cr0 at r0, 0 at r1).
ForceField taf_force(const Concentration& c, const AnnulusGrid& xg,
                     const ModelParams& mp, std::span<const double> cr0);

/// rho(x) = int p dv.
std::vector<double> marginal_density(const TipDensity& p, const VelocityGrid& vg);

/// j(x) = int |v| w(v) p dv.
std::vector<double> tip_flux(const TipDensity& p, const VelocityGrid& vg,
                             const ModelParams& mp);

/// b += dt*(rho_prev + rho_new)/2.  Rejects dt < 0.
void accumulate_anastomosis(AnastomosisAccumulator& b, std::span<const double> rho_prev,
                            std::span<const double> rho_new, double dt);

/// m^l(p) = sum A w |v|^l p.
double moment(const TipDensity& p, const AnnulusGrid& xg, const VelocityGrid& vg, int ell);

/// ||(1+|v|^2)^{mu/2} p||_inf over all cells; requires mu > N = 2.
double weighted_sup_norm(const TipDensity& p, const VelocityGrid& vg, double mu);

double total_mass(const TipDensity& p, const AnnulusGrid& xg, const VelocityGrid& vg);
double sup_norm(std::span<const double> v);
double min_value(std::span<const double> v);

/// ||p||_q over the phase-space measure A*w, q in {1,2}.
double lq_norm(const TipDensity& p, const AnnulusGrid& xg, const VelocityGrid& vg, int q);

} // namespace vesselkin
