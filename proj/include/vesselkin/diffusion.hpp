#pragma once

#include <functional>
#include <span>
#include <vector>

#include "vesselkin/fields.hpp"
#include "vesselkin/grid.hpp"

namespace vesselkin {

/// Neumann data: dc/dr = cr0(theta,t) at r0 (<= 0 in model mode), zero flux
/// at r1.
struct NeumannData {
    std::function<double(double th, double t)> cr0{};
    bool enforce_sign = true;

    std::vector<double> eval(const AnnulusGrid& xg, double t) const;
};

struct HeatControls {
    enum class Scheme { explicit_fv, implicit_radial } scheme = Scheme::explicit_fv;
    double safety = 0.9;
};

double heat_cfl_dt(const AnnulusGrid& xg, double d, double safety);

/// One conservative FV step: polar Laplacian with boundary-flux injection,
/// then the exact exponential sink factor e^{-eta j dt}.  Empty j_field or
/// cr0_now mean zero.
void neumann_step(Concentration& c, const AnnulusGrid& xg, double d, double eta,
                  std::span<const double> j_field, std::span<const double> cr0_now,
                  double dt, const HeatControls& hc,
                  std::span<const double> source = {});

struct HeatRunResult {
    std::vector<double> snap_times;
    std::vector<Concentration> snaps;
};

/// TAF evolution with a per-step sink field j(t_s) frozen on [t_s, t_{s+1}).
HeatRunResult solve_taf(const Concentration& c0, const AnnulusGrid& xg, double d,
                        double eta,
                        const std::function<std::span<const double>(int step)>& j_at,
                        const NeumannData& data, double T, int nsteps, int snapshots,
                        const HeatControls& hc);

/// Homogeneous-Neumann heat evolution (zero flux both rings, no sink).
HeatRunResult solve_heat_homogeneous(const Concentration& u0, const AnnulusGrid& xg,
                                     double d, double T, int nsteps, int snapshots,
                                     const HeatControls& hc);

/// Homogeneous-Neumann evolution with a time-independent source and zero
/// initial data.
HeatRunResult solve_heat_source(const AnnulusGrid& xg, double d,
                                std::span<const double> source, double T, int nsteps,
                                int snapshots, const HeatControls& hc);

// grid norms shared by the decay diagnostics
double grid_mean(const Concentration& c, const AnnulusGrid& xg);   // sum A c
double grid_l2(const Concentration& c, const AnnulusGrid& xg);     // sqrt(sum A c^2)
double grad_l2(const Concentration& c, const AnnulusGrid& xg);     // face-based |grad c|_2
double grad_linf(const Concentration& c, const AnnulusGrid& xg);   // max face slope

/// Neumann eigenpairs of the radially symmetric problem on [r0, r1], from a
/// high-resolution 1-D finite-volume discretization.  Eigenfunctions are
/// orthonormal in L^2 of the annulus (weight 2 pi r dr).
struct RadialSpectralOracle {
    double r0 = 0, r1 = 0, d = 0;
    int nfine = 0, nmodes = 0;
    double dr = 0;
    std::vector<double> rfine;                // fine cell centers
    std::vector<double> lambda;               // ascending, lambda[0] ~ 0
    std::vector<std::vector<double>> phi;     // [mode][fine cell]
    bool truncation_warning = false;          // set by evolve()

    double phi_at(int n, double r) const;     // linear interpolation
    std::vector<double> project(const std::function<double(double)>& u0) const;
    /// u(r_eval, t) for radial initial data u0; flags truncation when the
    /// highest retained mode still carries > 1e-3 of the coefficient energy.
    std::vector<double> evolve(const std::function<double(double)>& u0, double t,
                               std::span<const double> r_eval);
};

RadialSpectralOracle build_radial_oracle(double r0, double r1, double d, int nmodes,
                                         int nfine = 1024);

} // namespace vesselkin
