#pragma once

#include <span>
#include <vector>

#include "vesselkin/params.hpp"

namespace vesselkin {

/// Polar cell-centered grid on the annulus r0 < |x| < r1.
/// Cell (i,j) is centered at (rc[i], thc[j]) with area rc[i]*dr*dth,
/// so the areas sum to pi*(r1^2 - r0^2) exactly.
struct AnnulusGrid {
    double r0 = 0, r1 = 0;
    int Nr = 0, Nth = 0;
    double dr = 0, dth = 0;
    std::vector<double> rc;    // Nr cell-center radii
    std::vector<double> thc;   // Nth cell-center angles
    std::vector<double> area;  // Nr*Nth cell areas

    int cells() const { return Nr * Nth; }
    int idx(int i, int j) const { return i * Nth + j; }
    double total_area() const;

    Vec2 e_r(int j) const { return {std::cos(thc[j]), std::sin(thc[j])}; }
    Vec2 inner_normal(int j) const { auto e = e_r(j); return {-e[0], -e[1]}; }
    Vec2 outer_normal(int j) const { return e_r(j); }
    double inner_face_len() const { return r0 * dth; }
    double outer_face_len() const { return r1 * dth; }
};

AnnulusGrid build_annulus_grid(double r0, double r1, int Nr, int Nth);

/// Uniform Cartesian grid on [-vmax, vmax]^2.  Nv must be even so that v = 0
/// is a cell face; cell centers come in (v, -v) pairs.
struct VelocityGrid {
    double vmax = 0;
    int Nv = 0;
    double dv = 0;
    std::vector<double> vc;  // Nv cell-center coordinates per axis
    double w = 0;            // cell measure dv^2

    int cells() const { return Nv * Nv; }
    int idx(int k, int l) const { return k * Nv + l; }
    double vx(int kl) const { return vc[kl / Nv]; }
    double vy(int kl) const { return vc[kl % Nv]; }
    double speed2(int kl) const { double a = vx(kl), b = vy(kl); return a * a + b * b; }
    double face(int k) const { return -vmax + k * dv; }
};

VelocityGrid build_velocity_grid(double vmax, int Nv);

/// Default truncation radius: covers the sprouting/window centers and the
/// thermal Maxwellian tails down to tol.
double default_vmax(const ModelParams& mp, double tol = 1e-8);

/// Partition of velocity cells by the sign of v.n for one boundary normal.
/// Cells with |v.n| < 1e-14*vmax belong to neither list.
struct HalfSpaceQuadrature {
    Vec2 n{1, 0};
    double w = 0;                // cell measure of the source grid
    std::vector<int> outgoing;   // v.n > 0
    std::vector<int> incoming;   // v.n < 0
    std::vector<double> vn_out;  // v.n per outgoing entry
    std::vector<double> vn_in;   // v.n per incoming entry (negative)
};

HalfSpaceQuadrature half_space_quadrature(const VelocityGrid& g, const Vec2& n);

/// Midpoint rule: sum_kl w * weight[kl] * field[kl].
double integrate_velocity(std::span<const double> field,
                          std::span<const double> weight, double cell_measure);

/// Unweighted variant.
double integrate_velocity(std::span<const double> field, double cell_measure);

} // namespace vesselkin
