#pragma once

#include <array>
#include <cmath>

namespace vesselkin {

using Vec2 = std::array<double, 2>;

inline double dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }
inline double norm(const Vec2& a) { return std::sqrt(dot(a, a)); }

/// Physical constants of the model.  v0 = (v_0, w_0): at a boundary cell with
/// outward normal n the sprouting profile is centered at -v_0*n + w_0*t
/// (t = n rotated by +pi/2), i.e. v_0 is the inward normal speed and w_0 the
/// tangential one.  In the interior (nu, Fermi weight) v0 is used verbatim as
/// a Cartesian vector.
struct ModelParams {
    double beta = 1.0;      // friction [1/time]
    double sigma = 0.1;     // velocity diffusivity [speed^2/time]
    double gamma = 0.05;    // anastomosis rate
    double d = 0.05;        // TAF diffusivity
    double eta = 0.3;       // TAF consumption rate
    double alpha1 = 1.0;    // max branching rate
    double cR = 1.0;        // reference concentration
    double d1 = 1.0;        // chemotactic force scale
    double gamma1 = 0.5;    // force saturation coefficient
    double q1 = 1.0;        // force saturation exponent
    double chi = 2.0;       // Fermi window center multiplier (> 1)
    double sigma_v = 0.5;   // Fermi window width
    Vec2 v0{0.3, 0.0};      // sprouting velocity (v_0, w_0), |v0| > 0
    double eps_nu = 0.0;    // width of the Gaussian regularizing delta_{v0};
                            // 0 means "use the default 0.3*|v0|"

    double eps_nu_eff() const { return eps_nu > 0 ? eps_nu : 0.3 * norm(v0); }

    void validate() const;  // throws ConfigError(sign_violation) on bad values
};

/// Local sprouting velocity at a boundary cell with outward unit normal n.
inline Vec2 local_v0(const ModelParams& mp, const Vec2& n) {
    const Vec2 t{-n[1], n[0]};
    return {-mp.v0[0] * n[0] + mp.v0[1] * t[0], -mp.v0[0] * n[1] + mp.v0[1] * t[1]};
}

} // namespace vesselkin
