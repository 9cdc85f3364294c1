#pragma once

#include <map>
#include <string>

#include "vesselkin/params.hpp"

namespace vesselkin {

/// Named analytic profile: "<name> key=value ...".
struct ProfileSpec {
    std::string name = "zero";
    std::map<std::string, double> args;

    double get(const std::string& key, double fallback) const {
        auto it = args.find(key);
        return it == args.end() ? fallback : it->second;
    }
};

struct RunConfig {
    std::string mode;              // picard | direct | linear-fp | heat-lab (required)
    std::string bc = "nonlocal";   // fixed-g | nonlocal
    double T = 1.0;
    double dt = 0;                 // 0 = CFL-auto with cfl_safety
    double cfl_safety = 0.3;
    std::string splitting = "strang";  // strang | lie

    double r0 = 1.0, r1 = 2.0;
    int Nr = 24, Nth = 32, Nv = 32;
    double vmax = 0;               // 0 = auto
    double vtrunc_tol = 1e-8;

    ModelParams mp;

    double a_const = 0;            // linear-fp absorption
    std::string heat_scheme = "explicit";  // explicit | implicit-radial
    double heat_d = 0;             // heat-lab diffusivity override (0 = mp.d)

    ProfileSpec initial_p{"zero", {}};
    ProfileSpec initial_c{"constant", {{"a", 1.0}}};
    ProfileSpec cr0{"constant", {{"a", -1.0}}};
    ProfileSpec g_inner{"zero", {}};
    ProfileSpec g_outer{"zero", {}};
    ProfileSpec heat_u0{"radial", {{"a", 1.0}, {"b", 0.5}}};
    ProfileSpec j0{"zero", {}};    // linear-fp nonlocal outer flux datum

    std::string out_dir = "out";
    int snapshots = 10;
    bool diag = true;
    unsigned long long seed = 12345;
    bool deterministic = true;
    bool gates = true;

    double picard_tol = 1e-6;
    int picard_max = 12;
    int kquad_N = 256;
    double kquad_vmax = 0;

    void validate() const;  // throws ConfigError
};

RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// Documented schema (printed by `vesselkin help-config`).
std::string config_schema_text();

} // namespace vesselkin
