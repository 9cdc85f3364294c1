#pragma once

#include <stdexcept>
#include <string>

namespace vesselkin {

// Process exit codes used by the CLI.  Every abort path maps to exactly one.
enum class ExitCode : int {
    ok = 0,
    usage = 1,
    config = 2,
    admissibility = 3,
    numerical = 4,
    gate = 5,
};

struct ConfigError : std::runtime_error {
    enum class Kind { unknown_key, bad_value, sign_violation, missing_key, io };
    Kind kind;
    int line;           // 1-based line in the config file, 0 if not applicable
    std::string key;
    ConfigError(Kind k, int ln, std::string key_, const std::string& what)
        : std::runtime_error(what), kind(k), line(ln), key(std::move(key_)) {}
};

struct AdmissibilityError : std::runtime_error {
    double K1, K2;
    AdmissibilityError(double k1, double k2, const std::string& what)
        : std::runtime_error(what), K1(k1), K2(k2) {}
};

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace vesselkin
