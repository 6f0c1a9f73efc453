#pragma once

#include <stdexcept>
#include <string>

namespace hgm {

// Failure classes surfaced by the library. The CLI maps these to exit codes:
// bad_range -> 1, cache_corrupt -> 3, everything else -> 2 (an internal
// consistency failure; the underlying theory guarantees these never fire on
// a healthy pipeline).
enum class Errc {
    bad_range,
    division_inexact,
    bound_mismatch,
    not_in_f1,
    no_convergence,
    integrality_failure,
    internal_inconsistency,
    cache_corrupt,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::bad_range: return "BAD_RANGE";
        case Errc::division_inexact: return "DIVISION_INEXACT";
        case Errc::bound_mismatch: return "BOUND_MISMATCH";
        case Errc::not_in_f1: return "NOT_IN_F1";
        case Errc::no_convergence: return "NO_CONVERGENCE";
        case Errc::integrality_failure: return "INTEGRALITY_FAILURE";
        case Errc::internal_inconsistency: return "INTERNAL_INCONSISTENCY";
        case Errc::cache_corrupt: return "CACHE_CORRUPT";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace hgm
