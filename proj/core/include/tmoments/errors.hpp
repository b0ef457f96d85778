#pragma once

#include <stdexcept>
#include <string>

namespace tmoments {

// Every failure the library can report. The CLI maps these onto exit codes;
// tests match on them. Codes in the `internal_*` group signal bugs in this
// library, not bad input, and are never expected on valid data.
enum class errc {
    // input / format
    parse_error,
    unknown_builtin,
    bad_param,
    // structural validation
    duplicate_transition,
    incomplete,
    unknown_state,
    alphabet_too_small,
    alphabet_mismatch,
    symbol_not_in_alphabet,
    precondition_violated,
    // connectivity / spectral structure
    not_finally_connected,
    periodic,
    not_weakly_connected,
    degenerate_characteristic,
    // resource guards
    budget_exceeded,
    cycle_budget_exceeded,
    // consistency tripwires
    internal_mismatch,
    identity_violated,
};

const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw error(code, message);
}

} // namespace tmoments
