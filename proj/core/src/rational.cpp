#include "tmoments/rational.hpp"

#include "tmoments/errors.hpp"

#include <cctype>

namespace tmoments {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool is_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = trim(text);
    if (body.empty())
        raise(errc::parse_error, "empty rational literal");

    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!is_integer_token(num) || !is_integer_token(den))
        raise(errc::parse_error,
              "bad rational literal '" + std::string(text) +
                  "' (expected \"p\" or \"p/q\" with integer p, q)");

    Integer numerator(std::string(num), 10);
    Integer denominator(std::string(den), 10);
    if (denominator == 0)
        raise(errc::parse_error,
              "zero denominator in rational literal '" + std::string(text) + "'");

    Rational value(numerator, denominator);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

double approx(const Rational& value) {
    return value.get_d();
}

Integer pow_integer(const Integer& base, unsigned long exponent) {
    Integer result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

const char* errc_name(errc code) noexcept {
    switch (code) {
    case errc::parse_error: return "parse_error";
    case errc::unknown_builtin: return "unknown_builtin";
    case errc::bad_param: return "bad_param";
    case errc::duplicate_transition: return "duplicate_transition";
    case errc::incomplete: return "incomplete";
    case errc::unknown_state: return "unknown_state";
    case errc::alphabet_too_small: return "alphabet_too_small";
    case errc::alphabet_mismatch: return "alphabet_mismatch";
    case errc::symbol_not_in_alphabet: return "symbol_not_in_alphabet";
    case errc::precondition_violated: return "precondition_violated";
    case errc::not_finally_connected: return "not_finally_connected";
    case errc::periodic: return "periodic";
    case errc::not_weakly_connected: return "not_weakly_connected";
    case errc::degenerate_characteristic: return "degenerate_characteristic";
    case errc::budget_exceeded: return "budget_exceeded";
    case errc::cycle_budget_exceeded: return "cycle_budget_exceeded";
    case errc::internal_mismatch: return "internal_mismatch";
    case errc::identity_violated: return "identity_violated";
    }
    return "unknown";
}

} // namespace tmoments
