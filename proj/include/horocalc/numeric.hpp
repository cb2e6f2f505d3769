#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace horocalc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

enum class errc {
    invalid_type,
    invalid_color,
    zero_vector,
    not_independent,
    division_by_zero,
    pole_at_one,
    nonnegative_weight,
    not_q_gorenstein,
    not_complete,
    not_locally_factorial,
    precondition_failed,
    schema_error,
    semantic_error,
    internal_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_type: return "InvalidType";
        case errc::invalid_color: return "InvalidColor";
        case errc::zero_vector: return "ZeroVector";
        case errc::not_independent: return "NotIndependent";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::pole_at_one: return "PoleAtOne";
        case errc::nonnegative_weight: return "NonNegativeWeight";
        case errc::not_q_gorenstein: return "NotQGorenstein";
        case errc::not_complete: return "NotComplete";
        case errc::not_locally_factorial: return "NotLocallyFactorial";
        case errc::precondition_failed: return "PreconditionFailed";
        case errc::schema_error: return "SchemaError";
        case errc::semantic_error: return "SemanticError";
        case errc::internal_error: return "InternalError";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw error(errc::division_by_zero, "rational with zero denominator");
    return Rat(num, den);
}

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace horocalc
