#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "cobcat/error.hpp"

namespace cobcat {

// Value semantics for the three coefficient domains. Each bundle exposes
// zero/one/add/mul/eq plus conversion helpers; matrices are templated on
// these so exact and approximate arithmetic share one code path.

/// Exact unbounded naturals.
struct NatSemiring {
  using value_type = mpz_class;
  static value_type zero() { return value_type(0); }
  static value_type one() { return value_type(1); }
  static value_type add(const value_type& a, const value_type& b) {
    return value_type(a + b);
  }
  static value_type mul(const value_type& a, const value_type& b) {
    return value_type(a * b);
  }
  static bool is_zero(const value_type& v) { return v == 0; }
  static bool eq(const value_type& a, const value_type& b) { return a == b; }
  static value_type from_int(long n) { return value_type(n); }
  static std::string to_string(const value_type& v) { return v.get_str(); }
  static constexpr const char* name() { return "nat"; }
};

/// Booleans with or/and; matrices over this are relations.
struct BoolSemiring {
  using value_type = unsigned char;
  static value_type zero() { return 0; }
  static value_type one() { return 1; }
  static value_type add(value_type a, value_type b) {
    return (a || b) ? 1 : 0;
  }
  static value_type mul(value_type a, value_type b) {
    return (a && b) ? 1 : 0;
  }
  static bool is_zero(value_type v) { return v == 0; }
  static bool eq(value_type a, value_type b) { return a == b; }
  static value_type from_int(long n) { return n != 0 ? 1 : 0; }
  static std::string to_string(value_type v) { return v ? "1" : "0"; }
  static constexpr const char* name() { return "bool"; }
};

/// 64-bit floats with a relative comparison tolerance; results that leave
/// the finite range raise Overflow.
struct F64Semiring {
  using value_type = double;
  static constexpr double rel_tol = 1e-9;
  static value_type zero() { return 0.0; }
  static value_type one() { return 1.0; }
  static value_type add(value_type a, value_type b) { return checked(a + b); }
  static value_type mul(value_type a, value_type b) { return checked(a * b); }
  static bool is_zero(value_type v) { return v == 0.0; }
  static bool eq(value_type a, value_type b) {
    return std::abs(a - b) <=
           rel_tol * std::max({1.0, std::abs(a), std::abs(b)});
  }
  static value_type from_int(long n) { return static_cast<double>(n); }
  static std::string to_string(value_type v) { return std::to_string(v); }
  static constexpr const char* name() { return "f64"; }

  static value_type checked(value_type v) {
    require(std::isfinite(v), Errc::overflow,
            "float result left the finite range");
    return v;
  }
};

}  // namespace cobcat
