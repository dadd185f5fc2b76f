#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace hesselink {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Exact rational coordinate vector. All engine arithmetic is in Rat;
/// floating point never appears.
using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

enum class Err {
  LengthMismatch,
  ZeroConstraint,
  EmptySupport,
  Infeasible,
  UnsupportedType,
  MalformedSpec,
  SizeLimit,
  BudgetExceeded,
  NoRealization,
  Internal,
};

struct EngineError : std::runtime_error {
  Err code;
  EngineError(Err c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

/// Parses "p", "-p" or "p/q". Inverse of rat_to_string.
inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::runtime_error("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw EngineError(Err::MalformedSpec, "bad rational literal: '" + s + "'");
  }
}

inline std::string vec_to_string(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_to_string(v[i]);
  }
  return s + ")";
}

}  // namespace hesselink
