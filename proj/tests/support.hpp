// Small builders shared by the test binaries.
#pragma once

#include <doctest.h>

#include "galg/brackets.hpp"
#include "galg/center.hpp"
#include "galg/error.hpp"
#include "galg/sampling.hpp"
#include "galg/textio.hpp"

namespace testing {

using namespace galg;

inline FieldSpec gf(std::uint64_t p) { return FieldSpec::prime(p); }
inline FieldSpec qq() { return FieldSpec::rationals(); }
inline Scalar sc(const FieldSpec& f, long long v) { return Scalar::from_int(f, v); }

/// k_q[x1..xn] with every p_ij = q.
inline Presentation skew_uniform(const FieldSpec& f, std::size_t n, long long q) {
  return skew_ring(SkewMatrix::uniform(f, n, sc(f, q)));
}

inline Presentation commutative(const FieldSpec& f, std::size_t n) { return skew_uniform(f, n, 1); }

inline Presentation free_on(const FieldSpec& f, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return free_algebra(f, names, std::vector<int>(n, 1));
}

inline NcPoly poly(const Presentation& p, const std::string& text) {
  return parse_polynomial(text, p.generators(), p.field());
}

inline ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace testing
