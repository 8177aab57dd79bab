#pragma once

#include <limits>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "qusp/error.hpp"

namespace qusp {

/// Extended-precision scalar: 113-bit mantissa, header-only backend.
using Quad = boost::multiprecision::cpp_bin_float_quad;

template <class Real>
inline constexpr int mantissa_bits = std::numeric_limits<Real>::digits;

template <class Real>
Real pi() {
  return boost::math::constants::pi<Real>();
}

template <class Real>
double to_double(const Real& x) {
  return static_cast<double>(x);
}

/// Invokes `f.template operator()<Real>()` with the narrowest backend whose
/// mantissa holds `precision_bits`.
template <class F>
decltype(auto) with_precision(int precision_bits, F&& f) {
  if (precision_bits <= mantissa_bits<double>) {
    return f.template operator()<double>();
  }
  if (precision_bits <= mantissa_bits<Quad>) {
    return f.template operator()<Quad>();
  }
  throw RejectedParameter("precision_bits " + std::to_string(precision_bits) +
                          " exceeds the widest backend (" +
                          std::to_string(mantissa_bits<Quad>) + " bits)");
}

}  // namespace qusp
