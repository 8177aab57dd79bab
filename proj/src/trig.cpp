#include "qusp/trig.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

namespace qusp {

double tolerance_floor(int precision_bits) {
  return std::ldexp(1.0, 1 - precision_bits);
}

PhaseParams make_phase_params(int N, int p, double tol, int precision_bits) {
  if (N < 2) {
    throw RejectedParameter("N must be at least 2, got " + std::to_string(N));
  }
  if (p < 1 || std::gcd(p, N) != 1) {
    throw RejectedParameter("p must be a positive integer coprime to N, got p=" +
                            std::to_string(p) + ", N=" + std::to_string(N));
  }
  if (precision_bits < 2) {
    throw RejectedParameter("precision_bits must be at least 2");
  }
  if (!(tol > 0)) {
    throw RejectedParameter("tolerance must be positive");
  }
  if (tol < tolerance_floor(precision_bits)) {
    std::ostringstream os;
    os << "tolerance " << tol << " is below the precision floor 2^(1-" << precision_bits << ")";
    throw RejectedParameter(os.str());
  }
  return PhaseParams{N, p, tol, precision_bits};
}

}  // namespace qusp
