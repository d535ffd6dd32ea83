#include "floqsim/concurrence.hpp"

#include <algorithm>
#include <cmath>

#include "floqsim/errors.hpp"
#include "floqsim/numerics.hpp"

namespace floqsim {

ComplexMatrix spin_flip(const ComplexMatrix& rho) {
  // Y = sigma_y x sigma_y is the anti-diagonal (-1, 1, 1, -1).
  static const double y[4] = {-1.0, 1.0, 1.0, -1.0};
  ComplexMatrix out(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      out(r, c) = y[r] * y[c] * std::conj(rho(3 - r, 3 - c));
  return out;
}

ConcurrenceResult concurrence(const DensityMatrix& rho) {
  if (rho.basis != Basis::computational)
    throw NonPhysicalInput("concurrence: state must be computational-basis");

  ComplexMatrix h(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      h(r, c) = 0.5 * (rho.m(r, c) + std::conj(rho.m(c, r)));
  const double herm_defect = (rho.m - h).frobenius_norm();
  if (herm_defect > 1e-8)
    throw NonPhysicalInput("concurrence: Hermiticity defect " +
                           std::to_string(herm_defect));
  const double tr = h.trace().real();
  if (std::abs(tr - 1.0) > 1e-7)
    throw NonPhysicalInput("concurrence: trace " + std::to_string(tr));
  EigenDecomposition spec = hermitian_eig(h);
  if (spec.values.front() < -1e-6)
    throw NonPhysicalInput("concurrence: eigenvalue " +
                           std::to_string(spec.values.front()));

  // sqrt(rho) via the spectrum just computed, tiny negatives clamped.
  ComplexMatrix s(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      cd acc = 0.0;
      for (int k = 0; k < 4; ++k)
        acc += spec.vectors(r, k) *
               std::sqrt(std::max(0.0, spec.values[k])) *
               std::conj(spec.vectors(c, k));
      s(r, c) = acc;
    }

  // Eigenvalues of rho * rho_tilde equal those of the Hermitian PSD
  // product sqrt(rho) rho_tilde sqrt(rho).
  const ComplexMatrix m = s * spin_flip(h) * s;
  EigenDecomposition em = hermitian_eig(m);

  ConcurrenceResult out;
  for (int i = 0; i < 4; ++i)
    out.lambdas[i] = std::sqrt(std::max(0.0, em.values[3 - i]));
  out.value = std::max(
      0.0, out.lambdas[0] - out.lambdas[1] - out.lambdas[2] - out.lambdas[3]);
  return out;
}

std::vector<std::pair<double, double>> concurrence_trace(
    const EvolutionRecord& rec) {
  std::vector<std::pair<double, double>> out;
  out.reserve(rec.times.size());
  for (size_t i = 0; i < rec.times.size(); ++i)
    out.emplace_back(rec.times[i], concurrence(rec.states_comp[i]).value);
  return out;
}

}  // namespace floqsim
