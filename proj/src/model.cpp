#include "floqsim/model.hpp"

#include <cmath>
#include <string>

#include "floqsim/errors.hpp"
#include "floqsim/numerics.hpp"

namespace floqsim {

const char* to_string(StateLabel l) {
  switch (l) {
    case StateLabel::s0: return "s0";
    case StateLabel::s1: return "s1";
    case StateLabel::e_minus: return "e-";
    case StateLabel::e_plus: return "e+";
  }
  return "?";
}

ComplexMatrix build_h0(const ModelParams& p) {
  ComplexMatrix h(4);
  h(0, 0) = -p.eps0;
  h(3, 3) = p.eps0;
  h(1, 2) = -p.j / 2.0;
  h(2, 1) = -p.j / 2.0;
  // -delta1/2 sigma_x(1): flips the first qubit.
  h(0, 2) = h(2, 0) = h(1, 3) = h(3, 1) = -p.delta1 / 2.0;
  // -delta2/2 sigma_x(2): flips the second qubit.
  h(0, 1) = h(1, 0) = h(2, 3) = h(3, 2) = -p.delta2 / 2.0;
  return h;
}

ComplexMatrix build_drive(const ModelParams& p, const DriveParams& d,
                          double t) {
  (void)p;
  ComplexMatrix v(4);
  const double x = d.amplitude * std::cos(d.omega * t);
  v(0, 0) = -x;
  v(3, 3) = x;
  return v;
}

ComplexMatrix build_coupling_op(double gamma1, double xi) {
  const double gamma2 = xi * gamma1;
  ComplexMatrix a(4);
  a(0, 0) = gamma1 + gamma2;
  a(1, 1) = gamma1 - gamma2;
  a(2, 2) = -gamma1 + gamma2;
  a(3, 3) = -(gamma1 + gamma2);
  return a;
}

std::array<Vector, 4> zeroth_order_states() {
  const double r = 1.0 / std::sqrt(2.0);
  std::array<Vector, 4> s;
  s[0] = {1, 0, 0, 0};           // s0 = |00>
  s[1] = {0, 0, 0, 1};           // s1 = |11>
  s[2] = {0, -r, r, 0};          // e- = (|10> - |01>)/sqrt(2)
  s[3] = {0, r, r, 0};           // e+ = (|01> + |10>)/sqrt(2)
  return s;
}

EigenSystem diagonalize_h0(const ModelParams& p) {
  EigenDecomposition e = hermitian_eig(build_h0(p));
  for (int i = 0; i + 1 < 4; ++i)
    if (e.values[i + 1] - e.values[i] < 1e-12)
      throw DegenerateSpectrum("diagonalize_h0: gap below 1e-12 between "
                               "levels " + std::to_string(i) + " and " +
                               std::to_string(i + 1));

  EigenSystem sys;
  for (int i = 0; i < 4; ++i) sys.energies[i] = e.values[i];
  sys.states = e.vectors;

  // Assign labels by maximal overlap with the zeroth-order states; each
  // label is used once, ties broken by energy order.
  const auto zero = zeroth_order_states();
  std::array<bool, 4> label_taken{};
  for (int i = 0; i < 4; ++i) {
    const Vector v = sys.states.column(i);
    int best = -1;
    double best_ov = -1.0;
    for (int l = 0; l < 4; ++l) {
      if (label_taken[l]) continue;
      const double ov = std::abs(vdot(zero[l], v));
      if (ov > best_ov) {
        best_ov = ov;
        best = l;
      }
    }
    label_taken[best] = true;
    sys.index_to_label[i] = static_cast<StateLabel>(best);
    sys.label_to_index[best] = i;
  }
  return sys;
}

std::array<Vector, 4> perturbative_eigenstates(const ModelParams& p) {
  const double dmax = std::max(p.delta1, p.delta2);
  const double den_m = p.eps0 + p.j / 2.0;  // couples to e-
  const double den_p = p.eps0 - p.j / 2.0;  // couples to e+
  if (std::min(std::abs(den_m), std::abs(den_p)) < 10.0 * dmax)
    throw ResonantDenominator(
        "perturbative_eigenstates: eps0 within 10*max(delta) of +-J/2");

  const double dm = (p.delta1 - p.delta2) / (2.0 * std::sqrt(2.0));
  const double dp = (p.delta1 + p.delta2) / (2.0 * std::sqrt(2.0));
  const auto z = zeroth_order_states();

  auto combine = [&](int base, double cs0, double cs1, double cem,
                     double cep) {
    Vector v(4, cd(0.0, 0.0));
    const double coef[4] = {cs0, cs1, cem, cep};
    for (int l = 0; l < 4; ++l) {
      const double c = (l == base) ? 1.0 : coef[l];
      if (c == 0.0) continue;
      for (int r = 0; r < 4; ++r) v[r] += c * z[l][r];
    }
    const double n = vnorm(v);
    for (cd& x : v) x /= n;
    return v;
  };

  std::array<Vector, 4> out;
  out[0] = combine(0, 0.0, 0.0, dm / den_m, dp / den_p);          // s0
  out[1] = combine(1, 0.0, 0.0, dm / den_p, -dp / den_m);         // s1
  out[2] = combine(2, -dm / den_m, -dm / den_p, 0.0, 0.0);        // e-
  out[3] = combine(3, -dp / den_p, dp / den_m, 0.0, 0.0);         // e+
  return out;
}

}  // namespace floqsim
