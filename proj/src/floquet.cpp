#include "floqsim/floquet.hpp"

#include <algorithm>
#include <cmath>

#include "floqsim/errors.hpp"
#include "floqsim/numerics.hpp"

namespace floqsim {

namespace {

struct DrivenHamiltonian {
  ComplexMatrix h0;
  double amplitude;
  double omega;

  // dU/dt = -i H(t) U with H(t) = H0 + cos(omega t) diag(-A, 0, 0, A).
  ComplexMatrix rhs(double t, const ComplexMatrix& u) const {
    const double x = amplitude * std::cos(omega * t);
    ComplexMatrix m(4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        cd acc = 0.0;
        for (int k = 0; k < 4; ++k) acc += h0(r, k) * u(k, c);
        m(r, c) = acc;
      }
    for (int c = 0; c < 4; ++c) {
      m(0, c) += -x * u(0, c);
      m(3, c) += x * u(3, c);
    }
    return cd(0.0, -1.0) * m;
  }
};

// Dormand-Prince 5(4) step; returns the 5th-order result and the embedded
// error estimate.
void dopri5_step(const DrivenHamiltonian& ham, double t, double h,
                 const ComplexMatrix& u, ComplexMatrix& out, double& err) {
  static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5,
                      c5 = 8.0 / 9;
  static const double a21 = 1.0 / 5;
  static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                      a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                      a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                      a65 = -5103.0 / 18656;
  static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                      b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static const double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695,
                      e4 = 393.0 / 640, e5 = -92097.0 / 339200,
                      e6 = 187.0 / 2100, e7 = 1.0 / 40;

  auto axpy = [](ComplexMatrix acc, double f, const ComplexMatrix& m) {
    acc += cd(f, 0.0) * m;
    return acc;
  };

  const ComplexMatrix k1 = ham.rhs(t, u);
  const ComplexMatrix k2 =
      ham.rhs(t + c2 * h, axpy(u, h * a21, k1));
  const ComplexMatrix k3 =
      ham.rhs(t + c3 * h, axpy(axpy(u, h * a31, k1), h * a32, k2));
  const ComplexMatrix k4 = ham.rhs(
      t + c4 * h,
      axpy(axpy(axpy(u, h * a41, k1), h * a42, k2), h * a43, k3));
  const ComplexMatrix k5 = ham.rhs(
      t + c5 * h, axpy(axpy(axpy(axpy(u, h * a51, k1), h * a52, k2),
                            h * a53, k3),
                       h * a54, k4));
  const ComplexMatrix k6 = ham.rhs(
      t + h, axpy(axpy(axpy(axpy(axpy(u, h * a61, k1), h * a62, k2),
                            h * a63, k3),
                       h * a64, k4),
                  h * a65, k5));

  out = axpy(axpy(axpy(axpy(axpy(u, h * b1, k1), h * b3, k3), h * b4, k4),
                  h * b5, k5),
             h * b6, k6);
  const ComplexMatrix k7 = ham.rhs(t + h, out);

  ComplexMatrix low = axpy(
      axpy(axpy(axpy(axpy(axpy(u, h * e1, k1), h * e3, k3), h * e4, k4),
                h * e5, k5),
           h * e6, k6),
      h * e7, k7);
  err = (out - low).max_abs() / std::max(1.0, out.max_abs());
}

// Integrates from t0 to t1 in place.
void integrate_to(const DrivenHamiltonian& ham, ComplexMatrix& u, double t0,
                  double t1, double tol, double& h) {
  const double span = t1 - t0;
  if (span <= 0.0) return;
  const double tau = 2.0 * M_PI / ham.omega;
  const double hmin = 1e-14 * tau;
  double t = t0;
  while (t < t1) {
    double hstep = std::min(h, t1 - t);
    ComplexMatrix unew;
    double err = 0.0;
    dopri5_step(ham, t, hstep, u, unew, err);
    // error per unit step keeps the accumulated defect near tol; the
    // floor covers rounding noise on sliver steps at segment boundaries
    const double target = tol * hstep / tau + 4e-16;
    if (err <= target) {
      t += hstep;
      u = unew;
      const double grow =
          err > 0.0 ? 0.9 * std::pow(target / err, 0.2) : 5.0;
      h = hstep * std::clamp(grow, 0.2, 5.0);
    } else {
      h = hstep * std::clamp(0.9 * std::pow(target / err, 0.2), 0.2, 1.0);
      if (h < hmin)
        throw StepSizeUnderflow("propagate: step size underflow");
    }
  }
}

int next_pow2(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

ComplexMatrix propagate_period(const ModelParams& p, const DriveParams& d,
                               double rel_tol) {
  DrivenHamiltonian ham{build_h0(p), d.amplitude, d.omega};
  ComplexMatrix u = ComplexMatrix::identity(4);
  double h = d.period() / 128.0;
  integrate_to(ham, u, 0.0, d.period(), rel_tol, h);
  return u;
}

std::vector<ComplexMatrix> propagate_samples(const ModelParams& p,
                                             const DriveParams& d, int nt,
                                             double rel_tol) {
  DrivenHamiltonian ham{build_h0(p), d.amplitude, d.omega};
  const double tau = d.period();
  std::vector<ComplexMatrix> out;
  out.reserve(nt + 1);
  ComplexMatrix u = ComplexMatrix::identity(4);
  out.push_back(u);
  double h = tau / 128.0;
  for (int j = 1; j <= nt; ++j) {
    integrate_to(ham, u, (j - 1) * tau / nt, j * tau / nt, rel_tol, h);
    out.push_back(u);
  }
  return out;
}

FloquetSolution solve_floquet(const ModelParams& p, const DriveParams& d,
                              int kmax, int nt, double rel_tol) {
  if (kmax < 1) throw Error("solve_floquet: kmax must be >= 1");
  if (nt < 2 * kmax + 2)
    throw Error("solve_floquet: nt must be >= 2*kmax + 2");

  FloquetSolution sol;
  sol.model = p;
  sol.drive = d;
  sol.kmax = kmax;
  sol.nt = nt;

  const double tau = d.period();
  const double omega = d.omega;
  const std::vector<ComplexMatrix> u_t = propagate_samples(p, d, nt, rel_tol);
  const ComplexMatrix& u_tau = u_t.back();

  UnitaryEigenDecomposition ue = unitary_eig(u_tau);
  // Eigenphase exp(-i gamma tau): arg in (-pi, pi] maps the quasienergy
  // exactly onto [-omega/2, omega/2).
  std::array<std::pair<double, int>, 4> order;
  for (int a = 0; a < 4; ++a)
    order[a] = {-std::arg(ue.values[a]) * omega / (2.0 * M_PI), a};
  std::sort(order.begin(), order.end());

  sol.modes_t0 = ComplexMatrix(4);
  for (int a = 0; a < 4; ++a) {
    sol.quasienergies[a] = order[a].first;
    sol.modes_t0.set_column(a, ue.vectors.column(order[a].second));
  }

  double min_gap = omega;
  for (int a = 0; a < 4; ++a) {
    const double next = (a < 3) ? sol.quasienergies[a + 1]
                                : sol.quasienergies[0] + omega;
    min_gap = std::min(min_gap, next - sol.quasienergies[a]);
  }
  sol.min_quasienergy_gap = min_gap;
  sol.degenerate_quasienergies = min_gap < 1e-10;

  // Mode samples u_alpha(t_j) = exp(+i gamma_alpha t_j) U(t_j) u_alpha(0).
  for (int a = 0; a < 4; ++a) {
    sol.samples[a].resize(nt);
    const Vector v0 = sol.modes_t0.column(a);
    for (int j = 0; j < nt; ++j) {
      const double tj = j * tau / nt;
      Vector w = matvec(u_t[j], v0);
      const cd phase = std::exp(cd(0.0, sol.quasienergies[a] * tj));
      for (cd& x : w) x *= phase;
      sol.samples[a][j] = w;
    }
  }

  // Fourier components u(K) = (1/nt) sum_j u(t_j) exp(+i K omega t_j).
  const bool pow2 = (nt & (nt - 1)) == 0;
  for (int a = 0; a < 4; ++a) {
    sol.fourier[a].assign(2 * kmax + 1, Vector(4, cd(0.0, 0.0)));
    for (int c = 0; c < 4; ++c) {
      std::vector<cd> series(nt);
      for (int j = 0; j < nt; ++j) series[j] = sol.samples[a][j][c];
      if (pow2) {
        fft_inplace(series, true);
        for (int k = -kmax; k <= kmax; ++k)
          sol.fourier[a][k + kmax][c] = series[((k % nt) + nt) % nt];
      } else {
        for (int k = -kmax; k <= kmax; ++k) {
          cd acc = 0.0;
          for (int j = 0; j < nt; ++j)
            acc += series[j] *
                   std::exp(cd(0.0, 2.0 * M_PI * k * j / nt));
          sol.fourier[a][k + kmax][c] = acc / static_cast<double>(nt);
        }
      }
    }
  }

  // Truncation diagnostics.
  double comp = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      cd s = 0.0;
      for (int k = -kmax; k <= kmax; ++k)
        s += vdot(sol.fourier[a][k + kmax], sol.fourier[b][k + kmax]);
      comp = std::max(comp, std::abs(s - (a == b ? 1.0 : 0.0)));
    }
  sol.completeness_defect = comp;

  double tail = 0.0;
  for (int a = 0; a < 4; ++a)
    tail = std::max({tail, vnorm2(sol.fourier[a][0]),
                     vnorm2(sol.fourier[a][2 * kmax])});
  sol.tail_weight = tail;

  double rec = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int j = 0; j < nt; j += std::max(1, nt / 16)) {
      const Vector r = sol.mode_at(a, j * tau / nt);
      Vector diff = sol.samples[a][j];
      for (int c = 0; c < 4; ++c) diff[c] -= r[c];
      rec = std::max(rec, vnorm(diff));
    }
  sol.reconstruction_error = rec;

  return sol;
}

FloquetSolution solve_floquet_auto(const ModelParams& p,
                                   const DriveParams& d, double rel_tol,
                                   int kmax0) {
  int kmax = kmax0 > 0
                 ? kmax0
                 : 2 * static_cast<int>(std::ceil(d.amplitude / d.omega)) + 8;
  for (;;) {
    FloquetSolution sol =
        solve_floquet(p, d, kmax, next_pow2(4 * kmax), rel_tol);
    const bool converged =
        sol.tail_weight <= 1e-10 && sol.reconstruction_error <= 1e-8;
    if (converged || kmax >= 512) return sol;
    kmax *= 2;
  }
}

Vector FloquetSolution::mode_at(int alpha, double t) const {
  Vector v(4, cd(0.0, 0.0));
  for (int k = -kmax; k <= kmax; ++k) {
    const cd ph = std::exp(cd(0.0, -k * omega() * t));
    const Vector& f = fourier[alpha][k + kmax];
    for (int c = 0; c < 4; ++c) v[c] += f[c] * ph;
  }
  return v;
}

ComplexMatrix FloquetSolution::frame_at_sample(int j) const {
  ComplexMatrix f(4);
  for (int a = 0; a < 4; ++a) f.set_column(a, samples[a][j]);
  return f;
}

namespace {

// Match the tracked states to the columns of `frame` by maximal overlap,
// assigning greedily from the globally largest overlap down so the result
// is always a bijection. min_margin records the worst separation between
// a chosen overlap and its best competing alternative.
struct MatchResult {
  std::array<int, 4> pick{};  // tracked index -> frame column
  double min_margin = 1.0;
};

MatchResult match_by_overlap(const std::array<Vector, 4>& tracked,
                             const ComplexMatrix& frame) {
  double ov[4][4];
  for (int k = 0; k < 4; ++k)
    for (int a = 0; a < 4; ++a)
      ov[k][a] = std::abs(vdot(frame.column(a), tracked[k]));

  MatchResult res;
  std::array<bool, 4> row_used{}, col_used{};
  for (int n = 0; n < 4; ++n) {
    double best = -1.0;
    int bk = -1, ba = -1;
    for (int k = 0; k < 4; ++k) {
      if (row_used[k]) continue;
      for (int a = 0; a < 4; ++a) {
        if (col_used[a]) continue;
        if (ov[k][a] > best) {
          best = ov[k][a];
          bk = k;
          ba = a;
        }
      }
    }
    double second = -1.0;
    for (int a = 0; a < 4; ++a)
      if (!col_used[a] && a != ba) second = std::max(second, ov[bk][a]);
    for (int k = 0; k < 4; ++k)
      if (!row_used[k] && k != bk) second = std::max(second, ov[k][ba]);
    if (second >= 0.0)
      res.min_margin = std::min(res.min_margin, best - second);
    res.pick[bk] = ba;
    row_used[bk] = true;
    col_used[ba] = true;
  }
  return res;
}

}  // namespace

LabelResult label_floquet_states_best_effort(const FloquetSolution& sol,
                                             const EigenSystem& eig,
                                             int steps, double ramp_tol) {
  LabelResult out;

  // tracked[k] follows the Floquet state that started as H0 eigenstate k.
  std::array<Vector, 4> tracked;
  for (int k = 0; k < 4; ++k) tracked[k] = eig.states.column(k);

  const int ramp_steps = sol.drive.amplitude == 0.0 ? 0 : steps;
  for (int m = 1; m <= ramp_steps; ++m) {
    DriveParams dm = sol.drive;
    dm.amplitude = sol.drive.amplitude * m / ramp_steps;
    const ComplexMatrix u_tau = propagate_period(sol.model, dm, ramp_tol);
    const UnitaryEigenDecomposition ue = unitary_eig(u_tau);
    const MatchResult res = match_by_overlap(tracked, ue.vectors);
    out.min_margin = std::min(out.min_margin, res.min_margin);
    if (res.min_margin < 0.05) out.ambiguous = true;
    for (int k = 0; k < 4; ++k) tracked[k] = ue.vectors.column(res.pick[k]);
  }

  // Identify the tracked vectors among the solution's own modes at t=0.
  const MatchResult fin = match_by_overlap(tracked, sol.modes_t0);
  out.min_margin = std::min(out.min_margin, fin.min_margin);
  if (fin.min_margin < 0.05) out.ambiguous = true;
  for (int k = 0; k < 4; ++k) out.perm[fin.pick[k]] = k;
  return out;
}

std::array<int, 4> label_floquet_states(const FloquetSolution& sol,
                                        const EigenSystem& eig, int steps,
                                        double ramp_tol) {
  const LabelResult res =
      label_floquet_states_best_effort(sol, eig, steps, ramp_tol);
  if (res.ambiguous)
    throw AmbiguousTracking(
        "label_floquet_states: overlap margin " +
        std::to_string(res.min_margin) + " below 0.05 during ramp");
  return res.perm;
}

void apply_labels(FloquetSolution& sol, const LabelResult& result) {
  std::array<bool, 4> seen{};
  for (int a = 0; a < 4; ++a) {
    if (result.perm[a] < 0 || result.perm[a] > 3 || seen[result.perm[a]])
      throw AmbiguousTracking("apply_labels: labels are not a permutation");
    seen[result.perm[a]] = true;
  }
  sol.labels = result.perm;
  sol.labeled = true;
  sol.ambiguous_labels = result.ambiguous;
  sol.label_margin = result.min_margin;
}

}  // namespace floqsim
