#include "floqsim/bath.hpp"

#include <algorithm>
#include <cmath>

#include "floqsim/errors.hpp"

namespace floqsim {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
}

ComplexMatrix BathParams::coupling_op() const {
  return build_coupling_op(gamma1, xi);
}

double spectral_density(double w, const BathParams& b) {
  return b.kappa * w * std::exp(-std::abs(w) / b.cutoff);
}

double thermal_weight(double w, const BathParams& b) {
  if (w == 0.0) return b.kappa * b.temperature;
  // J(w)/expm1(w/T): smooth through w = 0, correct on both branches.
  const double denom = std::expm1(w / b.temperature);
  if (std::isinf(denom)) return 0.0;  // deep absorption branch underflows
  return spectral_density(w, b) / denom;
}

double log_thermal_weight(double w, const BathParams& b) {
  if (w == 0.0) return std::log(b.kappa * b.temperature);
  const double aw = std::abs(w);
  const double log_j = std::log(b.kappa * aw) - aw / b.cutoff;
  const double x = aw / b.temperature;
  // log|1/(e^{w/T}-1)|: for w>0 it is -x - log1p(-e^{-x}); the emission
  // branch w<0 gains +x relative to that (detailed balance).
  double log_n = -x - std::log1p(-std::exp(-x));
  if (w < 0.0) log_n += x;
  return log_j + log_n;
}

TransitionTable transition_elements(const FloquetSolution& sol,
                                    const ComplexMatrix& coupling) {
  ComplexMatrix asym = coupling - coupling.adjoint();
  if (asym.frobenius_norm() >
      1e-9 * std::max(1.0, coupling.frobenius_norm()))
    throw NonHermitianInput("transition_elements: coupling not Hermitian");

  const int kmax = sol.kmax;
  TransitionTable t;
  t.krange = 2 * kmax;

  // Precompute A |u_b(L)> for every Fourier component.
  std::array<std::vector<Vector>, 4> av;
  for (int bidx = 0; bidx < 4; ++bidx) {
    av[bidx].resize(2 * kmax + 1);
    for (int l = -kmax; l <= kmax; ++l)
      av[bidx][l + kmax] = matvec(coupling, sol.fourier[bidx][l + kmax]);
  }

  for (int a = 0; a < 4; ++a)
    for (int bidx = 0; bidx < 4; ++bidx) {
      t.elems[a][bidx].assign(2 * t.krange + 1, cd(0.0, 0.0));
      for (int k = -t.krange; k <= t.krange; ++k) {
        cd acc = 0.0;
        for (int l = -kmax; l <= kmax; ++l) {
          const int lk = l + k;
          if (lk < -kmax || lk > kmax) continue;
          acc += vdot(sol.fourier[a][l + kmax], av[bidx][lk + kmax]);
        }
        t.elems[a][bidx][k + t.krange] = acc;
      }
    }
  return t;
}

ThermalTable thermal_table(const FloquetSolution& sol, const BathParams& b,
                           int krange) {
  ThermalTable t;
  t.krange = krange;
  for (int a = 0; a < 4; ++a)
    for (int bb = 0; bb < 4; ++bb) {
      t.g[a][bb].resize(2 * krange + 1);
      const double gap = sol.quasienergies[a] - sol.quasienergies[bb];
      for (int k = -krange; k <= krange; ++k)
        t.g[a][bb][k + krange] =
            thermal_weight(gap - k * sol.omega(), b);
    }
  return t;
}

RateTensor rate_tensor(const ThermalTable& g, const TransitionTable& a) {
  const int krange = std::min(g.krange, a.krange);
  RateTensor r;
  for (int al = 0; al < 4; ++al)
    for (int be = 0; be < 4; ++be)
      for (int alp = 0; alp < 4; ++alp)
        for (int bep = 0; bep < 4; ++bep) {
          cd acc = 0.0;
          for (int k = -krange; k <= krange; ++k)
            acc += g.at(al, alp, k) * a.at(al, alp, k) *
                   std::conj(a.at(be, bep, k));
          r.at(al, be, alp, bep) = acc;
        }
  return r;
}

GeneratorQ0 generator_q0(const RateTensor& r, const FloquetSolution& sol) {
  GeneratorQ0 gen;
  gen.quasienergies = sol.quasienergies;
  gen.omega = sol.omega();

  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int ap = 0; ap < 4; ++ap)
        for (int bp = 0; bp < 4; ++bp) {
          cd val = -r.at(a, b, ap, bp) - std::conj(r.at(b, a, bp, ap));
          if (b == bp) {
            for (int eta = 0; eta < 4; ++eta)
              val += r.at(eta, eta, ap, a);
          }
          if (a == ap) {
            for (int eta = 0; eta < 4; ++eta)
              val += std::conj(r.at(eta, eta, bp, b));
          }
          gen.dissipator(a * 4 + b, ap * 4 + bp) = val;
        }

  // Trace preservation: sum_a L_{aa,a'b'} must vanish identically.
  double scale = std::max(1.0, gen.dissipator.max_abs());
  for (int ap = 0; ap < 4; ++ap)
    for (int bp = 0; bp < 4; ++bp) {
      cd s = 0.0;
      for (int a = 0; a < 4; ++a)
        s += gen.dissipator(a * 4 + a, ap * 4 + bp);
      if (std::abs(s) > 1e-10 * scale)
        throw TraceLeak("generator_q0: trace leak " +
                        std::to_string(std::abs(s)));
    }
  return gen;
}

ComplexMatrix GeneratorQ0::full_matrix() const {
  ComplexMatrix g(16);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) g(i, j) = -dissipator(i, j);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      g(a * 4 + b, a * 4 + b) +=
          cd(0.0, -(quasienergies[a] - quasienergies[b]));
  return g;
}

GeneratorQ0 make_secular(const GeneratorQ0& gen) {
  GeneratorQ0 sec = gen;
  sec.secular = true;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int ap = 0; ap < 4; ++ap)
        for (int bp = 0; bp < 4; ++bp) {
          const double gap_row =
              gen.quasienergies[a] - gen.quasienergies[b];
          const double gap_col =
              gen.quasienergies[ap] - gen.quasienergies[bp];
          if (std::abs(gap_row - gap_col) > 1e-10)
            sec.dissipator(a * 4 + b, ap * 4 + bp) = 0.0;
        }
  return sec;
}

RateTable floquet_rates(const FloquetSolution& sol, const TransitionTable& a,
                        const BathParams& b) {
  RateTable table;
  table.basis = RateBasis::floquet;
  table.nrange = a.krange;

  ThermalTable g = thermal_table(sol, b, a.krange);
  // index by H0 eigenstate when labels are available
  std::array<int, 4> alpha_of;
  for (int k = 0; k < 4; ++k)
    alpha_of[k] = sol.labeled ? sol.alpha_of_state(k) : k;

  for (int f = 0; f < 4; ++f)
    for (int i = 0; i < 4; ++i) {
      const int al = alpha_of[f];
      const int be = alpha_of[i];
      table.per_photon[f][i].assign(2 * a.krange + 1, 0.0);
      double total = 0.0;
      for (int k = -a.krange; k <= a.krange; ++k) {
        const double val =
            kTwoPi * g.at(al, be, k) * std::norm(a.at(al, be, k));
        // photon index n = -K: the weight is g(quasigap + n*omega).
        table.per_photon[f][i][-k + a.krange] = val;
        total += val;
      }
      table.rates[f][i] = total;
    }
  return table;
}

RateTable fgr_rates(const EigenSystem& eig, const ComplexMatrix& coupling,
                    const BathParams& b) {
  RateTable table;
  table.basis = RateBasis::eigenstate;
  table.nrange = 0;
  for (int f = 0; f < 4; ++f)
    for (int i = 0; i < 4; ++i) {
      const cd elem =
          vdot(eig.states.column(f), matvec(coupling, eig.states.column(i)));
      const double rate = kTwoPi *
                          thermal_weight(eig.energies[f] - eig.energies[i], b) *
                          std::norm(elem);
      table.rates[f][i] = rate;
      table.per_photon[f][i] = {rate};
    }
  return table;
}

RateTable fgr_rates_perturbative(const ModelParams& p, const BathParams& b) {
  const double dmax = std::max(p.delta1, p.delta2);
  const double den_m = p.eps0 + p.j / 2.0;
  const double den_p = p.eps0 - p.j / 2.0;
  if (std::min(std::abs(den_m), std::abs(den_p)) < 10.0 * dmax)
    throw ResonantDenominator(
        "fgr_rates_perturbative: eps0 within 10*max(delta) of +-J/2");

  const double dm = (p.delta1 - p.delta2) / (2.0 * std::sqrt(2.0));
  const double dp = (p.delta1 + p.delta2) / (2.0 * std::sqrt(2.0));
  const double g1 = b.gamma1;
  const double xi = b.xi;

  // Zeroth-order energies and the induced index order.
  struct Level { double e; int label; };  // label: 0=s0 1=s1 2=e- 3=e+
  std::array<Level, 4> lv = {Level{-p.eps0, 0}, Level{p.eps0, 1},
                             Level{p.j / 2.0, 2}, Level{-p.j / 2.0, 3}};
  std::sort(lv.begin(), lv.end(),
            [](const Level& a, const Level& c) { return a.e < c.e; });
  std::array<int, 4> index_of_label{};
  std::array<double, 4> energy_at{};
  for (int i = 0; i < 4; ++i) {
    index_of_label[lv[i].label] = i;
    energy_at[i] = lv[i].e;
  }

  // Leading matrix-element brackets between labeled states.
  struct Pair { int la, lb; double bracket; };  // rate for lb -> la decay
  const double cross = 2.0 * (1.0 + xi) * dm * dp /
                       (p.eps0 * p.eps0 - p.j * p.j / 4.0);
  const std::array<Pair, 5> pairs = {
      Pair{2, 3, (1.0 - xi) + cross},                                // e-,e+
      Pair{0, 2, (1.0 - xi) * dp / den_p + (1.0 + xi) * dm / den_m}, // s0,e-
      Pair{0, 3, (1.0 + xi) * dp / den_p + (1.0 - xi) * dm / den_m}, // s0,e+
      Pair{2, 1, (1.0 - xi) * dp / den_m + (1.0 + xi) * dm / den_p}, // e-,s1
      Pair{3, 1, (1.0 + xi) * dp / den_m + (1.0 - xi) * dm / den_p}, // e+,s1
  };

  RateTable table;
  table.basis = RateBasis::eigenstate;
  table.nrange = 0;
  for (int f = 0; f < 4; ++f)
    for (int i = 0; i < 4; ++i) table.per_photon[f][i] = {0.0};

  for (const Pair& pr : pairs) {
    const int ia = index_of_label[pr.la];
    const int ib = index_of_label[pr.lb];
    const double m2 = g1 * g1 * pr.bracket * pr.bracket;
    const double down = kTwoPi *
        thermal_weight(energy_at[std::min(ia, ib)] -
                           energy_at[std::max(ia, ib)], b) * m2;
    const double up = kTwoPi *
        thermal_weight(energy_at[std::max(ia, ib)] -
                           energy_at[std::min(ia, ib)], b) * m2;
    table.rates[std::min(ia, ib)][std::max(ia, ib)] = down;
    table.rates[std::max(ia, ib)][std::min(ia, ib)] = up;
    table.per_photon[std::min(ia, ib)][std::max(ia, ib)] = {down};
    table.per_photon[std::max(ia, ib)][std::min(ia, ib)] = {up};
  }
  return table;
}

RateTable effective_rates(const RateTable& floq, const FloquetSolution& sol,
                          const EigenSystem& eig) {
  // Overlap weights between eigenstates and the labeled Floquet modes.
  std::array<std::array<double, 4>, 4> w{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const int alpha = sol.labeled ? sol.alpha_of_state(k) : k;
      w[i][k] = std::norm(
          vdot(eig.states.column(i), sol.modes_t0.column(alpha)));
    }

  RateTable table;
  table.basis = RateBasis::effective;
  table.nrange = floq.nrange;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      table.per_photon[i][j].assign(2 * floq.nrange + 1, 0.0);
      double total = 0.0;
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          const double weight = w[i][k] * w[j][l];
          if (weight == 0.0) continue;
          total += weight * floq.rates[k][l];
          for (int n = -floq.nrange; n <= floq.nrange; ++n)
            table.per_photon[i][j][n + floq.nrange] +=
                weight * floq.photon(k, l, n);
        }
      table.rates[i][j] = total;
    }
  return table;
}

double crossover_xi(const std::function<RateTable(double)>& table_at_xi,
                    int f1, int i1, int f2, int i2, double lo, double hi,
                    int grid) {
  auto diff = [&](double xi) {
    const RateTable t = table_at_xi(xi);
    return t.rates[f1][i1] - t.rates[f2][i2];
  };
  double xprev = lo;
  double dprev = diff(lo);
  for (int n = 1; n < grid; ++n) {
    const double x = lo + (hi - lo) * n / (grid - 1);
    const double d = diff(x);
    if (dprev == 0.0) return xprev;
    if ((dprev > 0.0) != (d > 0.0)) {
      double a = xprev, b = x, da = dprev;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (a + b);
        const double dmid = diff(mid);
        if ((dmid > 0.0) == (da > 0.0)) {
          a = mid;
          da = dmid;
        } else {
          b = mid;
        }
      }
      return 0.5 * (a + b);
    }
    xprev = x;
    dprev = d;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace floqsim
