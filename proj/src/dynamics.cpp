#include "floqsim/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "floqsim/errors.hpp"
#include "floqsim/numerics.hpp"

namespace floqsim {

namespace {

Vector vec_of(const ComplexMatrix& m) {
  Vector v(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) v[a * 4 + b] = m(a, b);
  return v;
}

ComplexMatrix mat_of(const Vector& v) {
  ComplexMatrix m(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) m(a, b) = v[a * 4 + b];
  return m;
}

ComplexMatrix hermitize(const ComplexMatrix& m) {
  ComplexMatrix h(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  return h;
}

double min_eigenvalue(const ComplexMatrix& m) {
  return hermitian_eig(hermitize(m)).values.front();
}

// rho_comp = F rho F^dag for a frame with orthonormal columns.
ComplexMatrix rotate_out(const ComplexMatrix& frame,
                         const ComplexMatrix& rho) {
  return frame * rho * frame.adjoint();
}

// rho_frame = F^dag rho F.
ComplexMatrix rotate_in(const ComplexMatrix& frame,
                        const ComplexMatrix& rho) {
  return frame.adjoint() * rho * frame;
}

}  // namespace

DensityMatrix initial_state(const EigenSystem& eig,
                            const FloquetSolution& sol) {
  const Vector psi = eig.states.column(0);
  DensityMatrix rho;
  rho.basis = Basis::floquet;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const cd ca = vdot(sol.modes_t0.column(a), psi);
      const cd cb = vdot(sol.modes_t0.column(b), psi);
      rho.m(a, b) = ca * std::conj(cb);
    }
  return rho;
}

std::array<double, 4> populations_in_eigenbasis(const DensityMatrix& rho_floq,
                                                const FloquetSolution& sol,
                                                const EigenSystem& eig) {
  const ComplexMatrix comp = rotate_out(sol.modes_t0, rho_floq.m);
  std::array<double, 4> p{};
  for (int k = 0; k < 4; ++k) {
    const Vector v = eig.states.column(k);
    p[k] = vdot(v, matvec(comp, v)).real();
  }
  return p;
}

EvolutionRecord evolve_sampled(const GeneratorQ0& gen,
                               const FloquetSolution& sol,
                               const EigenSystem& eig,
                               const DensityMatrix& rho0,
                               const std::vector<long>& record_periods) {
  const double tau = sol.period();
  const ComplexMatrix g = gen.full_matrix();
  const ComplexMatrix step = expm(cd(tau, 0.0) * g);

  EvolutionRecord rec;
  Vector v = vec_of(rho0.m);
  long m = 0;
  auto record = [&](long period) {
    DensityMatrix s;
    s.basis = Basis::floquet;
    s.time = static_cast<double>(period);
    s.m = hermitize(mat_of(v));
    if (min_eigenvalue(s.m) < -1e-6)
      throw NonphysicalState("evolve: state eigenvalue below -1e-6 at t = " +
                             std::to_string(period) + " periods");
    DensityMatrix c;
    c.basis = Basis::computational;
    c.time = s.time;
    c.m = rotate_out(sol.modes_t0, s.m);
    rec.times.push_back(s.time);
    rec.populations.push_back(populations_in_eigenbasis(s, sol, eig));
    rec.states.push_back(std::move(s));
    rec.states_comp.push_back(std::move(c));
  };

  for (long target : record_periods) {
    while (m < target) {
      // jump in power-of-two chunks using repeated squaring of the
      // one-period map when the gap is large
      long gap = target - m;
      ComplexMatrix jump = step;
      long chunk = 1;
      while (2 * chunk <= gap) {
        jump = jump * jump;
        chunk *= 2;
      }
      v = matvec(jump, v);
      m += chunk;
    }
    record(target);
  }
  return rec;
}

EvolutionRecord evolve(const GeneratorQ0& gen, const FloquetSolution& sol,
                       const EigenSystem& eig, const DensityMatrix& rho0,
                       long horizon, long stride) {
  std::vector<long> times;
  for (long m = 0; m <= horizon; m += std::max<long>(1, stride))
    times.push_back(m);
  return evolve_sampled(gen, sol, eig, rho0, times);
}

std::vector<DensityMatrix> steady_state_candidates(const GeneratorQ0& gen,
                                                   const FloquetSolution& sol,
                                                   double null_tol) {
  (void)sol;
  const ComplexMatrix g = gen.full_matrix();
  std::vector<DensityMatrix> out;
  for (const Vector& v : nullspace(g, null_tol)) {
    DensityMatrix rho;
    rho.basis = Basis::floquet;
    rho.m = hermitize(mat_of(v));
    const cd tr = rho.m.trace();
    if (std::abs(tr) > 1e-9) {
      rho.m *= cd(1.0, 0.0) / tr;
      rho.m = hermitize(rho.m);
    }
    out.push_back(std::move(rho));
  }
  return out;
}

DensityMatrix steady_state(const GeneratorQ0& gen, const FloquetSolution& sol,
                           double null_tol) {
  std::vector<DensityMatrix> kernel =
      steady_state_candidates(gen, sol, null_tol);
  if (kernel.empty())
    throw DegenerateSteadyState("steady_state: no kernel found", 0);
  if (kernel.size() > 1)
    throw DegenerateSteadyState(
        "steady_state: kernel dimension " + std::to_string(kernel.size()),
        static_cast<int>(kernel.size()));
  if (std::abs(kernel.front().m.trace()) < 1e-9)
    throw DegenerateSteadyState("steady_state: traceless kernel vector", 1);
  return kernel.front();
}

DensityMatrix period_average(const DensityMatrix& rho_floq,
                             const FloquetSolution& sol) {
  ComplexMatrix acc(4);
  for (int j = 0; j < sol.nt; ++j) {
    acc += rotate_out(sol.frame_at_sample(j), rho_floq.m);
  }
  acc *= cd(1.0 / sol.nt, 0.0);
  DensityMatrix out;
  out.basis = Basis::computational;
  out.time = rho_floq.time;
  out.m = hermitize(acc);
  return out;
}

DensityMatrix to_basis(const DensityMatrix& rho, Basis target,
                       const FloquetSolution& sol, const EigenSystem& eig,
                       double t) {
  auto frame_floquet = [&](double tp) {
    if (tp == 0.0) return sol.modes_t0;
    ComplexMatrix f(4);
    for (int a = 0; a < 4; ++a)
      f.set_column(a, sol.mode_at(a, tp * sol.period()));
    return f;
  };

  ComplexMatrix comp;
  switch (rho.basis) {
    case Basis::computational: comp = rho.m; break;
    case Basis::eigenstate: comp = rotate_out(eig.states, rho.m); break;
    case Basis::floquet: comp = rotate_out(frame_floquet(rho.time), rho.m);
      break;
    default:
      throw UnknownBasis("to_basis: invalid source basis");
  }

  DensityMatrix out;
  out.time = t;
  out.basis = target;
  switch (target) {
    case Basis::computational: out.m = comp; break;
    case Basis::eigenstate: out.m = rotate_in(eig.states, comp); break;
    case Basis::floquet: out.m = rotate_in(frame_floquet(t), comp); break;
    default:
      throw UnknownBasis("to_basis: invalid target basis");
  }
  return out;
}

}  // namespace floqsim
