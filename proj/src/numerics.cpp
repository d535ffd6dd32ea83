#include "floqsim/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "floqsim/errors.hpp"

namespace floqsim {

namespace {

double offdiag_norm(const ComplexMatrix& a) {
  const int n = a.dim();
  double s = 0.0;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). V accumulates the product of
// rotations so its columns end up as eigenvectors.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const cd w = a(p, q);
  const double aw = std::abs(w);
  if (aw == 0.0) return;
  const cd u = w / aw;                    // phase of the off-diagonal entry
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double phi = (app - aqq) / (2.0 * aw);
  const double t = (phi >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(phi) + std::sqrt(1.0 + phi * phi));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cd su = s * u;
  const cd suc = s * std::conj(u);

  const int n = a.dim();
  // A <- A * B with B(p,p)=c, B(p,q)=-s*u, B(q,p)=s*conj(u), B(q,q)=c.
  for (int r = 0; r < n; ++r) {
    const cd x = a(r, p);
    const cd y = a(r, q);
    a(r, p) = c * x + suc * y;
    a(r, q) = -su * x + c * y;
  }
  // A <- B^dag * A.
  for (int r = 0; r < n; ++r) {
    const cd x = a(p, r);
    const cd y = a(q, r);
    a(p, r) = c * x + su * y;
    a(q, r) = -suc * x + c * y;
  }
  for (int r = 0; r < n; ++r) {
    const cd x = v(r, p);
    const cd y = v(r, q);
    v(r, p) = c * x + suc * y;
    v(r, q) = -su * x + c * y;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
}

// Jacobi sweep loop on an (assumed) Hermitian matrix; returns eigenvalues
// ascending and eigenvectors as columns.
EigenDecomposition jacobi_eig(ComplexMatrix a) {
  const int n = a.dim();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(1e-300, a.frobenius_norm());
  const double tol = 1e-15 * scale;
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (offdiag_norm(a) <= tol) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > tol / (n * n)) jacobi_rotate(a, v, p, q);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a(i, i).real();
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return diag[i] < diag[j]; });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n);
  for (int i = 0; i < n; ++i) {
    out.values[i] = diag[order[i]];
    out.vectors.set_column(i, v.column(order[i]));
  }
  return out;
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& m) {
  const int n = m.dim();
  ComplexMatrix asym = m - m.adjoint();
  const double scale = std::max(1e-300, m.frobenius_norm());
  if (asym.frobenius_norm() > 1e-9 * scale)
    throw NonHermitianInput("hermitian_eig: input is not Hermitian");
  // Symmetrize so round-off asymmetry cannot leak into the iteration.
  ComplexMatrix h(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  return jacobi_eig(h);
}

UnitaryEigenDecomposition unitary_eig(const ComplexMatrix& u) {
  const int n = u.dim();
  ComplexMatrix defect = u.adjoint() * u - ComplexMatrix::identity(n);
  if (defect.frobenius_norm() > 1e-8)
    throw NonUnitaryInput("unitary_eig: input is not unitary");

  const ComplexMatrix ud = u.adjoint();
  ComplexMatrix h(n), k(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      h(r, c) = 0.5 * (u(r, c) + ud(r, c));
      k(r, c) = cd(0.0, -0.5) * (u(r, c) - ud(r, c));
    }

  EigenDecomposition eh = jacobi_eig(h);

  // Eigenvalues of H = Re(U) may collide for distinct unitary eigenvalues
  // (conjugate phase pairs). Resolve each near-degenerate cluster with the
  // commuting imaginary part K.
  int i = 0;
  while (i < n) {
    int j = i + 1;
    while (j < n && eh.values[j] - eh.values[j - 1] < 1e-6) ++j;
    const int m = j - i;
    if (m > 1) {
      ComplexMatrix kb(m);
      std::vector<Vector> cols(m);
      for (int a = 0; a < m; ++a) cols[a] = eh.vectors.column(i + a);
      std::vector<Vector> kcols(m);
      for (int a = 0; a < m; ++a) kcols[a] = matvec(k, cols[a]);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) kb(a, b) = vdot(cols[a], kcols[b]);
      EigenDecomposition ek = jacobi_eig(kb);
      for (int a = 0; a < m; ++a) {
        Vector nc(n, cd(0.0, 0.0));
        for (int b = 0; b < m; ++b) {
          const cd y = ek.vectors(b, a);
          for (int r = 0; r < n; ++r) nc[r] += y * cols[b][r];
        }
        eh.vectors.set_column(i + a, nc);
      }
    }
    i = j;
  }

  UnitaryEigenDecomposition out;
  out.vectors = eh.vectors;
  out.values.resize(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<cd> lam(n);
  for (int a = 0; a < n; ++a) {
    Vector va = eh.vectors.column(a);
    lam[a] = vdot(va, matvec(u, va));
  }
  std::stable_sort(order.begin(), order.end(), [&](int ia, int ib) {
    return std::arg(lam[ia]) < std::arg(lam[ib]);
  });
  ComplexMatrix vv(n);
  for (int a = 0; a < n; ++a) {
    out.values[a] = lam[order[a]];
    vv.set_column(a, eh.vectors.column(order[a]));
  }
  out.vectors = vv;
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
  EigenDecomposition e = hermitian_eig(m);
  const int n = m.dim();
  for (double& v : e.values) {
    if (v < -1e-9)
      throw IndefiniteInput("psd_sqrt: eigenvalue " + std::to_string(v) +
                            " below -1e-9");
    if (v < 0.0) v = 0.0;
  }
  ComplexMatrix s(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      cd acc = 0.0;
      for (int k = 0; k < n; ++k)
        acc += e.vectors(r, k) * std::sqrt(e.values[k]) *
               std::conj(e.vectors(c, k));
      s(r, c) = acc;
    }
  return s;
}

namespace {

// One-sided Jacobi on the columns of b; v accumulates right singular
// vectors. On exit the columns of b are mutually orthogonal with norms
// equal to the singular values.
void one_sided_jacobi(ComplexMatrix& b, ComplexMatrix& v) {
  const int n = b.dim();
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        cd g = 0.0;
        double app = 0.0, aqq = 0.0;
        for (int r = 0; r < n; ++r) {
          g += std::conj(b(r, p)) * b(r, q);
          app += std::norm(b(r, p));
          aqq += std::norm(b(r, q));
        }
        const double ag = std::abs(g);
        off = std::max(off, ag / std::max(1e-300, std::sqrt(app * aqq)));
        if (ag < 1e-300 || ag < 1e-16 * std::sqrt(app * aqq)) continue;
        const cd u = g / ag;
        const double phi = (aqq - app) / (2.0 * ag);
        const double t = (phi >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(phi) + std::sqrt(1.0 + phi * phi));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cd su = s * u;
        const cd suc = s * std::conj(u);
        for (int r = 0; r < n; ++r) {
          const cd x = b(r, p);
          const cd y = b(r, q);
          b(r, p) = c * x - suc * y;
          b(r, q) = su * x + c * y;
        }
        for (int r = 0; r < n; ++r) {
          const cd x = v(r, p);
          const cd y = v(r, q);
          v(r, p) = c * x - suc * y;
          v(r, q) = su * x + c * y;
        }
      }
    }
    if (off < 1e-15) break;
  }
}

}  // namespace

std::vector<Vector> nullspace(const ComplexMatrix& m, double rel_tol) {
  const int n = m.dim();
  ComplexMatrix b = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  one_sided_jacobi(b, v);
  std::vector<double> sigma(n);
  double smax = 0.0;
  for (int c = 0; c < n; ++c) {
    double s2 = 0.0;
    for (int r = 0; r < n; ++r) s2 += std::norm(b(r, c));
    sigma[c] = std::sqrt(s2);
    smax = std::max(smax, sigma[c]);
  }
  std::vector<Vector> kernel;
  if (smax == 0.0) {
    for (int c = 0; c < n; ++c) kernel.push_back(v.column(c));
    return kernel;
  }
  for (int c = 0; c < n; ++c)
    if (sigma[c] < rel_tol * smax) kernel.push_back(v.column(c));
  return kernel;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  const int n = m.dim();
  ComplexMatrix b = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  one_sided_jacobi(b, v);
  std::vector<double> sigma(n);
  for (int c = 0; c < n; ++c) {
    double s2 = 0.0;
    for (int r = 0; r < n; ++r) s2 += std::norm(b(r, c));
    sigma[c] = std::sqrt(s2);
  }
  std::sort(sigma.rbegin(), sigma.rend());
  return sigma;
}

void fft_inplace(std::vector<cd>& a, bool inverse) {
  const size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw Error("fft: size must be 2^k");
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const double sgn = inverse ? 1.0 : -1.0;
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = sgn * 2.0 * M_PI / static_cast<double>(len);
    const cd wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      cd w(1.0, 0.0);
      for (size_t j = 0; j < len / 2; ++j) {
        const cd x = a[i + j];
        const cd y = a[i + j + len / 2] * w;
        a[i + j] = x + y;
        a[i + j + len / 2] = x - y;
        w *= wl;
      }
    }
  }
  if (inverse) {
    const double s = 1.0 / static_cast<double>(n);
    for (cd& x : a) x *= s;
  }
}

Vector solve_linear(ComplexMatrix a, Vector b) {
  const int n = a.dim();
  std::vector<int> piv(n);
  std::iota(piv.begin(), piv.end(), 0);
  for (int col = 0; col < n; ++col) {
    int best = col;
    double bmag = std::abs(a(col, col));
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > bmag) {
        bmag = std::abs(a(r, col));
        best = r;
      }
    if (bmag < 1e-300) throw Error("solve_linear: singular matrix");
    if (best != col) {
      for (int c = 0; c < n; ++c) std::swap(a(col, c), a(best, c));
      std::swap(b[col], b[best]);
    }
    const cd inv = 1.0 / a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const cd f = a(r, col) * inv;
      if (f == cd(0.0, 0.0)) continue;
      a(r, col) = 0.0;
      for (int c = col + 1; c < n; ++c) a(r, c) -= f * a(col, c);
      b[r] -= f * b[col];
    }
  }
  Vector x(n);
  for (int r = n - 1; r >= 0; --r) {
    cd s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a(r, c) * x[c];
    x[r] = s / a(r, r);
  }
  return x;
}

ComplexMatrix expm(const ComplexMatrix& a) {
  // Pade(13) with scaling and squaring, Higham's coefficients.
  static const double b[] = {64764752532480000.0, 32382376266240000.0,
                             7771770303897600.0,  1187353796428800.0,
                             129060195264000.0,   10559470521600.0,
                             670442572800.0,      33522128640.0,
                             1323241920.0,        40840800.0,
                             960960.0,            16380.0,
                             182.0,               1.0};
  const int n = a.dim();
  double norm1 = 0.0;
  for (int c = 0; c < n; ++c) {
    double s = 0.0;
    for (int r = 0; r < n; ++r) s += std::abs(a(r, c));
    norm1 = std::max(norm1, s);
  }
  int squarings = 0;
  const double theta13 = 5.371920351148152;
  if (norm1 > theta13)
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
  ComplexMatrix as = a;
  as *= cd(std::ldexp(1.0, -squarings), 0.0);

  const ComplexMatrix a2 = as * as;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a2 * a4;
  const ComplexMatrix id = ComplexMatrix::identity(n);

  ComplexMatrix w1 = cd(b[13], 0) * a6 + cd(b[11], 0) * a4 + cd(b[9], 0) * a2;
  ComplexMatrix w2 = cd(b[7], 0) * a6 + cd(b[5], 0) * a4 + cd(b[3], 0) * a2 +
                     cd(b[1], 0) * id;
  ComplexMatrix u = as * (a6 * w1 + w2);
  ComplexMatrix z1 = cd(b[12], 0) * a6 + cd(b[10], 0) * a4 + cd(b[8], 0) * a2;
  ComplexMatrix v = a6 * z1 + cd(b[6], 0) * a6 + cd(b[4], 0) * a4 +
                    cd(b[2], 0) * a2 + cd(b[0], 0) * id;

  ComplexMatrix p = v + u;   // numerator
  ComplexMatrix q = v - u;   // denominator
  // Solve q * r = p column by column.
  ComplexMatrix r(n);
  for (int c = 0; c < n; ++c) {
    Vector col = solve_linear(q, p.column(c));
    r.set_column(c, col);
  }
  for (int i = 0; i < squarings; ++i) r = r * r;
  return r;
}

}  // namespace floqsim
