#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "floqsim/errors.hpp"
#include "floqsim/model.hpp"
#include "floqsim/numerics.hpp"
#include "support/oracles.hpp"

using namespace floqsim;

namespace {

ComplexMatrix reconstruct(const EigenDecomposition& e) {
  const int n = e.vectors.dim();
  ComplexMatrix m(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      cd acc = 0.0;
      for (int k = 0; k < n; ++k)
        acc += e.vectors(r, k) * e.values[k] * std::conj(e.vectors(c, k));
      m(r, c) = acc;
    }
  return m;
}

double orthonormality_defect(const ComplexMatrix& v) {
  return (v.adjoint() * v - ComplexMatrix::identity(v.dim()))
      .frobenius_norm();
}

}  // namespace

TEST_CASE("hermitian_eig identity and diagonal") {
  ComplexMatrix id = ComplexMatrix::identity(4);
  EigenDecomposition e = hermitian_eig(id);
  for (double v : e.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));

  ComplexMatrix d(4);
  const double vals[4] = {-3.7, -1.25, 1.25, 3.7};
  for (int i = 0; i < 4; ++i) d(i, i) = vals[i];
  e = hermitian_eig(d);
  for (int i = 0; i < 4; ++i) {
    CHECK(e.values[i] == doctest::Approx(vals[i]).epsilon(1e-14));
    CHECK(std::abs(e.vectors(i, i)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("hermitian_eig matches characteristic-polynomial roots") {
  ModelParams p{3.7, 0.1, 0.15, -2.5, 1.0};
  const ComplexMatrix h = build_h0(p);
  const EigenDecomposition e = hermitian_eig(h);
  const auto roots = test::charpoly_eigenvalues(h);
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(e.values[i] - roots[i]) < 1e-10);
}

TEST_CASE("hermitian_eig random property: reconstruction and orthonormality") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = trial % 2 == 0 ? 4 : 16;
    const ComplexMatrix m = test::random_hermitian(dim, rng);
    const EigenDecomposition e = hermitian_eig(m);
    CHECK((reconstruct(e) - m).frobenius_norm() <=
          1e-10 * m.frobenius_norm());
    CHECK(orthonormality_defect(e.vectors) < 1e-10);
    for (int i = 0; i + 1 < dim; ++i) CHECK(e.values[i] <= e.values[i + 1]);
  }
}

TEST_CASE("hermitian_eig degenerate spectrum keeps orthonormal vectors") {
  // projector spectrum {0, 0, 1, 1}
  ComplexMatrix m(4);
  m(0, 0) = m(1, 1) = 1.0;
  std::mt19937 rng(7);
  const ComplexMatrix u = test::random_local_unitary(0, rng) *
                          test::random_local_unitary(1, rng);
  const ComplexMatrix rotated = u * m * u.adjoint();
  const EigenDecomposition e = hermitian_eig(rotated);
  CHECK(orthonormality_defect(e.vectors) < 1e-10);
  CHECK(e.values[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(e.values[3] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  ComplexMatrix m = ComplexMatrix::identity(4);
  m(0, 1) = 0.5;
  CHECK_THROWS_AS(hermitian_eig(m), NonHermitianInput);
}

TEST_CASE("unitary_eig identity and diagonal phases") {
  const UnitaryEigenDecomposition e =
      unitary_eig(ComplexMatrix::identity(4));
  for (const cd& v : e.values)
    CHECK(std::abs(v - cd(1.0, 0.0)) < 1e-12);

  const double th[4] = {0.3, -1.2, 2.4, -2.9};
  ComplexMatrix d(4);
  for (int i = 0; i < 4; ++i) d(i, i) = std::exp(cd(0.0, th[i]));
  const UnitaryEigenDecomposition ed = unitary_eig(d);
  std::vector<double> got, want;
  for (int i = 0; i < 4; ++i) {
    got.push_back(std::arg(ed.values[i]));
    want.push_back(th[i]);
  }
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  for (int i = 0; i < 4; ++i)
    CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-10));
}

TEST_CASE("unitary_eig of exp(-i H0 tau) recovers -E_k tau phases") {
  ModelParams p{3.7, 0.1, 0.15, -2.5, 1.0};
  const ComplexMatrix h = build_h0(p);
  const EigenDecomposition eh = hermitian_eig(h);
  const double tau = 2.0 * M_PI;
  // exp(-i H tau) assembled from the Hermitian decomposition
  ComplexMatrix u(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      cd acc = 0.0;
      for (int k = 0; k < 4; ++k)
        acc += eh.vectors(r, k) * std::exp(cd(0.0, -eh.values[k] * tau)) *
               std::conj(eh.vectors(c, k));
      u(r, c) = acc;
    }
  const UnitaryEigenDecomposition eu = unitary_eig(u);
  // each unitary eigenphase must match some -E_k tau mod 2 pi
  for (const cd& lam : eu.values) {
    CHECK(std::abs(std::abs(lam) - 1.0) < 1e-8);
    double best = 1e9;
    for (int k = 0; k < 4; ++k) {
      const cd want = std::exp(cd(0.0, -eh.values[k] * tau));
      best = std::min(best, std::abs(lam - want));
    }
    CHECK(best < 1e-9);
  }
  // vectors diagonalize u
  for (int a = 0; a < 4; ++a) {
    Vector v = eu.vectors.column(a);
    Vector uv = matvec(u, v);
    for (int r = 0; r < 4; ++r) uv[r] -= eu.values[a] * v[r];
    CHECK(vnorm(uv) < 1e-9);
  }
}

TEST_CASE("unitary_eig resolves conjugate phase pairs") {
  // phases +t and -t share the same real part; vectors must still
  // diagonalize
  ComplexMatrix d(4);
  d(0, 0) = std::exp(cd(0.0, 1.0));
  d(1, 1) = std::exp(cd(0.0, -1.0));
  d(2, 2) = std::exp(cd(0.0, 2.5));
  d(3, 3) = std::exp(cd(0.0, -2.5));
  std::mt19937 rng(99);
  const ComplexMatrix w = test::random_local_unitary(0, rng) *
                          test::random_local_unitary(1, rng);
  const ComplexMatrix u = w * d * w.adjoint();
  const UnitaryEigenDecomposition e = unitary_eig(u);
  for (int a = 0; a < 4; ++a) {
    Vector v = e.vectors.column(a);
    Vector uv = matvec(u, v);
    for (int r = 0; r < 4; ++r) uv[r] -= e.values[a] * v[r];
    CHECK(vnorm(uv) < 1e-9);
  }
  CHECK(orthonormality_defect(e.vectors) < 1e-9);
}

TEST_CASE("unitary_eig rejects non-unitary input") {
  ComplexMatrix m = ComplexMatrix::identity(4);
  m(0, 0) = 1.5;
  CHECK_THROWS_AS(unitary_eig(m), NonUnitaryInput);
}

TEST_CASE("psd_sqrt basic and random") {
  const ComplexMatrix id = ComplexMatrix::identity(4);
  CHECK((psd_sqrt(id) - id).frobenius_norm() < 1e-12);

  ComplexMatrix d(4);
  d(0, 0) = 4.0;
  d(1, 1) = 1.0;
  const ComplexMatrix s = psd_sqrt(d);
  CHECK(s(0, 0).real() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s(1, 1).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(s(2, 2)) < 1e-12);

  std::mt19937 rng(4242);
  for (int trial = 0; trial < 10; ++trial) {
    ComplexMatrix a = test::random_hermitian(4, rng);
    const ComplexMatrix psd = a.adjoint() * a;
    const ComplexMatrix r = psd_sqrt(psd);
    CHECK((r * r - psd).frobenius_norm() <= 1e-9 * (1.0 + psd.frobenius_norm()));
    // same spectrum as the direct square root of the eigenvalues
    const EigenDecomposition er = hermitian_eig(r);
    const EigenDecomposition ep = hermitian_eig(psd);
    for (int i = 0; i < 4; ++i)
      CHECK(er.values[i] ==
            doctest::Approx(std::sqrt(std::max(0.0, ep.values[i])))
                .epsilon(1e-9));
  }
}

TEST_CASE("psd_sqrt rejects indefinite input") {
  ComplexMatrix d(4);
  d(0, 0) = -0.5;
  CHECK_THROWS_AS(psd_sqrt(d), IndefiniteInput);
}

TEST_CASE("nullspace: zero, invertible, projector") {
  CHECK(nullspace(ComplexMatrix(4)).size() == 4);
  std::mt19937 rng(11);
  const ComplexMatrix m =
      test::random_hermitian(4, rng) + cd(10.0, 0.0) * ComplexMatrix::identity(4);
  CHECK(nullspace(m).empty());

  // I - |v><v| annihilates exactly span{v}
  Vector v = {0.5, cd(0.0, 0.5), 0.5, cd(0.5, 0.0)};
  ComplexMatrix proj = ComplexMatrix::identity(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) proj(r, c) -= v[r] * std::conj(v[c]);
  const std::vector<Vector> kern = nullspace(proj);
  REQUIRE(kern.size() == 1);
  CHECK(std::abs(std::abs(vdot(kern[0], v)) - 1.0) < 1e-10);
}

TEST_CASE("fft roundtrip and Parseval") {
  std::mt19937 rng(5);
  std::normal_distribution<double> gauss;
  std::vector<cd> a(64);
  for (cd& x : a) x = cd(gauss(rng), gauss(rng));
  const std::vector<cd> orig = a;
  double power_t = 0.0;
  for (const cd& x : a) power_t += std::norm(x);
  fft_inplace(a, false);
  double power_f = 0.0;
  for (const cd& x : a) power_f += std::norm(x);
  CHECK(power_f / 64.0 == doctest::Approx(power_t).epsilon(1e-12));
  fft_inplace(a, true);
  for (size_t i = 0; i < a.size(); ++i)
    CHECK(std::abs(a[i] - orig[i]) < 1e-12);
}

TEST_CASE("expm against Hermitian exponential") {
  std::mt19937 rng(2024);
  const ComplexMatrix h = test::random_hermitian(4, rng);
  const EigenDecomposition e = hermitian_eig(h);
  ComplexMatrix want(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      cd acc = 0.0;
      for (int k = 0; k < 4; ++k)
        acc += e.vectors(r, k) * std::exp(cd(0.0, -e.values[k])) *
               std::conj(e.vectors(c, k));
      want(r, c) = acc;
    }
  const ComplexMatrix got = expm(cd(0.0, -1.0) * h);
  CHECK((got - want).frobenius_norm() < 1e-12 * want.frobenius_norm() + 1e-12);
}
