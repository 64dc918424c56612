#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rgs/haarint.hpp"

using namespace rgs;

namespace {

QMat qm(std::initializer_list<std::initializer_list<long>> rows) {
  QMat m;
  for (auto& r : rows) {
    QVec v;
    for (long x : r) v.emplace_back(x);
    m.push_back(std::move(v));
  }
  return m;
}

}  // namespace

TEST_CASE("integrate_schur_pair") {
  auto p = integrate_schur_pair(DominantWeight({1, 0}), DominantWeight({0, -1}));
  REQUIRE(p.nonzero);
  CHECK(*p.weight == DominantWeight({1, 0}));
  CHECK(p.scalar == make_rat(1, 2));

  CHECK(!integrate_schur_pair(DominantWeight({1, 0}), DominantWeight({1, 0})).nonzero);

  auto t = integrate_schur_pair(DominantWeight::zero(3), DominantWeight::zero(3));
  REQUIRE(t.nonzero);
  CHECK(t.scalar == Rat(1));
}

TEST_CASE("integrate_Un single trace powers vanish") {
  MatrixPolyExpr e;
  e.add(2, 0, 0, Rat(1));  // tr(C1 y)^2
  CHECK(integrate_Un(e, 2).is_zero());
}

TEST_CASE("integrate_Un n=1 residue example") {
  // int tr(Cy) tr(Dy) det(y)^{-2} over U_1 = CD by the Laurent expansion
  MatrixPolyExpr e;
  e.add(1, 1, -2, Rat(1));
  UnIntegral v = integrate_Un(e, 1);
  Rat val = v.evaluate(qm({{3}}), qm({{5}}));
  CHECK(val == Rat(15));
}

TEST_CASE("integrate_Un n=2 pair example") {
  // int tr(Cy) tr(Dy) det(y)^{-1} over U_2 = det(C) tr(D C^{-1}) / 2
  MatrixPolyExpr e;
  e.add(1, 1, -1, Rat(1));
  UnIntegral v = integrate_Un(e, 2);
  QMat c = qm({{1, 2}, {3, 4}});
  QMat d = qm({{2, 0}, {1, 1}});
  // det(C) tr(D C^{-1}) = tr(adj(C) D) with adj(C) = [[4,-2],[-3,1]]
  Rat expect = Rat(4) * Rat(2) + Rat(-2) * Rat(1) + Rat(-3) * Rat(0) + Rat(1) * Rat(1);
  expect /= 2;
  CHECK(v.evaluate(c, d) == expect);
}

TEST_CASE("integrate_Un det absorption only") {
  // int det(y)^p d*y = [p = 0]
  for (long p = -2; p <= 2; ++p) {
    MatrixPolyExpr e;
    e.add(0, 0, p, Rat(1));
    UnIntegral v = integrate_Un(e, 2);
    if (p == 0) {
      CHECK(v.evaluate(qm({{1, 0}, {0, 1}}), qm({{1, 0}, {0, 1}})) == Rat(1));
    } else {
      CHECK(v.is_zero());
    }
  }
  // int tr(C2 y)^2 det(y)^{-1} over U_2: beta = (1,1) survives
  MatrixPolyExpr e;
  e.add(0, 2, -1, Rat(1));
  UnIntegral v = integrate_Un(e, 2);
  QMat c2 = qm({{2, 1}, {0, 3}});
  CHECK(v.evaluate(qm({{1, 0}, {0, 1}}), c2) == Rat(6));  // w_(1,1) * det(C2)
}

TEST_CASE("pairs vanish without a dual partner") {
  for (int n = 2; n <= 3; ++n)
    for (long m = 0; m <= 5; ++m)
      for (auto& pa : partitions(m, n))
        for (auto& pb : partitions(m, n)) {
          DominantWeight a(pa), b(pb);
          auto pr = integrate_schur_pair(a, b.dual());
          CHECK(pr.nonzero == (a == b));
        }
}

TEST_CASE("monte carlo haar basics") {
  auto one = monte_carlo_haar([](const CMat&) { return std::complex<double>(1.0); }, 2, 100, 5);
  CHECK(std::abs(one.mean - 1.0) < 1e-14);
  CHECK(one.stderr_ < 1e-14);

  // reproducibility for a fixed seed
  auto f = [](const CMat& u) { return u[0][0] * std::conj(u[0][0]); };
  auto a = monte_carlo_haar(f, 2, 500, 42);
  auto b = monte_carlo_haar(f, 2, 500, 42);
  CHECK(a.mean == b.mean);
  // E |u_11|^2 = 1/2 for U_2
  CHECK(std::abs(a.mean - 0.5) < 5 * a.stderr_ + 1e-3);
}

TEST_CASE("monte carlo agrees with exact integration") {
  // f = tr(y) has Haar average 0; f = |tr(y)|^2 has average 1
  auto tr = [](const CMat& u) { return u[0][0] + u[1][1]; };
  auto est = monte_carlo_haar(tr, 2, 20000, 11);
  CHECK(std::abs(est.mean) < 4 * est.stderr_);

  auto tr2 = [](const CMat& u) {
    auto t = u[0][0] + u[1][1];
    return t * std::conj(t);
  };
  auto est2 = monte_carlo_haar(tr2, 2, 20000, 12);
  CHECK(std::abs(est2.mean - 1.0) < 4 * est2.stderr_);
}

TEST_CASE("contour fourier on classical monomials") {
  // n = 1: FC[x^{-1}] = C, FC[x^{-2}] = C y
  ClassFunction f(1);
  f.add_term(DominantWeight({-1}), Rat(1));
  auto im = contour_fourier(f, 10);
  CHECK(im.complete);
  CHECK(im.image.coeff(DominantWeight({0})) == Rat(1));
  CHECK(im.image.terms().size() == 1);

  ClassFunction g(1);
  g.add_term(DominantWeight({-2}), Rat(1));
  auto im2 = contour_fourier(g, 10);
  CHECK(im2.image.coeff(DominantWeight({1})) == Rat(1));
  CHECK(im2.image.terms().size() == 1);
}

TEST_CASE("contour fourier matches the divided-power normalization") {
  // n = 2: the image of x^{(-2,-2)} is divided_power_coeff((0,0)) = 1
  ClassFunction f(2);
  f.add_term(DominantWeight({-2, -2}), Rat(1));
  auto im = contour_fourier(f, 10);
  CHECK(im.image.coeff(DominantWeight({0, 0})) == Rat(1));

  // generic case: image of s_gamma with gamma = (-n-a_n, ..., -n-a_1) is
  // s_alpha / Gamma_n(alpha+1)
  for (long m = 0; m <= 4; ++m)
    for (auto& p : partitions(m, 2)) {
      DominantWeight alpha(p);
      DominantWeight gamma = alpha.det_shift(2).dual();
      ClassFunction h(2);
      h.add_term(gamma, Rat(1));
      auto img = contour_fourier(h, 10);
      CHECK(img.image.coeff(alpha) == divided_power_coeff(alpha));
    }
}

TEST_CASE("contour fourier truncation flag") {
  ClassFunction f(1);
  f.add_term(DominantWeight({-9}), Rat(1));  // image would be degree 8
  auto im = contour_fourier(f, 3);
  CHECK(!im.complete);
  CHECK(im.image.is_zero());
}

TEST_CASE("fourier round trip") {
  for (long m = 0; m <= 4; ++m)
    for (auto& p : partitions(m, 2)) {
      DominantWeight alpha(p);
      ClassFunction f(2);
      f.add_term(alpha.det_shift(2).dual(), make_rat(3, 7));
      auto im = contour_fourier(f, 10);
      REQUIRE(im.complete);
      ClassFunction back = contour_fourier_inverse(im.image);
      CHECK(back == f);
    }
}

TEST_CASE("euler oracle trivial cases") {
  CHECK(euler_oracle_61(make_rat(2), make_rat(3), qm({{1}}), qm({{1}}), 0, 0, 0) == Rat(1));
  // n=1, tau=1, q=-1: int (a + bu + cx + udx) u^{-1} du dx = b
  CHECK(euler_oracle_61(make_rat(2), make_rat(3), qm({{5}}), qm({{7}}), 1, -1, 0) == Rat(3));
}

TEST_CASE("euler oracle n=1 against the residue computation") {
  // tau=2, q=-1, r=-1: expand (a+bu+cx+udx)^2 u^{-1} x^{-1}; the surviving
  // Laurent coefficient is 2(bc + ad)
  Rat a = make_rat(2), b = make_rat(3), c = make_rat(5), d = make_rat(7);
  Rat got = euler_oracle_61(a, b, qm({{5}}), qm({{7}}), 2, -1, -1);
  CHECK(got == 2 * (b * c + a * d));
}

TEST_CASE("toric euler oracle") {
  // weights {0,1} on U_1: int (a0 + a1 x)^tau x^{sigma} d*x
  // tau=2, sigma=-1: coefficient of x^1 in the expansion: 2 a0 a1
  Rat v = toric_euler_oracle({{0}, {1}}, {make_rat(2), make_rat(3)}, 2, {-1});
  CHECK(v == Rat(12));
  // sigma = 0: constant term a0^2
  CHECK(toric_euler_oracle({{0}, {1}}, {make_rat(2), make_rat(3)}, 2, {0}) == Rat(4));
}
