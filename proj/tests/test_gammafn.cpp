#include <doctest.h>

#include "rgs/gammafn.hpp"
#include "rgs/symfunc.hpp"

using namespace rgs;

TEST_CASE("gamma_n at integer weights") {
  auto g = gamma_n(ShiftedWeight(DominantWeight({2, 1})));
  REQUIRE(g.has_value());
  CHECK(g->to_rational() == Rat(2));  // Gamma(3) Gamma(1)

  // (1,1) at n=2 has arguments (2,1): finite, value 1
  auto g2 = gamma_n(ShiftedWeight(DominantWeight({1, 1})));
  REQUIRE(g2.has_value());
  CHECK(g2->to_rational() == Rat(1));
  // (0,0) at n=2 has arguments (1,0): a pole
  CHECK(!gamma_n(ShiftedWeight(DominantWeight({0, 0}))).has_value());
}

TEST_CASE("gamma_n with fractional shift") {
  // Gamma_1(3/2) = (1/2) Gamma(1/2)
  auto g = gamma_n(ShiftedWeight(DominantWeight({1}), make_rat(1, 2)));
  REQUIRE(g.has_value());
  CHECK(g->rational_part() == make_rat(1, 2));
  REQUIRE(g->gamma_args().size() == 1);
  CHECK(g->gamma_args().begin()->first == make_rat(1, 2));
  CHECK(g->gamma_args().begin()->second == 1);

  // negative non-integer argument: Gamma(-1/2) = Gamma(1/2)/(-1/2)
  auto h = gamma_n(ShiftedWeight(DominantWeight({-1}), make_rat(1, 2)));
  REQUIRE(h.has_value());
  CHECK(h->rational_part() == make_rat(-2));
}

TEST_CASE("gamma ratio law") {
  for (int n = 1; n <= 4; ++n)
    for (long m = 0; m <= 6; ++m)
      for (auto& p : partitions(m, n)) {
        DominantWeight alpha = DominantWeight(p).det_shift(1);  // keep arguments positive
        auto g = gamma_n(ShiftedWeight(alpha));
        if (!g) continue;
        for (int i = 0; i < n; ++i) {
          std::vector<long> q = alpha.parts();
          q[static_cast<size_t>(i)] += 1;
          if (!DominantWeight::is_dominant(q)) continue;
          auto g2 = gamma_n(ShiftedWeight(DominantWeight(q)));
          if (!g2) continue;
          GammaValue ratio = g2->ratio(*g);
          CHECK(ratio.is_rational());
          CHECK(ratio.to_rational() == Rat(alpha[i] + n - (i + 1)));
        }
      }
}

TEST_CASE("reciprocal gamma") {
  // alpha = (3,1): 1/(Gamma(4) Gamma(1)) = 1/6
  CHECK(reciprocal_gamma_n(ShiftedWeight(DominantWeight({3, 1}))).to_rational() == make_rat(1, 6));
  // pole becomes exact zero
  CHECK(reciprocal_gamma_n(ShiftedWeight(DominantWeight({1, 0}))).is_zero());
  // classical 1/m!
  for (long m = 0; m <= 6; ++m)
    CHECK(reciprocal_gamma_n(ShiftedWeight(DominantWeight({m + 1}))).to_rational() ==
          make_rat(Int(1), factorial(static_cast<unsigned long>(m))));
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(make_rat(7, 3), 0) == Rat(1));
  CHECK(pochhammer(Rat(2), 3) == Rat(24));
  CHECK(pochhammer(Rat(-1), 3) == Rat(0));
}

TEST_CASE("matrix pochhammer") {
  Rat a = make_rat(5, 7);
  CHECK(matrix_pochhammer(a, DominantWeight::zero(3)) == Rat(1));
  CHECK(matrix_pochhammer(a, DominantWeight({1, 0})) == a + 1);
  CHECK(matrix_pochhammer(a, DominantWeight({1, 1})) == (a + 1) * a);
}

TEST_CASE("matrix pochhammer as a gamma ratio") {
  // [a]_mu = Gamma_n(mu + a)/Gamma_n(a,...,a) when pole-free
  for (long m = 0; m <= 4; ++m)
    for (auto& p : partitions(m, 3)) {
      DominantWeight mu(p);
      Rat a = make_rat(3, 2);
      auto top = gamma_n(ShiftedWeight(mu, a));
      auto bot = gamma_n(ShiftedWeight(DominantWeight::zero(3), a));
      REQUIRE(top.has_value());
      REQUIRE(bot.has_value());
      GammaValue ratio = top->ratio(*bot);
      CHECK(ratio.is_rational());
      CHECK(ratio.to_rational() == matrix_pochhammer(a, mu));
    }
}

TEST_CASE("divided power coefficients") {
  CHECK(divided_power_coeff(DominantWeight({0, 0})) == Rat(1));
  CHECK(divided_power_coeff(DominantWeight({2, 0})) == make_rat(1, 6));
  CHECK(divided_power_coeff(DominantWeight({1, -1})) == Rat(0));
}

TEST_CASE("divided-power derivative law at character level") {
  // D of the truncated exponential sum_{|alpha| <= M} d(alpha) s_alpha /
  // Gamma_n(alpha+1) reproduces the same series truncated one degree lower.
  const int n = 3;
  const long M = 6;
  ClassFunction expseries(n);
  for (long m = 0; m <= M; ++m)
    for (auto& p : partitions(m, n)) {
      DominantWeight alpha(p);
      expseries.add_term(alpha, Rat(dimension(alpha)) * divided_power_coeff(alpha));
    }
  // D e^{t_1+...+t_n} = n e^{...}: the truncated series reproduces itself
  // one degree lower, scaled by n (Pieri: sum of d(beta+e_i) = n d(beta))
  ClassFunction derived = apply_D(expseries);
  ClassFunction expect(n);
  for (long m = 0; m <= M - 1; ++m)
    for (auto& p : partitions(m, n)) {
      DominantWeight alpha(p);
      expect.add_term(alpha, Rat(n) * Rat(dimension(alpha)) * divided_power_coeff(alpha));
    }
  CHECK(derived == expect);
}

TEST_CASE("gamma value to_double") {
  auto g = gamma_n(ShiftedWeight(DominantWeight({1}), make_rat(1, 2)));
  REQUIRE(g.has_value());
  CHECK(g->to_double() == doctest::Approx(std::tgamma(1.5)).epsilon(1e-12));
}
