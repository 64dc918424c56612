#include <doctest.h>

#include <complex>

#include "oracles.hpp"
#include "rgs/qlinalg.hpp"
#include "rgs/symfunc.hpp"

using namespace rgs;

namespace {

std::vector<Rat> rats(std::initializer_list<long> v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("schur_eval basics") {
  // s_(1,0) = trace, s_(1,1) = det
  CHECK(schur_eval(DominantWeight({1, 0}), {make_rat(3), make_rat(5)}) == make_rat(8));
  CHECK(schur_eval(DominantWeight({1, 1}), {make_rat(3), make_rat(5)}) == make_rat(15));
  CHECK(schur_eval(DominantWeight({2, 0}), {make_rat(1), make_rat(1)}) == make_rat(3));
}

TEST_CASE("schur_eval handles collisions and negative parts") {
  // repeated eigenvalues go through Jacobi-Trudi
  CHECK(schur_eval(DominantWeight({2, 1, 0}), rats({1, 1, 1})) == Rat(8));
  CHECK(schur_eval(DominantWeight({3, 1}), rats({2, 2})) ==
        schur_eval(DominantWeight({3, 1}), rats({2, 2})));
  // negative part with invertible values: s_(0,-1)(x) = tr(x)/det(x)
  Rat v = schur_eval(DominantWeight({0, -1}), {make_rat(2), make_rat(3)});
  CHECK(v == make_rat(5, 6));
  CHECK_THROWS(schur_eval(DominantWeight({0, -1}), {make_rat(0), make_rat(3)}));
}

TEST_CASE("schur_eval at identity equals dimension") {
  for (int n = 1; n <= 4; ++n)
    for (long m = 0; m <= 6; ++m)
      for (auto& p : partitions(m, n)) {
        DominantWeight alpha(p);
        std::vector<Rat> ones(static_cast<size_t>(n), Rat(1));
        CHECK(schur_eval(alpha, ones) == Rat(dimension(alpha)));
      }
}

TEST_CASE("schur_of_matrix agrees with eigenvalue evaluation") {
  QMat x = {{make_rat(2), make_rat(0)}, {make_rat(0), make_rat(5)}};
  CHECK(schur_of_matrix(DominantWeight({2, 1}), x) ==
        schur_eval(DominantWeight({2, 1}), {make_rat(2), make_rat(5)}));
  // non-diagonal rational matrix against the trace/det closed forms
  QMat y = {{make_rat(1), make_rat(2)}, {make_rat(3), make_rat(4)}};
  CHECK(schur_of_matrix(DominantWeight({1, 0}), y) == make_rat(5));
  CHECK(schur_of_matrix(DominantWeight({1, 1}), y) == make_rat(-2));
  // s_(2,0) = (tr^2 + tr(x^2))/2
  CHECK(schur_of_matrix(DominantWeight({2, 0}), y) == make_rat(5 * 5 - (-2)));
  // negative parts via det
  CHECK(schur_of_matrix(DominantWeight({0, -1}), y) == make_rat(5, -2));
}

TEST_CASE("lr_multiply pieri cases") {
  ClassFunction p = lr_multiply(DominantWeight({1, 0}), DominantWeight({1, 0}));
  CHECK(p.coeff(DominantWeight({2, 0})) == 1);
  CHECK(p.coeff(DominantWeight({1, 1})) == 1);
  CHECK(p.terms().size() == 2);

  ClassFunction q = lr_multiply(DominantWeight({1, 0}), DominantWeight({0, -1}));
  CHECK(q.coeff(DominantWeight({1, -1})) == 1);
  CHECK(q.coeff(DominantWeight({0, 0})) == 1);
  CHECK(q.terms().size() == 2);

  ClassFunction r = lr_multiply(DominantWeight({3, 1, -2}), DominantWeight::zero(3));
  CHECK(r.coeff(DominantWeight({3, 1, -2})) == 1);
  CHECK(r.terms().size() == 1);
}

TEST_CASE("lr_multiply against monomial expansion oracle") {
  // products of nonnegative Schur polynomials expanded monomially and
  // re-collected must match the LR expansion
  for (int n = 2; n <= 3; ++n)
    for (long ma = 1; ma <= 3; ++ma)
      for (long mb = 1; mb <= 3; ++mb)
        for (auto& pa : partitions(ma, n))
          for (auto& pb : partitions(mb, n)) {
            DominantWeight a(pa), b(pb);
            auto prod = testing::mono_mul(testing::schur_monomials(pa, n),
                                          testing::schur_monomials(pb, n));
            auto expect = testing::to_schur_basis(prod, n);
            ClassFunction got = lr_multiply(a, b);
            CHECK(got.terms().size() == expect.size());
            for (auto& [lam, c] : expect) CHECK(got.coeff(DominantWeight(lam)) == c);
          }
}

TEST_CASE("lr commutative and associative") {
  DominantWeight a({2, 1, 0}), b({1, 1, 0}), c({1, 0, -1});
  ClassFunction ab = lr_multiply(a, b);
  ClassFunction ba = lr_multiply(b, a);
  CHECK(ab == ba);
  ClassFunction left = lr_multiply(ab, ClassFunction::schur(c));
  ClassFunction right = lr_multiply(ClassFunction::schur(a), lr_multiply(b, c));
  CHECK(left == right);
}

TEST_CASE("character orthogonality via LR") {
  for (int n = 2; n <= 3; ++n)
    for (long m = 0; m <= 5; ++m)
      for (auto& pa : partitions(m, n))
        for (long mb = 0; mb <= 5; ++mb)
          for (auto& pb : partitions(mb, n)) {
            DominantWeight a(pa);
            DominantWeight bdual = DominantWeight(pb).dual();
            Rat c0 = lr_multiply(a, bdual).coeff(DominantWeight::zero(n));
            CHECK(c0 == (pa == pb ? Rat(1) : Rat(0)));
          }
}

TEST_CASE("invariant_dim") {
  CHECK(invariant_dim({DominantWeight({1, 0}), DominantWeight({0, -1})}, 2) == 1);
  CHECK(invariant_dim({DominantWeight({1, 0}), DominantWeight({1, 0}), DominantWeight({-1, -1})},
                      2) == 1);
  CHECK(invariant_dim({DominantWeight({1, 0}), DominantWeight({1, 0}), DominantWeight({1, 0})},
                      2) == 0);
  // adjoint cube of sl2-type data: V (x) V* contains one invariant
  CHECK(invariant_dim({DominantWeight({1, 0, 0}), DominantWeight({0, 0, -1})}, 3) == 1);
}

TEST_CASE("symmetric_group_dim matches SYT counts") {
  CHECK(symmetric_group_dim(DominantWeight({2, 0})) == 1);
  CHECK(symmetric_group_dim(DominantWeight({1, 1})) == 1);
  CHECK(symmetric_group_dim(DominantWeight({2, 1})) == 2);
  for (long m = 1; m <= 8; ++m)
    CHECK(symmetric_group_dim(DominantWeight(partitions(m, 1)[0])) == 1);
  for (long m = 0; m <= 8; ++m)
    for (auto& p : partitions(m, 4)) {
      CHECK(symmetric_group_dim(DominantWeight(p)) == testing::count_syt(p));
    }
  CHECK_THROWS(symmetric_group_dim(DominantWeight({1, -1})));
}

TEST_CASE("power_trace_expand") {
  CHECK(power_trace_expand(0, 3) == ClassFunction::schur(DominantWeight::zero(3)));
  ClassFunction m2 = power_trace_expand(2, 2);
  CHECK(m2.coeff(DominantWeight({2, 0})) == 1);
  CHECK(m2.coeff(DominantWeight({1, 1})) == 1);
  ClassFunction m3 = power_trace_expand(3, 2);
  CHECK(m3.coeff(DominantWeight({3, 0})) == 1);
  CHECK(m3.coeff(DominantWeight({2, 1})) == 2);
}

TEST_CASE("weyl reciprocity: power_trace_expand evaluates to (sum x)^m") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<Rat> x;
    for (int i = 0; i < n; ++i) x.push_back(make_rat(i + 2, 3));
    Rat s(0);
    for (auto& xi : x) s += xi;
    for (long m = 0; m <= 8; ++m) {
      ClassFunction f = power_trace_expand(m, n);
      Rat val(0);
      for (auto& [w, c] : f.terms()) val += c * schur_eval(w, x);
      CHECK(val == rat_pow(s, m));
    }
  }
}

TEST_CASE("apply_D basics") {
  ClassFunction d1 = apply_D(ClassFunction::schur(DominantWeight({1, 0})));
  CHECK(d1.coeff(DominantWeight({0, 0})) == 2);
  CHECK(d1.terms().size() == 1);
  CHECK(apply_D(ClassFunction::schur(DominantWeight({0, 0}))).is_zero());
  ClassFunction d2 = apply_D(ClassFunction::schur(DominantWeight({2, 0})));
  CHECK(d2.coeff(DominantWeight({1, 0})) == 3);
  CHECK(d2.coeff(DominantWeight({2, -1})) == 0);
  CHECK(d2.terms().size() == 1);
}

TEST_CASE("apply_D against direct differentiation") {
  for (int n = 1; n <= 4; ++n)
    for (long m = 1; m <= 6; ++m)
      for (auto& p : partitions(m, n)) {
        auto direct = testing::mono_derive(testing::schur_monomials(p, n));
        auto expected = direct.empty() ? std::map<std::vector<long>, Rat>{}
                                       : testing::to_schur_basis(direct, n);
        ClassFunction got = apply_D(ClassFunction::schur(DominantWeight(p)));
        CHECK(got.terms().size() == expected.size());
        for (auto& [lam, c] : expected) CHECK(got.coeff(DominantWeight(lam)) == c);
      }
}

TEST_CASE("apply_D commutes with det shift evaluation") {
  // D on a shifted weight, checked by evaluating both sides at generic
  // rational points through the quotient rule oracle is heavy; instead use
  // the adjoint grading: coefficients follow the (alpha_i + n - i) rule.
  // s_(1,-1)(t) = t1/t2 + 1 + t2/t1; the sum of partials re-expands as
  // 2 s_(0,-1) - s_(1,-2), matching the (alpha_i + n - i) rule
  ClassFunction d = apply_D(ClassFunction::schur(DominantWeight({1, -1})));
  CHECK(d.coeff(DominantWeight({0, -1})) == 2);
  CHECK(d.coeff(DominantWeight({1, -2})) == -1);
}

TEST_CASE("complex evaluation path") {
  std::vector<std::complex<double>> x = {{0.3, 0.1}, {-0.2, 0.4}};
  auto v = schur_eval(DominantWeight({2, 1}), x);
  // s_(2,1)(a,b) = ab(a+b)
  auto expect = x[0] * x[1] * (x[0] + x[1]);
  CHECK(std::abs(v - expect) < 1e-12);
}
