#include <gtest/gtest.h>

#include <numbers>

#include "support.hpp"

using namespace qeuler;
using qtest::rel_err;

namespace {

EngineConfig tight_config() {
  EngineConfig c;
  c.rel_tol = 1e-15;
  c.max_terms = 100000;
  return c;
}

complex central_difference(const std::function<complex(complex)>& f, complex s, double h = 1e-5) {
  return (f(s + h) - f(s - h)) / (2.0 * h);
}

}  // namespace

TEST(QZeta, Examples) {
  const QParameter q(0.5);
  EXPECT_NEAR(qzeta(-1.0, 0, q).value.real(), -0.5, 1e-15);
  EXPECT_NEAR(qzeta(0.0, 0, q).value.real(), -0.75, 1e-15);
  const SeriesValue z1 = qzeta(1.0, 0, q);
  EXPECT_TRUE(z1.converged);
  EXPECT_NEAR(z1.value.real(), -0.948375, 1e-5);
  EXPECT_LE(z1.error_bound, 1e-12 * std::abs(z1.value));
}

TEST(QZeta, AgreesWithAveragedDefiningSeries) {
  qtest::Gen gen(21);
  for (double qv : {0.3, 0.5, 0.7}) {
    const QParameter q(qv);
    for (int i = 0; i < 15; ++i) {
      const double s = gen.uniform(-4.0, 6.0);
      const int h = gen.integer(0, 2);
      const double oracle = static_cast<double>(qtest::averaged_zeta_oracle(s, qv, 0.0L, h));
      EXPECT_LE(rel_err(qzeta(s, h, q).value, oracle), 1e-9) << "q=" << qv << " s=" << s << " h=" << h;
    }
  }
  EXPECT_NEAR(static_cast<double>(qtest::averaged_zeta_oracle(1.0L, 0.5L)), -0.948374835261, 1e-11);
}

TEST(QZeta, InterpolatesEulerNumbers) {
  const complex qs[] = {0.2, 0.5, 0.9, {0.3, 0.4}};
  for (complex qv : qs) {
    const QParameter q(qv);
    for (std::size_t n = 1; n <= 12; ++n) {
      const SeriesValue z = qzeta(-static_cast<double>(n), 0, q);
      EXPECT_LE(rel_err(z.value, euler_number(n, q)), 1e-10) << "q=" << qv << " n=" << n;
      EXPECT_LE(z.terms_used, n + 1);
    }
    // At s = 0 the omitted n = 0 term [2]_q separates zeta from E_{0,q}.
    EXPECT_LE(std::abs(qzeta(0.0, 0, q).value - (euler_number(0, q) - (1.0 + qv))), 1e-15);
  }
}

TEST(QZetaHurwitz, Examples) {
  const QParameter q(0.5);
  EXPECT_NEAR(qzeta_hurwitz({-2.0, 0.0, 0, q}).value.real(), -0.2, 1e-15);
  for (double x : {0.0, 0.4, 1.0, 2.5}) EXPECT_NEAR(qzeta_hurwitz({0.0, x, 0, q}).value.real(), 0.75, 1e-15) << x;
}

TEST(QZetaHurwitz, InterpolatesEulerPolynomials) {
  for (complex qv : {complex(0.5), complex(0.8), complex(0.3, 0.4)}) {
    const QParameter q(qv);
    for (std::size_t n = 0; n <= 8; ++n) {
      for (int x = 0; x <= 3; ++x) {
        for (int h = 0; h <= 2; ++h) {
          const SeriesValue z = qzeta_hurwitz({-static_cast<double>(n), static_cast<double>(x), h, q});
          EXPECT_LE(rel_err(z.value, euler_poly(n, static_cast<double>(x), h, q)), 1e-10)
              << "q=" << qv << " n=" << n << " x=" << x << " h=" << h;
          EXPECT_LE(z.terms_used, n + 1);
          if (qv.imag() == 0.0 && n <= 6) {
            const complex exact = ratq_eval(exact_euler_poly(n, static_cast<std::size_t>(x), static_cast<std::size_t>(h)), qv);
            EXPECT_LE(rel_err(z.value, exact), 1e-10);
          }
        }
      }
    }
  }
}

TEST(QZetaHurwitz, AgreesWithAveragedDefiningSeries) {
  qtest::Gen gen(22);
  for (int i = 0; i < 40; ++i) {
    const double qv = gen.uniform(0.2, 0.7);
    const double s = gen.uniform(-3.0, 5.0);
    const double x = gen.uniform(0.1, 2.0);
    const int h = gen.integer(0, 2);
    const QParameter q(qv);
    const double oracle = static_cast<double>(qtest::averaged_zeta_oracle(s, qv, x, h, 0));
    EXPECT_LE(rel_err(qzeta_hurwitz({s, x, h, q}).value, oracle), 1e-9) << qv << " " << s << " " << x << " " << h;
  }
}

TEST(QZetaHurwitz, DomainErrors) {
  const QParameter q(0.5);
  EXPECT_THROW((void)qzeta_hurwitz({1.0, -0.5, 0, q}), DomainError);
  EXPECT_THROW((void)qzeta_hurwitz({1.0, 0.0, 0, q}), DomainError);
  EXPECT_THROW((void)qzeta_hurwitz({1.0, 1.0, -1, q}), DomainError);
  EXPECT_THROW((void)qzeta(1.0, -2, q), DomainError);
  EXPECT_NO_THROW((void)qzeta_hurwitz({-1.5, 0.0, 0, q}));
}

TEST(QZeta, ReportsNonConvergence) {
  EngineConfig c;
  c.max_terms = 16;
  EXPECT_THROW((void)qzeta(complex(2.5, 3.0), 0, QParameter(0.99), c), NonConvergenceError);
}

TEST(QZetaDeriv, ExamplesAgainstFiniteDifference) {
  const QParameter q(0.5);
  const EngineConfig c = tight_config();
  auto f = [&](complex s) { return qzeta(s, 0, q, c).value; };
  EXPECT_LE(rel_err(qzeta_deriv(1.25, 0, q).value, central_difference(f, 1.25)), 1e-6);
  EXPECT_LE(rel_err(qzeta_deriv(-3.0, 0, q).value, central_difference(f, -3.0)), 1e-6);
}

TEST(QZetaDeriv, SmallQ) {
  // zeta ~ -q (1-q)^s here, so f' is ~1e-6 |f| and a 1e-5 step drowns in
  // roundoff; f varies on an O(1) scale in s and tolerates a 1e-2 step.
  const QParameter q(1e-6);
  const EngineConfig c = tight_config();
  auto f = [&](complex s) { return qzeta(s, 0, q, c).value; };
  for (double s : {-2.5, -1.0, 0.5, 2.0}) {
    EXPECT_LE(rel_err(qzeta_deriv(s, 0, q, std::nullopt, c).value, central_difference(f, s, 1e-2)), 1e-6) << s;
  }
}

TEST(QZetaDeriv, RandomPointsInStrip) {
  qtest::Gen gen(23);
  const EngineConfig c = tight_config();
  for (int i = 0; i < 50; ++i) {
    const QParameter q(i % 2 == 0 ? complex(0.5) : gen.disk(0.8));
    const complex s = gen.box(-5.0, 5.0, -1.0, 1.0);
    auto f = [&](complex t) { return qzeta(t, 0, q, c).value; };
    EXPECT_LE(rel_err(qzeta_deriv(s, 0, q, std::nullopt, c).value, central_difference(f, s)), 1e-6)
        << "q=" << q.value() << " s=" << s;
  }
  for (int i = 0; i < 20; ++i) {
    const QParameter q(0.6);
    const complex s = gen.box(-5.0, 5.0, -1.0, 1.0);
    const double x = gen.uniform(0.2, 2.0);
    const int h = gen.integer(0, 2);
    auto f = [&](complex t) { return qzeta_hurwitz({t, x, h, q, c}).value; };
    EXPECT_LE(rel_err(qzeta_deriv(s, h, q, x, c).value, central_difference(f, s)), 1e-6) << s << " " << x;
  }
}

TEST(QZetaDeriv, NonpositiveIntegersAreFinite) {
  const QParameter q(0.5);
  const EngineConfig c = tight_config();
  auto f = [&](complex s) { return qzeta(s, 0, q, c).value; };
  for (int m = 0; m <= 6; ++m) {
    const complex d = qzeta_deriv(-static_cast<double>(m), 0, q, std::nullopt, c).value;
    EXPECT_TRUE(std::isfinite(d.real()));
    EXPECT_LE(rel_err(d, central_difference(f, -static_cast<double>(m))), 1e-6) << m;
  }
}

TEST(ClassicalZetaE, Examples) {
  EXPECT_NEAR(classical_zeta_E(1.0).value.real(), -2.0 * std::numbers::ln2, 1e-10);
  EXPECT_NEAR(classical_zeta_E(-1.0).value.real(), -0.5, 1e-15);
  EXPECT_NEAR(classical_zeta_E(-2.0, 0.5).value.real(), -0.25, 1e-15);
}

TEST(ClassicalZetaE, InterpolatesClassicalNumbers) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const double e = classical_euler_number(n).convert_to<double>();
    EXPECT_LE(std::abs(classical_zeta_E(-static_cast<double>(n)).value.real() - e), 1e-12) << n;
  }
  for (std::size_t n = 0; n <= 8; ++n) {
    for (double x : {0.0, 0.25, 0.5}) {
      EXPECT_LE(std::abs(classical_zeta_E(-static_cast<double>(n), x).value - classical_euler_poly(n, x)), 1e-12);
    }
  }
}

TEST(ClassicalZetaE, KnownValues) {
  // 2 eta(2) = pi^2/6 with the sign convention of zeta_E.
  EXPECT_NEAR(classical_zeta_E(2.0).value.real(), -std::numbers::pi * std::numbers::pi / 6.0, 1e-12);
  // zeta_E(s, 1/2) = 2 sum (-1)^n (n+1/2)^{-s}; at s = 1 this is pi.
  EXPECT_NEAR(classical_zeta_E(1.0, 0.5).value.real(), std::numbers::pi, 1e-12);
  EXPECT_THROW((void)classical_zeta_E(1.0, 0.0), DomainError);
  EXPECT_THROW((void)classical_zeta_E(1.0, 1.5), DomainError);
}

TEST(QZeta, ApproachesClassicalAsQTendsToOne) {
  EngineConfig c;
  c.max_terms = 2'000'000;
  const QParameter q(0.9999);
  for (double s : {2.0, 3.0, 4.0}) {
    EXPECT_LE(std::abs(qzeta(s, 0, q, c).value - classical_zeta_E(s).value), 5e-3) << s;
  }
}

TEST(QZeta, LargeSLimitIsMinusOnePlusQ) {
  const QParameter q(0.5);
  double previous_gap = 1e300;
  for (int s = 10; s <= 60; s += 5) {
    const double gap = std::abs(qzeta(static_cast<double>(s), 0, q).value + 1.5);
    EXPECT_LT(gap, previous_gap) << s;
    previous_gap = gap;
  }
  EXPECT_LE(std::abs(qzeta(60.0, 0, q).value + 1.5), 1e-6);
  EXPECT_GT(std::abs(qzeta(60.0, 0, q).value + 2.0), 0.4);
}
