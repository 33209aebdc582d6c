#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace qeuler;
using qtest::rel_err;

TEST(QParameter, RejectsOutsideUnitDisk) {
  EXPECT_THROW(QParameter(1.0), DomainError);
  EXPECT_THROW(QParameter(complex(0.8, 0.7)), DomainError);
  EXPECT_THROW(QParameter(std::nan("")), DomainError);
  EXPECT_NO_THROW(QParameter(complex(0.3, 0.4)));
  EXPECT_NO_THROW(QParameter(0.0));
  EXPECT_TRUE(QParameter(0.5).is_real());
  EXPECT_DOUBLE_EQ(QParameter(complex(0.3, 0.4)).modulus(), 0.5);
}

TEST(EngineConfig, Validation) {
  EngineConfig c;
  EXPECT_NO_THROW(c.validate());
  c.rel_tol = 0.0;
  EXPECT_THROW(c.validate(), DomainError);
  c = EngineConfig{};
  c.max_terms = 0;
  EXPECT_THROW(c.validate(), DomainError);
}

TEST(QBracket, Examples) {
  const QParameter q(0.5);
  EXPECT_EQ(q_bracket(0.0, q), complex(0.0));
  EXPECT_EQ(q_bracket(1.0, QParameter(complex(0.2, -0.7))), complex(1.0));
  EXPECT_EQ(q_bracket(1.0, q), complex(1.0));
  EXPECT_NEAR(std::abs(q_bracket(3.0, q) - 1.75), 0.0, 1e-15);
}

TEST(QBracket, NonIntegerUsesPrincipalPower) {
  const QParameter q(0.5);
  const complex expected = (1.0 - std::sqrt(0.5)) / 0.5;
  EXPECT_LT(rel_err(q_bracket(0.5, q), expected), 1e-15);
}

TEST(QBracket, ShiftRecurrenceProperty) {
  qtest::Gen gen(101);
  const complex qs[] = {0.2, 0.5, 0.9, {0.3, 0.4}, {-0.6, 0.1}};
  for (complex qv : qs) {
    const QParameter q(qv);
    for (int i = 0; i < 200; ++i) {
      const complex x = gen.box(-3.0, 5.0, -2.0, 2.0);
      const complex lhs = q_bracket(x + 1.0, q);
      const complex rhs = 1.0 + qv * q_bracket(x, q);
      EXPECT_LE(rel_err(lhs, rhs), 1e-13) << "q=" << qv << " x=" << x;
    }
  }
}

TEST(GenBinomial, Examples) {
  EXPECT_EQ(gen_binomial(complex(2.7, -1.1), 0), complex(1.0));
  EXPECT_EQ(gen_binomial(3.0, 2), complex(6.0));
  EXPECT_EQ(gen_binomial(-2.0, 3), complex(0.0));
}

TEST(GenBinomial, RecurrenceProperty) {
  qtest::Gen gen(202);
  for (int i = 0; i < 100; ++i) {
    const complex s = gen.box(-6.0, 6.0, -3.0, 3.0);
    const auto k = static_cast<unsigned>(gen.integer(0, 50));
    const complex lhs = gen_binomial(s, k + 1) * static_cast<double>(k + 1);
    const complex rhs = gen_binomial(s, k) * (s + static_cast<double>(k));
    EXPECT_LE(rel_err(lhs, rhs), 1e-15) << "s=" << s << " k=" << k;
  }
}

TEST(GenBinomial, NegativeIntegerGivesSignedBinomial) {
  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      const complex g = gen_binomial(-static_cast<double>(n), k);
      const long long expected = (k % 2 == 0 ? 1 : -1) * binomial(n, k).convert_to<long long>();
      EXPECT_EQ(std::llround(g.real()), expected) << "n=" << n << " k=" << k;
      EXPECT_EQ(g.imag(), 0.0);
    }
  }
}

TEST(GenBinomialLogDeriv, Examples) {
  EXPECT_EQ(gen_binomial_log_deriv(complex(0.3, 0.2), 0), complex(0.0));
  EXPECT_DOUBLE_EQ(gen_binomial_log_deriv(1.0, 2).real(), 1.5);
  EXPECT_THROW(gen_binomial_log_deriv(-1.0, 3), PoleError);
}

TEST(GenBinomialLogDeriv, MatchesFiniteDifferenceOfLog) {
  qtest::Gen gen(303);
  for (int i = 0; i < 50; ++i) {
    const complex s = gen.box(0.1, 4.0, -1.0, 1.0);
    const auto k = static_cast<unsigned>(gen.integer(1, 20));
    const double h = 1e-6;
    const complex fd = (gen_binomial(s + h, k) - gen_binomial(s - h, k)) / (2.0 * h) / gen_binomial(s, k);
    EXPECT_LE(rel_err(gen_binomial_log_deriv(s, k), fd), 1e-7);
  }
}

TEST(LogGamma, Examples) {
  EXPECT_NEAR(std::abs(log_gamma(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(log_gamma(5.0).real(), std::log(24.0), 1e-14);
  EXPECT_NEAR(log_gamma(0.5).real(), 0.5723649429247001, 1e-10);
  EXPECT_THROW(log_gamma(0.0), PoleError);
  EXPECT_THROW(log_gamma(-3.0), PoleError);
}

TEST(LogGamma, MatchesStdLgammaOnRealAxis) {
  qtest::Gen gen(404);
  for (int i = 0; i < 200; ++i) {
    double x = gen.uniform(-8.0, 30.0);
    if (std::abs(x - std::round(x)) < 1e-3 && x < 0.5) x += 0.25;
    EXPECT_NEAR(log_gamma(x).real(), std::lgamma(x), 1e-12 * std::max(1.0, std::abs(std::lgamma(x)))) << x;
  }
}

TEST(LogGamma, MatchesStirlingOracleOffAxis) {
  qtest::Gen gen(505);
  for (int i = 0; i < 200; ++i) {
    const complex z = gen.box(0.5, 20.0, -10.0, 10.0);
    EXPECT_LE(std::abs(log_gamma(z) - qtest::stirling_log_gamma(z)), 1e-12 * std::max(1.0, std::abs(log_gamma(z))))
        << z;
  }
}

TEST(LogGamma, ShiftProperty) {
  qtest::Gen gen(606);
  for (int i = 0; i < 200; ++i) {
    const complex z = gen.box(0.5, 20.0, -5.0, 5.0);
    EXPECT_LE(rel_err(std::exp(log_gamma(z + 1.0) - log_gamma(z)), z), 1e-12) << z;
  }
}

TEST(ReciprocalGammaPair, IntegersAndSmallArguments) {
  EXPECT_EQ(reciprocal_gamma_pair(0.0), complex(1.0));
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(reciprocal_gamma_pair(static_cast<double>(n)), complex(0.0));
    EXPECT_EQ(reciprocal_gamma_pair(-static_cast<double>(n)), complex(0.0));
  }
  qtest::Gen gen(707);
  for (int i = 0; i < 100; ++i) {
    const complex s = gen.box(-3.0, 3.0, -1.0, 1.0);
    const complex lg = -log_gamma(1.0 + s) - log_gamma(1.0 - s);
    EXPECT_LE(rel_err(reciprocal_gamma_pair(s), std::exp(lg)), 1e-11) << s;
  }
  EXPECT_LE(rel_err(reciprocal_gamma_pair(1e-6), 1.0 - M_PI * M_PI * 1e-12 / 6.0), 1e-15);
}

TEST(ReciprocalGammaPair, DerivativeMatchesFiniteDifference) {
  qtest::Gen gen(808);
  for (int i = 0; i < 50; ++i) {
    const complex s = gen.box(-3.0, 3.0, -1.0, 1.0);
    const double h = 1e-5;
    const complex fd = (reciprocal_gamma_pair(s + h) - reciprocal_gamma_pair(s - h)) / (2.0 * h);
    EXPECT_LE(std::abs(reciprocal_gamma_pair_deriv(s) - fd), 1e-8) << s;
  }
  EXPECT_EQ(reciprocal_gamma_pair_deriv(0.0), complex(0.0));
}

TEST(Powers, IntegerExponentsAreExactProducts) {
  const complex q(0.3, 0.4);
  EXPECT_LE(rel_err(ipow(q, 3), complex(-0.117, 0.044)), 1e-15);
  EXPECT_EQ(qpow(q, 3.0), ipow(q, 3));
  EXPECT_EQ(ipow(q, -2), 1.0 / ipow(q, 2));
  EXPECT_EQ(qpow(0.0, 0.0), complex(1.0));
  EXPECT_EQ(qpow(0.0, 2.5), complex(0.0));
  EXPECT_LE(rel_err(qpow(q, complex(0.5, 0.25)), std::exp(complex(0.5, 0.25) * std::log(q))), 1e-15);
}
