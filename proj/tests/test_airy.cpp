#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "fermi1d/airy.hpp"
#include "fermi1d/error.hpp"

using namespace fermi1d;

namespace {

// Ai(z) = (1/pi) Re[e^{i pi/6} int_0^inf exp(-s^3/3 + z s e^{2 pi i/3}) ds],
// integrated with fixed Gauss-Legendre panels out to s = 20.
double airy_by_contour(double z) {
  using C = std::complex<double>;
  const C rot = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  double re = 0.0;
  for (int k = 0; k < 80; ++k) {
    const double a = 0.25 * k;
    auto f = [&](double s) { return (std::polar(1.0, std::numbers::pi / 6.0) * std::exp(-s * s * s / 3.0 + z * s * rot)).real(); };
    re += boost::math::quadrature::gauss<double, 30>::integrate(f, a, a + 0.25);
  }
  return re / std::numbers::pi;
}

struct AiryRow {
  double z, ai, aip;
};

// mpmath (30 digits)
const AiryRow kAiryTable[] = {
    {-20, -0.17640612707798468959, 0.8928628567364712384},
    {-10, 0.040241238486443190689, 0.9962650441327900559},
    {-7.3, 0.33577037051514727697, -0.18009580448329365985},
    {-5, 0.35076100902411431979, 0.32719281855444313679},
    {-2.5, -0.11232506769296608919, 0.67885273426479436337},
    {-1, 0.5355608832923521188, -0.010160567116645209395},
    {-0.3, 0.4309030952855808556, -0.24054512725815461017},
    {0.4, 0.25474235429567634084, -0.23583203441920821501},
    {1, 0.13529241631288141552, -0.15914744129679321279},
    {2.2, 0.025610404421773212354, -0.040497263244453125251},
    {5, 0.00010834442813607441735, -0.000247413890868462476},
    {7.9, 6.2396400972839341797e-8, -1.7729958329430335231e-7},
    {8.1, 3.5224356235735714843e-8, -1.0130972032660844188e-7},
    {12, 1.393184688875360839e-13, -4.854736554985308463e-13},
    {30, 3.2082175915504955711e-49, -1.7598765814327259821e-48},
};

}  // namespace

TEST(Airy, ValuesAtZero) {
  EXPECT_NEAR(airy_ai(0.0), std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0), 1e-15);
  EXPECT_NEAR(airy_ai_prime(0.0), -std::pow(3.0, -1.0 / 3.0) / std::tgamma(1.0 / 3.0), 1e-15);
}

TEST(Airy, MatchesContourQuadratureAtMinusTen) {
  EXPECT_NEAR(airy_ai(-10.0), airy_by_contour(-10.0), 1e-9);
}

TEST(Airy, MatchesContourQuadratureOnGrid) {
  // Uniform agreement with the integral representation over [-10, 5].
  double worst = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double z = -10.0 + 15.0 * i / 2000.0;
    worst = std::max(worst, std::abs(airy_ai(z) - airy_by_contour(z)));
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(Airy, TabulatedValues) {
  for (const auto& row : kAiryTable) {
    const AiryPair a = airy(row.z);
    if (std::abs(row.z) <= 1.0) {
      EXPECT_NEAR(a.ai, row.ai, 1e-12) << row.z;
      EXPECT_NEAR(a.ai_prime, row.aip, 1e-12) << row.z;
    } else if (row.z < 0) {
      // Relative to the oscillation envelope near zeros.
      const double env = 1.0 / (std::sqrt(std::numbers::pi) * std::pow(-row.z, 0.25));
      EXPECT_NEAR(a.ai, row.ai, 1e-10 * env) << row.z;
      EXPECT_NEAR(a.ai_prime, row.aip, 1e-10 * env * std::sqrt(-row.z)) << row.z;
    } else {
      EXPECT_NEAR(a.ai / row.ai, 1.0, 1e-10) << row.z;
      EXPECT_NEAR(a.ai_prime / row.aip, 1.0, 1e-10) << row.z;
    }
    EXPECT_EQ(a.argument, row.z);
  }
}

TEST(Airy, UnderflowsGracefully) {
  EXPECT_EQ(airy_ai(200.0), 0.0);
  EXPECT_EQ(airy_ai_prime(200.0), 0.0);
  EXPECT_TRUE(std::isfinite(airy_ai(-1e4)));
}

TEST(Airy, Wronskian) {
  for (double z = -15.0; z <= 15.0; z += 0.173) {
    const AiryPair a = airy(z);
    const AiryPair b = detail::airy_bi(z);
    const double w = a.ai * b.ai_prime - a.ai_prime * b.ai;
    EXPECT_NEAR(w * std::numbers::pi, 1.0, 1e-12) << z;
  }
}

TEST(Airy, SatisfiesDifferentialEquation) {
  const double h = 1e-3;
  for (double z = -8.0; z <= 8.0; z += 0.05) {
    // Richardson-combined second differences at h and 2h remove the h^2
    // truncation term, which alone is ~1e-6 near |z| = 8.
    auto d2 = [&](double s) { return (airy_ai(z + s) - 2.0 * airy_ai(z) + airy_ai(z - s)) / (s * s); };
    const double second = (4.0 * d2(h) - d2(2.0 * h)) / 3.0;
    EXPECT_NEAR(second, z * airy_ai(z), 1e-6) << z;
  }
}

TEST(Airy, LeadingAsymptoticConsistency) {
  for (double z = 8.0; z <= 40.0; z += 0.5) {
    const double ratio = airy_ai(z) * 2.0 * std::sqrt(std::numbers::pi) * std::pow(z, 0.25) *
                         std::exp(2.0 / 3.0 * std::pow(z, 1.5));
    EXPECT_GE(ratio, 0.99) << z;
    EXPECT_LE(ratio, 1.01) << z;
  }
}

TEST(Airy, ContinuousAcrossRegimeEdges) {
  for (double edge : {-8.0, -1.0, 1.0, 8.0}) {
    const double lo = std::nextafter(edge, -100.0);
    const double hi = std::nextafter(edge, 100.0);
    const double scale = std::max(std::abs(airy_ai(lo)), std::abs(airy_ai(hi)));
    EXPECT_NEAR(airy_ai(lo), airy_ai(hi), 1e-12 * scale) << edge;
    const double dscale = std::max(std::abs(airy_ai_prime(lo)), std::abs(airy_ai_prime(hi)));
    EXPECT_NEAR(airy_ai_prime(lo), airy_ai_prime(hi), 1e-12 * dscale) << edge;
  }
}

TEST(Bernoulli, SmallIndices) {
  EXPECT_EQ(bernoulli_even(1), Rational(1, 6));
  EXPECT_EQ(bernoulli_even(2), Rational(-1, 30));
  EXPECT_EQ(bernoulli_even(5), Rational(5, 66));
  EXPECT_EQ(bernoulli_even(6), Rational(-691, 2730));
}

TEST(Bernoulli, RecurrenceHoldsUpToThirty) {
  // sum_{j=0}^{n} C(n+1, j) B_j = 0, with B_0 = 1, B_1 = -1/2, odd B_j = 0.
  std::vector<Rational> b(61);
  b[0] = 1;
  b[1] = Rational(-1, 2);
  for (int k = 1; k <= 30; ++k) b[2 * k] = bernoulli_even(k);
  for (int n = 2; n <= 60; n += 2) {
    Rational sum = 0;
    Rational binom = 1;  // C(n+1, 0)
    for (int j = 0; j <= n; ++j) {
      sum += binom * b[j];
      binom = binom * (n + 1 - j) / (j + 1);
    }
    EXPECT_EQ(sum, 0) << n;
  }
  EXPECT_THROW(bernoulli_even(0), std::out_of_range);
  EXPECT_THROW(bernoulli_even(31), std::out_of_range);
}

TEST(Xi0, Values) {
  EXPECT_EQ(xi0(0.0), 0.0);
  EXPECT_NEAR(xi0(std::numbers::pi / 2), 1.0 - 2.0 / std::numbers::pi, 1e-15);
  EXPECT_NEAR(xi0_series_partial(0.3, 10), 1.0 / std::sin(0.3) - 1.0 / 0.3, 1e-12);
  EXPECT_NEAR(xi0(1e-6), 1e-6 / 6.0 + 7e-18 / 360.0, 1e-28);
}

TEST(Xi0, SeriesBranchJoinsClosedForm) {
  const double below = std::nextafter(0.25, 0.0);
  EXPECT_NEAR(xi0(below), 1.0 / std::sin(below) - 1.0 / below, 1e-15);
  EXPECT_NEAR(xi0_hyperbolic(below), 1.0 / std::sinh(below) - 1.0 / below, 1e-15);
  EXPECT_NEAR(xi0_hyperbolic(0.1), -0.1 / 6.0 + 7.0 * 1e-3 / 360.0, 1e-7);
  EXPECT_LT(xi0_hyperbolic(0.1), 0.0);
}

TEST(Xi0, OddSymmetry) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const double a = u(rng);
    EXPECT_EQ(xi0(-a), -xi0(a)) << a;
  }
}

TEST(Xi0, PoleAtResonance) {
  EXPECT_THROW(xi0(std::numbers::pi), PoleAtResonance);
  EXPECT_THROW(xi0(-2.0 * std::numbers::pi + 1e-9), PoleAtResonance);
  EXPECT_NO_THROW(xi0(std::numbers::pi - 1e-6));
}

TEST(Xi0, RecombinesToCosecant) {
  for (double a = 0.05; a < 3.0; a += 0.01) {
    EXPECT_NEAR(1.0 / a + xi0(a), 1.0 / std::sin(a), 1e-13 * (1.0 / std::sin(a))) << a;
  }
}

TEST(XiSeries, PrintedTruncations) {
  EXPECT_EQ(xi_series(1, 0.0), 0.0);
  EXPECT_EQ(xi_series(2, 0.0), 0.0);
  // exact rational evaluation of the printed coefficients at 1/10
  EXPECT_NEAR(xi_series(1, 0.1), 4.879093695265678e-06, 1e-20);
  EXPECT_NEAR(xi_series(2, 0.1), 1.2850974323512135e-08, 1e-22);
  EXPECT_NEAR(xi_series(2, 0.1), 31e-5 / 24192.0, 0.01 * 31e-5 / 24192.0);
  EXPECT_THROW(xi_series(1, 1.0), std::domain_error);
  EXPECT_THROW(xi_series(3, 0.1), std::domain_error);
}

TEST(XiPartial, Values) {
  EXPECT_NEAR(xi0_series_partial(0.5, 1), 0.5 / 6.0, 1e-16);
  EXPECT_LT(std::abs(xi0_series_partial(0.5, 8) - xi0(0.5)), 1e-10);
  for (int k = 0; k <= 10; ++k) EXPECT_EQ(xi0_series_partial(0.0, k), 0.0);
  EXPECT_THROW(xi0_series_partial(3.2, 4), std::domain_error);
}

TEST(XiPartial, MonotoneConvergence) {
  for (double a = 0.1; a <= 2.5; a += 0.1) {
    double prev = INFINITY;
    for (int k = 2; k <= 10; ++k) {
      const double err = std::abs(xi0_series_partial(a, k) - xi0(a));
      if (err < 1e-15) break;  // at rounding level
      EXPECT_LT(err, prev) << a << " " << k;
      prev = err;
    }
  }
}
