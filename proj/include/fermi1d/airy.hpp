#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fermi1d {

/// Ai and Ai' at one argument.
struct AiryPair {
  double ai = 0.0;
  double ai_prime = 0.0;
  double argument = 0.0;
};

/// Airy function of the first kind on the whole real line.
///
/// |z| <= 1 uses the Maclaurin series, 1 < |z| < 8 a short Taylor step from
/// a precomputed node table, and |z| >= 8 the large-argument expansions.
/// Large positive z underflows to 0.
AiryPair airy(double z);
double airy_ai(double z);
double airy_ai_prime(double z);

namespace detail {
/// Bi and Bi' packed in an AiryPair; only used for Wronskian checks.
AiryPair airy_bi(double z);
}  // namespace detail

using Rational = boost::multiprecision::cpp_rational;

/// Exact B_{2k} for 1 <= k <= 30 (std::out_of_range otherwise).
Rational bernoulli_even(int k);

/// csc(alpha) - 1/alpha. Series below |alpha| = 0.25. Throws PoleAtResonance
/// within 1e-8 of n pi, n != 0.
double xi0(double alpha);

/// csch(x) - 1/x, the continuation of xi0 to imaginary angles:
/// xi0(i x) = -i (csch(x) - 1/x).
double xi0_hyperbolic(double x);

/// The truncated polynomials for xi_1 (j=1) and xi_2 (j=2), valid for
/// |alpha| < 1 (std::domain_error otherwise, also for other j).
double xi_series(int j, double alpha);

/// First `terms` terms of the Bernoulli series of csc(a) - 1/a; |alpha| < pi.
double xi0_series_partial(double alpha, int terms);

}  // namespace fermi1d
