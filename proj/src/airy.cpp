#include "fermi1d/airy.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "fermi1d/error.hpp"

namespace fermi1d {

namespace {

constexpr double kAi0 = 0.355028053887817239260063186004;
constexpr double kAiPrime0 = -0.258819403792806798405183560189;
constexpr double kBi0 = 0.614926627446000735150922369094;
constexpr double kBiPrime0 = 0.448288357353826357914823710399;

constexpr double kSeriesEdge = 1.0;
constexpr double kAsymptoticEdge = 8.0;
constexpr double kNodeStep = 0.25;
constexpr int kNodeCount = 32;  // nodes at k * kNodeStep, k = 0..32

struct Pair {
  double y;
  double dy;
};

// Taylor expansion of a solution of y'' = z y about z0, evaluated at z0 + h.
// The coefficients follow from the ODE: (n+2)(n+1) c_{n+2} = z0 c_n + c_{n-1}.
Pair taylor(double z0, Pair at, double h) {
  double c_prev = at.y;    // c_{n-1}
  double c_cur = at.dy;    // c_n
  double c_prev2 = 0.0;    // c_{n-2}
  double y = at.y + at.dy * h;
  double dy = at.dy;
  double hp = h;  // h^n with n = 1
  // c_2
  double c_next = 0.5 * z0 * at.y;
  int quiet = 0;
  for (int n = 2; n < 60; ++n) {
    if (n > 2) c_next = (z0 * c_prev + c_prev2) / (n * (n - 1.0));
    const double dterm = n * c_next * hp;
    hp *= h;
    const double term = c_next * hp;
    y += term;
    dy += dterm;
    c_prev2 = c_prev;
    c_prev = c_cur;
    c_cur = c_next;
    // Series about 0 has every third coefficient zero, so require a run.
    const bool small = std::abs(term) <= 1e-18 * std::abs(y) && std::abs(dterm) <= 1e-18 * std::abs(dy);
    quiet = small ? quiet + 1 : 0;
    if (quiet >= 3) break;
  }
  return {y, dy};
}

// Coefficients u_k, v_k of the large-argument expansions.
struct Coefficients {
  std::array<double, 40> u{};
  std::array<double, 40> v{};
  Coefficients() {
    u[0] = v[0] = 1.0;
    for (int k = 1; k < 40; ++k) {
      u[k] = u[k - 1] * (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) / ((2.0 * k - 1) * 216.0 * k);
      v[k] = -(6.0 * k + 1) / (6.0 * k - 1) * u[k];
    }
  }
};

const Coefficients& coefficients() {
  static const Coefficients c;
  return c;
}

// Sum of s^k c_k over the chosen parity, stopping at the smallest term.
// parity -1 sums every k with sign s^k; 0/1 sums even/odd k with (-1)^(k/2).
double asymptotic_sum(const std::array<double, 40>& c, double zeta, double sign, int parity) {
  double sum = 0.0;
  double last = INFINITY;
  double zp = 1.0;
  for (int k = 0; k < 40; ++k) {
    double term = 0.0;
    if (parity < 0) {
      term = (k % 2 == 0 ? 1.0 : sign) * c[k] / zp;
    } else if (k % 2 == parity) {
      term = ((k / 2) % 2 == 0 ? 1.0 : -1.0) * c[k] / zp;
    }
    zp *= zeta;
    if (term == 0.0) continue;
    if (std::abs(term) >= last) break;
    sum += term;
    last = std::abs(term);
    if (last <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

Pair ai_asymptotic(double z) {
  const auto& c = coefficients();
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  if (z > 0.0) {
    const double q = std::sqrt(std::sqrt(z));
    const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
    const double e = std::exp(-zeta);
    return {0.5 * inv_sqrt_pi * e / q * asymptotic_sum(c.u, zeta, -1.0, -1),
            -0.5 * inv_sqrt_pi * q * e * asymptotic_sum(c.v, zeta, -1.0, -1)};
  }
  const double w = -z;
  const double q = std::sqrt(std::sqrt(w));
  const double zeta = 2.0 / 3.0 * w * std::sqrt(w);
  const double ph = zeta - 0.25 * std::numbers::pi;
  const double co = std::cos(ph);
  const double si = std::sin(ph);
  const double ue = asymptotic_sum(c.u, zeta, 0.0, 0), uo = asymptotic_sum(c.u, zeta, 0.0, 1);
  const double ve = asymptotic_sum(c.v, zeta, 0.0, 0), vo = asymptotic_sum(c.v, zeta, 0.0, 1);
  return {inv_sqrt_pi / q * (co * ue + si * uo), inv_sqrt_pi * q * (si * ve - co * vo)};
}

Pair bi_asymptotic(double z) {
  const auto& c = coefficients();
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  if (z > 0.0) {
    const double q = std::sqrt(std::sqrt(z));
    const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
    const double e = std::exp(zeta);
    return {inv_sqrt_pi * e / q * asymptotic_sum(c.u, zeta, 1.0, -1),
            inv_sqrt_pi * q * e * asymptotic_sum(c.v, zeta, 1.0, -1)};
  }
  const double w = -z;
  const double q = std::sqrt(std::sqrt(w));
  const double zeta = 2.0 / 3.0 * w * std::sqrt(w);
  const double ph = zeta - 0.25 * std::numbers::pi;
  const double co = std::cos(ph);
  const double si = std::sin(ph);
  const double ue = asymptotic_sum(c.u, zeta, 0.0, 0), uo = asymptotic_sum(c.u, zeta, 0.0, 1);
  const double ve = asymptotic_sum(c.v, zeta, 0.0, 0), vo = asymptotic_sum(c.v, zeta, 0.0, 1);
  return {inv_sqrt_pi / q * (-si * ue + co * uo), inv_sqrt_pi * q * (co * ve + si * vo)};
}

// Values at the nodes +-k*kNodeStep. Each side is filled by stepping in the
// direction in which the wanted solution does not decay: Ai on the positive
// side is stepped down from the asymptotic value at the outer edge.
struct NodeTable {
  std::array<Pair, kNodeCount + 1> pos{};
  std::array<Pair, kNodeCount + 1> neg{};
};

NodeTable build_ai_nodes() {
  NodeTable t;
  t.neg[0] = t.pos[0] = {kAi0, kAiPrime0};
  for (int k = 1; k <= kNodeCount; ++k) {
    t.neg[k] = taylor(-(k - 1) * kNodeStep, t.neg[k - 1], -kNodeStep);
  }
  t.pos[kNodeCount] = ai_asymptotic(kNodeCount * kNodeStep);
  for (int k = kNodeCount - 1; k >= 1; --k) {
    t.pos[k] = taylor((k + 1) * kNodeStep, t.pos[k + 1], -kNodeStep);
  }
  return t;
}

NodeTable build_bi_nodes() {
  NodeTable t;
  t.neg[0] = t.pos[0] = {kBi0, kBiPrime0};
  for (int k = 1; k <= kNodeCount; ++k) {
    t.neg[k] = taylor(-(k - 1) * kNodeStep, t.neg[k - 1], -kNodeStep);
    t.pos[k] = taylor((k - 1) * kNodeStep, t.pos[k - 1], kNodeStep);
  }
  return t;
}

Pair evaluate(double z, Pair at_zero, const NodeTable& nodes, Pair (*asymptotic)(double)) {
  const double w = std::abs(z);
  if (w <= kSeriesEdge) return taylor(0.0, at_zero, z);
  if (w >= kAsymptoticEdge) return asymptotic(z);
  const int k = static_cast<int>(std::lround(w / kNodeStep));
  const double z0 = std::copysign(k * kNodeStep, z);
  const Pair& base = z > 0.0 ? nodes.pos[k] : nodes.neg[k];
  return taylor(z0, base, z - z0);
}

// Bernoulli numbers B_0..B_60 (Akiyama-Tanigawa), computed once.
const std::vector<Rational>& bernoulli_table() {
  static const std::vector<Rational> table = [] {
    constexpr int n_max = 60;
    std::vector<Rational> out(n_max + 1);
    std::vector<Rational> a(n_max + 1);
    for (int m = 0; m <= n_max; ++m) {
      a[m] = Rational(1, m + 1);
      for (int j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
      out[m] = a[0];
    }
    return out;
  }();
  return table;
}

// Coefficients c_k of csc(a) - 1/a = sum_k c_k a^(2k-1), all positive.
const std::array<double, 31>& xi0_coefficients() {
  static const std::array<double, 31> c = [] {
    std::array<double, 31> out{};
    Rational factorial = 1;
    for (int k = 1; k <= 30; ++k) {
      factorial *= (2 * k - 1) * (2 * k);
      Rational pow2 = 1;
      for (int i = 0; i < 2 * k - 1; ++i) pow2 *= 2;
      Rational ck = 2 * (pow2 - 1) * bernoulli_even(k) / factorial;
      if (k % 2 == 0) ck = -ck;
      out[k] = static_cast<double>(ck);
    }
    return out;
  }();
  return c;
}

// sum_{k<=terms} c_k sign^(k-1) x^(2k-1)
double bernoulli_series(double x, int terms, double sign) {
  const auto& c = xi0_coefficients();
  const double x2 = x * x;
  double power = x;
  double s = 1.0;
  double sum = 0.0;
  for (int k = 1; k <= terms; ++k) {
    sum += s * c[k] * power;
    power *= x2;
    s *= sign;
  }
  return sum;
}

constexpr double kSeriesAngle = 0.25;
constexpr int kSeriesTerms = 12;

}  // namespace

AiryPair airy(double z) {
  static const NodeTable nodes = build_ai_nodes();
  const Pair p = evaluate(z, {kAi0, kAiPrime0}, nodes, &ai_asymptotic);
  return {p.y, p.dy, z};
}

double airy_ai(double z) { return airy(z).ai; }
double airy_ai_prime(double z) { return airy(z).ai_prime; }

namespace detail {
AiryPair airy_bi(double z) {
  static const NodeTable nodes = build_bi_nodes();
  const Pair p = evaluate(z, {kBi0, kBiPrime0}, nodes, &bi_asymptotic);
  return {p.y, p.dy, z};
}
}  // namespace detail

Rational bernoulli_even(int k) {
  if (k < 1 || k > 30) throw std::out_of_range("bernoulli_even: k must be in [1, 30]");
  return bernoulli_table()[2 * k];
}

double xi0(double alpha) {
  const double n = std::round(alpha / std::numbers::pi);
  if (n != 0.0 && std::abs(alpha - n * std::numbers::pi) < 1e-8) {
    throw PoleAtResonance("xi0: alpha=" + std::to_string(alpha) + " is at a pole of csc");
  }
  if (std::abs(alpha) < kSeriesAngle) return bernoulli_series(alpha, kSeriesTerms, 1.0);
  return 1.0 / std::sin(alpha) - 1.0 / alpha;
}

double xi0_hyperbolic(double x) {
  if (std::abs(x) < kSeriesAngle) return -bernoulli_series(x, kSeriesTerms, -1.0);
  return 1.0 / std::sinh(x) - 1.0 / x;
}

double xi_series(int j, double alpha) {
  if (!(std::abs(alpha) < 1.0)) throw std::domain_error("xi_series: needs |alpha| < 1");
  struct Term {
    double num;
    double den;
    int power;
  };
  static constexpr std::array<Term, 6> first = {{{7, 1440, 3},
                                                 {31, 17280, 5},
                                                 {127, 302400, 7},
                                                 {21127, 27371520, 9},
                                                 {32532971, 2615348736000.0, 11},
                                                 {548797, 298896998400.0, 13}}};
  static constexpr std::array<Term, 6> second = {{{31, 24192, 5},
                                                  {127, 345600, 7},
                                                  {73, 1013760, 9},
                                                  {1414477, 11887948800.0, 11},
                                                  {8191, 4598415360.0, 13},
                                                  {16931177, 67749986304000.0, 15}}};
  const std::array<Term, 6>* terms = nullptr;
  if (j == 1) terms = &first;
  else if (j == 2) terms = &second;
  else throw std::domain_error("xi_series: j must be 1 or 2");
  double sum = 0.0;
  for (const Term& t : *terms) sum += t.num / t.den * std::pow(alpha, t.power);
  return sum;
}

double xi0_series_partial(double alpha, int terms) {
  if (!(std::abs(alpha) < std::numbers::pi)) {
    throw std::domain_error("xi0_series_partial: needs |alpha| < pi");
  }
  if (terms < 0 || terms > 30) throw std::domain_error("xi0_series_partial: terms must be in [0, 30]");
  return bernoulli_series(alpha, terms, 1.0);
}

}  // namespace fermi1d
