#include "critbase/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace critbase {

namespace {

void require_m(double m) {
  if (!(m > 1.0) || !(m <= 2.0))
    throw std::domain_error("parameter m must lie in (1,2], got " + std::to_string(m));
}

void require_binary(const EPWord& u) {
  if (contains(u, '2'))
    throw std::domain_error("expected a binary word, got " + u.str());
}

// Bisection for a strictly decreasing h with h(lo) >= 0 >= h(hi).
template <class F>
RootResult bisect_decreasing(F&& h, double lo, double hi, double tol) {
  for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    if (h(mid) > 0.0) lo = mid;
    else hi = mid;
  }
  return {0.5 * (lo + hi), hi - lo};
}

constexpr double kBracketLo = 1.0 + 1e-9;

}  // namespace

DigitValuation DigitValuation::ternary(double m) {
  require_m(m);
  return {{0.0, 1.0, m}};
}

DigitValuation DigitValuation::literal() { return {{0.0, 1.0, 2.0}}; }

double DigitValuation::operator()(char c) const {
  if (c < '0' || c > '2') throw std::domain_error("digit symbol out of range");
  return value[c - '0'];
}

double pi_beta_finite(const FiniteWord& w, double beta, const DigitValuation& val) {
  if (!(beta > 1.0)) throw std::domain_error("pi_beta requires beta > 1");
  double acc = 0.0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) acc = (acc + val(*it)) / beta;
  return acc;
}

double pi_beta(const EPWord& u, double beta, const DigitValuation& val) {
  if (!(beta > 1.0)) throw std::domain_error("pi_beta requires beta > 1");
  double head = pi_beta_finite(u.pre(), beta, val);
  double body = pi_beta_finite(u.per(), beta, val);
  double logb = std::log(beta);
  double denom = -std::expm1(-static_cast<double>(u.per().size()) * logb);  // 1 - beta^{-q}
  double scale = std::exp(-static_cast<double>(u.pre().size()) * logb);     // beta^{-p}
  return head + scale * body / denom;
}

RootResult solve_f_on_sup(const EPWord& sup, double m, double tol) {
  require_m(m);
  auto lit = DigitValuation::literal();
  auto h = [&](double x) { return x * pi_beta(sup, x, lit) - m; };
  double lo = kBracketLo;
  if (h(lo) <= 0.0) return {lo, lo - 1.0};  // root at or below the bracket floor
  double hi = 1.0 + m;
  for (int guard = 0; h(hi) > 0.0; ++guard) {
    if (guard > 64) throw std::runtime_error("solve_f: no sign change while expanding bracket");
    hi = 1.0 + 2.0 * (hi - 1.0);
  }
  return bisect_decreasing(h, lo, hi, tol);
}

RootResult solve_g_on_inf(const EPWord& inf, double m, double tol) {
  require_m(m);
  auto lit = DigitValuation::literal();
  // solve m/(x-1) - pi_x(inf) - 1 = 0, which is strictly decreasing in x
  auto h = [&](double x) { return m / (x - 1.0) - pi_beta(inf, x, lit) - 1.0; };
  double lo = kBracketLo;
  double hi = 1.0 + m;
  if (h(lo) <= 0.0) throw std::logic_error("solve_g: bracket floor not positive");
  return bisect_decreasing(h, lo, hi, tol);
}

RootResult solve_f_root(const EPWord& u, double m, double tol) {
  require_binary(u);
  if (!has_two_ones(u))
    throw std::domain_error("f_u requires a word with at least two ones, got " + u.str());
  return solve_f_on_sup(orbit_sup(u), m, tol);
}

RootResult solve_g_root(const EPWord& u, double m, double tol) {
  require_binary(u);
  return solve_g_on_inf(orbit_inf(u), m, tol);
}

double solve_f(const EPWord& u, double m, double tol) { return solve_f_root(u, m, tol).value; }
double solve_g(const EPWord& u, double m, double tol) { return solve_g_root(u, m, tol).value; }

RootResult solve_mu_root(const EPWord& u, double tol) {
  require_binary(u);
  if (!has_two_ones(u))
    throw std::domain_error("mu_u requires a word with at least two ones, got " + u.str());
  EPWord sup = orbit_sup(u);
  EPWord inf = orbit_inf(u);
  double itol = std::max(tol * 1e-3, 5e-16);
  auto diff = [&](double m) {
    return solve_f_on_sup(sup, m, itol).value - solve_g_on_inf(inf, m, itol).value;
  };
  double lo = kBracketLo, hi = 2.0;
  if (diff(hi) > 0.0) return {hi, 2.0 * itol};  // f and g cross at the domain edge m = 2
  if (diff(lo) <= 0.0) return {lo, 2.0 * itol};
  return bisect_decreasing(diff, lo, hi, tol * 0.5);
}

double solve_mu(const EPWord& u, double tol) { return solve_mu_root(u, tol).value; }

namespace {

// Root of pi_beta(w) = 1 in (1, 4]; pi is strictly decreasing in beta.
RootResult solve_pi_equals_one(const EPWord& w, double tol) {
  auto lit = DigitValuation::literal();
  auto h = [&](double x) { return pi_beta(w, x, lit) - 1.0; };
  double lo = kBracketLo, hi = 4.0;
  if (h(lo) <= 0.0 || h(hi) >= 0.0)
    throw std::domain_error("no root of pi_beta = 1 in (1,4] for " + w.str());
  return bisect_decreasing(h, lo, hi, tol);
}

// Push a root enclosure through a monotone map.
template <class F>
RootResult propagate(F&& fn, const RootResult& r) {
  double a = fn(r.value - 0.5 * r.bracket);
  double b = fn(r.value + 0.5 * r.bracket);
  return {fn(r.value), std::abs(b - a)};
}

}  // namespace

RootResult mu_sturmian_closed_form(const EPWord& v, double tol) {
  require_binary(v);
  RootResult beta = solve_pi_equals_one(prepend("20", v), tol * 0.25);
  return propagate([](double b) { return (b - 1.0) * (b - 1.0); }, beta);
}

RootResult mu_periodic_closed_form(const Directive& d, double tol) {
  Morphism mo = morphism_of(d);
  const FiniteWord& s0 = mo.image0;
  if (s0.size() < 2 || s0.front() != '0' || s0.back() != '1')
    throw std::domain_error("directive image of 0 must have the form 0w1, got " + s0);
  FiniteWord w = s0.substr(1, s0.size() - 2);
  RootResult beta = solve_pi_equals_one(EPWord("20" + w, "0"), tol * 0.25);
  double n = static_cast<double>(s0.size());
  auto mu_of = [n](double b) {
    double bn = std::pow(b, n);
    return (b - 1.0) * (b - 1.0) * bn / (bn - 1.0);
  };
  return propagate(mu_of, beta);
}

namespace {

FiniteWord thue_morse_shift_prefix(size_t n) {
  size_t k = 0;
  while ((size_t{1} << k) < n + 1) ++k;
  return limit_word_prefix(Directive(k, 'M'), n + 1).substr(1);
}

std::pair<double, double> pi_bounds_on_prefix(const FiniteWord& u, double beta) {
  double front = 0.0;
  for (auto it = u.rbegin(); it != u.rend(); ++it)
    front = (front + (*it - '0')) / beta;
  double tail = std::exp(-static_cast<double>(u.size()) * std::log(beta)) / (beta - 1.0);
  return {front, front + tail};
}

}  // namespace

std::pair<double, double> kl_pi_bounds(size_t prefix_len, double beta) {
  if (!(beta > 1.0)) throw std::domain_error("kl_pi_bounds requires beta > 1");
  return pi_bounds_on_prefix(thue_morse_shift_prefix(prefix_len), beta);
}

KLResult komornik_loreti_root(size_t prefix_len, double tol) {
  if (prefix_len < 32) throw std::domain_error("komornik_loreti_root requires prefix_len >= 32");
  if (!(tol > 0.0)) throw std::domain_error("tolerance must be positive");
  FiniteWord u = thue_morse_shift_prefix(prefix_len);
  double lo = 1.5, hi = 2.0;
  if (!(pi_bounds_on_prefix(u, lo).first > 1.0) || !(pi_bounds_on_prefix(u, hi).second < 1.0))
    throw std::logic_error("initial bracket for the Komornik-Loreti root failed");
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    auto [plo, phi] = pi_bounds_on_prefix(u, mid);
    if (plo > 1.0) {
      lo = mid;
    } else if (phi < 1.0) {
      hi = mid;
    } else {
      // the tail uncertainty straddles 1: this prefix cannot certify tol
      size_t need = static_cast<size_t>(
          std::ceil(std::log(4.0 / (tol * (mid - 1.0))) / std::log(mid)));
      throw std::runtime_error(
          "tolerance " + std::to_string(tol) + " unattainable at prefix length " +
          std::to_string(prefix_len) + "; a prefix of length about " +
          std::to_string(need) + " suffices");
    }
  }
  return {0.5 * (lo + hi), hi - lo, prefix_len};
}

}  // namespace critbase
