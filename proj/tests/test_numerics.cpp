#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "critbase/numerics.hpp"
#include "critbase/words.hpp"

using namespace critbase;

namespace {

EPWord W(const std::string& literal) { return EPWord::parse(literal); }

// Truncation oracle: partial sum of the series plus a rigorous tail bound.
std::pair<double, double> pi_truncated(const EPWord& u, double beta,
                                       const DigitValuation& val, size_t terms) {
  double acc = 0.0, scale = 1.0;
  for (size_t k = 0; k < terms; ++k) {
    scale /= beta;
    acc += val(u.at(k)) * scale;
  }
  double tail = scale / (beta - 1.0) * 2.0;  // digits are at most 2
  return {acc, tail};
}

EPWord random_binary_ep(std::mt19937& rng, size_t max_pre = 5, size_t max_per = 5) {
  std::uniform_int_distribution<size_t> pre_len(0, max_pre), per_len(1, max_per);
  std::uniform_int_distribution<int> bit(0, 1);
  std::string pre, per;
  size_t np = pre_len(rng), nq = per_len(rng);
  for (size_t i = 0; i < np; ++i) pre += static_cast<char>('0' + bit(rng));
  for (size_t i = 0; i < nq; ++i) per += static_cast<char>('0' + bit(rng));
  return EPWord(pre, per);
}

// slope of h around x, for residual checks
template <class F>
double slope(F&& h, double x) {
  double d = 1e-6;
  return std::abs(h(x + d) - h(x - d)) / (2 * d);
}

}  // namespace

TEST_CASE("pi_beta closed form") {
  auto lit = DigitValuation::literal();
  CHECK(pi_beta(W("(1)"), 2.0, lit) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(pi_beta(W("1(0)"), 2.5, lit) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(pi_beta(W("(10)"), 2.0, lit) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(pi_beta(W("(1)"), 1.0, lit), std::domain_error);
}

TEST_CASE("pi_beta agrees with the truncated series") {
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> betas(1.2, 3.5);
  auto val = DigitValuation::ternary(1.5);
  for (int i = 0; i < 200; ++i) {
    EPWord u = random_binary_ep(rng);
    double beta = betas(rng);
    auto [approx, tail] = pi_truncated(u, beta, val, 300);
    CHECK(std::abs(pi_beta(u, beta, val) - approx) <= tail + 1e-12);
  }
}

TEST_CASE("pi_beta shift identity") {
  std::mt19937 rng(103);
  std::uniform_real_distribution<double> betas(1.3, 3.0);
  auto lit = DigitValuation::literal();
  for (int i = 0; i < 200; ++i) {
    EPWord u = random_binary_ep(rng);
    double beta = betas(rng);
    double whole = pi_beta(u, beta, lit);
    double shifted = pi_beta(shift(u, 1), beta, lit);
    double a = u.at(0) - '0';
    CHECK(whole == doctest::Approx(a / beta + shifted / beta).epsilon(1e-12));
  }
}

TEST_CASE("solve_f on words with closed-form solutions") {
  for (double m : {1.1, 1.4, 1.7, 2.0}) {
    CHECK(solve_f(W("(1)"), m) == doctest::Approx(m / (m - 1.0)).epsilon(1e-11));
    CHECK(solve_f(W("0(1)"), m) == doctest::Approx(m / (m - 1.0)).epsilon(1e-11));
  }
  CHECK(solve_f(W("(1)"), 2.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(solve_f(W("1(0)"), 1.5), std::domain_error);
}

TEST_CASE("solve_g on words with closed-form solutions") {
  for (double m : {1.1, 1.4, 1.7, 2.0}) {
    CHECK(solve_g(W("1(0)"), m) == doctest::Approx(1.0 + m).epsilon(1e-12));
    double expected = (m + 1.0 + std::sqrt(m * m + 2.0 * m - 3.0)) / 2.0;
    CHECK(solve_g(W("0(1)"), m) == doctest::Approx(expected).epsilon(1e-11));
  }
  CHECK(solve_g(W("0(1)"), 2.0) ==
        doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));
}

TEST_CASE("solver residuals stay within the tolerance times the local slope") {
  std::mt19937 rng(107);
  std::uniform_real_distribution<double> ms(1.05, 2.0);
  auto lit = DigitValuation::literal();
  double tol = 1e-12;
  int used = 0;
  for (int i = 0; i < 100; ++i) {
    EPWord u = random_binary_ep(rng);
    double m = ms(rng);
    if (has_two_ones(u)) {
      EPWord sup = orbit_sup(u);
      auto hf = [&](double x) { return x * pi_beta(sup, x, lit) - m; };
      double f = solve_f(u, m, tol);
      if (f > 1.0 + 2e-9) {
        CHECK(std::abs(hf(f)) <= 10 * tol * std::max(1.0, slope(hf, f)));
        ++used;
      }
    }
    EPWord inf = orbit_inf(u);
    auto hg = [&](double x) { return m / (x - 1.0) - pi_beta(inf, x, lit) - 1.0; };
    double g = solve_g(u, m, tol);
    CHECK(std::abs(hg(g)) <= 10 * tol * std::max(1.0, slope(hg, g)));
  }
  CHECK(used > 20);
}

TEST_CASE("f decreases and g increases in m; max(f,g) >= 2") {
  std::mt19937 rng(109);
  std::uniform_real_distribution<double> ms(1.02, 2.0);
  for (int i = 0; i < 120; ++i) {
    EPWord u = random_binary_ep(rng);
    if (!has_two_ones(u)) continue;
    double m1 = ms(rng), m2 = ms(rng);
    if (m1 > m2) std::swap(m1, m2);
    if (m2 - m1 < 1e-6) continue;
    CHECK(solve_f(u, m1) > solve_f(u, m2) - 1e-9);
    CHECK(solve_g(u, m1) < solve_g(u, m2) + 1e-9);
    CHECK(std::max(solve_f(u, m1), solve_g(u, m1)) >= 2.0 - 1e-9);
  }
}

TEST_CASE("f is monotone in the orbit supremum above 2") {
  std::mt19937 rng(113);
  std::uniform_real_distribution<double> ms(1.05, 2.0);
  for (int i = 0; i < 150; ++i) {
    EPWord u = random_binary_ep(rng), v = random_binary_ep(rng);
    if (!has_two_ones(u) || !has_two_ones(v)) continue;
    double m = ms(rng);
    EPWord su = orbit_sup(u), sv = orbit_sup(v);
    if (!(su < sv)) continue;
    double fu = solve_f(u, m);
    if (fu >= 2.0) CHECK(fu < solve_f(v, m) + 1e-9);
    EPWord iu = orbit_inf(u), iv = orbit_inf(v);
    if (iu < iv) {
      double gv = solve_g(v, m);
      if (gv >= 2.0) CHECK(solve_g(u, m) > gv - 1e-9);
    }
  }
}

TEST_CASE("mu values quoted for the sigma = M plateaus") {
  CHECK(solve_mu(W("0(01)")) == doctest::Approx(1.281972).epsilon(1e-5));
  CHECK(solve_mu(W("0110(01)")) == doctest::Approx(1.46811).epsilon(1e-5));
  CHECK(solve_mu(W("001(10)")) == doctest::Approx(1.516574).epsilon(1e-5));
  CHECK(solve_mu(W("1(10)")) == doctest::Approx(1.55496).epsilon(1e-5));
  CHECK(solve_mu(W("001(0110)")) == doctest::Approx(1.47571).epsilon(1e-5));
}

TEST_CASE("mu of (1) sits at the domain edge m = 2") {
  // f and g of (1) only meet at m = 2: f = m/(m-1), g = m
  CHECK(solve_mu(EPWord::parse("(1)")) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("sturmian closed form matches the generic mu solver") {
  double tol = 1e-12;
  CHECK(mu_sturmian_closed_form(W("(0)"), tol).value == doctest::Approx(1.0).epsilon(1e-12));
  double via_closed = mu_sturmian_closed_form(W("(01)"), tol).value;
  double via_solver = solve_mu(W("0(01)"), tol);
  CHECK(std::abs(via_closed - via_solver) <= 2 * tol);
  CHECK(mu_sturmian_closed_form(W("(1)"), tol).value == doctest::Approx(1.7549).epsilon(1e-4));
}

TEST_CASE("periodic closed form matches the generic mu solver") {
  double tol = 1e-12;
  CHECK(mu_periodic_closed_form("M", tol).value == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(mu_periodic_closed_form("LM", tol).value == doctest::Approx(8.0 / 7.0).epsilon(1e-12));
  CHECK_THROWS_AS(mu_periodic_closed_form("MM", tol), std::domain_error);
  CHECK_THROWS_AS(mu_periodic_closed_form("", tol), std::domain_error);

  // two independent routes for sigma in {L,R}*M
  for (const Directive& d : {Directive("M"), Directive("RM"), Directive("LM"),
                             Directive("LRM"), Directive("RLM"), Directive("RRM"),
                             Directive("LLRM")}) {
    EPWord word("", morphism_of(d).image0);
    double closed = mu_periodic_closed_form(d, tol).value;
    double generic = solve_mu(word, tol);
    CHECK(std::abs(closed - generic) <= 2 * tol);
  }
}

TEST_CASE("Komornik-Loreti root") {
  auto r = komornik_loreti_root(64, 1e-9);
  CHECK(r.value >= 1.7872);
  CHECK(r.value <= 1.7873);
  CHECK(r.bracket <= 1e-9);

  auto at2 = kl_pi_bounds(64, 2.0);
  CHECK(at2.second < 1.0);
  auto at15 = kl_pi_bounds(64, 1.5);
  CHECK(at15.first > 1.0);

  CHECK_THROWS_AS(komornik_loreti_root(16, 1e-9), std::domain_error);
  CHECK_THROWS_AS(komornik_loreti_root(32, 1e-12), std::runtime_error);
}
