#pragma once

#include <cstddef>
#include <utility>

#include "critbase/words.hpp"

namespace critbase {

// Numeric values for the digit symbols.  In alphabet context '2' stands for
// the parameter m; in the closed-form equations it is the literal digit 2.
struct DigitValuation {
  double value[3];

  static DigitValuation ternary(double m);
  static DigitValuation literal();

  double operator()(char c) const;
};

// pi_beta(u) = sum u_k beta^{-k}, evaluated in closed form (no truncation).
double pi_beta(const EPWord& u, double beta, const DigitValuation& val);
// Value of the finite prefix alone: sum over the letters of w.
double pi_beta_finite(const FiniteWord& w, double beta, const DigitValuation& val);

struct RootResult {
  double value;
  double bracket;  // width of the final enclosing interval
};

// f_u(m): the base solving beta * pi_beta(sup O(u)) = m.  Requires a binary
// word with at least two ones and m in (1,2].
RootResult solve_f_root(const EPWord& u, double m, double tol);
double solve_f(const EPWord& u, double m, double tol = 1e-12);

// g_u(m): the base solving (beta-1)(1 + pi_beta(inf O(u))) = m.
RootResult solve_g_root(const EPWord& u, double m, double tol);
double solve_g(const EPWord& u, double m, double tol = 1e-12);

// mu_u: the unique m in (1,2] with f_u(m) = g_u(m), by bisection on the
// strictly decreasing difference.
RootResult solve_mu_root(const EPWord& u, double tol);
double solve_mu(const EPWord& u, double tol = 1e-12);

// Variants taking precomputed orbit extremes (the descent reuses them).
RootResult solve_f_on_sup(const EPWord& sup, double m, double tol);
RootResult solve_g_on_inf(const EPWord& inf, double m, double tol);

// mu for words u with inf(u) = 0v and sup(u) = 1v: solves pi_beta(20v) = 1
// with the literal digit 2 and returns (beta-1)^2.
RootResult mu_sturmian_closed_form(const EPWord& v, double tol = 1e-12);

// mu of sigma(0-bar) for a directive whose image of 0 has the form 0w1:
// solves pi_beta(20w 0-bar) = 1, returns (beta-1)^2 beta^n / (beta^n - 1)
// with n = |sigma(0)|.
RootResult mu_periodic_closed_form(const Directive& d, double tol = 1e-12);

struct KLResult {
  double value;
  double bracket;
  size_t prefix_len;
};

// Base solving pi_beta(u) = 1 for the shifted Thue-Morse word, evaluated on
// a length-prefix_len prefix with the tail bracketed between all-0 and all-1
// continuations.  Throws if the tolerance is unattainable at this prefix
// length (the message reports a sufficient length).
KLResult komornik_loreti_root(size_t prefix_len, double tol);

// Enclosure [lower, upper] of pi_beta on the shifted Thue-Morse word from a
// length-prefix_len prefix.
std::pair<double, double> kl_pi_bounds(size_t prefix_len, double beta);

}  // namespace critbase
