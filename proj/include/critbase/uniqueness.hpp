#pragma once

#include <cstddef>
#include <vector>

#include "critbase/words.hpp"

namespace critbase {

// The two forbidden intervals of the branching beta-transformation: a value
// of pi_beta landing in either hole admits a second expansion.
struct HoleGeometry {
  double h1_lo;      // 1/beta
  double h1_hi;      // m/(beta(beta-1))
  double h2_lo;      // m/beta
  double h2_hi;      // 1/beta + m/(beta(beta-1))
  double domain_hi;  // m/(beta-1)
};

// Requires beta in (1, 1+m]; both holes are then nonempty.
HoleGeometry holes(double beta, double m);

enum class Uniqueness { unique, not_unique, boundary };

std::string uniqueness_name(Uniqueness u);

struct Verdict {
  Uniqueness status;
  size_t witness_position;  // 1-based suffix index, 0 when none applies
};

// Dynamical membership oracle: u (over {0,1,2} with '2' valued m) is in
// U_beta(m) iff no suffix value lands in a hole.  Values within tau of a
// hole endpoint give the verdict "boundary" instead of a guess.
Verdict is_unique(const EPWord& u, double beta, double m, double tau = 1e-9);

// Membership criterion for binary words starting with 1 (not 1(0)), via
// comparison of beta with max(f_u(m), g_u(m)).  Requires beta in (1, 1+m].
Verdict binary_membership_via_fg(const EPWord& u, double beta, double m,
                                 double tol = 1e-12, double tau = 1e-9);

enum class Certificate { certified, unknown };

// Checks that every suffix of every infinite concatenation of the blocks v
// and w avoids both holes, using enclosures that bracket unknown tails
// between all-0 and all-1 continuations.  "certified" implies {v,w}^inf is
// contained in U_beta(m), an uncountable family when vw != wv.  "unknown" is
// returned when a pattern reaches `horizon` letters unresolved or some
// enclosure lies inside a hole.
Certificate pair_certificate(const FiniteWord& v, const FiniteWord& w, double beta,
                             double m, size_t horizon = 64);

// The exponent r > 0 solving beta^{-len_v * r} + beta^{-len_w * r} = 1.
double hutchinson_dim(size_t len_v, size_t len_w, double beta, double tol = 1e-13);

struct CensusRow {
  size_t depth;
  unsigned long long survivors;
};

// Upper-bound census: number of binary prefixes of each length that are not
// yet excluded by an enclosure fully inside a hole.  Diagnostic only; tail
// uncertainty means exclusion at fixed depth is one-sided.
std::vector<CensusRow> survivor_census(double beta, double m, size_t max_depth,
                                       unsigned long long cap = 1ull << 22);

}  // namespace critbase
