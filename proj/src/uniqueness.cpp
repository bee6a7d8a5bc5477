#include "critbase/uniqueness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "critbase/numerics.hpp"

namespace critbase {

namespace {

void require_m(double m) {
  if (!(m > 1.0) || !(m <= 2.0))
    throw std::domain_error("parameter m must lie in (1,2], got " + std::to_string(m));
}

HoleGeometry holes_raw(double beta, double m) {
  double a = 1.0 / beta;
  double b = m / (beta * (beta - 1.0));
  return {a, b, m / beta, a + b, m / (beta - 1.0)};
}

bool interval_hits_hole(double lo, double hi, const HoleGeometry& h) {
  // true if [lo,hi] meets a (possibly empty) hole
  bool one = h.h1_lo <= h.h1_hi && hi >= h.h1_lo && lo <= h.h1_hi;
  bool two = h.h2_lo <= h.h2_hi && hi >= h.h2_lo && lo <= h.h2_hi;
  return one || two;
}

bool interval_inside_hole(double lo, double hi, const HoleGeometry& h) {
  bool one = lo >= h.h1_lo && hi <= h.h1_hi;
  bool two = lo >= h.h2_lo && hi <= h.h2_hi;
  return one || two;
}

}  // namespace

std::string uniqueness_name(Uniqueness u) {
  switch (u) {
    case Uniqueness::unique: return "unique";
    case Uniqueness::not_unique: return "not_unique";
    case Uniqueness::boundary: return "boundary";
  }
  throw std::logic_error("unreachable");
}

HoleGeometry holes(double beta, double m) {
  require_m(m);
  if (!(beta > 1.0) || !(beta <= 1.0 + m))
    throw std::domain_error("holes require beta in (1, 1+m]");
  return holes_raw(beta, m);
}

Verdict is_unique(const EPWord& u, double beta, double m, double tau) {
  HoleGeometry h = holes(beta, m);
  auto val = DigitValuation::ternary(m);
  const double ends[4] = {h.h1_lo, h.h1_hi, h.h2_lo, h.h2_hi};
  size_t boundary_at = 0;
  for (size_t k = 0; k < u.span(); ++k) {
    double x = pi_beta(shift(u, k), beta, val);
    bool near = false;
    for (double e : ends) near = near || std::abs(x - e) <= tau;
    if (near) {
      if (boundary_at == 0) boundary_at = k + 1;
      continue;
    }
    if ((x > h.h1_lo && x < h.h1_hi) || (x > h.h2_lo && x < h.h2_hi))
      return {Uniqueness::not_unique, k + 1};
  }
  if (boundary_at) return {Uniqueness::boundary, boundary_at};
  return {Uniqueness::unique, 0};
}

Verdict binary_membership_via_fg(const EPWord& u, double beta, double m, double tol,
                                 double tau) {
  require_m(m);
  if (!(beta > 1.0) || !(beta <= 1.0 + m))
    throw std::domain_error("the f/g criterion applies for beta in (1, 1+m]");
  if (contains(u, '2') || u.at(0) != '1')
    throw std::domain_error("the f/g criterion needs a binary word starting with 1");
  if (u == EPWord("1", "0"))
    throw std::domain_error("the word 1(0) is excluded from the f/g criterion");
  auto [sup, spos] = orbit_sup_pos(u);
  auto [inf, ipos] = orbit_inf_pos(u);
  double f = solve_f_on_sup(sup, m, tol).value;
  double g = solve_g_on_inf(inf, m, tol).value;
  double mx = std::max(f, g);
  size_t wpos = f >= g ? spos : ipos;
  if (beta > mx + tau) return {Uniqueness::unique, 0};
  if (beta < mx - tau) return {Uniqueness::not_unique, wpos};
  return {Uniqueness::boundary, wpos};
}

namespace {

struct BlockValue {
  double pi;      // sum of the block digits at scale 1
  double shrink;  // beta^{-|block|}
  size_t len;
};

BlockValue block_value(const FiniteWord& b, double beta) {
  double acc = 0.0;
  for (auto it = b.rbegin(); it != b.rend(); ++it) acc = (acc + (*it - '0')) / beta;
  return {acc, std::pow(beta, -static_cast<double>(b.size())), b.size()};
}

struct Node {
  double value;  // pi of the known prefix
  double scale;  // beta^{-len}
  size_t len;
};

enum class Fate { safe, dead, open };

Fate classify(const Node& n, double beta, const HoleGeometry& h) {
  double lo = n.value;
  double hi = n.value + n.scale / (beta - 1.0);
  if (!interval_hits_hole(lo, hi, h)) return Fate::safe;
  if (interval_inside_hole(lo, hi, h)) return Fate::dead;
  return Fate::open;
}

}  // namespace

Certificate pair_certificate(const FiniteWord& v, const FiniteWord& w, double beta,
                             double m, size_t horizon) {
  require_m(m);
  if (!(beta > 1.0)) throw std::domain_error("pair_certificate requires beta > 1");
  if (v.empty() || w.empty() || v == w || !is_binary_word(v) || !is_binary_word(w))
    throw std::domain_error("pair_certificate needs two distinct nonempty binary blocks");
  HoleGeometry h = holes_raw(beta, m);
  BlockValue bv = block_value(v, beta);
  BlockValue bw = block_value(w, beta);

  // One search per suffix start (block, offset); extensions append blocks.
  std::vector<Node> stack;
  for (const FiniteWord* b : {&v, &w}) {
    for (size_t o = 0; o < b->size(); ++o) {
      BlockValue t = block_value(b->substr(o), beta);
      stack.push_back({t.pi, t.shrink, t.len});
    }
  }
  size_t explored = 0;
  const size_t node_cap = size_t{1} << 22;
  while (!stack.empty()) {
    Node n = stack.back();
    stack.pop_back();
    if (++explored > node_cap) return Certificate::unknown;
    switch (classify(n, beta, h)) {
      case Fate::safe:
        break;
      case Fate::dead:
        return Certificate::unknown;
      case Fate::open:
        if (n.len >= horizon) return Certificate::unknown;
        stack.push_back({n.value + n.scale * bv.pi, n.scale * bv.shrink, n.len + bv.len});
        stack.push_back({n.value + n.scale * bw.pi, n.scale * bw.shrink, n.len + bw.len});
        break;
    }
  }
  return Certificate::certified;
}

double hutchinson_dim(size_t len_v, size_t len_w, double beta, double tol) {
  if (len_v < 1 || len_w < 1) throw std::domain_error("block lengths must be >= 1");
  if (!(beta > 1.0)) throw std::domain_error("hutchinson_dim requires beta > 1");
  auto moran = [&](double r) {
    return std::pow(beta, -static_cast<double>(len_v) * r) +
           std::pow(beta, -static_cast<double>(len_w) * r) - 1.0;
  };
  double lo = 0.0, hi = 1.0;
  for (int guard = 0; moran(hi) > 0.0; ++guard) {
    if (guard > 200) throw std::runtime_error("hutchinson_dim bracket expansion failed");
    hi *= 2.0;
  }
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (moran(mid) > 0.0) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

struct CensusState {
  std::vector<double> value;  // per live suffix: pi of the known part
  std::vector<double> scale;  // per live suffix: beta^{-(known letters)}
};

void census_walk(double beta, const HoleGeometry& h, size_t depth, size_t max_depth,
                 CensusState& st, std::vector<unsigned long long>& counts,
                 unsigned long long cap) {
  if (depth > 0) {
    if (++counts[depth - 1] > cap)
      throw std::runtime_error("survivor census exceeded the node cap; lower the depth");
  }
  if (depth == max_depth) return;
  for (char d : {'0', '1'}) {
    CensusState next = st;
    double digit = d - '0';
    bool excluded = false;
    for (size_t k = 0; k < next.value.size(); ++k) {
      next.value[k] += digit * next.scale[k] / beta;
      next.scale[k] /= beta;
    }
    next.value.push_back(digit / beta);
    next.scale.push_back(1.0 / beta);
    for (size_t k = 0; k < next.value.size() && !excluded; ++k) {
      double lo = next.value[k];
      double hi = lo + next.scale[k] / (beta - 1.0);
      excluded = interval_inside_hole(lo, hi, h);
    }
    if (!excluded) census_walk(beta, h, depth + 1, max_depth, next, counts, cap);
  }
}

}  // namespace

std::vector<CensusRow> survivor_census(double beta, double m, size_t max_depth,
                                       unsigned long long cap) {
  require_m(m);
  if (!(beta > 1.0)) throw std::domain_error("survivor_census requires beta > 1");
  if (max_depth < 1 || max_depth > 64)
    throw std::domain_error("census depth must lie in [1, 64]");
  HoleGeometry h = holes_raw(beta, m);
  std::vector<unsigned long long> counts(max_depth, 0);
  CensusState st;
  census_walk(beta, h, 0, max_depth, st, counts, cap);
  std::vector<CensusRow> rows;
  rows.reserve(max_depth);
  for (size_t d = 0; d < max_depth; ++d) rows.push_back({d + 1, counts[d]});
  return rows;
}

}  // namespace critbase
