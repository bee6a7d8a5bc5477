#include "critbase/critical.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <stdexcept>

namespace critbase {

std::string case_kind_name(CaseKind k) {
  switch (k) {
    case CaseKind::PlateauG: return "PlateauG";
    case CaseKind::PlateauF: return "PlateauF";
    case CaseKind::TopG: return "TopG";
    case CaseKind::LimitPoint: return "LimitPoint";
  }
  throw std::logic_error("unreachable");
}

std::string case_label(const CriticalCase& c) {
  std::string s = case_kind_name(c.kind);
  if (!c.directive.empty()) s += ":" + c.directive;
  return s;
}

bool BreakpointCache::lookup(const std::string& key, Breakpoints* out) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = map_.find(key);
  if (it == map_.end()) return false;
  *out = it->second;
  return true;
}

void BreakpointCache::store(const std::string& key, const Breakpoints& b) {
  std::lock_guard<std::mutex> lock(mutex_);
  map_[key] = b;
}

namespace {

void require_m(double m) {
  if (!(m > 1.0) || !(m <= 2.0))
    throw std::domain_error("parameter m must lie in (1,2], got " + std::to_string(m));
}

void require_params(const DescentParams& p) {
  if (!(p.tol > 0.0) || !(p.tau > 0.0) || p.max_depth < 1)
    throw std::domain_error("descent parameters must satisfy tol > 0, tau > 0, max_depth >= 1");
}

const EPWord& core_10() { static const EPWord w("1", "0"); return w; }
const EPWord& core_010() { static const EPWord w("01", "0"); return w; }
const EPWord& core_101() { static const EPWord w("10", "1"); return w; }
const EPWord& core_01() { static const EPWord w("0", "1"); return w; }
const EPWord& core_0bar() { static const EPWord w("", "0"); return w; }

size_t image_size(const Morphism& mo, const FiniteWord& w) {
  size_t ones = static_cast<size_t>(std::count(w.begin(), w.end(), '1'));
  return ones * mo.image1.size() + (w.size() - ones) * mo.image0.size();
}

size_t image_span(const Morphism& mo, const EPWord& u) {
  return image_size(mo, u.pre()) + image_size(mo, u.per());
}

double mu_top(const DescentParams& p, BreakpointCache* cache) {
  Breakpoints b;
  if (cache && cache->lookup("top", &b)) return b.mu[0];
  double v = solve_mu(core_01(), p.tol);
  if (cache) cache->store("top", Breakpoints{{v, v, v, v}});
  return v;
}

void check_order(const Breakpoints& b, const Directive& node, double tau) {
  for (int i = 0; i + 1 < 4; ++i) {
    if (!(b.mu[i] <= b.mu[i + 1] + tau))
      throw std::logic_error("breakpoint ordering violated at node '" + node + "'");
  }
}

std::optional<Breakpoints> breakpoints_L(const Directive& child, const DescentParams& p,
                                         BreakpointCache* cache) {
  std::string key = "L:" + child;
  Breakpoints b;
  if (cache && cache->lookup(key, &b)) return b;
  Morphism mo = morphism_of(child);
  const EPWord* cores[4] = {&core_10(), &core_010(), &core_101(), &core_01()};
  for (const EPWord* c : cores)
    if (image_span(mo, *c) > p.word_cap) return std::nullopt;
  for (int i = 0; i < 4; ++i) b.mu[i] = solve_mu(apply(mo, *cores[i]), p.tol);
  check_order(b, child, p.tau);
  if (cache) cache->store(key, b);
  return b;
}

std::optional<Breakpoints> breakpoints_G(const Directive& child, const DescentParams& p,
                                         BreakpointCache* cache) {
  std::string key = "G:" + child;
  Breakpoints b;
  if (cache && cache->lookup(key, &b)) return b;
  Morphism mo = morphism_of(child);
  const EPWord* cores[3] = {&core_10(), &core_0bar(), &core_01()};
  for (const EPWord* c : cores)
    if (image_span(mo, *c) > p.word_cap) return std::nullopt;
  b.mu[0] = solve_mu(apply(mo, core_10()), p.tol);
  b.mu[1] = b.mu[2] = solve_mu(apply(mo, core_0bar()), p.tol);
  b.mu[3] = solve_mu(apply(mo, core_01()), p.tol);
  check_order(b, child, p.tau);
  if (cache) cache->store(key, b);
  return b;
}

CriticalResult limit_point_L(double m, const Directive& sigma, const DescentParams& p,
                             int depth_used) {
  Morphism mo = morphism_of(sigma);
  EPWord wf = apply(mo, core_01());
  EPWord wg = apply(mo, core_10());
  double beta = solve_f(wf, m, p.tol);
  double other = solve_g(wg, m, p.tol);
  return {m, beta, {CaseKind::LimitPoint, sigma, wf}, std::abs(beta - other), depth_used};
}

}  // namespace

Classification classify_L(double m, const DescentParams& p, BreakpointCache* cache) {
  require_m(m);
  require_params(p);
  Classification out;
  if (m >= mu_top(p, cache) - p.tau) {
    auto r = solve_g_root(core_01(), m, p.tol);
    out.result = {m, r.value, {CaseKind::TopG, "", core_01()}, r.bracket, 1};
    out.trace.push_back({"", Breakpoints{{0, 0, 0, 0}}, "TopG"});
    return out;
  }
  Directive sigma;
  for (int depth = 0;; ++depth) {
    if (depth >= p.max_depth) {
      out.result = limit_point_L(m, sigma, p, depth);
      out.trace.push_back({sigma, Breakpoints{{0, 0, 0, 0}}, case_label(out.result.c)});
      return out;
    }
    Directive child = sigma + "M";
    auto maybe = breakpoints_L(child, p, cache);
    if (!maybe) {
      out.result = limit_point_L(m, sigma, p, depth + 1);
      out.trace.push_back({sigma, Breakpoints{{0, 0, 0, 0}}, case_label(out.result.c)});
      return out;
    }
    const Breakpoints& b = *maybe;
    TraceEntry entry{sigma, b, ""};
    if (m >= b.mu[0] - p.tau && m <= b.mu[1] + p.tau) {
      EPWord w = apply_directive(child, core_10());
      auto r = solve_g_root(w, m, p.tol);
      out.result = {m, r.value, {CaseKind::PlateauG, child, w}, r.bracket, depth + 1};
      entry.decision = case_label(out.result.c);
      out.trace.push_back(entry);
      return out;
    }
    if (m >= b.mu[2] - p.tau && m <= b.mu[3] + p.tau) {
      EPWord w = apply_directive(child, core_01());
      auto r = solve_f_root(w, m, p.tol);
      out.result = {m, r.value, {CaseKind::PlateauF, child, w}, r.bracket, depth + 1};
      entry.decision = case_label(out.result.c);
      out.trace.push_back(entry);
      return out;
    }
    if (b.mu[3] - b.mu[0] < p.tol) {
      out.result = limit_point_L(m, sigma, p, depth + 1);
      entry.decision = case_label(out.result.c);
      out.trace.push_back(entry);
      return out;
    }
    if (m < b.mu[0]) {
      entry.decision = "descend L";
      sigma += 'L';
    } else if (m > b.mu[3]) {
      entry.decision = "descend R";
      sigma += 'R';
    } else {
      entry.decision = "descend M";
      sigma += 'M';
    }
    out.trace.push_back(entry);
  }
}

CriticalResult critical_L(double m, const DescentParams& p, BreakpointCache* cache) {
  return classify_L(m, p, cache).result;
}

CriticalResult critical_G(double m, const DescentParams& p, BreakpointCache* cache) {
  require_m(m);
  require_params(p);
  if (m >= mu_top(p, cache) - p.tau) {
    auto r = solve_f_root(EPWord("", "1"), m, p.tol);
    return {m, r.value, {CaseKind::TopG, "", EPWord("", "1")}, r.bracket, 1};
  }
  Directive sigma;
  auto limit_point = [&](int depth_used) -> CriticalResult {
    EPWord wg = apply_directive(sigma, core_10());
    double beta = 1.0 + std::sqrt(m);
    double other = solve_g(wg, m, p.tol);
    return {m, beta, {CaseKind::LimitPoint, sigma, wg}, std::abs(beta - other), depth_used};
  };
  for (int depth = 0;; ++depth) {
    if (depth >= p.max_depth) return limit_point(depth);
    Directive child = sigma + "M";
    auto maybe = breakpoints_G(child, p, cache);
    if (!maybe) return limit_point(depth + 1);
    const Breakpoints& b = *maybe;
    if (m >= b.mu[0] - p.tau && m <= b.mu[1]) {
      EPWord w = apply_directive(child, core_0bar());
      auto r = solve_f_root(w, m, p.tol);
      return {m, r.value, {CaseKind::PlateauF, child, w}, r.bracket, depth + 1};
    }
    if (m > b.mu[1] && m <= b.mu[3] + p.tau) {
      EPWord w = apply_directive(child, core_0bar());
      auto r = solve_g_root(w, m, p.tol);
      return {m, r.value, {CaseKind::PlateauG, child, w}, r.bracket, depth + 1};
    }
    if (b.mu[3] - b.mu[0] < p.tol) return limit_point(depth + 1);
    if (m < b.mu[0]) sigma += 'L';
    else if (m > b.mu[3]) sigma += 'R';
    else throw std::logic_error("G-descent routing fell through at node '" + sigma + "'");
  }
}

namespace {

std::vector<double> make_grid(double from, double to, double step) {
  if (!(from > 1.0) || !(from < to) || !(to <= 2.0) || !(step > 0.0))
    throw std::invalid_argument("scan grid must satisfy 1 < from < to <= 2 and step > 0");
  if ((to - from) / step > 2e6) throw std::invalid_argument("scan grid too fine");
  std::vector<double> grid;
  for (long long i = 0;; ++i) {
    double m = from + static_cast<double>(i) * step;
    if (m > to + 1e-12) break;
    grid.push_back(std::min(m, to));
  }
  return grid;
}

std::vector<ScanRow> scan_impl(double from, double to, double step, const DescentParams& p,
                               bool parallel) {
  std::vector<double> grid = make_grid(from, to, step);
  std::vector<ScanRow> rows(grid.size());
  BreakpointCache cache;
  std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long long i = 0; i < static_cast<long long>(grid.size()); ++i) {
    try {
      double m = grid[static_cast<size_t>(i)];
      CriticalResult g = critical_G(m, p, &cache);
      CriticalResult l = critical_L(m, p, &cache);
      rows[static_cast<size_t>(i)] = {m, g.beta, l.beta, case_label(g.c), case_label(l.c)};
    } catch (...) {
#pragma omp critical(critbase_scan_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace

std::vector<ScanRow> scan(double from, double to, double step, const DescentParams& p,
                          bool parallel) {
  return scan_impl(from, to, step, p, parallel);
}

std::vector<ScanRow> scan_serial(double from, double to, double step, const DescentParams& p) {
  return scan_impl(from, to, step, p, false);
}

}  // namespace critbase
