#pragma once

#include <cstddef>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "critbase/numerics.hpp"
#include "critbase/words.hpp"

namespace critbase {

enum class CaseKind { PlateauG, PlateauF, TopG, LimitPoint };

std::string case_kind_name(CaseKind k);

struct CriticalCase {
  CaseKind kind;
  Directive directive;  // plateau directive (ends in M), or deepest node for LimitPoint
  EPWord witness;       // word whose f or g gives the value
};

// "PlateauG:M", "TopG", "LimitPoint:MLR..." - directive appended when nonempty.
std::string case_label(const CriticalCase& c);

struct CriticalResult {
  double m;
  double beta;
  CriticalCase c;
  double bracket_width;
  int depth_used;  // nodes visited during the descent
};

struct DescentParams {
  double tol = 1e-12;      // root tolerance and descent stopping width
  double tau = 1e-9;       // interval-membership slack
  int max_depth = 48;
  size_t word_cap = 1 << 15;  // stop descending once node words exceed this span
};

// mu breakpoints of the M-child of a node.  For the L-tree these are the mu
// of sigmaM applied to 1(0), 01(0), 10(1), 0(1); for the G-tree mu[1] ==
// mu[2] holds the mu of sigmaM(0-bar).
struct Breakpoints {
  double mu[4];
};

// Cache of node -> breakpoints, shared across the grid points of a scan.
// Values are deterministic functions of the key, so concurrent recomputation
// is harmless.
class BreakpointCache {
 public:
  bool lookup(const std::string& key, Breakpoints* out);
  void store(const std::string& key, const Breakpoints& b);

 private:
  std::mutex mutex_;
  std::unordered_map<std::string, Breakpoints> map_;
};

struct TraceEntry {
  Directive node;
  Breakpoints b;
  std::string decision;
};

struct Classification {
  std::vector<TraceEntry> trace;
  CriticalResult result;
};

// Descent for L(m): walks the {L,M,R} tree, testing the two plateau
// intervals of each node's M-child and routing left/middle/right otherwise,
// until a plateau contains m or the breakpoints collapse below tol.
Classification classify_L(double m, const DescentParams& p = {},
                          BreakpointCache* cache = nullptr);
CriticalResult critical_L(double m, const DescentParams& p = {},
                          BreakpointCache* cache = nullptr);

// Descent for G(m): same shape restricted to {L,R} nodes, with the plateau
// pair f/g of sigmaM(0-bar) meeting at its mu; the limit case is 1+sqrt(m).
CriticalResult critical_G(double m, const DescentParams& p = {},
                          BreakpointCache* cache = nullptr);

struct ScanRow {
  double m;
  double G;
  double L;
  std::string caseG;
  std::string caseL;
};

// Evaluate both critical bases on the grid m = from, from+step, ..., to.
// The grid points are independent; the parallel version runs them under
// OpenMP and returns exactly the same rows as the serial reference.
std::vector<ScanRow> scan(double from, double to, double step,
                          const DescentParams& p = {}, bool parallel = true);
std::vector<ScanRow> scan_serial(double from, double to, double step,
                                 const DescentParams& p = {});

}  // namespace critbase
