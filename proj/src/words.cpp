#include "critbase/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace critbase {

bool is_word(const FiniteWord& w) {
  return std::all_of(w.begin(), w.end(),
                     [](char c) { return c == '0' || c == '1' || c == '2'; });
}

bool is_binary_word(const FiniteWord& w) {
  return std::all_of(w.begin(), w.end(),
                     [](char c) { return c == '0' || c == '1'; });
}

Sub sub_from_char(char c) {
  switch (c) {
    case 'L': return Sub::L;
    case 'M': return Sub::M;
    case 'R': return Sub::R;
    default: throw std::invalid_argument(std::string("unknown substitution letter '") + c + "'");
  }
}

const FiniteWord& sub_image(Sub s, char digit) {
  static const FiniteWord l0 = "0", l1 = "01";
  static const FiniteWord m0 = "01", m1 = "10";
  static const FiniteWord r0 = "01", r1 = "1";
  if (digit != '0' && digit != '1')
    throw std::domain_error("substitutions are defined on binary words only");
  switch (s) {
    case Sub::L: return digit == '0' ? l0 : l1;
    case Sub::M: return digit == '0' ? m0 : m1;
    case Sub::R: return digit == '0' ? r0 : r1;
  }
  throw std::logic_error("unreachable");
}

FiniteWord apply(Sub s, const FiniteWord& w) {
  FiniteWord out;
  out.reserve(2 * w.size());
  for (char c : w) out += sub_image(s, c);
  return out;
}

void validate_directive(const Directive& d) {
  for (char c : d) sub_from_char(c);
}

FiniteWord Morphism::operator()(const FiniteWord& w) const {
  FiniteWord out;
  out.reserve(w.size() * std::max(image0.size(), image1.size()));
  for (char c : w) {
    if (c == '0') out += image0;
    else if (c == '1') out += image1;
    else throw std::domain_error("morphisms are defined on binary words only");
  }
  return out;
}

Morphism morphism_of(const Directive& d) {
  validate_directive(d);
  Morphism m;
  for (char c : d) {
    // extend s1...s_{k-1} by s_k:  (s1...s_k)(x) = (s1...s_{k-1})(s_k(x))
    Sub s = sub_from_char(c);
    Morphism next;
    next.image0 = m(sub_image(s, '0'));
    next.image1 = m(sub_image(s, '1'));
    m = std::move(next);
  }
  return m;
}

EPWord::EPWord(FiniteWord pre, FiniteWord per)
    : pre_(std::move(pre)), per_(std::move(per)) {
  if (per_.empty()) throw std::invalid_argument("period must be nonempty");
  if (!is_word(pre_) || !is_word(per_))
    throw std::invalid_argument("word letters must be in {0,1,2}");
  canonicalize();
}

void EPWord::canonicalize() {
  // minimal period: replace by the primitive root
  size_t n = per_.size();
  for (size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (size_t i = d; i < n && ok; ++i) ok = per_[i] == per_[i - d];
    if (ok) {
      per_.resize(d);
      break;
    }
  }
  // roll the period back through the preperiod
  while (!pre_.empty() && pre_.back() == per_.back()) {
    per_.insert(per_.begin(), per_.back());
    per_.pop_back();
    pre_.pop_back();
  }
}

EPWord EPWord::parse(const std::string& literal) {
  size_t open = literal.find('(');
  if (open == std::string::npos)
    throw std::invalid_argument("word literal must contain '(': " + literal);
  if (literal.find('(', open + 1) != std::string::npos ||
      literal.find(')') != literal.size() - 1 || literal.size() < open + 2)
    throw std::invalid_argument("word literal must match pre(per): " + literal);
  FiniteWord pre = literal.substr(0, open);
  FiniteWord per = literal.substr(open + 1, literal.size() - open - 2);
  if (per.empty()) throw std::invalid_argument("empty period in word literal: " + literal);
  if (!is_word(pre) || !is_word(per))
    throw std::invalid_argument("illegal character in word literal: " + literal);
  return EPWord(std::move(pre), std::move(per));
}

Cmp compare(const EPWord& u, const EPWord& v) {
  size_t bound = std::max(u.pre().size(), v.pre().size()) +
                 std::lcm(u.per().size(), v.per().size()) +
                 std::max(u.per().size(), v.per().size());
  for (size_t i = 0; i < bound; ++i) {
    char a = u.at(i), b = v.at(i);
    if (a != b) return a < b ? Cmp::less : Cmp::greater;
  }
  return Cmp::equal;
}

EPWord shift(const EPWord& u, size_t k) {
  if (k <= u.pre().size()) return EPWord(u.pre().substr(k), u.per());
  size_t j = (k - u.pre().size()) % u.per().size();
  return EPWord("", u.per().substr(j) + u.per().substr(0, j));
}

EPWord prepend(const FiniteWord& w, const EPWord& u) {
  return EPWord(w + u.pre(), u.per());
}

EPWord apply(Sub s, const EPWord& u) {
  return EPWord(apply(s, u.pre()), apply(s, u.per()));
}

EPWord apply(const Morphism& mo, const EPWord& u) {
  return EPWord(mo(u.pre()), mo(u.per()));
}

EPWord apply_directive(const Directive& d, const EPWord& u) {
  return apply(morphism_of(d), u);
}

bool contains(const EPWord& u, char digit) {
  return u.pre().find(digit) != std::string::npos ||
         u.per().find(digit) != std::string::npos;
}

bool has_two_ones(const EPWord& u) {
  if (u.per().find('1') != std::string::npos) return true;
  return std::count(u.pre().begin(), u.pre().end(), '1') >= 2;
}

namespace {

// Compare the suffixes of u starting at positions i and j.  Both are
// eventually periodic with the same period length, so pre + 2*per letters
// decide.
Cmp cmp_suffixes(const EPWord& u, size_t i, size_t j) {
  if (i == j) return Cmp::equal;
  size_t bound = u.pre().size() + 2 * u.per().size() + 2;
  for (size_t t = 0; t < bound; ++t) {
    char a = u.at(i + t), b = u.at(j + t);
    if (a != b) return a < b ? Cmp::less : Cmp::greater;
  }
  return Cmp::equal;
}

std::pair<EPWord, size_t> orbit_extreme(const EPWord& u, bool want_sup) {
  size_t best = 0;
  for (size_t k = 1; k < u.span(); ++k) {
    Cmp c = cmp_suffixes(u, k, best);
    if ((want_sup && c == Cmp::greater) || (!want_sup && c == Cmp::less)) best = k;
  }
  return {shift(u, best), best + 1};
}

EPWord orbit_extreme_after(const EPWord& u, char mark, bool want_sup) {
  bool found = false;
  size_t best = 0;
  for (size_t k = 0; k < u.span(); ++k) {
    if (u.at(k) != mark) continue;
    if (!found) {
      best = k + 1;
      found = true;
      continue;
    }
    Cmp c = cmp_suffixes(u, k + 1, best);
    if ((want_sup && c == Cmp::greater) || (!want_sup && c == Cmp::less)) best = k + 1;
  }
  if (!found)
    throw std::domain_error(std::string("word ") + u.str() + " contains no '" + mark + "'");
  return shift(u, best);
}

}  // namespace

std::pair<EPWord, size_t> orbit_inf_pos(const EPWord& u) { return orbit_extreme(u, false); }
std::pair<EPWord, size_t> orbit_sup_pos(const EPWord& u) { return orbit_extreme(u, true); }
EPWord orbit_inf(const EPWord& u) { return orbit_extreme(u, false).first; }
EPWord orbit_sup(const EPWord& u) { return orbit_extreme(u, true).first; }
EPWord orbit_inf1(const EPWord& u) { return orbit_extreme_after(u, '1', false); }
EPWord orbit_sup0(const EPWord& u) { return orbit_extreme_after(u, '0', true); }

FiniteWord limit_word_prefix(const Directive& d, size_t n) {
  validate_directive(d);
  Morphism m;
  if (m.image0.size() >= n) return m.image0.substr(0, n);
  for (char c : d) {
    Sub s = sub_from_char(c);
    Morphism next;
    next.image0 = m(sub_image(s, '0'));
    next.image1 = m(sub_image(s, '1'));
    m = std::move(next);
    if (m.image0.size() >= n) return m.image0.substr(0, n);
  }
  throw std::runtime_error("limit word prefix did not reach length " + std::to_string(n) +
                           " within the directive (got " + std::to_string(m.image0.size()) + ")");
}

namespace {

// Greedy tokenisation of w as a product of images of s, starting at the
// first letter.  Images have length <= 2 and the decoding is forced at each
// position, so the emitted word becomes periodic as soon as a phase of the
// period repeats.
bool decode_from(const EPWord& w, Sub s, EPWord* out) {
  size_t pre_len = w.pre().size();
  size_t n = w.per().size();
  std::string emitted;
  std::vector<long long> first_visit(n, -1);
  size_t p = 0;
  for (;;) {
    if (p >= pre_len) {
      size_t phase = (p - pre_len) % n;
      if (first_visit[phase] >= 0) {
        size_t cut = static_cast<size_t>(first_visit[phase]);
        *out = EPWord(emitted.substr(0, cut), emitted.substr(cut));
        return true;
      }
      first_visit[phase] = static_cast<long long>(emitted.size());
    }
    char a = w.at(p);
    char b = w.at(p + 1);
    switch (s) {
      case Sub::L:
        if (a != '0') return false;
        if (b == '1') { emitted += '1'; p += 2; } else { emitted += '0'; p += 1; }
        break;
      case Sub::M:
        if (a == '0' && b == '1') { emitted += '0'; p += 2; }
        else if (a == '1' && b == '0') { emitted += '1'; p += 2; }
        else return false;
        break;
      case Sub::R:
        if (a == '1') { emitted += '1'; p += 1; }
        else if (a == '0' && b == '1') { emitted += '0'; p += 2; }
        else return false;
        break;
    }
  }
}

}  // namespace

Desubstitution desubstitute(const EPWord& u, Sub s) {
  for (size_t off = 0; off <= 2; ++off) {
    EPWord v;
    if (!decode_from(shift(u, off), s, &v)) continue;
    FiniteWord offset;
    for (size_t i = 0; i < off; ++i) offset += u.at(i);
    if (prepend(offset, apply(s, v)) == u) return {v, offset};
  }
  throw std::domain_error("word " + u.str() + " has no " +
                          std::string(1, static_cast<char>(s)) +
                          "-decoding with offset length <= 2");
}

}  // namespace critbase
