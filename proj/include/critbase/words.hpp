#pragma once

#include <cstddef>
#include <string>
#include <utility>

namespace critbase {

// Words are strings over the symbols '0', '1', '2'.  The symbol '2' is the
// third alphabet letter; the numeric value it stands for is supplied
// separately wherever a word gets evaluated.
using FiniteWord = std::string;

bool is_word(const FiniteWord& w);
bool is_binary_word(const FiniteWord& w);

// The three substitutions, extended letterwise to words:
//   L: 0 -> 0,  1 -> 01
//   M: 0 -> 01, 1 -> 10
//   R: 0 -> 01, 1 -> 1
enum class Sub : char { L = 'L', M = 'M', R = 'R' };

Sub sub_from_char(char c);
const FiniteWord& sub_image(Sub s, char digit);
FiniteWord apply(Sub s, const FiniteWord& w);

// A finite composition s1 s2 ... sn, acting by s1(s2(... sn(u) ...)).
// The empty directive is the identity.
using Directive = std::string;

void validate_directive(const Directive& d);

struct Morphism {
  FiniteWord image0 = "0";
  FiniteWord image1 = "1";

  FiniteWord operator()(const FiniteWord& w) const;
};

Morphism morphism_of(const Directive& d);

// Eventually periodic word pre (per)^omega, kept in canonical form: the
// period is primitive and the last preperiod letter differs from the last
// period letter.  Two EPWords denote the same infinite word iff their
// canonical forms are identical, so operator== decides equality of the
// infinite words.
class EPWord {
 public:
  EPWord() : per_("0") {}
  EPWord(FiniteWord pre, FiniteWord per);

  // Literal grammar: <digits> "(" <digits> ")", nonempty period.
  static EPWord parse(const std::string& literal);

  const FiniteWord& pre() const { return pre_; }
  const FiniteWord& per() const { return per_; }
  // Letter at position i, 0-based.
  char at(size_t i) const {
    return i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()];
  }
  // Number of positions that carry distinct suffixes: |pre| + |per|.
  size_t span() const { return pre_.size() + per_.size(); }
  std::string str() const { return pre_ + "(" + per_ + ")"; }

  bool operator==(const EPWord&) const = default;

 private:
  void canonicalize();

  FiniteWord pre_;
  FiniteWord per_;
};

enum class Cmp { less, equal, greater };

// Lexicographic comparison of the infinite words.  Decided after at most
// max(|pre|) + lcm(|per|) + max(|per|) letters.
Cmp compare(const EPWord& u, const EPWord& v);

inline bool operator<(const EPWord& u, const EPWord& v) {
  return compare(u, v) == Cmp::less;
}
inline bool operator>(const EPWord& u, const EPWord& v) { return v < u; }
inline bool operator<=(const EPWord& u, const EPWord& v) { return !(v < u); }
inline bool operator>=(const EPWord& u, const EPWord& v) { return !(u < v); }

// Suffix starting at position k (drop the first k letters).
EPWord shift(const EPWord& u, size_t k);
EPWord prepend(const FiniteWord& w, const EPWord& u);

EPWord apply(Sub s, const EPWord& u);
EPWord apply(const Morphism& mo, const EPWord& u);
EPWord apply_directive(const Directive& d, const EPWord& u);

bool contains(const EPWord& u, char digit);
// True iff u has at least two occurrences of '1' (counting the infinite word).
bool has_two_ones(const EPWord& u);

// Extremes of the shift orbit O(u) = {suffixes of u}, which is finite for
// eventually periodic words, so min and max are exact.  The _pos variants
// also return the 1-based suffix index attaining the extreme.
std::pair<EPWord, size_t> orbit_inf_pos(const EPWord& u);
std::pair<EPWord, size_t> orbit_sup_pos(const EPWord& u);
EPWord orbit_inf(const EPWord& u);
EPWord orbit_sup(const EPWord& u);

// Extremes over suffixes immediately following an occurrence of '1'
// (resp. '0').  Throws if the required letter is absent.
EPWord orbit_inf1(const EPWord& u);
EPWord orbit_sup0(const EPWord& u);

// Length-n prefix of the limit word of the directive, read as a finite
// prefix of an infinite sequence of substitutions.  Fails if the images of
// 0 do not reach length n within the given directive.
FiniteWord limit_word_prefix(const Directive& d, size_t n);

struct Desubstitution {
  EPWord word;        // v with  u = offset . s(v)
  FiniteWord offset;  // shortest offset, length <= 2
};

// Inverts a substitution: finds v and the shortest offset (preferring the
// empty one) with u = offset . s(v).  Throws if no decoding with offset
// length <= 2 exists.
Desubstitution desubstitute(const EPWord& u, Sub s);

}  // namespace critbase
