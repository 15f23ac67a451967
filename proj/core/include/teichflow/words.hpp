#pragma once

// Free-group word machinery for closed-curve classes. Generator i maps to
// letter 2i, its inverse to 2i+1, so inversion is letter^1 and words
// compare lexicographically as byte vectors. Conjugacy classes are keyed
// by the canonical form: the lexicographic minimum over all rotations of
// the cyclically reduced word and of its inverse.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace teich {

using Letter = int8_t;
using Word = std::vector<Letter>;

inline Letter inverse_letter(Letter c) { return Letter(c ^ 1); }

Word word_inverse(const Word& w);
Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
bool is_cyclically_reduced(const Word& w);

// Lex-min over rotations of w and w^{-1}; input must be cyclically reduced.
Word canonical_form(const Word& w);

// True if w is not a proper power as a cyclic word (no rotation period
// strictly dividing its length).
bool is_primitive(const Word& w);

// Human-readable label: letters a..z for generators, A..Z for inverses.
std::string word_label(const Word& w);

// Visit every cyclically reduced word over `rank` generators with
// 1 <= length <= max_len, in DFS order. Used by tests; the holonomy
// enumerator fuses the same DFS with incremental matrix products.
void for_each_cyclically_reduced(int rank, int max_len,
                                 const std::function<void(const Word&)>& visit);

// Dehn reduction against a single relator (the genus-2 surface relation).
// Words containing more than half of a cyclic permutation of r or r^{-1}
// have strictly shorter representatives; words containing exactly half
// can be rewritten by the inverse complementary half, and we keep only
// the lexicographically smaller representative of the resulting tie.
// Filtering is what removes relator-duplicates -- e.g. w and w * r name
// the same class but both survive a naive trace cut, and float noise on
// the longer one would otherwise fake a distinct geodesic length.
class DehnFilter {
 public:
  explicit DehnFilter(const Word& relator);

  // True if cyclic word w (cyclically reduced) has a shorter or
  // lex-smaller equal-length representative and should be discarded.
  bool drop(const Word& w) const;

 private:
  int half_ = 0;
  std::set<Word> long_;                // (half+1)-letter windows of r, r^{-1}
  std::map<Word, Word> half_repl_;     // half-letter window -> inverse complement
};

} // namespace teich
