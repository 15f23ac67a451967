#include "teichflow/words.hpp"

#include <algorithm>

namespace teich {

Word word_inverse(const Word& w) {
  Word out(w.size());
  for (size_t i = 0; i < w.size(); ++i) out[w.size() - 1 - i] = inverse_letter(w[i]);
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter c : w) {
    if (!out.empty() && inverse_letter(out.back()) == c) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word v = free_reduce(w);
  while (v.size() >= 2 && inverse_letter(v.front()) == v.back()) {
    v.erase(v.begin());
    v.pop_back();
    v = free_reduce(v);
  }
  return v;
}

bool is_cyclically_reduced(const Word& w) {
  if (w.empty()) return true;
  for (size_t i = 1; i < w.size(); ++i) {
    if (inverse_letter(w[i - 1]) == w[i]) return false;
  }
  return w.size() < 2 || inverse_letter(w.front()) != w.back();
}

namespace {

void min_over_rotations(const Word& w, Word& best) {
  const size_t n = w.size();
  Word rot(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = 0; k < n; ++k) rot[k] = w[(i + k) % n];
    if (best.empty() || rot < best) best = rot;
  }
}

} // namespace

Word canonical_form(const Word& w) {
  if (w.empty()) return {};
  Word best;
  min_over_rotations(w, best);
  min_over_rotations(word_inverse(w), best);
  return best;
}

bool is_primitive(const Word& w) {
  const size_t n = w.size();
  for (size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (size_t i = p; i < n && periodic; ++i) periodic = (w[i] == w[i - p]);
    if (periodic) return false;
  }
  return true;
}

std::string word_label(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter c : w) {
    char base = (c % 2 == 0) ? 'a' : 'A';
    s.push_back(char(base + c / 2));
  }
  return s;
}

void for_each_cyclically_reduced(int rank, int max_len,
                                 const std::function<void(const Word&)>& visit) {
  Word w;
  std::function<void()> rec = [&]() {
    if (!w.empty() && (w.size() < 2 || inverse_letter(w.front()) != w.back())) {
      visit(w);
    }
    if (int(w.size()) == max_len) return;
    for (Letter c = 0; c < Letter(2 * rank); ++c) {
      if (!w.empty() && inverse_letter(w.back()) == c) continue;
      w.push_back(c);
      rec();
      w.pop_back();
    }
  };
  rec();
}

DehnFilter::DehnFilter(const Word& relator) {
  const int n = int(relator.size());
  half_ = n / 2;
  for (const Word& base : {relator, word_inverse(relator)}) {
    for (int i = 0; i < n; ++i) {
      Word rot(n);
      for (int k = 0; k < n; ++k) rot[k] = base[(i + k) % n];
      long_.insert(Word(rot.begin(), rot.begin() + half_ + 1));
      Word head(rot.begin(), rot.begin() + half_);
      Word tail(rot.begin() + half_, rot.end());
      half_repl_[head] = word_inverse(tail);
    }
  }
}

bool DehnFilter::drop(const Word& w) const {
  const int n = int(w.size());
  Word dbl(w);
  dbl.insert(dbl.end(), w.begin(), w.end());
  if (n >= half_ + 1) {
    Word win(half_ + 1);
    for (int i = 0; i < n; ++i) {
      std::copy(dbl.begin() + i, dbl.begin() + i + half_ + 1, win.begin());
      if (long_.count(win)) return true;
    }
  }
  if (n >= half_) {
    Word seg(half_);
    for (int i = 0; i < n; ++i) {
      std::copy(dbl.begin() + i, dbl.begin() + i + half_, seg.begin());
      auto it = half_repl_.find(seg);
      if (it == half_repl_.end()) continue;
      // cyclic w = seg . tail; splice in the replacement and re-reduce
      Word alt = it->second;
      alt.insert(alt.end(), dbl.begin() + i + half_, dbl.begin() + i + n);
      alt = cyclic_reduce(alt);
      if (int(alt.size()) < n) return true;
      if (int(alt.size()) == n && canonical_form(alt) < canonical_form(w)) return true;
    }
  }
  return false;
}

} // namespace teich
