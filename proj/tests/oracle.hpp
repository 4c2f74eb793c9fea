#pragma once

// Independent rewriting oracle for the twisted torus algebra, used only by the
// test suites.  An element is a word of signed generator letters; products are
// canonicalized by bubble sort, picking up one exchange phase per swap from
//   x_a^s x_b^t = e(theta_ab * s * t) x_b^t x_a^s,
// with inverse pairs of the same index cancelling freely.  This never calls
// the engine's reorder_phase / star_phase.

#include "qsym/torus.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>

namespace qsym::oracle {

struct Word {
  std::vector<std::pair<int, int>> letters;  // (index, sign), 1-based index
  Rational q;                                // accumulated phase exponent
};

inline Word word_of(const IntVector& r) {
  Word w;
  for (int i = 0; i < (int)r.size(); ++i)
    for (long k = 0; k < std::labs(r[i]); ++k)
      w.letters.push_back({i + 1, r[i] > 0 ? 1 : -1});
  return w;
}

inline void canonicalize(Word& w, const ThetaMatrix& theta) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t j = 0; j + 1 < w.letters.size(); ++j) {
      auto [a, s] = w.letters[j];
      auto [b, t] = w.letters[j + 1];
      if (a == b && s != t) {
        w.letters.erase(w.letters.begin() + j, w.letters.begin() + j + 2);
        changed = true;
        break;
      }
      if (a > b) {
        w.q += theta.at(a, b) * Rational(s * t);
        std::swap(w.letters[j], w.letters[j + 1]);
        changed = true;
      }
    }
  }
}

inline Word mul(Word a, const Word& b, const ThetaMatrix& theta) {
  a.letters.insert(a.letters.end(), b.letters.begin(), b.letters.end());
  a.q += b.q;
  canonicalize(a, theta);
  return a;
}

inline Word star(Word a, const ThetaMatrix& theta) {
  std::reverse(a.letters.begin(), a.letters.end());
  for (auto& [i, s] : a.letters) s = -s;
  a.q = -a.q;
  canonicalize(a, theta);
  return a;
}

inline TorusElement to_element(const Word& w, const ContextPtr& ctx) {
  IntVector r(ctx->n(), 0);
  for (auto [i, s] : w.letters) r[i - 1] += s;
  return TorusElement::monomial(ctx, r) * ctx->cyclo(Phase(w.q));
}

}  // namespace qsym::oracle
