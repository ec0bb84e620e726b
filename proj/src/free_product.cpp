#include "artin/free_product.hpp"

namespace artin {

FreeProductElement fp_reduce(std::vector<Syllable> syllables, const FactorOracles& oracles) {
  if (!oracles.left || !oracles.right)
    throw std::invalid_argument("fp_reduce: both factor oracles must be set");

  std::vector<Syllable> cur = std::move(syllables);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Syllable> next;
    next.reserve(cur.size());
    for (Syllable& s : cur) {
      GroupWord w = oracles.for_factor(s.factor)(s.word);
      if (w.empty()) {
        // dropping a trivial syllable may make its neighbours adjacent
        changed = true;
        continue;
      }
      if (!next.empty() && next.back().factor == s.factor) {
        // merged words are re-canonicalized on the next pass
        next.back().word.append(w);
        changed = true;
      } else {
        next.push_back({s.factor, std::move(w)});
      }
    }
    cur = std::move(next);
  }
  return FreeProductElement{std::move(cur)};
}

FreeProductElement fp_multiply(const FreeProductElement& u, const FreeProductElement& v,
                               const FactorOracles& oracles) {
  std::vector<Syllable> cat = u.syllables;
  cat.insert(cat.end(), v.syllables.begin(), v.syllables.end());
  return fp_reduce(std::move(cat), oracles);
}

}  // namespace artin
