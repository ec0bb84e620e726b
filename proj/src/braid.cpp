#include "artin/braid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace artin {
namespace {

// Conjugation by the half twist (the inner automorphism the half twist
// induces on simple factors): flip(p) = w p w with w the half twist.
Permutation flip(const Permutation& p) {
  std::size_t n = p.degree();
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i)
    images[i] = static_cast<int>(n) - 1 - p[n - 1 - i];
  return Permutation::from_images(std::move(images));
}

// Positions i with p(i) > p(i+1). For a simple factor these are the
// crossings it can start with; the crossings it can end with are the
// descents of its inverse.
std::vector<bool> descents(const Permutation& p) {
  std::size_t n = p.degree();
  std::vector<bool> d(n > 0 ? n - 1 : 0, false);
  for (std::size_t i = 0; i + 1 < n; ++i) d[i] = p[i] > p[i + 1];
  return d;
}

// Makes the adjacent pair (a, b) left-weighted by transferring initial
// crossings of b into a while that keeps a simple: whenever b starts with a
// crossing at position i that a does not finish with, replace (a, b) by
// (a s_i, s_i^-1 b). The product is preserved and the crossing count of a
// strictly grows, so this terminates. Returns true if anything moved.
bool left_weight_pair(Permutation& a, Permutation& b) {
  bool changed = false;
  for (;;) {
    std::vector<bool> start_b = descents(b);
    std::vector<bool> finish_a = descents(a.inverse());
    std::size_t i = start_b.size();
    for (std::size_t k = 0; k < start_b.size(); ++k) {
      if (start_b[k] && !finish_a[k]) {
        i = k;
        break;
      }
    }
    if (i == start_b.size()) return changed;
    Permutation t = Permutation::transposition(a.degree(), i);
    a = a.then(t);
    b = t.then(b);
    changed = true;
  }
}

}  // namespace

Permutation::Permutation(std::size_t n) : images_(n) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= images.size() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation image table");
    seen[static_cast<std::size_t>(v)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(std::size_t n, std::size_t i) {
  if (i + 1 >= n) throw std::invalid_argument("transposition index out of range");
  Permutation p(n);
  std::swap(p.images_[i], p.images_[i + 1]);
  return p;
}

Permutation Permutation::half_twist(std::size_t n) {
  Permutation p(n);
  std::reverse(p.images_.begin(), p.images_.end());
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (degree() != next.degree()) throw std::invalid_argument("degree mismatch");
  Permutation r;
  r.images_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i)
    r.images_[i] = next.images_[static_cast<std::size_t>(images_[i])];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i)
    r.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

BraidWord::BraidWord(int strands, std::vector<int> word) : n(strands), letters(std::move(word)) {
  if (n < 2) throw std::invalid_argument("braid group needs at least 2 strands");
  for (int l : letters) {
    int a = l > 0 ? l : -l;
    if (a < 1 || a > n - 1) throw std::invalid_argument("braid letter out of range");
  }
}

BraidWord BraidWord::inverse() const {
  BraidWord r;
  r.n = n;
  r.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

BraidWord operator*(const BraidWord& u, const BraidWord& v) {
  if (u.n != v.n) throw std::invalid_argument("strand count mismatch");
  BraidWord r = u;
  r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
  return r;
}

GarsideNormalForm garside_normal_form(const BraidWord& w) {
  const std::size_t n = static_cast<std::size_t>(w.n);
  const Permutation twist = Permutation::half_twist(n);

  // Each letter becomes a (half-twist power, simple factor) pair:
  // a positive crossing is already simple; a negative one is the half twist
  // inverted times the simple complement. Collecting all twist powers at the
  // front conjugates every factor they pass over.
  std::vector<Permutation> factors;
  factors.resize(w.letters.size(), Permutation(n));
  int suffix_twists = 0;
  for (std::size_t idx = w.letters.size(); idx-- > 0;) {
    int l = w.letters[idx];
    std::size_t i = static_cast<std::size_t>((l > 0 ? l : -l) - 1);
    Permutation t = Permutation::transposition(n, i);
    Permutation factor = l > 0 ? t : twist.then(t);
    if (suffix_twists % 2 != 0) factor = flip(factor);
    factors[idx] = std::move(factor);
    if (l < 0) --suffix_twists;
  }
  int inf = suffix_twists;

  factors.erase(std::remove_if(factors.begin(), factors.end(),
                               [](const Permutation& p) { return p.is_identity(); }),
                factors.end());

  // Left-weight adjacent pairs until stable; absorb half twists that surface
  // at the front into the twist power.
  bool changed = true;
  while (changed) {
    changed = false;
    std::size_t j = 0;
    while (j + 1 < factors.size()) {
      if (left_weight_pair(factors[j], factors[j + 1])) changed = true;
      if (factors[j + 1].is_identity()) {
        factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        changed = true;
      } else {
        ++j;
      }
    }
    while (!factors.empty() && factors.front() == twist) {
      factors.erase(factors.begin());
      ++inf;
      changed = true;
    }
  }

  GarsideNormalForm nf;
  nf.n = w.n;
  nf.inf = inf;
  nf.factors = std::move(factors);
  return nf;
}

bool braid_is_trivial(const BraidWord& w) { return garside_normal_form(w).is_identity(); }

bool braid_equal(const BraidWord& u, const BraidWord& v) {
  return garside_normal_form(u) == garside_normal_form(v);
}

std::vector<int> simple_factor_word(const Permutation& p) {
  std::vector<int> out;
  Permutation q = p;
  for (;;) {
    std::vector<bool> d = descents(q);
    std::size_t i = d.size();
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d[k]) {
        i = k;
        break;
      }
    }
    if (i == d.size()) break;  // identity reached
    out.push_back(static_cast<int>(i) + 1);
    q = Permutation::transposition(q.degree(), i).then(q);
  }
  return out;
}

BraidWord word_of(const GarsideNormalForm& nf) {
  BraidWord w;
  w.n = nf.n;
  std::vector<int> twist = simple_factor_word(Permutation::half_twist(static_cast<std::size_t>(nf.n)));
  if (nf.inf >= 0) {
    for (int k = 0; k < nf.inf; ++k) w.letters.insert(w.letters.end(), twist.begin(), twist.end());
  } else {
    std::vector<int> inv(twist.rbegin(), twist.rend());
    for (int& l : inv) l = -l;
    for (int k = 0; k < -nf.inf; ++k) w.letters.insert(w.letters.end(), inv.begin(), inv.end());
  }
  for (const Permutation& f : nf.factors) {
    std::vector<int> fw = simple_factor_word(f);
    w.letters.insert(w.letters.end(), fw.begin(), fw.end());
  }
  return w;
}

Permutation permutation_of(const BraidWord& w) {
  Permutation p(static_cast<std::size_t>(w.n));
  for (int l : w.letters) {
    std::size_t i = static_cast<std::size_t>((l > 0 ? l : -l) - 1);
    p = p.then(Permutation::transposition(static_cast<std::size_t>(w.n), i));
  }
  return p;
}

bool is_pure(const BraidWord& w) { return permutation_of(w).is_identity(); }

BraidWord droms_embed(const GroupWord& w) {
  static const std::vector<std::vector<int>> images = {
      {2, 2}, {2, 3, 2, 2, 3, 2}, {3, 3}, {1, 1}};
  BraidWord out;
  out.n = 4;
  for (const Letter& l : w) {
    if (l.gen >= images.size())
      throw std::invalid_argument("droms_embed: letter is not a path vertex");
    const std::vector<int>& img = images[l.gen];
    if (l.sign > 0) {
      out.letters.insert(out.letters.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.letters.push_back(-*it);
    }
  }
  return out;
}

BraidWord gamma0() { return BraidWord(4, {2, 2, 3, 3, -2, -2, -3, -3}); }

}  // namespace artin
