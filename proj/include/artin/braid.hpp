#pragma once

#include <cstdint>
#include <vector>

#include "artin/word.hpp"

namespace artin {

/// Permutation of {0, ..., n-1} stored as an image table.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t n);  // identity
  static Permutation from_images(std::vector<int> images);
  /// Swap of positions i and i+1 (0-based, i < n-1).
  static Permutation transposition(std::size_t n, std::size_t i);
  /// The order-reversing permutation i -> n-1-i.
  static Permutation half_twist(std::size_t n);

  std::size_t degree() const { return images_.size(); }
  int operator[](std::size_t i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  /// Diagram-order composition: first *this, then `next`.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Word in the braid group on n strands. Letters are nonzero integers:
/// +i is the positive crossing of strands i, i+1 (1 <= i <= n-1), -i its
/// inverse. Composition reads left to right.
struct BraidWord {
  int n = 2;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int strands, std::vector<int> word);  // validates letter range

  BraidWord inverse() const;
  friend BraidWord operator*(const BraidWord& u, const BraidWord& v);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Garside left normal form D^inf A_1 ... A_m: a power of the half twist
/// followed by a left-weighted sequence of simple factors, none of which is
/// the identity or the half twist. Equal braids have equal normal forms.
struct GarsideNormalForm {
  int n = 2;
  int inf = 0;
  std::vector<Permutation> factors;

  bool is_identity() const { return inf == 0 && factors.empty(); }
  std::size_t canonical_length() const { return factors.size(); }
  int sup() const { return inf + static_cast<int>(factors.size()); }

  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;
};

GarsideNormalForm garside_normal_form(const BraidWord& w);
bool braid_is_trivial(const BraidWord& w);
bool braid_equal(const BraidWord& u, const BraidWord& v);

/// The positive braid word (letters only, no strand count) whose strand
/// diagram realizes the simple factor p with one crossing per inversion.
std::vector<int> simple_factor_word(const Permutation& p);

/// A braid word representing the normal form (half-twist power, then the
/// factors), useful for round trips and reporting.
BraidWord word_of(const GarsideNormalForm& nf);

/// Image of w under the projection to the symmetric group sending each
/// crossing to the transposition of its strand positions (a homomorphism;
/// positive and negative crossings agree). Entry k is the end position of
/// the strand starting at position k.
Permutation permutation_of(const BraidWord& w);

/// True iff every strand ends where it started.
bool is_pure(const BraidWord& w);

/// Injective homomorphism from the right-angled group of p4_graph() into the
/// braid group on 4 strands:
///   a -> s2^2,  b -> (s2 s3 s2)^2,  c -> s3^2,  d -> s1^2.
/// Rejects words with letters outside the four vertices.
BraidWord droms_embed(const GroupWord& w);

/// Image of the commutator a c a^-1 c^-1 under droms_embed: the fixed
/// nontrivial pure braid s2^2 s3^2 s2^-2 s3^-2 used as a membership target.
BraidWord gamma0();

}  // namespace artin
