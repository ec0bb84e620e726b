#pragma once

#include <functional>

#include "artin/word.hpp"

namespace artin {

/// Which factor of a two-factor free product a syllable belongs to.
enum class Factor : std::uint8_t { kLeft, kRight };

/// A maximal run of letters from a single factor.
struct Syllable {
  Factor factor = Factor::kLeft;
  GroupWord word;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Element of a free product in syllable normal form: factors alternate and
/// no syllable is trivial in its factor. The empty sequence is the identity.
struct FreeProductElement {
  std::vector<Syllable> syllables;

  bool is_identity() const { return syllables.empty(); }

  friend bool operator==(const FreeProductElement&, const FreeProductElement&) = default;
};

/// Canonical-form oracle for one factor group: maps a word to the unique
/// normal form of the element it represents (empty iff trivial).
using Canonicalizer = std::function<GroupWord(const GroupWord&)>;

/// Word-problem oracles for both factors, passed by value so callers can mix
/// factor groups freely (free groups, graph groups, the trivial group, ...).
struct FactorOracles {
  Canonicalizer left;
  Canonicalizer right;

  const Canonicalizer& for_factor(Factor f) const {
    return f == Factor::kLeft ? left : right;
  }
};

/// Brings an arbitrary syllable sequence into syllable normal form:
/// canonicalizes each syllable, drops factor-trivial ones and merges
/// neighbours from the same factor, repeating until stable.
FreeProductElement fp_reduce(std::vector<Syllable> syllables, const FactorOracles& oracles);

/// Product of two normal-form elements, again in normal form.
FreeProductElement fp_multiply(const FreeProductElement& u, const FreeProductElement& v,
                               const FactorOracles& oracles);

}  // namespace artin
