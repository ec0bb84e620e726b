#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "artin/word.hpp"

namespace artin {

/// One transition of a finite automaton over a group alphabet: a signed
/// generator, or epsilon when `letter` is empty.
struct NfaTransition {
  std::size_t from = 0;
  std::optional<Letter> letter;
  std::size_t to = 0;

  friend bool operator==(const NfaTransition&, const NfaTransition&) = default;
};

/// Nondeterministic finite automaton over a group alphabet (generators and
/// their formal inverses) with epsilon moves. State declaration order and
/// transition insertion order are preserved; everything downstream that
/// numbers states or transitions relies on that.
class Nfa {
 public:
  Nfa() = default;
  Nfa(Alphabet alphabet, std::vector<std::string> states, const std::string& initial,
      const std::vector<std::string>& finals);

  /// Inserts a transition; exact duplicates are ignored (set semantics).
  void add_transition(std::size_t from, std::optional<Letter> letter, std::size_t to);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t n_states() const { return states_.size(); }
  const std::string& state_name(std::size_t i) const { return states_.at(i); }
  const std::vector<std::string>& state_names() const { return states_; }
  std::optional<std::size_t> state_index(const std::string& name) const;
  std::size_t initial() const { return initial_; }
  const std::vector<std::size_t>& finals() const { return finals_; }
  bool is_final(std::size_t state) const;
  const std::vector<NfaTransition>& transitions() const { return transitions_; }

 private:
  Alphabet alphabet_;
  std::vector<std::string> states_;
  std::size_t initial_ = 0;
  std::vector<std::size_t> finals_;
  std::vector<NfaTransition> transitions_;
};

/// An automaton guaranteed to have a single final state, distinct from the
/// initial one, with no outgoing transitions required of it. Produced by
/// normalize(); the designated final is always the last declared state.
struct NormalizedNfa {
  Nfa nfa;
  std::size_t final_state = 0;
};

/// Adds a fresh final state with epsilon edges from all former finals. The
/// fresh state is appended after the existing states, so their numbering is
/// unchanged. Always adds the state, even when the input already has exactly
/// one final, so the initial state is never the designated final.
NormalizedNfa normalize(const Nfa& a);

/// Decides whether the group element represented by u lies in the image of
/// the accepted language in the free group on the automaton's alphabet
/// (u is freely reduced first). Implemented by saturating the automaton with
/// epsilon edges across cancelling letter pairs until closure and then
/// simulating the reduced word.
bool benois_member(const Nfa& a, const GroupWord& u);

/// Like benois_member, but returns a certificate: indices into
/// a.transitions() forming an accepting path whose letters freely reduce to
/// the reduction of u. Empty optional when u is not a member.
std::optional<std::vector<std::size_t>> benois_witness_path(const Nfa& a, const GroupWord& u);

/// True iff the identity lies in the image of the accepted language.
bool contains_identity(const Nfa& a);

/// Shortest run of the automaton reading exactly the letters of w (epsilon
/// edges traversed freely, no free reduction), as transition indices.
std::optional<std::vector<std::size_t>> accepting_path_for(const Nfa& a, const GroupWord& w);

/// The word read along a transition-index path (epsilon edges contribute
/// nothing). Validates that the path is contiguous, starts at the initial
/// state and ends in a final state.
GroupWord word_of_path(const Nfa& a, const std::vector<std::size_t>& path);

}  // namespace artin
