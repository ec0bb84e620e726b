#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artin/automaton.hpp"
#include "artin/free_product.hpp"
#include "artin/word.hpp"

namespace artin {

/// Thrown when a claimed witness fails its internal product check.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a bounded search exceeds its state budget.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The left factor G of an ambient free product G * F3. Only groups with a
/// word-problem oracle wired in are admitted.
enum class GroupKind { kTrivial, kFree, kP4 };

struct GroupDescriptor {
  GroupKind kind = GroupKind::kTrivial;
  Alphabet alphabet;  // generators of G; empty for the trivial group

  /// Validates the alphabet against the kind (trivial: empty; p4: exactly
  /// four generators, read as consecutive vertices of the 2-labeled path).
  static GroupDescriptor make(GroupKind kind, Alphabet alphabet);
};

/// Word-problem oracle for the described group (canonical form; empty word
/// iff trivial).
Canonicalizer canonicalizer_for(const GroupDescriptor& g);

/// The group a ReductionInstance lives in.
enum class Ambient {
  kGStarF3,  // free product of the described G with a free group on x, y, z
  kAP4,      // right-angled group of the 2-labeled path a - b - c - d
  kB4,       // braid group on 4 strands
};

enum class InstanceKind { kFixedTargetSubmonoid, kSemigroupIntersection };

/// A membership question "is (a power of) `target` a nonempty product of
/// `generators`?" over one of the supported ambient groups. For kGStarF3
/// the word alphabet is G's generators followed by x, y, z; for kAP4 it is
/// a, b, c, d; for kB4 words are braid words over s1, s2, s3. A witness, if
/// present, is a generator index sequence multiplying to the target.
struct ReductionInstance {
  Ambient ambient = Ambient::kGStarF3;
  GroupDescriptor g;  // meaningful only when ambient == kGStarF3
  Alphabet alphabet;
  InstanceKind kind = InstanceKind::kFixedTargetSubmonoid;
  std::vector<GroupWord> generators;
  GroupWord target;
  std::optional<std::vector<std::size_t>> witness;
};

/// Words encoding the states of a normalized automaton inside the free
/// factor on x, y, z: the initial state becomes x, the designated final
/// state y, and the remaining states z^i x z^-i (i = 1, 2, ... in state
/// declaration order).
struct StateEncoding {
  std::vector<GroupWord> words;  // indexed by state
};
StateEncoding encode_states(const NormalizedNfa& a, const GroupDescriptor& g);

/// Compiles a normalized automaton over the generators of G into a
/// fixed-target instance in G * F3: one generator per transition,
/// enc(from) . letter . enc(to)^-1, with target x y^-1. The automaton then
/// accepts a G-trivial word iff the target is a nonempty product of the
/// generators. G's generators must not be named x, y or z.
ReductionInstance build_delta(const NormalizedNfa& a, GroupKind g_kind);

/// Converts an accepting path (transition indices) whose letters multiply to
/// the identity of G into a witness for the instance, verifying internally
/// that the indexed product reduces exactly to the target. Throws
/// VerificationError otherwise.
std::vector<std::size_t> extract_witness(const ReductionInstance& inst, const NormalizedNfa& a,
                                         const std::vector<std::size_t>& accepting_path);

/// Rewrites a kGStarF3 instance (G trivial or the path group itself) inside
/// the group of the 2-labeled path on a, b, c, d, replacing the free product
/// by conjugate-vertex images: G's i-th generator by the catalog member
/// 3 + i, and x, y, z by members 0, 2, -2. Words are canonicalized; the
/// witness carries over unchanged.
ReductionInstance instantiate_in_p4(const ReductionInstance& inst);

/// Pushes a kAP4 instance through the strand-doubling embedding into the
/// braid group on 4 strands. The fixed target a c a^-1 c^-1 maps exactly to
/// gamma0(). The witness carries over unchanged.
ReductionInstance compile_to_b4(const ReductionInstance& inst);

/// Reinterprets a fixed-target instance as a semigroup intersection
/// question: does the semigroup generated by the generators meet the
/// semigroup generated by the target?
ReductionInstance make_intersection_instance(const ReductionInstance& inst);

/// Canonical representative of w in the instance's ambient group (free
/// product normal form flattened, path-group canonical form, or the braid
/// word read off the Garside normal form). Equal elements, equal words.
GroupWord ambient_canonical(const ReductionInstance& inst, const GroupWord& w);

/// True iff the stored witness indexes a product equal to the target
/// (requires a witness).
bool verify_witness(const ReductionInstance& inst);

struct SearchResult {
  bool found = false;
  std::vector<std::size_t> witness;  // generator indices, when found
  int target_power = 0;              // matched power of the target (1 for fixed-target)
  std::size_t depth_searched = 0;
};

struct SearchLimits {
  std::size_t max_states = 1'000'000;  // distinct canonical forms kept
};

/// Breadth-first search over products of generators up to the given length,
/// deduplicating by canonical form. Finds the shortest witness (then least
/// in generator-index order) multiplying to the target — or, for
/// intersection instances, to any power 1..depth of the target. Throws
/// ResourceLimitError when the state budget is exhausted.
SearchResult bounded_member(const ReductionInstance& inst, std::size_t depth = 8,
                            const SearchLimits& limits = {});

}  // namespace artin
