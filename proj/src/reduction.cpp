#include "artin/reduction.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "artin/braid.hpp"
#include "artin/raag.hpp"

namespace artin {
namespace {

// Splits a word over the combined alphabet of a kGStarF3 instance into
// syllables: letters below the G-rank belong to the left factor, the rest
// (x, y, z) to the right one. Letter indices are kept global; the factor
// oracles are index-agnostic, so nothing needs re-basing.
std::vector<Syllable> split_syllables(const GroupWord& w, std::size_t g_rank) {
  std::vector<Syllable> out;
  for (const Letter& l : w) {
    Factor f = l.gen < g_rank ? Factor::kLeft : Factor::kRight;
    if (out.empty() || out.back().factor != f) out.push_back({f, GroupWord()});
    out.back().word.push_back(l);
  }
  return out;
}

GroupWord flatten(const FreeProductElement& e) {
  GroupWord w;
  for (const Syllable& s : e.syllables) w.append(s.word);
  return w;
}

FactorOracles oracles_for(const ReductionInstance& inst) {
  return FactorOracles{canonicalizer_for(inst.g),
                       [](const GroupWord& w) { return free_reduce(w); }};
}

// The path graph on G's own four generators (declaration order = path
// order), for G = kP4 whose letters are abstract, not the concrete a,b,c,d.
LabeledGraph path_graph_for(const Alphabet& alphabet) {
  LabeledGraph g(alphabet);
  for (std::size_t i = 0; i + 1 < alphabet.size(); ++i) g.add_edge(i, i + 1, 2);
  return g;
}

GroupWord map_letters(const GroupWord& w, const std::vector<GroupWord>& images) {
  GroupWord out;
  for (const Letter& l : w) {
    if (l.gen >= images.size()) throw std::invalid_argument("letter without an image");
    if (l.sign > 0)
      out.append(images[l.gen]);
    else
      out.append(images[l.gen].inverse());
  }
  return out;
}

std::string key_of(const GroupWord& w) {
  std::string key;
  key.reserve(w.size() * 3);
  for (int v : w.to_signed()) {
    key += std::to_string(v);
    key += ',';
  }
  return key;
}

void require_ambient(const ReductionInstance& inst, Ambient expected, const char* what) {
  if (inst.ambient != expected) throw std::invalid_argument(what);
}

}  // namespace

GroupDescriptor GroupDescriptor::make(GroupKind kind, Alphabet alphabet) {
  switch (kind) {
    case GroupKind::kTrivial:
      if (alphabet.size() != 0)
        throw std::invalid_argument("the trivial group has no generators");
      break;
    case GroupKind::kFree:
      break;
    case GroupKind::kP4:
      if (alphabet.size() != 4)
        throw std::invalid_argument("the path group factor needs exactly four generators");
      break;
  }
  return GroupDescriptor{kind, std::move(alphabet)};
}

Canonicalizer canonicalizer_for(const GroupDescriptor& g) {
  switch (g.kind) {
    case GroupKind::kTrivial:
      return [](const GroupWord&) { return GroupWord(); };
    case GroupKind::kFree:
      return [](const GroupWord& w) { return free_reduce(w); };
    case GroupKind::kP4: {
      LabeledGraph graph = path_graph_for(g.alphabet);
      return [graph](const GroupWord& w) { return raag_canonical_form(graph, w); };
    }
  }
  throw std::logic_error("unknown group kind");
}

StateEncoding encode_states(const NormalizedNfa& a, const GroupDescriptor& g) {
  const std::size_t base = g.alphabet.size();
  const Letter x{static_cast<std::uint32_t>(base), 1};
  const Letter y{static_cast<std::uint32_t>(base + 1), 1};
  const Letter z{static_cast<std::uint32_t>(base + 2), 1};

  StateEncoding enc;
  enc.words.resize(a.nfa.n_states());
  std::size_t next = 1;
  for (std::size_t s = 0; s < a.nfa.n_states(); ++s) {
    GroupWord w;
    if (s == a.nfa.initial()) {
      w.push_back(x);
    } else if (s == a.final_state) {
      w.push_back(y);
    } else {
      for (std::size_t i = 0; i < next; ++i) w.push_back(z);
      w.push_back(x);
      for (std::size_t i = 0; i < next; ++i) w.push_back(z.inverse());
      ++next;
    }
    enc.words[s] = std::move(w);
  }
  return enc;
}

ReductionInstance build_delta(const NormalizedNfa& a, GroupKind g_kind) {
  const Nfa& nfa = a.nfa;
  if (a.final_state == nfa.initial() || !nfa.is_final(a.final_state) ||
      nfa.finals().size() != 1)
    throw std::invalid_argument("build_delta needs a normalized automaton");
  for (const char* reserved : {"x", "y", "z"})
    if (nfa.alphabet().contains(reserved))
      throw std::invalid_argument(
          "automaton generators may not be named x, y or z (reserved for state encoding)");

  GroupDescriptor g = GroupDescriptor::make(g_kind, nfa.alphabet());

  std::vector<std::string> combined = nfa.alphabet().names();
  combined.insert(combined.end(), {"x", "y", "z"});

  ReductionInstance inst;
  inst.ambient = Ambient::kGStarF3;
  inst.g = std::move(g);
  inst.alphabet = Alphabet(std::move(combined));
  inst.kind = InstanceKind::kFixedTargetSubmonoid;

  StateEncoding enc = encode_states(a, inst.g);
  for (const NfaTransition& t : nfa.transitions()) {
    GroupWord w = enc.words[t.from];
    if (t.letter) w.push_back(*t.letter);
    w.append(enc.words[t.to].inverse());
    inst.generators.push_back(std::move(w));
  }

  const std::size_t base = inst.g.alphabet.size();
  inst.target.push_back({static_cast<std::uint32_t>(base), 1});        // x
  inst.target.push_back({static_cast<std::uint32_t>(base + 1), -1});   // y^-1
  return inst;
}

std::vector<std::size_t> extract_witness(const ReductionInstance& inst, const NormalizedNfa& a,
                                         const std::vector<std::size_t>& accepting_path) {
  require_ambient(inst, Ambient::kGStarF3, "witness extraction expects a free product instance");
  if (accepting_path.empty())
    throw VerificationError("an accepting path must use at least one transition");
  // Contiguity and acceptance of the path itself.
  word_of_path(a.nfa, accepting_path);

  GroupWord product;
  for (std::size_t idx : accepting_path) {
    if (idx >= inst.generators.size())
      throw VerificationError("path transition has no matching generator");
    product.append(inst.generators[idx]);
  }
  if (ambient_canonical(inst, product) != ambient_canonical(inst, inst.target))
    throw VerificationError(
        "path product does not reduce to the target: the accepted word is not trivial in "
        "the factor group");
  return accepting_path;
}

ReductionInstance instantiate_in_p4(const ReductionInstance& inst) {
  require_ambient(inst, Ambient::kGStarF3, "instantiation expects a free product instance");
  if (inst.g.kind == GroupKind::kFree)
    throw std::invalid_argument(
        "only the trivial group and the path group itself can be re-realized on the "
        "conjugate-vertex catalog");

  // Images over the concrete path vertices a, b, c, d: G's i-th generator
  // goes to catalog member 3 + (i+1), and x, y, z to members 0, 2, -2.
  std::vector<GroupWord> images;
  for (std::size_t i = 0; i < inst.g.alphabet.size(); ++i)
    images.push_back(p4_conjugate_vertex(4 + static_cast<long>(i)));
  images.push_back(p4_conjugate_vertex(0));   // x
  images.push_back(p4_conjugate_vertex(2));   // y
  images.push_back(p4_conjugate_vertex(-2));  // z

  ReductionInstance out;
  out.ambient = Ambient::kAP4;
  out.alphabet = p4_graph().vertices();
  out.kind = inst.kind;
  for (const GroupWord& w : inst.generators)
    out.generators.push_back(raag_canonical_form(p4_graph(), map_letters(w, images)));
  out.target = raag_canonical_form(p4_graph(), map_letters(inst.target, images));
  out.witness = inst.witness;
  return out;
}

ReductionInstance compile_to_b4(const ReductionInstance& inst) {
  require_ambient(inst, Ambient::kAP4, "braid compilation expects a path group instance");

  auto embed = [](const GroupWord& w) {
    BraidWord b = droms_embed(w);
    std::vector<Letter> letters;
    letters.reserve(b.letters.size());
    for (int l : b.letters)
      letters.push_back({static_cast<std::uint32_t>((l > 0 ? l : -l) - 1),
                         static_cast<std::int8_t>(l > 0 ? 1 : -1)});
    return GroupWord(std::move(letters));
  };

  ReductionInstance out;
  out.ambient = Ambient::kB4;
  out.alphabet = Alphabet({"s1", "s2", "s3"});
  out.kind = inst.kind;
  for (const GroupWord& w : inst.generators) out.generators.push_back(embed(w));
  out.target = embed(inst.target);
  out.witness = inst.witness;
  return out;
}

ReductionInstance make_intersection_instance(const ReductionInstance& inst) {
  if (inst.kind != InstanceKind::kFixedTargetSubmonoid)
    throw std::invalid_argument("already an intersection instance");
  ReductionInstance out = inst;
  out.kind = InstanceKind::kSemigroupIntersection;
  return out;
}

GroupWord ambient_canonical(const ReductionInstance& inst, const GroupWord& w) {
  switch (inst.ambient) {
    case Ambient::kGStarF3:
      return flatten(fp_reduce(split_syllables(w, inst.g.alphabet.size()), oracles_for(inst)));
    case Ambient::kAP4:
      return raag_canonical_form(p4_graph(), w);
    case Ambient::kB4: {
      BraidWord b(4, w.to_signed());
      BraidWord nf = word_of(garside_normal_form(b));
      return GroupWord::from_signed(nf.letters);
    }
  }
  throw std::logic_error("unknown ambient");
}

bool verify_witness(const ReductionInstance& inst) {
  if (!inst.witness) throw std::invalid_argument("instance carries no witness");
  GroupWord product;
  for (std::size_t idx : *inst.witness) {
    if (idx >= inst.generators.size())
      throw std::invalid_argument("witness index out of range");
    product.append(inst.generators[idx]);
  }
  if (inst.witness->empty())  // the empty product only witnesses a trivial fixed target
    return inst.kind == InstanceKind::kFixedTargetSubmonoid &&
           ambient_canonical(inst, inst.target).empty();
  return ambient_canonical(inst, product) == ambient_canonical(inst, inst.target);
}

SearchResult bounded_member(const ReductionInstance& inst, std::size_t depth,
                            const SearchLimits& limits) {
  auto canon = [&inst](const GroupWord& w) { return ambient_canonical(inst, w); };

  // Targets: the fixed target, or its powers 1..depth for intersection
  // questions. Keys are canonical words.
  std::unordered_map<std::string, int> target_keys;
  {
    GroupWord power;
    std::size_t max_power = inst.kind == InstanceKind::kSemigroupIntersection ? depth : 1;
    for (std::size_t m = 1; m <= max_power; ++m) {
      power.append(inst.target);
      target_keys.emplace(key_of(canon(power)), static_cast<int>(m));
    }
  }

  struct Node {
    GroupWord word;  // canonical representative
    std::size_t parent;
    std::size_t generator;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::string> seen;

  // Node 0 is the empty product; its generator slot is meaningless.
  auto witness_of = [&nodes](std::size_t node) {
    std::vector<std::size_t> out;
    for (std::size_t cur = node; cur != 0; cur = nodes[cur].parent)
      out.push_back(nodes[cur].generator);
    std::reverse(out.begin(), out.end());
    return out;
  };

  SearchResult result;
  std::vector<std::size_t> frontier;

  // Depth 0: the empty product. A fixed trivial target is witnessed by it
  // (submonoid semantics); otherwise it only seeds deduplication.
  if (inst.kind == InstanceKind::kFixedTargetSubmonoid &&
      canon(inst.target).empty()) {
    result.found = true;
    result.target_power = 1;
    return result;
  }
  nodes.push_back({canon(GroupWord()), static_cast<std::size_t>(-1), 0});
  seen.insert(key_of(nodes[0].word));
  frontier.push_back(0);

  for (std::size_t level = 1; level <= depth; ++level) {
    std::vector<std::size_t> next;
    for (std::size_t node : frontier) {
      for (std::size_t gi = 0; gi < inst.generators.size(); ++gi) {
        GroupWord w = canon(nodes[node].word * inst.generators[gi]);
        std::string key = key_of(w);
        if (auto hit = target_keys.find(key); hit != target_keys.end()) {
          result.found = true;
          result.target_power = hit->second;
          result.depth_searched = level;
          nodes.push_back({std::move(w), node, gi});
          result.witness = witness_of(nodes.size() - 1);
          return result;
        }
        if (seen.insert(key).second) {
          if (seen.size() > limits.max_states)
            throw ResourceLimitError(
                "bounded search exceeded its canonical-form budget (" +
                std::to_string(limits.max_states) + ")");
          nodes.push_back({std::move(w), node, gi});
          next.push_back(nodes.size() - 1);
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  result.found = false;
  result.depth_searched = depth;
  return result;
}

}  // namespace artin
