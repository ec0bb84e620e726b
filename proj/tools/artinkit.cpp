// artinkit - membership problems in graph-presented groups and braid groups.
//
// Exit codes: 0 = property holds / member / found, 1 = does not hold / not
// found, 2 = malformed input or resource exhaustion, 3 = witness
// verification failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "artin/automaton.hpp"
#include "artin/braid.hpp"
#include "artin/classifier.hpp"
#include "artin/io.hpp"
#include "artin/raag.hpp"
#include "artin/reduction.hpp"

namespace {

using namespace artin;

std::vector<int> parse_signed_letters(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == '[' || c == ']' || c == ',') c = ' ';
  std::vector<int> out;
  std::istringstream in(cleaned);
  std::string token;
  while (in >> token) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw ParseError("not a signed braid letter: \"" + token + "\"");
    }
    if (pos != token.size()) throw ParseError("not a signed braid letter: \"" + token + "\"");
    out.push_back(v);
  }
  return out;
}

SearchLimits limits_from_env() {
  SearchLimits limits;
  if (const char* env = std::getenv("ARTINKIT_MAX_STATES")) {
    std::string s(env);
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s.size() || v == 0)
      throw ParseError("ARTINKIT_MAX_STATES must be a positive integer");
    limits.max_states = static_cast<std::size_t>(v);
  }
  return limits;
}

void emit(const Json& j, const std::string& output_path) {
  if (output_path.empty())
    std::cout << to_canonical_string(j);
  else
    save_json_file(output_path, j);
}

int run_classify(const std::string& graph_path, const std::string& output_path) {
  LabeledGraph g = graph_from_json(load_json_file(graph_path));
  emit(verdict_to_json(classify(g), g), output_path);
  return 0;
}

int run_compile(const std::string& nfa_path, const std::string& group, const std::string& target,
                const std::string& witness_word, bool intersection,
                const std::string& output_path) {
  GroupKind kind;
  if (group == "trivial") {
    kind = GroupKind::kTrivial;
  } else if (group == "p4") {
    kind = GroupKind::kP4;
  } else if (group.rfind("free:", 0) == 0) {
    kind = GroupKind::kFree;
  } else {
    throw ParseError("--group must be trivial, free:<k> or p4");
  }

  Nfa source = nfa_from_json(load_json_file(nfa_path));
  if (kind == GroupKind::kFree) {
    std::size_t k = 0;
    std::string num = group.substr(5);
    std::size_t pos = 0;
    try {
      k = static_cast<std::size_t>(std::stoul(num, &pos));
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != num.size() || k == 0) throw ParseError("--group free:<k> needs a positive rank");
    if (k != source.alphabet().size())
      throw ParseError("--group free:" + num + " does not match an alphabet of " +
                       std::to_string(source.alphabet().size()) + " generators");
  }

  NormalizedNfa normalized = normalize(source);
  ReductionInstance inst = build_delta(normalized, kind);

  if (!witness_word.empty()) {
    GroupWord w;
    try {
      w = word_from_text(source.alphabet(), witness_word);
    } catch (const ParseError& err) {
      throw ParseError(std::string("--witness-word: ") + err.what());
    }
    auto path = accepting_path_for(normalized.nfa, w);
    if (!path) throw VerificationError("witness word is not accepted by the automaton");
    inst.witness = extract_witness(inst, normalized, *path);
  }

  if (target == "p4" || target == "b4") {
    inst = instantiate_in_p4(inst);
    if (target == "b4") inst = compile_to_b4(inst);
  } else if (target != "product") {
    throw ParseError("--target must be product, p4 or b4");
  }
  if (intersection) inst = make_intersection_instance(inst);

  emit(instance_to_json(inst), output_path);
  return 0;
}

int run_wp_raag(const std::string& graph_path, const std::string& word_text) {
  LabeledGraph g = graph_from_json(load_json_file(graph_path));
  GroupWord w;
  try {
    w = word_from_text(g.vertices(), word_text);
  } catch (const ParseError& err) {
    throw ParseError(std::string("word: ") + err.what());
  }
  GroupWord canon = raag_canonical_form(g, w);
  if (canon.empty()) {
    std::cout << "trivial\n";
    return 0;
  }
  std::cout << "nontrivial; canonical form:";
  for (const Letter& l : canon) std::cout << ' ' << letter_to_string(g.vertices(), l);
  std::cout << "\n";
  return 1;
}

int run_wp_braid(int n, const std::string& word_text) {
  BraidWord w(n, parse_signed_letters(word_text));
  if (braid_is_trivial(w)) {
    std::cout << "trivial\n";
    return 0;
  }
  std::cout << (is_pure(w) ? "nontrivial; pure\n" : "nontrivial; not pure\n");
  return 1;
}

int run_benois(const std::string& nfa_path, const std::string& word_text) {
  Nfa a = nfa_from_json(load_json_file(nfa_path));
  GroupWord u;
  try {
    u = word_from_text(a.alphabet(), word_text);
  } catch (const ParseError& err) {
    throw ParseError(std::string("word: ") + err.what());
  }
  auto path = benois_witness_path(a, u);
  if (!path) {
    std::cout << "not a member\n";
    return 1;
  }
  std::cout << "member\naccepted word:";
  GroupWord read = word_of_path(a, *path);
  for (const Letter& l : read) std::cout << ' ' << letter_to_string(a.alphabet(), l);
  std::cout << "\n";
  return 0;
}

int run_search(const std::string& instance_path, std::size_t depth) {
  ReductionInstance inst = instance_from_json(load_json_file(instance_path));
  SearchResult r = bounded_member(inst, depth, limits_from_env());
  if (!r.found) {
    std::cout << "not found within depth " << depth << "\n";
    return 1;
  }
  std::cout << "found at depth " << r.depth_searched;
  if (inst.kind == InstanceKind::kSemigroupIntersection)
    std::cout << " (target power " << r.target_power << ")";
  std::cout << "\nwitness:";
  for (std::size_t i : r.witness) std::cout << ' ' << i;
  std::cout << "\n";
  return 0;
}

int run_verify_embeddings() {
  bool ok = true;

  // Commutation of strand-doubled generator pairs must match path adjacency.
  {
    int good = 0;
    const LabeledGraph& p4 = p4_graph();
    for (std::uint32_t i = 0; i < 4; ++i)
      for (std::uint32_t j = i + 1; j < 4; ++j) {
        GroupWord u(std::vector<Letter>{{i, 1}});
        GroupWord v(std::vector<Letter>{{j, 1}});
        BraidWord commutator =
            droms_embed(u * v * u.inverse() * v.inverse());
        if (braid_is_trivial(commutator) == p4.adjacent(i, j)) ++good;
      }
    std::cout << "strand doubling: " << good << "/6 commutator checks match path adjacency\n";
    ok = ok && good == 6;
  }

  // The conjugate-vertex catalog forms a path: consecutive members commute,
  // nothing else does.
  {
    int good = 0, total = 0;
    for (long m = -4; m <= 9; ++m)
      for (long n = m + 1; n <= 9; ++n) {
        ++total;
        bool expected = (n - m == 1);
        if (commutes(p4_graph(), p4_conjugate_vertex(m), p4_conjugate_vertex(n)) == expected)
          ++good;
      }
    std::cout << "conjugate catalog: " << good << "/" << total
              << " pair checks match the distance-1 rule\n";
    ok = ok && good == total;
  }

  // The free-product generators realize exactly the declared commutation
  // pattern: consecutive g's commute (the g's span a path-shaped group),
  // while x, y, z commute with nothing (they span a free group).
  {
    P4StarEmbedding e = p4_star_embedding();
    std::vector<GroupWord> elems = {e.x, e.y, e.z, e.g[0], e.g[1], e.g[2], e.g[3]};
    auto expected = [](std::size_t i, std::size_t j) {
      // indices: 0 = x, 1 = y, 2 = z, 3..6 = g1..g4; edges: g1-g2, g2-g3, g3-g4
      if (i > j) std::swap(i, j);
      return i >= 3 && j == i + 1;
    };
    int good = 0, total = 0;
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = i + 1; j < elems.size(); ++j) {
        ++total;
        if (commutes(p4_graph(), elems[i], elems[j]) == expected(i, j)) ++good;
      }
    std::cout << "star embedding: " << good << "/" << total
              << " commutation checks match the free-product shape\n";
    ok = ok && good == total;
  }

  std::cout << (ok ? "all embedding checks passed\n" : "embedding checks FAILED\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"membership problems in graph-presented groups and braid groups"};
  app.require_subcommand(1);

  std::string graph_path, nfa_path, instance_path, word_text, output_path;
  std::string group = "trivial", target = "product", witness_word;
  bool intersection = false;
  std::size_t depth = 8;
  int strands = 4;

  auto* classify_cmd = app.add_subcommand("classify", "decide the membership problems of a graph");
  classify_cmd->add_option("graph", graph_path, "labeled graph JSON file")->required();
  classify_cmd->add_option("-o,--output", output_path, "write the verdict here instead of stdout");

  auto* compile_cmd =
      app.add_subcommand("compile", "compile an automaton into a membership instance");
  compile_cmd->add_option("nfa", nfa_path, "automaton JSON file")->required();
  compile_cmd->add_option("--group", group, "factor group: trivial, free:<k> or p4");
  compile_cmd->add_option("--target", target, "output stage: product, p4 or b4");
  compile_cmd->add_option("--witness-word", witness_word,
                          "accepted word, trivial in the factor group, to turn into a witness");
  compile_cmd->add_flag("--intersection", intersection,
                        "emit a semigroup intersection instance");
  compile_cmd->add_option("-o,--output", output_path, "write the instance here instead of stdout");

  auto* wp_cmd = app.add_subcommand("wp", "word problem");
  wp_cmd->require_subcommand(1);
  auto* wp_raag = wp_cmd->add_subcommand("raag", "in the right-angled group of a graph");
  wp_raag->add_option("graph", graph_path, "labeled graph JSON file (all labels 2)")->required();
  wp_raag->add_option("word", word_text, "letters such as: a b a^-1 b^-1");
  auto* wp_braid = wp_cmd->add_subcommand("braid", "in the braid group on n strands");
  wp_braid->add_option("n", strands, "number of strands")->required();
  wp_braid->add_option("word", word_text, "signed letters such as: 2 2 -3");

  auto* benois_cmd =
      app.add_subcommand("benois", "rational subset membership over a free group");
  benois_cmd->add_option("nfa", nfa_path, "automaton JSON file")->required();
  benois_cmd->add_option("word", word_text, "query word (default: the identity)");

  auto* search_cmd = app.add_subcommand("search", "bounded product search on an instance");
  search_cmd->add_option("instance", instance_path, "instance JSON file")->required();
  search_cmd->add_option("--depth", depth, "maximum product length (default 8)");

  app.add_subcommand("verify-embeddings", "check the built-in embedding suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(graph_path, output_path);
    if (compile_cmd->parsed())
      return run_compile(nfa_path, group, target, witness_word, intersection, output_path);
    if (wp_raag->parsed()) return run_wp_raag(graph_path, word_text);
    if (wp_braid->parsed()) return run_wp_braid(strands, word_text);
    if (benois_cmd->parsed()) return run_benois(nfa_path, word_text);
    if (search_cmd->parsed()) return run_search(instance_path, depth);
    return run_verify_embeddings();
  } catch (const VerificationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
