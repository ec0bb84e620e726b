#include "artin/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace artin {
namespace {

void require_object(const Json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
  for (const char* k : keys)
    if (!j.contains(k))
      throw ParseError(std::string(what) + ": missing field \"" + k + "\"");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw ParseError(std::string(what) + ": unknown field \"" + key + "\"");
  }
}

std::vector<std::string> string_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of strings");
  std::vector<std::string> out;
  for (const Json& e : j) {
    if (!e.is_string()) throw ParseError(std::string(what) + ": expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

int int_field(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + ": expected an integer");
  return j.get<int>();
}

std::vector<int> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of integers");
  std::vector<int> out;
  for (const Json& e : j) out.push_back(int_field(e, what));
  return out;
}

std::string ambient_tag(const ReductionInstance& inst) {
  switch (inst.ambient) {
    case Ambient::kGStarF3:
      switch (inst.g.kind) {
        case GroupKind::kTrivial: return "trivial*F3";
        case GroupKind::kFree: return "free:" + std::to_string(inst.g.alphabet.size()) + "*F3";
        case GroupKind::kP4: return "p4*F3";
      }
      break;
    case Ambient::kAP4: return "A(P4)";
    case Ambient::kB4: return "B4";
  }
  throw std::logic_error("unknown ambient");
}

const char* kind_tag(InstanceKind k) {
  return k == InstanceKind::kFixedTargetSubmonoid ? "fixed-target-submonoid"
                                                  : "semigroup-intersection";
}

InstanceKind kind_from_tag(const std::string& s) {
  if (s == "fixed-target-submonoid") return InstanceKind::kFixedTargetSubmonoid;
  if (s == "semigroup-intersection") return InstanceKind::kSemigroupIntersection;
  throw ParseError("instance: unknown kind \"" + s + "\"");
}

}  // namespace

std::string letter_to_string(const Alphabet& alphabet, Letter l) {
  if (l.gen >= alphabet.size()) throw std::invalid_argument("letter outside the alphabet");
  std::string s = alphabet.name(l.gen);
  if (l.sign < 0) s += "^-1";
  return s;
}

Letter letter_from_string(const Alphabet& alphabet, const std::string& s) {
  if (auto idx = alphabet.index(s)) return Letter{static_cast<std::uint32_t>(*idx), 1};
  if (s.size() > 3 && s.substr(s.size() - 3) == "^-1")
    if (auto idx = alphabet.index(s.substr(0, s.size() - 3)))
      return Letter{static_cast<std::uint32_t>(*idx), -1};
  throw ParseError("unknown letter \"" + s + "\"");
}

Json word_to_json(const Alphabet& alphabet, const GroupWord& w) {
  Json out = Json::array();
  for (const Letter& l : w) out.push_back(letter_to_string(alphabet, l));
  return out;
}

GroupWord word_from_json(const Alphabet& alphabet, const Json& j) {
  GroupWord w;
  for (const std::string& s : string_array(j, "word"))
    w.push_back(letter_from_string(alphabet, s));
  return w;
}

GroupWord word_from_text(const Alphabet& alphabet, const std::string& text) {
  GroupWord w;
  std::istringstream in(text);
  std::string token;
  while (in >> token) w.push_back(letter_from_string(alphabet, token));
  return w;
}

Json graph_to_json(const LabeledGraph& g) {
  Json out;
  out["vertices"] = g.vertices().names();
  Json edges = Json::array();
  for (const auto& [edge, label] : g.edges())
    edges.push_back(Json::array(
        {g.vertices().name(edge.first), g.vertices().name(edge.second), label}));
  out["edges"] = edges;
  return out;
}

LabeledGraph graph_from_json(const Json& j) {
  require_object(j, {"vertices", "edges"}, "graph");
  LabeledGraph g(Alphabet(string_array(j["vertices"], "graph vertices")));
  if (!j["edges"].is_array()) throw ParseError("graph: \"edges\" must be an array");
  for (const Json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string())
      throw ParseError("graph: each edge must be [vertex, vertex, label]");
    auto u = g.vertices().index(e[0].get<std::string>());
    auto v = g.vertices().index(e[1].get<std::string>());
    if (!u || !v) throw ParseError("graph: edge endpoint is not a declared vertex");
    try {
      g.add_edge(*u, *v, int_field(e[2], "graph edge label"));
    } catch (const std::invalid_argument& err) {
      throw ParseError(std::string("graph: ") + err.what());
    }
  }
  return g;
}

Json nfa_to_json(const Nfa& a) {
  Json out;
  out["alphabet"] = a.alphabet().names();
  out["states"] = a.state_names();
  out["initial"] = a.state_name(a.initial());
  Json finals = Json::array();
  for (std::size_t f : a.finals()) finals.push_back(a.state_name(f));
  out["finals"] = finals;
  Json transitions = Json::array();
  for (const NfaTransition& t : a.transitions()) {
    std::string letter = t.letter ? letter_to_string(a.alphabet(), *t.letter) : "eps";
    transitions.push_back(Json::array({a.state_name(t.from), letter, a.state_name(t.to)}));
  }
  out["transitions"] = transitions;
  return out;
}

Nfa nfa_from_json(const Json& j) {
  require_object(j, {"alphabet", "states", "initial", "finals", "transitions"}, "automaton");
  Alphabet alphabet(string_array(j["alphabet"], "automaton alphabet"));
  if (!j["initial"].is_string()) throw ParseError("automaton: \"initial\" must be a state name");
  Nfa a;
  try {
    a = Nfa(alphabet, string_array(j["states"], "automaton states"),
            j["initial"].get<std::string>(), string_array(j["finals"], "automaton finals"));
  } catch (const std::invalid_argument& err) {
    throw ParseError(std::string("automaton: ") + err.what());
  }
  if (!j["transitions"].is_array())
    throw ParseError("automaton: \"transitions\" must be an array");
  for (const Json& t : j["transitions"]) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() ||
        !t[2].is_string())
      throw ParseError("automaton: each transition must be [state, letter, state]");
    auto from = a.state_index(t[0].get<std::string>());
    auto to = a.state_index(t[2].get<std::string>());
    if (!from || !to) throw ParseError("automaton: transition endpoint is not a declared state");
    std::string letter = t[1].get<std::string>();
    std::optional<Letter> l;
    if (letter != "eps") l = letter_from_string(alphabet, letter);
    a.add_transition(*from, l, *to);
  }
  return a;
}

Json braid_word_to_json(const BraidWord& w) {
  Json out;
  out["n"] = w.n;
  out["letters"] = w.letters;
  return out;
}

BraidWord braid_word_from_json(const Json& j) {
  require_object(j, {"n", "letters"}, "braid word");
  try {
    return BraidWord(int_field(j["n"], "braid word strand count"),
                     int_array(j["letters"], "braid word letters"));
  } catch (const std::invalid_argument& err) {
    throw ParseError(std::string("braid word: ") + err.what());
  }
}

Json instance_to_json(const ReductionInstance& inst) {
  Json out;
  out["ambient"] = ambient_tag(inst);
  if (inst.ambient == Ambient::kB4) {
    out["n"] = 4;
    out["kind"] = kind_tag(inst.kind);
    Json gens = Json::array();
    for (const GroupWord& g : inst.generators) gens.push_back(g.to_signed());
    out["generators"] = gens;
    out["target"] = inst.target.to_signed();
  } else {
    out["alphabet"] = inst.alphabet.names();
    out["kind"] = kind_tag(inst.kind);
    Json gens = Json::array();
    for (const GroupWord& g : inst.generators) gens.push_back(word_to_json(inst.alphabet, g));
    out["generators"] = gens;
    out["target"] = word_to_json(inst.alphabet, inst.target);
  }
  if (inst.witness) {
    Json w = Json::array();
    for (std::size_t i : *inst.witness) w.push_back(i);
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

ReductionInstance instance_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ambient") || !j["ambient"].is_string())
    throw ParseError("instance: missing string field \"ambient\"");
  std::string tag = j["ambient"].get<std::string>();

  ReductionInstance inst;
  if (tag == "B4") {
    require_object(j, {"ambient", "n", "kind", "generators", "target", "witness"}, "instance");
    if (int_field(j["n"], "instance n") != 4)
      throw ParseError("instance: braid instances are over 4 strands");
    inst.ambient = Ambient::kB4;
    inst.alphabet = Alphabet({"s1", "s2", "s3"});
    inst.kind = kind_from_tag(j["kind"].get<std::string>());
    if (!j["generators"].is_array()) throw ParseError("instance: \"generators\" must be an array");
    try {
      for (const Json& g : j["generators"]) {
        BraidWord w(4, int_array(g, "instance generator"));
        inst.generators.push_back(GroupWord::from_signed(w.letters));
      }
      BraidWord t(4, int_array(j["target"], "instance target"));
      inst.target = GroupWord::from_signed(t.letters);
    } catch (const std::invalid_argument& err) {
      throw ParseError(std::string("instance: ") + err.what());
    }
  } else {
    require_object(j, {"ambient", "alphabet", "kind", "generators", "target", "witness"},
                   "instance");
    Alphabet alphabet(string_array(j["alphabet"], "instance alphabet"));
    if (tag == "A(P4)") {
      if (!(alphabet == Alphabet({"a", "b", "c", "d"})))
        throw ParseError("instance: the path group alphabet must be a, b, c, d");
      inst.ambient = Ambient::kAP4;
    } else {
      GroupKind kind;
      std::size_t g_rank;
      if (tag == "trivial*F3") {
        kind = GroupKind::kTrivial;
        g_rank = 0;
      } else if (tag == "p4*F3") {
        kind = GroupKind::kP4;
        g_rank = 4;
      } else if (tag.rfind("free:", 0) == 0 && tag.size() > 8 &&
                 tag.substr(tag.size() - 3) == "*F3") {
        kind = GroupKind::kFree;
        std::string num = tag.substr(5, tag.size() - 8);
        std::size_t pos = 0;
        int k = -1;
        try {
          k = std::stoi(num, &pos);
        } catch (const std::exception&) {
          throw ParseError("instance: unknown ambient \"" + tag + "\"");
        }
        if (pos != num.size() || k < 1)
          throw ParseError("instance: unknown ambient \"" + tag + "\"");
        g_rank = static_cast<std::size_t>(k);
      } else {
        throw ParseError("instance: unknown ambient \"" + tag + "\"");
      }
      if (alphabet.size() != g_rank + 3 ||
          alphabet.name(g_rank) != "x" || alphabet.name(g_rank + 1) != "y" ||
          alphabet.name(g_rank + 2) != "z")
        throw ParseError(
            "instance: the alphabet must list the factor generators followed by x, y, z");
      std::vector<std::string> g_names(alphabet.names().begin(),
                                       alphabet.names().begin() + static_cast<std::ptrdiff_t>(g_rank));
      inst.ambient = Ambient::kGStarF3;
      inst.g = GroupDescriptor::make(kind, Alphabet(std::move(g_names)));
    }
    inst.alphabet = alphabet;
    inst.kind = kind_from_tag(j["kind"].get<std::string>());
    if (!j["generators"].is_array()) throw ParseError("instance: \"generators\" must be an array");
    for (const Json& g : j["generators"])
      inst.generators.push_back(word_from_json(inst.alphabet, g));
    inst.target = word_from_json(inst.alphabet, j["target"]);
  }

  const Json& w = j["witness"];
  if (!w.is_null()) {
    std::vector<std::size_t> witness;
    for (int v : int_array(w, "instance witness")) {
      if (v < 0 || static_cast<std::size_t>(v) >= inst.generators.size())
        throw ParseError("instance: witness index out of range");
      witness.push_back(static_cast<std::size_t>(v));
    }
    inst.witness = std::move(witness);
  }
  return inst;
}

Json verdict_to_json(const Verdict& v, const LabeledGraph& g) {
  Json out;
  Json problems;
  for (std::size_t p = 0; p < kProblemCount; ++p)
    problems[problem_name(static_cast<Problem>(p))] = status_name(v.status[p]);
  out["problems"] = problems;
  if (v.witness) {
    Json w;
    w["pattern"] = pattern_name(v.witness->pattern);
    Json vertices = Json::array();
    for (std::size_t idx : v.witness->vertices) vertices.push_back(g.vertices().name(idx));
    w["vertices"] = vertices;
    w["labels"] = v.witness->labels;
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  out["justifications"] = v.justifications;
  out["notes"] = v.notes;
  return out;
}

std::string to_canonical_string(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  out << to_canonical_string(j);
}

}  // namespace artin
