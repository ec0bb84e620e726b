#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "artin/automaton.hpp"
#include "artin/braid.hpp"
#include "artin/classifier.hpp"
#include "artin/labeled_graph.hpp"
#include "artin/reduction.hpp"
#include "artin/word.hpp"

namespace artin {

/// Malformed document or unparsable word/letter.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

// Letters print as the generator name, inverses with the suffix ^-1 (for
// example "a", "a^-1"). Automaton transitions additionally use "eps".
std::string letter_to_string(const Alphabet& alphabet, Letter l);
Letter letter_from_string(const Alphabet& alphabet, const std::string& s);

Json word_to_json(const Alphabet& alphabet, const GroupWord& w);
GroupWord word_from_json(const Alphabet& alphabet, const Json& j);

/// Word from whitespace-separated letters ("a b a^-1"); empty input is the
/// empty word.
GroupWord word_from_text(const Alphabet& alphabet, const std::string& text);

// Document schemas are strict: unknown fields are rejected, and
// serialization is canonical (fixed key order, two-space indent, trailing
// newline), so load followed by save is byte-identical.

Json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const Json& j);

Json nfa_to_json(const Nfa& a);
Nfa nfa_from_json(const Json& j);

Json braid_word_to_json(const BraidWord& w);
BraidWord braid_word_from_json(const Json& j);

Json instance_to_json(const ReductionInstance& inst);
ReductionInstance instance_from_json(const Json& j);

Json verdict_to_json(const Verdict& v, const LabeledGraph& g);

std::string to_canonical_string(const Json& j);
Json parse_json(const std::string& text);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace artin
