#include "oracles.hpp"

#include <deque>

namespace artin::oracle {
namespace {

bool independent(const LabeledGraph& g, const Letter& a, const Letter& b) {
  return a.gen != b.gen && g.adjacent(a.gen, b.gen);
}

}  // namespace

GroupWord naive_free_reduce(const GroupWord& w) {
  std::vector<Letter> v(w.begin(), w.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i].gen == v[i + 1].gen && v[i].sign != v[i + 1].sign) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i),
                v.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return GroupWord(std::move(v));
}

std::set<std::vector<int>> bfs_class(const LabeledGraph& graph, const GroupWord& w) {
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  seen.insert(w.to_signed());
  queue.push_back(w.to_signed());
  auto letter_of = [](int v) {
    return Letter{static_cast<std::uint32_t>((v > 0 ? v : -v) - 1),
                  static_cast<std::int8_t>(v > 0 ? 1 : -1)};
  };
  while (!queue.empty()) {
    std::vector<int> cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      Letter a = letter_of(cur[i]), b = letter_of(cur[i + 1]);
      if (independent(graph, a, b)) {
        std::vector<int> next = cur;
        std::swap(next[i], next[i + 1]);
        if (seen.insert(next).second) queue.push_back(next);
      }
      if (cur[i] == -cur[i + 1]) {
        std::vector<int> next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(i));
        next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(i) + 2, cur.end());
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  return seen;
}

bool bfs_is_trivial(const LabeledGraph& graph, const GroupWord& w) {
  return bfs_class(graph, w).count({}) > 0;
}

GroupWord random_relation_move(const LabeledGraph& graph, const GroupWord& w, std::mt19937& rng) {
  std::vector<int> v = w.to_signed();
  // Collect every applicable move, then pick one uniformly. Insertions are
  // always applicable.
  struct Move {
    enum { kSwap, kDelete, kInsert } kind;
    std::size_t pos;
    int letter;
  };
  std::vector<Move> moves;
  auto letter_of = [](int x) {
    return Letter{static_cast<std::uint32_t>((x > 0 ? x : -x) - 1),
                  static_cast<std::int8_t>(x > 0 ? 1 : -1)};
  };
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (independent(graph, letter_of(v[i]), letter_of(v[i + 1])))
      moves.push_back({Move::kSwap, i, 0});
    if (v[i] == -v[i + 1]) moves.push_back({Move::kDelete, i, 0});
  }
  for (std::size_t i = 0; i <= v.size(); ++i)
    for (std::size_t g = 1; g <= graph.rank(); ++g)
      for (int s : {1, -1}) moves.push_back({Move::kInsert, i, s * static_cast<int>(g)});
  Move m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
  switch (m.kind) {
    case Move::kSwap:
      std::swap(v[m.pos], v[m.pos + 1]);
      break;
    case Move::kDelete:
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(m.pos),
              v.begin() + static_cast<std::ptrdiff_t>(m.pos) + 2);
      break;
    case Move::kInsert:
      v.insert(v.begin() + static_cast<std::ptrdiff_t>(m.pos), {m.letter, -m.letter});
      break;
  }
  return GroupWord::from_signed(v);
}

bool has_induced_c4(const LabeledGraph& g) {
  std::size_t n = g.rank();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          if (a >= b || a >= c || a >= d || b >= d) continue;  // a least, fix orientation
          if (b == c || c == d) continue;
          if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && g.adjacent(d, a) &&
              !g.adjacent(a, c) && !g.adjacent(b, d))
            return true;
        }
  return false;
}

bool has_induced_p4(const LabeledGraph& g) {
  std::size_t n = g.rank();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          if (a > d) continue;  // each path found twice otherwise
          if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && !g.adjacent(a, c) &&
              !g.adjacent(a, d) && !g.adjacent(b, d))
            return true;
        }
  return false;
}

std::optional<std::set<std::vector<int>>> reduced_accepted_words(const Nfa& a,
                                                                 std::size_t max_len,
                                                                 std::size_t budget) {
  // Pairs (state, freely reduced word read so far). Appending a letter to a
  // reduced word reduces in one step at the boundary.
  std::set<std::pair<std::size_t, std::vector<int>>> seen;
  std::deque<std::pair<std::size_t, std::vector<int>>> queue;
  std::set<std::vector<int>> accepted;
  seen.insert({a.initial(), {}});
  queue.push_back({a.initial(), {}});
  while (!queue.empty()) {
    auto [state, word] = queue.front();
    queue.pop_front();
    if (a.is_final(state)) accepted.insert(word);
    for (const NfaTransition& t : a.transitions()) {
      if (t.from != state) continue;
      std::vector<int> next = word;
      if (t.letter) {
        int v = t.letter->sign > 0 ? static_cast<int>(t.letter->gen) + 1
                                   : -(static_cast<int>(t.letter->gen) + 1);
        if (!next.empty() && next.back() == -v)
          next.pop_back();
        else
          next.push_back(v);
      }
      if (next.size() > max_len) continue;
      if (seen.insert({t.to, next}).second) {
        if (seen.size() > budget) return std::nullopt;
        queue.push_back({t.to, std::move(next)});
      }
    }
  }
  return accepted;
}

GroupWord random_word(std::mt19937& rng, std::size_t alphabet_size, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<std::uint32_t> gen_dist(0, static_cast<std::uint32_t>(alphabet_size) - 1);
  std::bernoulli_distribution sign_dist(0.5);
  std::size_t len = len_dist(rng);
  std::vector<Letter> letters;
  letters.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    letters.push_back({gen_dist(rng), static_cast<std::int8_t>(sign_dist(rng) ? 1 : -1)});
  return GroupWord(std::move(letters));
}

LabeledGraph random_graph(std::mt19937& rng, std::size_t rank, double two_bias) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rank; ++i) names.push_back("v" + std::to_string(i + 1));
  LabeledGraph g(Alphabet(std::move(names)));
  std::bernoulli_distribution edge_dist(0.5);
  std::bernoulli_distribution two_dist(two_bias);
  std::uniform_int_distribution<int> label_dist(3, 5);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j)
      if (edge_dist(rng)) g.add_edge(i, j, two_dist(rng) ? 2 : label_dist(rng));
  return g;
}

Nfa random_nfa(std::mt19937& rng, const Alphabet& alphabet, std::size_t max_states,
               std::size_t max_transitions) {
  std::uniform_int_distribution<std::size_t> state_count_dist(1, max_states);
  std::size_t n = state_count_dist(rng);
  std::vector<std::string> states;
  for (std::size_t i = 0; i < n; ++i) states.push_back("q" + std::to_string(i));

  std::uniform_int_distribution<std::size_t> state_dist(0, n - 1);
  std::vector<std::string> finals;
  std::bernoulli_distribution final_dist(0.5);
  for (std::size_t i = 0; i < n; ++i)
    if (final_dist(rng)) finals.push_back(states[i]);
  if (finals.empty()) finals.push_back(states[state_dist(rng)]);

  Nfa a(alphabet, states, states[0], finals);
  std::uniform_int_distribution<std::size_t> transition_count_dist(1, max_transitions);
  // letter code: 0 = epsilon, else signed generator
  std::uniform_int_distribution<int> letter_dist(0, 2 * static_cast<int>(alphabet.size()));
  std::bernoulli_distribution sign_dist(0.5);
  std::size_t m = transition_count_dist(rng);
  for (std::size_t i = 0; i < m; ++i) {
    int code = letter_dist(rng);
    std::optional<Letter> letter;
    if (code > 0)
      letter = Letter{static_cast<std::uint32_t>((code - 1) / 2),
                      static_cast<std::int8_t>(code % 2 == 1 ? 1 : -1)};
    a.add_transition(state_dist(rng), letter, state_dist(rng));
  }
  return a;
}

}  // namespace artin::oracle
