#include "artin/automaton.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace artin {
namespace {

// Epsilon-reachability table with enough provenance to expand every derived
// edge back into a path of original transitions whose letters freely reduce
// to nothing. Derived facts only ever reference earlier ones, so expansion
// is well founded.
class Saturation {
 public:
  explicit Saturation(const Nfa& a) : a_(a), n_(a.n_states()), prov_(n_ * n_) {
    for (std::size_t t = 0; t < a.transitions().size(); ++t) {
      const NfaTransition& tr = a.transitions()[t];
      if (!tr.letter) set(tr.from, tr.to, {Prov::kOriginal, t, 0, 0, 0});
    }
    close();
    bool changed = true;
    while (changed) {
      changed = false;
      const auto& ts = a.transitions();
      for (std::size_t t1 = 0; t1 < ts.size(); ++t1) {
        if (!ts[t1].letter) continue;
        for (std::size_t t2 = 0; t2 < ts.size(); ++t2) {
          if (!ts[t2].letter || !(*ts[t2].letter == ts[t1].letter->inverse())) continue;
          if (!reaches(ts[t1].to, ts[t2].from)) continue;
          if (reaches(ts[t1].from, ts[t2].to)) continue;
          set(ts[t1].from, ts[t2].to, {Prov::kPair, t1, t2, ts[t1].to, ts[t2].from});
          close();
          changed = true;
        }
      }
    }
  }

  bool reaches(std::size_t p, std::size_t q) const {
    return p == q || prov_[p * n_ + q].has_value();
  }

  // Original-transition path p -> q reading a word that reduces to nothing.
  std::vector<std::size_t> expand(std::size_t p, std::size_t q) const {
    std::vector<std::size_t> out;
    expand_into(p, q, out);
    return out;
  }

 private:
  struct Prov {
    enum Kind { kOriginal, kCompose, kPair } kind;
    std::size_t t1, t2;        // transition indices (kOriginal uses t1; kPair both)
    std::size_t mid_a, mid_b;  // kCompose: midpoint in mid_a; kPair: inner pair
  };

  void set(std::size_t p, std::size_t q, Prov prov) {
    if (p == q) return;
    auto& slot = prov_[p * n_ + q];
    if (!slot) slot = prov;
  }

  // Transitive closure; records the midpoint the first time a pair appears.
  void close() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t p = 0; p < n_; ++p)
        for (std::size_t r = 0; r < n_; ++r) {
          if (p == r || !reaches(p, r)) continue;
          for (std::size_t q = 0; q < n_; ++q) {
            if (q == r || p == q || !reaches(r, q) || reaches(p, q)) continue;
            set(p, q, {Prov::kCompose, 0, 0, r, 0});
            grew = true;
          }
        }
    }
  }

  void expand_into(std::size_t p, std::size_t q, std::vector<std::size_t>& out) const {
    if (p == q) return;
    const auto& slot = prov_[p * n_ + q];
    if (!slot) throw std::logic_error("expansion of an unestablished epsilon edge");
    switch (slot->kind) {
      case Prov::kOriginal:
        out.push_back(slot->t1);
        break;
      case Prov::kCompose:
        expand_into(p, slot->mid_a, out);
        expand_into(slot->mid_a, q, out);
        break;
      case Prov::kPair:
        out.push_back(slot->t1);
        expand_into(slot->mid_a, slot->mid_b, out);
        out.push_back(slot->t2);
        break;
    }
    if (out.size() > kExpansionCap)
      throw std::runtime_error("epsilon-edge expansion exceeds the size cap");
  }

  static constexpr std::size_t kExpansionCap = 1u << 20;

  const Nfa& a_;
  std::size_t n_;
  std::vector<std::optional<Prov>> prov_;
};

}  // namespace

Nfa::Nfa(Alphabet alphabet, std::vector<std::string> states, const std::string& initial,
         const std::vector<std::string>& finals)
    : alphabet_(std::move(alphabet)), states_(std::move(states)) {
  if (states_.empty()) throw std::invalid_argument("automaton needs at least one state");
  std::set<std::string> seen;
  for (const std::string& s : states_)
    if (!seen.insert(s).second) throw std::invalid_argument("duplicate state name: " + s);
  auto init = state_index(initial);
  if (!init) throw std::invalid_argument("initial state is not declared: " + initial);
  initial_ = *init;
  std::set<std::size_t> final_seen;
  for (const std::string& f : finals) {
    auto idx = state_index(f);
    if (!idx) throw std::invalid_argument("final state is not declared: " + f);
    if (final_seen.insert(*idx).second) finals_.push_back(*idx);
  }
}

void Nfa::add_transition(std::size_t from, std::optional<Letter> letter, std::size_t to) {
  if (from >= n_states() || to >= n_states())
    throw std::invalid_argument("transition endpoint is not a state");
  if (letter && letter->gen >= alphabet_.size())
    throw std::invalid_argument("transition letter is not in the alphabet");
  NfaTransition t{from, letter, to};
  if (std::find(transitions_.begin(), transitions_.end(), t) == transitions_.end())
    transitions_.push_back(t);
}

std::optional<std::size_t> Nfa::state_index(const std::string& name) const {
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (states_[i] == name) return i;
  return std::nullopt;
}

bool Nfa::is_final(std::size_t state) const {
  return std::find(finals_.begin(), finals_.end(), state) != finals_.end();
}

NormalizedNfa normalize(const Nfa& a) {
  std::string fresh = "qf";
  for (int k = 2; a.state_index(fresh).has_value(); ++k) fresh = "qf" + std::to_string(k);

  std::vector<std::string> states = a.state_names();
  states.push_back(fresh);
  Nfa b(a.alphabet(), states, a.state_name(a.initial()), {fresh});
  for (const NfaTransition& t : a.transitions()) b.add_transition(t.from, t.letter, t.to);
  std::size_t final_state = b.n_states() - 1;
  for (std::size_t f : a.finals()) b.add_transition(f, std::nullopt, final_state);
  return NormalizedNfa{std::move(b), final_state};
}

std::optional<std::vector<std::size_t>> benois_witness_path(const Nfa& a, const GroupWord& u) {
  if (!fits_alphabet(u, a.alphabet()))
    throw std::invalid_argument("query word is not over the automaton alphabet");
  GroupWord w = free_reduce(u);
  Saturation sat(a);

  // Breadth-first search over (letters consumed, state). Epsilon jumps use
  // the saturation table; letter steps use original transitions.
  const std::size_t n = a.n_states();
  const std::size_t positions = w.size() + 1;
  struct Parent {
    std::size_t node = 0;
    std::size_t transition = 0;  // letter move: transition index
    bool via_epsilon = false;    // epsilon move: expand via saturation
    bool seen = false;
  };
  std::vector<Parent> parent(positions * n);
  auto id = [n](std::size_t pos, std::size_t state) { return pos * n + state; };

  std::deque<std::size_t> queue;
  parent[id(0, a.initial())].seen = true;
  queue.push_back(id(0, a.initial()));
  std::optional<std::size_t> goal;
  while (!queue.empty() && !goal) {
    std::size_t cur = queue.front();
    queue.pop_front();
    std::size_t pos = cur / n, state = cur % n;
    if (pos == w.size() && a.is_final(state)) {
      goal = cur;
      break;
    }
    auto visit = [&](std::size_t next, std::size_t transition, bool via_epsilon) {
      if (parent[next].seen) return;
      parent[next] = {cur, transition, via_epsilon, true};
      queue.push_back(next);
    };
    for (std::size_t q = 0; q < n; ++q)
      if (q != state && sat.reaches(state, q)) visit(id(pos, q), 0, true);
    if (pos < w.size()) {
      for (std::size_t t = 0; t < a.transitions().size(); ++t) {
        const NfaTransition& tr = a.transitions()[t];
        if (tr.from == state && tr.letter && *tr.letter == w[pos]) visit(id(pos + 1, tr.to), t, false);
      }
    }
  }
  if (!goal) return std::nullopt;

  // Walk the parent chain backwards, expanding epsilon jumps.
  std::vector<std::size_t> path;
  std::size_t cur = *goal;
  std::size_t start = id(0, a.initial());
  while (cur != start) {
    const Parent& p = parent[cur];
    if (p.via_epsilon) {
      std::vector<std::size_t> seg = sat.expand(p.node % n, cur % n);
      path.insert(path.end(), seg.rbegin(), seg.rend());
    } else {
      path.push_back(p.transition);
    }
    cur = p.node;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool benois_member(const Nfa& a, const GroupWord& u) {
  return benois_witness_path(a, u).has_value();
}

bool contains_identity(const Nfa& a) { return benois_member(a, GroupWord()); }

std::optional<std::vector<std::size_t>> accepting_path_for(const Nfa& a, const GroupWord& w) {
  if (!fits_alphabet(w, a.alphabet()))
    throw std::invalid_argument("word is not over the automaton alphabet");
  const std::size_t n = a.n_states();
  struct Parent {
    std::size_t node = 0;
    std::size_t transition = 0;
    bool seen = false;
  };
  std::vector<Parent> parent((w.size() + 1) * n);
  auto id = [n](std::size_t pos, std::size_t state) { return pos * n + state; };
  std::deque<std::size_t> queue;
  parent[id(0, a.initial())].seen = true;
  queue.push_back(id(0, a.initial()));
  std::optional<std::size_t> goal;
  while (!queue.empty() && !goal) {
    std::size_t cur = queue.front();
    queue.pop_front();
    std::size_t pos = cur / n, state = cur % n;
    if (pos == w.size() && a.is_final(state)) {
      goal = cur;
      break;
    }
    for (std::size_t t = 0; t < a.transitions().size(); ++t) {
      const NfaTransition& tr = a.transitions()[t];
      if (tr.from != state) continue;
      std::size_t next;
      if (!tr.letter)
        next = id(pos, tr.to);
      else if (pos < w.size() && *tr.letter == w[pos])
        next = id(pos + 1, tr.to);
      else
        continue;
      if (!parent[next].seen) {
        parent[next] = {cur, t, true};
        queue.push_back(next);
      }
    }
  }
  if (!goal) return std::nullopt;
  std::vector<std::size_t> path;
  std::size_t cur = *goal;
  std::size_t start = id(0, a.initial());
  while (cur != start) {
    path.push_back(parent[cur].transition);
    cur = parent[cur].node;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

GroupWord word_of_path(const Nfa& a, const std::vector<std::size_t>& path) {
  std::size_t state = a.initial();
  GroupWord w;
  for (std::size_t t : path) {
    if (t >= a.transitions().size()) throw std::invalid_argument("transition index out of range");
    const NfaTransition& tr = a.transitions()[t];
    if (tr.from != state) throw std::invalid_argument("path is not contiguous");
    if (tr.letter) w.push_back(*tr.letter);
    state = tr.to;
  }
  if (!a.is_final(state)) throw std::invalid_argument("path does not end in a final state");
  return w;
}

}  // namespace artin
