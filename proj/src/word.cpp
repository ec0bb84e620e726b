#include "artin/word.hpp"

namespace artin {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const std::string& s = symbols_[i];
    if (s.empty()) throw std::invalid_argument("alphabet symbol must be nonempty");
    if (!index_.emplace(s, i).second)
      throw std::invalid_argument("duplicate alphabet symbol: " + s);
  }
}

std::optional<std::size_t> Alphabet::index(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GroupWord GroupWord::from_signed(std::initializer_list<int> letters) {
  return from_signed(std::vector<int>(letters));
}

GroupWord GroupWord::from_signed(const std::vector<int>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (int v : letters) {
    if (v == 0) throw std::invalid_argument("signed letter must be nonzero");
    out.push_back({static_cast<std::uint32_t>((v > 0 ? v : -v) - 1),
                   static_cast<std::int8_t>(v > 0 ? 1 : -1)});
  }
  return GroupWord(std::move(out));
}

void GroupWord::append(const GroupWord& w) {
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(it->inverse());
  return GroupWord(std::move(out));
}

std::vector<int> GroupWord::to_signed() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const Letter& l : letters_)
    out.push_back(l.sign > 0 ? static_cast<int>(l.gen) + 1 : -(static_cast<int>(l.gen) + 1));
  return out;
}

GroupWord free_reduce(const GroupWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign != l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return GroupWord(std::move(out));
}

bool fits_alphabet(const GroupWord& w, const Alphabet& alphabet) {
  for (const Letter& l : w)
    if (l.gen >= alphabet.size()) return false;
  return true;
}

}  // namespace artin
