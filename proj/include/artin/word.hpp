#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace artin {

/// Ordered set of generator names. The declaration order is fixed at
/// construction and used for all tie-breaking downstream.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& name(std::size_t i) const { return symbols_.at(i); }
  const std::vector<std::string>& names() const { return symbols_; }
  std::optional<std::size_t> index(std::string_view name) const;
  bool contains(std::string_view name) const { return index(name).has_value(); }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// One signed generator occurrence: generator index into an Alphabet plus an
/// exponent sign (+1 or -1).
struct Letter {
  std::uint32_t gen = 0;
  std::int8_t sign = 1;

  Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Order used for canonical forms: by generator, positive before negative.
inline bool letter_less(Letter a, Letter b) {
  if (a.gen != b.gen) return a.gen < b.gen;
  return a.sign > b.sign;
}

/// A word over a generator alphabet with formal inverses, stored as a flat
/// letter sequence. The empty word is the identity. Parsing and printing
/// live in the io layer; kernels only see indices.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Convenience for tests and fixed elements: +k means generator k-1 with
  /// positive sign, -k the inverse (k >= 1).
  static GroupWord from_signed(std::initializer_list<int> letters);
  static GroupWord from_signed(const std::vector<int>& letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  void push_back(Letter l) { letters_.push_back(l); }
  void append(const GroupWord& w);

  GroupWord inverse() const;
  std::vector<int> to_signed() const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend GroupWord operator*(const GroupWord& u, const GroupWord& v) {
    GroupWord r = u;
    r.append(v);
    return r;
  }

 private:
  std::vector<Letter> letters_;
};

/// The unique freely reduced word equal to w in the free group. Total,
/// idempotent, length non-increasing.
GroupWord free_reduce(const GroupWord& w);

/// True when every letter of w indexes a generator of `alphabet`.
bool fits_alphabet(const GroupWord& w, const Alphabet& alphabet);

}  // namespace artin
