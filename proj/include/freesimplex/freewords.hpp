#pragma once

// Reduced words in the free group F_4 on g_1..g_4, the alternating norm and
// its pairs expression, generator permutations (the Klein permutations pi_k
// in particular), clutch-necklace reduction and enumeration.

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace freesimplex {

inline constexpr int kRank = 4;

struct Letter {
  int index = 1;  // 1..kRank
  int sign = 1;   // +1 or -1

  constexpr Letter inverse() const { return {index, -sign}; }
  /// Position in the fixed letter order g_1 < g_1^-1 < g_2 < g_2^-1 < ...
  constexpr int rank() const { return 2 * (index - 1) + (sign < 0 ? 1 : 0); }
  static constexpr Letter from_rank(int r) { return {r / 2 + 1, (r % 2) != 0 ? -1 : 1}; }

  friend constexpr bool operator==(const Letter&, const Letter&) = default;
};

inline constexpr Letter g(int index, int sign = 1) { return {index, sign}; }

class EmptyWord : public std::invalid_argument {
 public:
  EmptyWord() : std::invalid_argument("alternating pairs expression of the empty word") {}
};

class NotPiReduced : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotReduced : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A freely reduced word.  The empty word is the identity.
class Word {
 public:
  Word() = default;
  /// Throws NotReduced if some adjacent pair cancels or an index is out of range.
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::vector<Letter> letters);

  /// Free reduction of an arbitrary letter sequence.
  static Word reduce(std::span<const Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }

  /// Canonical text form, e.g. "g1*g2^-1*g3"; the identity prints as "e".
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Enumeration order: length first, then lexicographic in letter rank.
  friend bool operator<(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

Word concat(const Word& u, const Word& v);
Word invert(const Word& w);
/// Flip every letter's sign in place, keeping the order.
Word invert_letters(const Word& w);

int sign_changes(const Word& w);
int alt_norm(const Word& w);

/// Pairs (a, b) denote a * b^-1 where a, b are 0 (the unit) or a generator
/// index; with alphabet_sign = -1 the index j stands for g_j^-1.
struct AltExpression {
  int alphabet_sign = 1;
  std::vector<std::pair<int, int>> pairs;

  /// Free reduction of the product of the pairs.
  Word product() const;
  /// a_1 != 1 and consecutive entries of a_1, b_1, a_2, ... are distinct.
  bool well_formed() const;

  friend bool operator==(const AltExpression&, const AltExpression&) = default;
};

/// Greedy left-to-right parse over the alphabet chosen by the first letter's
/// sign.  Throws EmptyWord for the identity.
AltExpression alt_expression(const Word& w);

/// A permutation of the generator indices, extended to words letter-wise.
/// Index 0 (the unit vertex) is always fixed.
class GeneratorPerm {
 public:
  GeneratorPerm();
  explicit GeneratorPerm(std::array<int, kRank + 1> image);

  int operator()(int index) const { return image_[static_cast<std::size_t>(index)]; }
  Letter operator()(Letter l) const { return {(*this)(l.index), l.sign}; }

  GeneratorPerm then(const GeneratorPerm& next) const;
  friend bool operator==(const GeneratorPerm&, const GeneratorPerm&) = default;

 private:
  std::array<int, kRank + 1> image_;
};

/// pi_0 = id, pi_1 = (1 3)(2 4), pi_2 = (1 4)(2 3), pi_3 = (1 2)(3 4).
const GeneratorPerm& klein(int k);

Word apply_perm(const GeneratorPerm& perm, const Word& w);
Word apply_perm(int k, const Word& w);

bool is_pi_reduced(const GeneratorPerm& perm, const Word& w);
bool is_pi_reduced(int k, const Word& w);

/// Cancel first letter g^e against a last letter perm(g)^-e while possible.
Word pi_reduce(const GeneratorPerm& perm, const Word& w);
Word pi_reduce(int k, const Word& w);

/// ||w||_k = alt_norm(pi_reduce(k, w)).
int reduced_alt_norm(const GeneratorPerm& perm, const Word& w);
int reduced_alt_norm(int k, const Word& w);

/// Move the first letter over the clutch: g v -> v perm(g).  Throws
/// NotPiReduced unless w is non-trivial and perm-reduced.
Word rotate_clutch(const GeneratorPerm& perm, const Word& w);
Word rotate_clutch(int k, const Word& w);

/// Sign changes counted around the necklace, including the wrap-around.
int cyclic_sign_changes(const Word& w);

/// Number of reduced words of length exactly n: 8 * 7^(n-1), and 1 for n = 0.
std::uint64_t reduced_word_count(int n);
/// Cumulative count over lengths 1..max_len.
std::uint64_t reduced_word_count_upto(int max_len);

/// Visits every reduced word of length 1..max_len exactly once, in length
/// then lexicographic order.
void for_each_reduced(int max_len, const std::function<void(const Word&)>& visit);
/// Sub-stream of for_each_reduced restricted to words starting with `first`.
/// The union over the 8 first letters is the full stream.
void for_each_reduced_from(Letter first, int max_len, const std::function<void(const Word&)>& visit);
/// Words of length exactly `len`, lexicographic.
void for_each_reduced_of_length(int len, const std::function<void(const Word&)>& visit);
std::vector<Word> enumerate_reduced(int max_len);

}  // namespace freesimplex
