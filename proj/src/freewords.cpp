#include "freesimplex/freewords.hpp"

#include <algorithm>
#include <cassert>

namespace freesimplex {

namespace {

void check_letters(std::span<const Letter> letters) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const Letter& l = letters[i];
    if (l.index < 1 || l.index > kRank || (l.sign != 1 && l.sign != -1)) {
      throw NotReduced("letter out of range at position " + std::to_string(i));
    }
    if (i > 0 && letters[i - 1] == l.inverse()) {
      throw NotReduced("cancelling pair at position " + std::to_string(i - 1));
    }
  }
}

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == l.inverse()) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(std::initializer_list<Letter> letters) : letters_(letters) { check_letters(letters_); }

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) { check_letters(letters_); }

Word Word::reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.index < 1 || l.index > kRank) throw NotReduced("letter out of range");
    push_reduced(out, l);
  }
  Word w;
  w.letters_ = std::move(out);
  return w;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out += '*';
    out += 'g';
    out += std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

bool operator<(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].rank() != b[i].rank()) return a[i].rank() < b[i].rank();
  }
  return false;
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out = u.letters();
  for (const Letter& l : v.letters()) push_reduced(out, l);
  return Word::reduce(out);
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word invert_letters(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w.letters()) out.push_back(l.inverse());
  return Word(std::move(out));
}

int sign_changes(const Word& w) {
  int s = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i].sign != w[i - 1].sign) ++s;
  }
  return s;
}

int alt_norm(const Word& w) {
  const int s = sign_changes(w);
  return static_cast<int>(w.size()) - (s + 1) / 2;
}

int cyclic_sign_changes(const Word& w) {
  if (w.empty()) return 0;
  return sign_changes(w) + (w.front().sign != w.back().sign ? 1 : 0);
}

Word AltExpression::product() const {
  std::vector<Letter> out;
  for (const auto& [a, b] : pairs) {
    if (a != 0) push_reduced(out, Letter{a, alphabet_sign});
    if (b != 0) push_reduced(out, Letter{b, -alphabet_sign});
  }
  return Word::reduce(out);
}

bool AltExpression::well_formed() const {
  if (pairs.empty() || pairs.front().first == 0) return false;
  if (alphabet_sign != 1 && alphabet_sign != -1) return false;
  int prev = -1;
  for (const auto& [a, b] : pairs) {
    for (int x : {a, b}) {
      if (x < 0 || x > kRank || x == prev) return false;
      prev = x;
    }
  }
  return true;
}

AltExpression alt_expression(const Word& w) {
  if (w.empty()) throw EmptyWord();
  AltExpression expr;
  expr.alphabet_sign = w.front().sign;
  const int s = expr.alphabet_sign;
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i].sign == s) {
      int b = 0;
      if (i + 1 < w.size() && w[i + 1].sign == -s) b = w[i + 1].index;
      expr.pairs.emplace_back(w[i].index, b);
      i += (b == 0) ? 1 : 2;
    } else {
      expr.pairs.emplace_back(0, w[i].index);
      ++i;
    }
  }
  return expr;
}

GeneratorPerm::GeneratorPerm() {
  for (int i = 0; i <= kRank; ++i) image_[static_cast<std::size_t>(i)] = i;
}

GeneratorPerm::GeneratorPerm(std::array<int, kRank + 1> image) : image_(image) {
  std::array<bool, kRank + 1> seen{};
  for (int v : image_) {
    if (v < 0 || v > kRank || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of 0..4");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  if (image_[0] != 0) throw std::invalid_argument("the unit index must be fixed");
}

GeneratorPerm GeneratorPerm::then(const GeneratorPerm& next) const {
  std::array<int, kRank + 1> out{};
  for (int i = 0; i <= kRank; ++i) out[static_cast<std::size_t>(i)] = next((*this)(i));
  return GeneratorPerm(out);
}

const GeneratorPerm& klein(int k) {
  static const std::array<GeneratorPerm, 4> perms = {
      GeneratorPerm({0, 1, 2, 3, 4}),
      GeneratorPerm({0, 3, 4, 1, 2}),
      GeneratorPerm({0, 4, 3, 2, 1}),
      GeneratorPerm({0, 2, 1, 4, 3}),
  };
  if (k < 0 || k > 3) throw std::out_of_range("Klein index must be in 0..3");
  return perms[static_cast<std::size_t>(k)];
}

Word apply_perm(const GeneratorPerm& perm, const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w.letters()) out.push_back(perm(l));
  return Word(std::move(out));
}

Word apply_perm(int k, const Word& w) { return apply_perm(klein(k), w); }

bool is_pi_reduced(const GeneratorPerm& perm, const Word& w) {
  if (w.empty()) return true;
  return !(w.back() == perm(w.front()).inverse());
}

bool is_pi_reduced(int k, const Word& w) { return is_pi_reduced(klein(k), w); }

Word pi_reduce(const GeneratorPerm& perm, const Word& w) {
  const auto& letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[hi - 1] == perm(letters[lo]).inverse()) {
    ++lo;
    --hi;
  }
  // A single letter g never meets perm(g)^-1: the signs differ.
  assert(hi - lo != 1 || !(letters[lo] == perm(letters[lo]).inverse()));
  return Word(std::vector<Letter>(letters.begin() + static_cast<std::ptrdiff_t>(lo),
                                  letters.begin() + static_cast<std::ptrdiff_t>(hi)));
}

Word pi_reduce(int k, const Word& w) { return pi_reduce(klein(k), w); }

int reduced_alt_norm(const GeneratorPerm& perm, const Word& w) { return alt_norm(pi_reduce(perm, w)); }

int reduced_alt_norm(int k, const Word& w) { return reduced_alt_norm(klein(k), w); }

Word rotate_clutch(const GeneratorPerm& perm, const Word& w) {
  if (w.empty()) throw NotPiReduced("cannot rotate the identity");
  if (!is_pi_reduced(perm, w)) throw NotPiReduced(w.to_string() + " is not pi-reduced");
  std::vector<Letter> out(w.letters().begin() + 1, w.letters().end());
  out.push_back(perm(w.front()));
  return Word(std::move(out));
}

Word rotate_clutch(int k, const Word& w) { return rotate_clutch(klein(k), w); }

std::uint64_t reduced_word_count(int n) {
  if (n <= 0) return n == 0 ? 1 : 0;
  std::uint64_t c = 8;
  for (int i = 1; i < n; ++i) c *= 7;
  return c;
}

std::uint64_t reduced_word_count_upto(int max_len) {
  std::uint64_t total = 0;
  for (int n = 1; n <= max_len; ++n) total += reduced_word_count(n);
  return total;
}

namespace {

// Extends `prefix` (non-empty) to words of exactly `len` letters.
void extend(std::vector<Letter>& prefix, std::size_t len, const std::function<void(const Word&)>& visit) {
  if (prefix.size() == len) {
    visit(Word::reduce(prefix));
    return;
  }
  const Letter forbidden = prefix.back().inverse();
  for (int r = 0; r < 2 * kRank; ++r) {
    const Letter next = Letter::from_rank(r);
    if (next == forbidden) continue;
    prefix.push_back(next);
    extend(prefix, len, visit);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_reduced_from(Letter first, int max_len, const std::function<void(const Word&)>& visit) {
  std::vector<Letter> prefix;
  for (int len = 1; len <= max_len; ++len) {
    prefix.assign(1, first);
    extend(prefix, static_cast<std::size_t>(len), visit);
  }
}

void for_each_reduced_of_length(int len, const std::function<void(const Word&)>& visit) {
  if (len <= 0) return;
  std::vector<Letter> prefix;
  for (int r = 0; r < 2 * kRank; ++r) {
    prefix.assign(1, Letter::from_rank(r));
    extend(prefix, static_cast<std::size_t>(len), visit);
  }
}

void for_each_reduced(int max_len, const std::function<void(const Word&)>& visit) {
  for (int len = 1; len <= max_len; ++len) for_each_reduced_of_length(len, visit);
}

std::vector<Word> enumerate_reduced(int max_len) {
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(reduced_word_count_upto(max_len)));
  for_each_reduced(max_len, [&](const Word& w) { out.push_back(w); });
  return out;
}

}  // namespace freesimplex
