#include "freesimplex/word_syntax.hpp"

#include <cctype>
#include <vector>

namespace freesimplex {

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  const auto at = [&](std::size_t i) { return i < text.size() ? text[i] : '\0'; };

  while (pos < text.size()) {
    const char ch = text[pos];
    if (ch == '*' || std::isspace(static_cast<unsigned char>(ch)) != 0) {
      ++pos;
      continue;
    }
    if (ch == 'e') {
      ++pos;
      continue;
    }
    if (ch != 'g') throw WordSyntaxError(std::string("unexpected '") + ch + "'", pos);
    const std::size_t term_start = pos;
    ++pos;
    const char digit = at(pos);
    if (std::isdigit(static_cast<unsigned char>(digit)) == 0) throw WordSyntaxError("expected generator index", pos);
    std::size_t end = pos;
    while (std::isdigit(static_cast<unsigned char>(at(end))) != 0) ++end;
    const std::string_view digits = text.substr(pos, end - pos);
    if (digits.size() != 1 || digit < '1' || digit > '4') {
      throw GeneratorIndexOutOfRange("generator g" + std::string(digits) + " out of range 1..4", term_start);
    }
    pos = end;

    int sign = 1;
    if (at(pos) == '\'') {
      sign = -1;
      ++pos;
    } else if (at(pos) == '^') {
      if (text.substr(pos, 3) == "^-1") {
        sign = -1;
        pos += 3;
      } else if (text.substr(pos, 2) == "^1") {
        pos += 2;
      } else {
        throw WordSyntaxError("exponent must be ^1 or ^-1", pos);
      }
    }
    letters.push_back(Letter{digit - '0', sign});
  }
  return Word::reduce(letters);
}

}  // namespace freesimplex
