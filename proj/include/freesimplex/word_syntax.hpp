#pragma once

// Text grammar for words:
//
//   word   := term*            separators '*' and whitespace are ignored
//   term   := 'g' [1-4] suffix?
//   suffix := "'" | "^-1" | "^1"
//
// "e" or the empty string is the identity.  The parsed letters are freely
// reduced, so "g1 g1'" is the identity.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "freesimplex/freewords.hpp"

namespace freesimplex {

class WordSyntaxError : public std::invalid_argument {
 public:
  WordSyntaxError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class GeneratorIndexOutOfRange : public WordSyntaxError {
 public:
  using WordSyntaxError::WordSyntaxError;
};

Word parse_word(std::string_view text);

}  // namespace freesimplex
