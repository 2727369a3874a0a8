#pragma once
#include <stdexcept>
#include <string>

namespace parabraid {

// Thrown by every text parser in the library. `offset` is a byte offset into
// the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string expected, std::string message);
  std::size_t offset;
  std::string expected;
};

}  // namespace parabraid
