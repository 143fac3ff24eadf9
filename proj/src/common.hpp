#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mjc {

// Error thrown by all text parsers (operator syntax, state files, code-spec
// files). `line` is 1-based when the input is line-oriented, 0 otherwise.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// FNV-1a 64-bit digest, used to fingerprint report inputs.
inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v);

}  // namespace mjc
