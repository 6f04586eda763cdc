#pragma once

// Text forms of ring elements and matrices: `2*L-1`, `225*L+139`, `5`, `12*L^6`.

#include <cstddef>
#include <string>
#include <string_view>

#include "hecke/matrix.hpp"

namespace hecke {

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position),
        reason_(what) {}

  /// Zero-based offset into the input.
  std::size_t position() const noexcept { return position_; }
  /// Message without the position suffix.
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

/// Sums and differences of products of integers, `L` and `L^k` (k may be
/// negative); whitespace is ignored.
RingElt parse_element(std::string_view s);

/// Inverse of parse_element: "18*L+11", "-L", "4".
std::string format_element(const RingElt& x);

/// x as n * L^k when x is a rational integer times a unit, e.g. "12*L^6";
/// otherwise format_element(x).
std::string format_factored(const RingElt& x);

GMatrix parse_matrix(std::string_view a, std::string_view b, std::string_view c,
                     std::string_view d);

}  // namespace hecke
