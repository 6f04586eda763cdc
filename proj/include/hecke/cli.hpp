#pragma once

// Command-line front end: command parsing, dispatch, text/JSON rendering
// and batch mode.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hecke::cli {

enum class Verb {
  Factor,
  Reduce,
  Index,
  Cosets,
  Member,
  Normalizer,
  Explain,
  Elementary,
  Quotient,
  Selftest,
};

std::string_view verb_name(Verb v);

struct Command {
  Verb verb = Verb::Selftest;
  /// Positional arguments; ring elements are stored in canonical text form.
  std::vector<std::string> args;
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::optional<long> bound;
  bool strong = false;            // elementary: test every divisor
  std::vector<std::string> only;  // selftest item filter
  std::optional<std::string> inject;  // selftest fault: tie-lower, tie-floor

  /// Tokens that parse back to an equal Command.
  std::vector<std::string> tokens() const;
  std::string to_string() const;

  friend bool operator==(const Command&, const Command&) = default;
};

/// Raised when the tokens ask for usage text instead of a command.
struct HelpRequested {
  std::string text;
};

/// Throws Error(SyntaxError) on malformed input and HelpRequested on -h.
Command parse_command(const std::vector<std::string>& tokens);

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitRefuted = 2;

struct Outcome {
  int exit_code = kExitOk;
  /// Rendered result without a trailing newline.
  std::string output;
  /// output is an error message rather than a result
  bool is_error = false;
};

/// Never throws for library errors; they become exit code 1 with the error
/// rendered in the requested mode.
Outcome run(const Command& cmd);

/// One line per input command, in input order. Blank lines and lines
/// starting with '#' are skipped. The exit code is the worst one seen.
Outcome run_batch(std::istream& in, bool json);

int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hecke::cli
