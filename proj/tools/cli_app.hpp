#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bqroot.h"

namespace bqroot::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Well-formed input whose n is below 2.
class InputDomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParsedInput {
  bqr_quat a{};
  int n = 0;
};

// Accepts {"a": [[re,im],[re,im],[re,im],[re,im]], "n": k} or the compact
// "a0,a1,a2,a3;n" where each component is <re>, <im>i or <re>(+|-)<im>i.
// `n_override` replaces (or supplies a missing) ";n".
ParsedInput parse_input(std::string_view text, std::optional<int> n_override = std::nullopt);

// Parses a compact component such as "3-4.5i" or "-i".
bqr_complex parse_component(std::string_view text, std::size_t offset = 0);

enum class OutputFormat { Text, Json };

enum class InputSource { Inline, File, Stdin };

struct CliConfig {
  InputSource source = InputSource::Inline;
  std::string input;  // inline text or file path
  std::optional<int> n;
  double tol = 1e-9;
  bqr_branch branch = BQR_BRANCH_PRINCIPAL;
  std::size_t family_samples = 3;
  OutputFormat format = OutputFormat::Text;
  bool check = false;
  std::optional<std::pair<std::uint64_t, std::size_t>> oracle;  // (seed, count)
  bqr_stream stream = BQR_STREAM_GENERIC;
};

inline constexpr int kExitSolved = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInsoluble = 2;

// Solves (or runs the oracle), writes the report to `out` and diagnostics to
// `err`. Returns 0 when solved (and verified if requested), 2 when the
// equation is insoluble, 1 on any error.
int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

// %.17g, with an "i" suffix for the imaginary part: "3", "2.5i", "1-4i".
std::string format_complex(bqr_complex z);

}  // namespace bqroot::cli
