#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "clausen/mpcontext.hpp"
#include "clausen/real.hpp"

namespace clausen::cli {

/// A parsed arithmetic expression over one optional variable `t`.
///
/// Grammar (no other identifiers are accepted):
///   expr    := term (('+' | '-') term)*
///   term    := factor (('*' | '/') factor | factor)*     juxtaposition multiplies: 2pi, 4phi7
///   factor  := ('+' | '-') factor | primary ('^' factor)?
///   primary := number | 'pi' | 'phi7' | 't' | func '(' expr ')' | '(' expr ')'
///   func    := log ln exp sqrt abs sin cos tan cot atan arctan sinh cosh tanh
class Expression {
 public:
  /// Throws ArgumentError on malformed input.  With allow_variable false,
  /// any use of `t` is rejected.
  static Expression parse(std::string_view text, bool allow_variable = false);

  Real evaluate(const PrecisionContext& ctx) const;
  Real evaluate(const PrecisionContext& ctx, const Real& t) const;

  bool uses_variable() const noexcept;
  const std::string& text() const noexcept { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

/// An angle given as p*pi/q ("2pi/7", "-pi", "pi/3", "3pi") exactly.
struct PiMultiple {
  std::int64_t numerator;
  std::int64_t denominator;
};

/// Recognises the exact rational-multiple-of-pi forms; anything else is nullopt.
std::optional<PiMultiple> parse_pi_multiple(std::string_view text);

/// Parses a signed 64-bit integer; throws ArgumentError.
std::int64_t parse_integer(std::string_view text);

}  // namespace clausen::cli
