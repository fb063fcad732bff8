#include "expression.hpp"

#include <cctype>
#include <charconv>
#include <regex>
#include <vector>

#include "clausen/errors.hpp"

namespace clausen::cli {

struct Expression::Node {
  enum class Kind { number, pi, phi7, variable, negate, add, sub, mul, div, pow, call };
  Kind kind;
  std::string text;  // literal digits or function name
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

const std::vector<std::string>& function_names() {
  static const std::vector<std::string> names = {"log",  "ln",     "exp",  "sqrt", "abs",  "sin", "cos",
                                                 "tan",  "cot",    "atan", "arctan", "sinh", "cosh", "tanh"};
  return names;
}

NodePtr make(Node::Kind kind, NodePtr left = nullptr, NodePtr right = nullptr, std::string text = {}) {
  return std::make_shared<const Node>(Node{kind, std::move(text), std::move(left), std::move(right)});
}

class Parser {
 public:
  Parser(std::string_view text, bool allow_variable) : text_(text), allow_variable_(allow_variable) {}

  NodePtr parse() {
    NodePtr node = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ArgumentError("cannot parse expression '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                        ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_primary() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  NodePtr expr() {
    NodePtr node = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        node = make(Node::Kind::add, node, term());
      } else if (c == '-') {
        ++pos_;
        node = make(Node::Kind::sub, node, term());
      } else {
        return node;
      }
    }
  }

  NodePtr term() {
    NodePtr node = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        node = make(Node::Kind::mul, node, factor());
      } else if (c == '/') {
        ++pos_;
        node = make(Node::Kind::div, node, factor());
      } else if (starts_primary()) {
        node = make(Node::Kind::mul, node, factor());
      } else {
        return node;
      }
    }
  }

  NodePtr factor() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return make(Node::Kind::negate, factor());
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    NodePtr base = primary();
    if (peek() == '^') {
      ++pos_;
      return make(Node::Kind::pow, base, factor());
    }
    return base;
  }

  NodePtr primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
    // Exponent only when followed by digits, so "2e" is not swallowed.
    if (pos_ + 1 < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        pos_ = p;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    std::string literal(text_.substr(start, pos_ - start));
    if (literal == ".") fail("malformed number");
    return make(Node::Kind::number, nullptr, nullptr, std::move(literal));
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    // A name that is not a function may be a constant glued to what
    // follows, as in "2pit" = 2 * pi * t.
    for (const std::string& fn : function_names()) {
      if (name == fn) {
        if (peek() != '(') fail("function '" + fn + "' needs parentheses");
        ++pos_;
        NodePtr arg = expr();
        if (peek() != ')') fail("expected ')' after argument of " + fn);
        ++pos_;
        return make(Node::Kind::call, arg, nullptr, fn);
      }
    }
    if (name.rfind("phi7", 0) == 0) {
      pos_ = start + 4;
      return make(Node::Kind::phi7);
    }
    if (name.rfind("pi", 0) == 0) {
      pos_ = start + 2;
      return make(Node::Kind::pi);
    }
    if (name.rfind("t", 0) == 0 && (name.size() == 1 || !std::isalpha(static_cast<unsigned char>(name[1])))) {
      if (!allow_variable_) fail("the variable t is not allowed here");
      pos_ = start + 1;
      return make(Node::Kind::variable);
    }
    pos_ = start;
    fail("unknown identifier '" + name + "'");
  }

  std::string_view text_;
  bool allow_variable_;
  std::size_t pos_ = 0;
};

Real call(const std::string& fn, const Real& x) {
  if (fn == "log" || fn == "ln") return log(x);
  if (fn == "exp") return exp(x);
  if (fn == "sqrt") return sqrt(x);
  if (fn == "abs") return abs(x);
  if (fn == "sin") return sin(x);
  if (fn == "cos") return cos(x);
  if (fn == "tan") return tan(x);
  if (fn == "cot") return cot(x);
  if (fn == "atan" || fn == "arctan") return atan(x);
  if (fn == "sinh") return sinh(x);
  if (fn == "cosh") return cosh(x);
  if (fn == "tanh") return tanh(x);
  throw ArgumentError("unknown function " + fn);
}

Real eval(const Node& n, const PrecisionContext& ctx, const Real* t) {
  switch (n.kind) {
    case Node::Kind::number: return ctx.parse(n.text);
    case Node::Kind::pi: return ctx.pi();
    case Node::Kind::phi7: return ctx.phi7();
    case Node::Kind::variable:
      if (t == nullptr) throw ArgumentError("expression uses t but no value was supplied");
      return t->with_digits(ctx.working_digits());
    case Node::Kind::negate: return -eval(*n.left, ctx, t);
    case Node::Kind::add: return eval(*n.left, ctx, t) + eval(*n.right, ctx, t);
    case Node::Kind::sub: return eval(*n.left, ctx, t) - eval(*n.right, ctx, t);
    case Node::Kind::mul: return eval(*n.left, ctx, t) * eval(*n.right, ctx, t);
    case Node::Kind::div: return eval(*n.left, ctx, t) / eval(*n.right, ctx, t);
    case Node::Kind::pow: {
      const Real base = eval(*n.left, ctx, t);
      const Real exponent = eval(*n.right, ctx, t);
      if (mpfr_integer_p(exponent.raw()) && mpfr_fits_slong_p(exponent.raw(), MPFR_RNDN)) {
        return pow(base, mpfr_get_si(exponent.raw(), MPFR_RNDN));
      }
      return pow(base, exponent);
    }
    case Node::Kind::call: return call(n.text, eval(*n.left, ctx, t));
  }
  throw ArgumentError("corrupt expression");
}

bool mentions_variable(const Node* n) {
  if (n == nullptr) return false;
  return n->kind == Node::Kind::variable || mentions_variable(n->left.get()) || mentions_variable(n->right.get());
}

}  // namespace

Expression Expression::parse(std::string_view text, bool allow_variable) {
  Expression e;
  e.root_ = Parser(text, allow_variable).parse();
  e.text_ = std::string(text);
  return e;
}

Real Expression::evaluate(const PrecisionContext& ctx) const { return eval(*root_, ctx, nullptr); }

Real Expression::evaluate(const PrecisionContext& ctx, const Real& t) const { return eval(*root_, ctx, &t); }

bool Expression::uses_variable() const noexcept { return mentions_variable(root_.get()); }

std::optional<PiMultiple> parse_pi_multiple(std::string_view text) {
  static const std::regex pattern(R"(^\s*([+-]?)(\d*)\s*\*?\s*pi\s*(?:/\s*(\d+))?\s*$)");
  static const std::regex zero(R"(^\s*[+-]?0+\s*$)");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, zero)) return PiMultiple{0, 1};
  if (!std::regex_match(s, m, pattern)) return std::nullopt;
  std::int64_t p = m[2].length() > 0 ? parse_integer(m[2].str()) : 1;
  if (m[1].str() == "-") p = -p;
  const std::int64_t q = m[3].matched ? parse_integer(m[3].str()) : 1;
  if (q == 0) throw ArgumentError("zero denominator in '" + s + "'");
  return PiMultiple{p, q};
}

std::int64_t parse_integer(std::string_view text) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) {
    throw ArgumentError("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace clausen::cli
