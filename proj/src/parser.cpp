#include "secmat/parser.hpp"

#include <cctype>
#include <limits>

#include "secmat/errors.hpp"

namespace secmat {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'");
    }
  }

  bool peek_identifier() {
    const char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string identifier() {
    if (!peek_identifier()) fail("expected an identifier");
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_' || text_[pos_] == '-')) {
      // '-' is only part of directive keywords such as max-degree.
      if (text_[pos_] == '-' && !allow_dash_) break;
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  BigInt integer() {
    if (!peek_digit()) fail("expected an integer");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  std::size_t position() {
    skip_space();
    return pos_;
  }

  void set_allow_dash(bool allow) { allow_dash_ = allow; }

  [[noreturn]] void fail(const std::string& message) { fail_at(message, position()); }

  [[noreturn]] void fail_at(const std::string& message, std::size_t offset) const {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < offset && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, offset, line, column);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  bool allow_dash_ = false;
};

class PolynomialParser {
 public:
  PolynomialParser(Scanner& scanner, const RingPtr& ring)
      : in_(scanner), ring_(ring) {}

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (in_.accept('+')) {
        acc = acc + term();
      } else if (in_.accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

 private:
  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (in_.accept('*')) {
        acc = acc * factor();
        continue;
      }
      const char c = in_.peek();
      if (c == '(' || in_.peek_identifier() || in_.peek_digit()) {
        in_.fail("expected '*' between factors");
      }
      return acc;
    }
  }

  Polynomial factor() {
    if (in_.accept('-')) return -factor();
    if (in_.accept('+')) return factor();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (in_.accept('^')) {
      const std::size_t at = in_.position();
      const BigInt e = in_.integer();
      if (e > kMaxExponent) in_.fail_at("exponent too large", at);
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Polynomial primary() {
    if (in_.accept('(')) {
      Polynomial inner = expr();
      in_.expect(')');
      return inner;
    }
    if (in_.peek_digit()) {
      BigInt num = in_.integer();
      BigInt den = 1;
      if (in_.accept('/')) {
        const std::size_t at = in_.position();
        den = in_.integer();
        if (den == 0) in_.fail_at("zero denominator in rational literal", at);
      }
      BigRational value(num, den);
      value.canonicalize();
      return Polynomial::constant(ring_, value);
    }
    if (in_.peek_identifier()) {
      const std::size_t at = in_.position();
      const std::string name = in_.identifier();
      const int index = ring_->index_of(name);
      if (index < 0) in_.fail_at("unknown variable '" + name + "'", at);
      return Polynomial::variable(ring_, static_cast<std::size_t>(index));
    }
    if (in_.at_end()) in_.fail("unexpected end of input");
    in_.fail(std::string("unexpected character '") + in_.peek() + "'");
  }

  Scanner& in_;
  const RingPtr& ring_;
};

int small_int(Scanner& in) {
  const std::size_t at = in.position();
  const BigInt v = in.integer();
  if (v > std::numeric_limits<int>::max()) in.fail_at("integer too large", at);
  return static_cast<int>(v.get_si());
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  Scanner in(text);
  PolynomialParser parser(in, ring);
  Polynomial p = parser.expr();
  if (!in.at_end()) in.fail("unexpected trailing input");
  return p;
}

InputDocument parse_document(std::string_view text) {
  Scanner in(text);
  InputDocument doc;

  const std::size_t ring_at = in.position();
  if (in.identifier() != "ring") in.fail_at("expected 'ring'", ring_at);
  std::vector<std::string> names;
  do {
    const std::size_t at = in.position();
    names.push_back(in.identifier());
    for (std::size_t k = 0; k + 1 < names.size(); ++k) {
      if (names[k] == names.back()) in.fail_at("duplicate variable '" + names.back() + "'", at);
    }
  } while (in.accept(','));
  in.expect(';');
  if (names.size() > kMaxArity) in.fail_at("too many variables", ring_at);
  doc.ring = make_ring(std::move(names));

  const std::size_t ideal_at = in.position();
  if (!in.peek_identifier() || in.identifier() != "ideal") {
    in.fail_at("expected 'ideal'", ideal_at);
  }
  PolynomialParser parser(in, doc.ring);
  do {
    doc.generators.push_back(parser.expr());
  } while (in.accept(','));
  in.expect(';');

  while (!in.at_end()) {
    const std::size_t at = in.position();
    in.set_allow_dash(true);
    const std::string keyword = in.identifier();
    in.set_allow_dash(false);
    if (keyword == "order") {
      const std::size_t name_at = in.position();
      const std::string name = in.identifier();
      try {
        doc.order = term_order_from_name(name);
      } catch (const SemanticError&) {
        in.fail_at("unknown term order '" + name + "'", name_at);
      }
    } else if (keyword == "seed") {
      const std::size_t seed_at = in.position();
      const BigInt v = in.integer();
      if (v > BigInt("18446744073709551615")) in.fail_at("seed out of range", seed_at);
      doc.seed = std::stoull(v.get_str());
    } else if (keyword == "max-degree") {
      doc.max_degree = small_int(in);
    } else if (keyword == "truncate") {
      do {
        doc.truncations.push_back(small_int(in));
      } while (in.accept(','));
    } else {
      in.fail_at("unknown directive '" + keyword + "'", at);
    }
    in.expect(';');
  }
  return doc;
}

}  // namespace secmat
