#include "parse.hpp"

#include <cctype>

namespace fjump {

namespace {

struct Lexer {
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(uint8_t(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c))
      fail_parse(std::string("expected '") + c + "' (" + what + ") at position " +
                 std::to_string(pos));
  }
  std::string number() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(uint8_t(text[pos]))) ++pos;
    if (start == pos) fail_parse("expected an integer at position " + std::to_string(pos));
    return text.substr(start, pos - start);
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (std::isalpha(uint8_t(text[pos])) || text[pos] == '_')) {
      ++pos;
      while (pos < text.size() && (std::isalnum(uint8_t(text[pos])) || text[pos] == '_')) ++pos;
    }
    if (start == pos) fail_parse("expected an identifier at position " + std::to_string(pos));
    return text.substr(start, pos - start);
  }
  uint64_t small_number(uint64_t limit, const char* what) {
    std::string n = number();
    if (n.size() > 18) fail_parse(std::string(what) + " out of range at position " + std::to_string(pos));
    uint64_t v = std::stoull(n);
    if (v > limit) fail_parse(std::string(what) + " out of range at position " + std::to_string(pos));
    return v;
  }
};

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, const std::string& text) : ring_(ring), lex_{text} {}

  Poly parse() {
    Poly f = expression();
    if (!lex_.eof())
      fail_parse("unexpected trailing input at position " + std::to_string(lex_.pos));
    return f;
  }

 private:
  Poly expression() {
    bool neg = false;
    if (lex_.accept('-'))
      neg = true;
    else
      lex_.accept('+');
    Poly acc = product();
    if (neg) acc = acc.negate();
    while (true) {
      if (lex_.accept('+')) {
        acc = acc + product();
      } else if (lex_.accept('-')) {
        acc = acc - product();
      } else {
        break;
      }
    }
    return acc;
  }

  // A product of factors; '*' is optional (juxtaposition works).
  Poly product() {
    Poly acc = factor();
    while (true) {
      if (lex_.accept('*')) {
        acc = acc * factor();
        continue;
      }
      char c = lex_.peek();
      if (std::isalnum(uint8_t(c)) || c == '(' || c == '_') {
        acc = acc * factor();
        continue;
      }
      break;
    }
    return acc;
  }

  Poly factor() {
    char c = lex_.peek();
    Poly base(ring_);
    if (c == '(') {
      lex_.expect('(', "subexpression");
      base = expression();
      lex_.expect(')', "subexpression");
    } else if (std::isdigit(uint8_t(c))) {
      base = Poly::constant(ring_, ring_->field.from_decimal(lex_.number()));
    } else if (std::isalpha(uint8_t(c)) || c == '_') {
      size_t at = lex_.pos;
      std::string name = lex_.ident();
      if (ring_->field.k() > 1 && name == "t") {
        base = Poly::constant(ring_, ring_->field.gen());
      } else {
        int idx = ring_->var_index(name);
        if (idx < 0)
          fail_parse("unknown variable '" + name + "' at position " + std::to_string(at));
        base = Poly::variable(ring_, size_t(idx));
      }
    } else {
      fail_parse("unexpected character at position " + std::to_string(lex_.pos));
    }
    if (lex_.accept('^')) {
      uint64_t e = lex_.small_number(kMaxExp, "exponent");
      base = base.pow(e);
    }
    return base;
  }

  RingPtr ring_;
  Lexer lex_;
};

// Modulus text is everything from ':' up to the terminating '[', a polynomial in t.
std::vector<uint64_t> parse_modulus(const std::string& text, uint64_t p, uint32_t k) {
  Field fp = Field::prime_field(p);
  auto tring = Ring::make(fp, {"t"});
  Poly m = parse_poly(tring, text);
  std::vector<uint64_t> coeffs(k + 1, 0);
  for (const auto& t : m.terms()) {
    if (t.mon[0] > k) fail_parse("modulus degree exceeds the extension degree");
    coeffs[t.mon[0]] = t.c;
  }
  return coeffs;
}

}  // namespace

RingPtr parse_ring(const std::string& text) {
  Lexer lex{text};
  if (!lex.accept('F')) fail_parse("ring must start with 'F'");
  uint64_t p = lex.small_number((uint64_t(1) << 31) - 1, "characteristic");
  uint32_t k = 1;
  std::string modulus_text;
  if (lex.accept('^')) {
    k = uint32_t(lex.small_number(16, "extension degree"));
    if (k < 2) fail_parse("extension degree must be at least 2 when a modulus is given");
    lex.expect(':', "extension modulus");
    size_t start = lex.pos;
    size_t bracket = text.find('[', start);
    if (bracket == std::string::npos) fail_parse("expected '[' after the extension modulus");
    modulus_text = text.substr(start, bracket - start);
    lex.pos = bracket;
  }
  Field field = [&] {
    try {
      return k == 1 ? Field::prime_field(p)
                    : Field::extension(p, k, parse_modulus(modulus_text, p, k));
    } catch (const Error& e) {
      if (e.kind() == ErrKind::precondition) fail_parse(e.what());
      throw;
    }
  }();
  lex.expect('[', "variable list");
  std::vector<std::string> vars;
  vars.push_back(lex.ident());
  while (lex.accept(',')) vars.push_back(lex.ident());
  lex.expect(']', "variable list");
  if (!lex.eof()) fail_parse("unexpected trailing input at position " + std::to_string(lex.pos));
  return Ring::make(std::move(field), std::move(vars));
}

Poly parse_poly(const RingPtr& ring, const std::string& text) {
  return PolyParser(ring, text).parse();
}

}  // namespace fjump
