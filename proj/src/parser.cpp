#include <cctype>
#include <cstdint>

#include "thilb/polynomial.hpp"

namespace thilb {
namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;

  explicit Lexer(const std::string& t) : text(t) {}

  void skipWs() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skipWs();
    return pos >= text.size();
  }
  char peek() {
    skipWs();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) { ++pos; return true; }
    return false;
  }
};

class Parser {
 public:
  Parser(const std::string& text, const PolyRingPtr& ring) : lex_(text), ring_(ring) {}

  Polynomial run() {
    Polynomial f = expr();
    if (!lex_.eof()) throw ParseError("unexpected trailing input", lex_.pos);
    return f;
  }

 private:
  Polynomial expr() {
    bool negate = false;
    if (lex_.accept('-')) negate = true;
    else lex_.accept('+');
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (lex_.accept('+')) acc = acc + term();
      else if (lex_.accept('-')) acc = acc - term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (lex_.accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (lex_.accept('^')) {
      std::size_t at = lex_.pos;
      if (lex_.peek() == '-') throw ParseError("negative exponent", at);
      if (!std::isdigit(static_cast<unsigned char>(lex_.peek())))
        throw ParseError("expected integer exponent after '^'", at);
      std::uint64_t e = natural(0xffffffffull, "exponent too large");
      return b.pow(e);
    }
    return b;
  }

  Polynomial base() {
    char c = lex_.peek();
    std::size_t at = lex_.pos;
    if (c == '(') {
      lex_.accept('(');
      Polynomial f = expr();
      if (!lex_.accept(')')) throw ParseError("expected ')'", lex_.pos);
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // reduce digit-by-digit so arbitrarily long literals stay exact mod p
      const auto& F = ring_->field;
      Fp v = 0;
      while (lex_.pos < lex_.text.size() &&
             std::isdigit(static_cast<unsigned char>(lex_.text[lex_.pos]))) {
        v = F.add(F.mul(v, 10), F.reduce(lex_.text[lex_.pos] - '0'));
        ++lex_.pos;
      }
      return Polynomial::constant(ring_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (lex_.pos < lex_.text.size()) {
        char d = lex_.text[lex_.pos];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') { name += d; ++lex_.pos; }
        else break;
      }
      int idx = ring_->indexOf(name);
      if (idx < 0) throw ParseError("unknown identifier '" + name + "'", at);
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    throw ParseError("expected number, variable or '('", at);
  }

  std::uint64_t natural(std::uint64_t cap, const char* msg) {
    std::size_t at = lex_.pos;
    std::uint64_t v = 0;
    while (lex_.pos < lex_.text.size() &&
           std::isdigit(static_cast<unsigned char>(lex_.text[lex_.pos]))) {
      v = v * 10 + (lex_.text[lex_.pos] - '0');
      if (v > cap) throw ParseError(msg, at);
      ++lex_.pos;
    }
    return v;
  }

  Lexer lex_;
  PolyRingPtr ring_;
};

}  // namespace

Polynomial parsePoly(const std::string& text, const PolyRingPtr& ring) {
  return Parser(text, ring).run();
}

}  // namespace thilb
