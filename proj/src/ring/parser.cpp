#include "phantom/ring/parser.hpp"

#include <cctype>

#include "phantom/ring/errors.hpp"

namespace phantom {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    Polynomial f = expression();
    skip_space();
    if (!at_end()) fail(std::string("unexpected character '") + peek() + "'");
    return f;
  }

 private:
  Polynomial expression() {
    Polynomial sum(ring_);
    bool first = true;
    while (true) {
      skip_space();
      bool negate = false;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        negate = peek() == '-';
        advance();
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      sum = negate ? sum - t : sum + t;
      first = false;
      skip_space();
      if (at_end() || (peek() != '+' && peek() != '-')) break;
    }
    return sum;
  }

  Polynomial term() {
    Polynomial product = factor();
    while (true) {
      skip_space();
      if (at_end()) break;
      char c = peek();
      if (c == '*') {
        advance();
        product = product * factor();
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
        product = product * factor();
      } else {
        break;
      }
    }
    return product;
  }

  Polynomial factor() {
    skip_space();
    if (at_end()) fail("expected a factor");
    char c = peek();
    Polynomial base(ring_);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      base = Polynomial::constant(ring_, static_cast<std::int64_t>(number_mod_p()));
    } else if (c == '(') {
      advance();
      base = expression();
      skip_space();
      if (at_end() || peek() != ')') fail("expected ')'");
      advance();
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      base = identifier();
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    skip_space();
    if (!at_end() && peek() == '^') {
      advance();
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      base = base.pow(exponent());
    }
    return base;
  }

  // A run of identifier characters, split greedily into declared names. Only
  // the last name in the run binds a following '^'.
  Polynomial identifier() {
    std::size_t start = pos_;
    std::size_t start_col = column_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      advance();
    }
    std::string_view word = text_.substr(start, pos_ - start);
    Polynomial product = Polynomial::constant(ring_, 1);
    std::vector<std::size_t> pieces;
    std::size_t i = 0;
    while (i < word.size()) {
      std::size_t best = 0;
      std::size_t best_index = 0;
      for (std::size_t v = 0; v < ring_->nvars(); ++v) {
        const auto& name = ring_->variables()[v];
        if (name.size() > best && word.substr(i, name.size()) == name) {
          best = name.size();
          best_index = v;
        }
      }
      if (best == 0) {
        if (std::isdigit(static_cast<unsigned char>(word[i]))) {
          throw ParseError("digits must be separated from a variable name", line_, start_col + i);
        }
        throw ParseError("unknown variable in '" + std::string(word) + "'", line_, start_col + i);
      }
      pieces.push_back(best_index);
      i += best;
    }
    skip_space();
    bool has_power = !at_end() && peek() == '^';
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      if (k + 1 == pieces.size() && has_power) {
        // Returned without the last variable; factor() applies the power to it.
        if (pieces.size() == 1) return Polynomial::variable(ring_, pieces[k]);
        advance();
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        product = product * Polynomial::variable(ring_, pieces[k]).pow(exponent());
        return product;
      }
      product = product * Polynomial::variable(ring_, pieces[k]);
    }
    return product;
  }

  std::uint64_t number_mod_p() {
    std::uint64_t value = 0;
    std::uint32_t p = ring_->characteristic();
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = (value * 10 + static_cast<unsigned>(peek() - '0')) % p;
      advance();
    }
    return value;
  }

  std::uint64_t exponent() {
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<unsigned>(peek() - '0');
      if (value > 65535) fail("exponent too large");
      advance();
    }
    return value;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column_); }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

}  // namespace phantom
