#include "cliffrep/expr.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "cliffrep/error.hpp"

namespace cliffrep {
namespace {

enum class Tok { number, generator, plus, minus, star, end };

struct Token {
  Tok kind = Tok::end;
  std::size_t pos = 0;
  Rational value;                // number
  std::vector<unsigned> gens;    // generator: one or more indices (e12 shorthand)
};

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  Lexer(std::string_view text, unsigned n) : text_(text), n_(n) {}

  Token next() {
    skip_space();
    Token t;
    t.pos = pos_;
    if (pos_ >= text_.size()) return t;
    const char c = text_[pos_];
    switch (c) {
      case '+':
        ++pos_;
        t.kind = Tok::plus;
        return t;
      case '-':
        ++pos_;
        t.kind = Tok::minus;
        return t;
      case '*':
        ++pos_;
        t.kind = Tok::star;
        return t;
      case 'e':
        return generator(t);
      default:
        break;
    }
    if (is_digit(c)) return number(t);
    throw SyntaxError(pos_, std::string("unexpected character '") + printable(c) + "'");
  }

 private:
  static std::string printable(char c) {
    if (std::isprint(static_cast<unsigned char>(c))) return std::string(1, c);
    static const char* hex = "0123456789abcdef";
    const auto u = static_cast<unsigned char>(c);
    return std::string("\\x") + hex[u >> 4] + hex[u & 15];
  }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Token number(Token t) {
    const std::string_view num = digits();
    std::string_view den = "1";
    const std::size_t save = pos_;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_space();
      const std::size_t den_pos = pos_;
      den = digits();
      if (den.empty()) throw SyntaxError(den_pos, "expected denominator after '/'");
    } else {
      pos_ = save;
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw DivisionByZero("zero denominator in rational literal at position " + std::to_string(t.pos));
    t.value = Rational(mpz_class(std::string(num), 10), d);
    t.value.canonicalize();
    t.kind = Tok::number;
    return t;
  }

  unsigned index_value(std::string_view ds, std::size_t at) const {
    // Anything longer than the largest supported index is out of range regardless of value.
    if (ds.size() > 2) throw IndexOutOfRange("generator index at position " + std::to_string(at) + " out of range");
    unsigned k = 0;
    for (char c : ds) k = k * 10 + static_cast<unsigned>(c - '0');
    if (k < 1 || k > n_) {
      throw IndexOutOfRange("generator e" + std::to_string(k) + " at position " + std::to_string(at) +
                            " outside 1.." + std::to_string(n_));
    }
    return k;
  }

  Token generator(Token t) {
    ++pos_;  // 'e'
    t.kind = Tok::generator;
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      skip_space();
      const std::size_t at = pos_;
      const std::string_view ds = digits();
      if (ds.empty()) throw SyntaxError(pos_, "expected generator index inside brackets");
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ']') throw SyntaxError(pos_, "expected ']'");
      ++pos_;
      t.gens.push_back(index_value(ds, at));
      return t;
    }
    const std::size_t at = pos_;
    const std::string_view ds = digits();
    if (ds.empty()) throw SyntaxError(at, "expected generator index after 'e'");
    if (ds.size() > 1 && n_ >= 10) {
      throw SyntaxError(at, "ambiguous generator 'e" + std::string(ds) + "'; use the bracket form e[k] when n >= 10");
    }
    for (std::size_t i = 0; i < ds.size(); ++i) t.gens.push_back(index_value(ds.substr(i, 1), at + i));
    return t;
  }

  std::string_view text_;
  unsigned n_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : lex_(text, sig.n()), sig_(sig), result_(sig) {
    advance();
  }

  Multivector run() {
    if (cur_.kind == Tok::end) throw SyntaxError(cur_.pos, "empty expression");
    bool negative = false;
    if (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      negative = cur_.kind == Tok::minus;
      advance();
    }
    term(negative);
    while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      negative = cur_.kind == Tok::minus;
      advance();
      term(negative);
    }
    if (cur_.kind != Tok::end) throw SyntaxError(cur_.pos, "expected '+', '-' or end of input");
    return std::move(result_);
  }

 private:
  void advance() { cur_ = lex_.next(); }

  void term(bool negative) {
    Rational coeff = 1;
    bool any = false;
    if (cur_.kind == Tok::number) {
      coeff = cur_.value;
      any = true;
      advance();
    }
    SignedBlade acc{1, IndexSet()};
    while (true) {
      if (cur_.kind == Tok::star) {
        const std::size_t star_pos = cur_.pos;
        advance();
        if (cur_.kind != Tok::generator) throw SyntaxError(star_pos, "'*' must be followed by a generator");
      }
      if (cur_.kind != Tok::generator) break;
      for (unsigned k : cur_.gens) {
        if (acc.sign == 0) break;
        const SignedBlade step = blade_product(sig_, acc.blade, IndexSet(std::uint32_t{1} << (k - 1)));
        acc = {acc.sign * step.sign, step.sign == 0 ? IndexSet() : step.blade};
      }
      any = true;
      advance();
    }
    if (!any) throw SyntaxError(cur_.pos, "expected a number or a generator");
    if (acc.sign == 0) return;
    if (negative != (acc.sign < 0)) coeff = -coeff;
    const Ordinal j = basis_ordinal(sig_.n(), acc.blade);
    result_.set_coeff(j, result_.coeff(j) + coeff);
  }

  Lexer lex_;
  const Signature& sig_;
  Multivector result_;
  Token cur_;
};

}  // namespace

Multivector parse(std::string_view text, const Signature& sig) { return Parser(text, sig).run(); }

}  // namespace cliffrep
