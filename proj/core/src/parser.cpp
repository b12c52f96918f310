#include "weyl/parser.hpp"

#include <cctype>
#include <map>

namespace weyl {

const Endomorphism* SourceDocument::find_map(const std::string& name) const {
  for (const auto& [n, m] : maps)
    if (n == name) return &m;
  return nullptr;
}

const Element* SourceDocument::find_element(const std::string& name) const {
  for (const auto& [n, e] : elements)
    if (n == name) return &e;
  return nullptr;
}

namespace {

enum class Tok {
  name,     // identifiers, keywords, generator names
  number,   // digits only
  plus,
  minus,
  star,
  caret,
  slash,
  lparen,
  rparen,
  lbrace,
  rbrace,
  semicolon,
  equals,
  arrow,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Tok::end, "", line, col};
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        name.push_back(take());
      return {Tok::name, std::move(name), line, col};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits.push_back(take());
      return {Tok::number, std::move(digits), line, col};
    }
    take();
    switch (c) {
      case '+': return {Tok::plus, "+", line, col};
      case '-':
        if (pos_ < text_.size() && text_[pos_] == '>') {
          take();
          return {Tok::arrow, "->", line, col};
        }
        return {Tok::minus, "-", line, col};
      case '*': return {Tok::star, "*", line, col};
      case '^': return {Tok::caret, "^", line, col};
      case '/': return {Tok::slash, "/", line, col};
      case '(': return {Tok::lparen, "(", line, col};
      case ')': return {Tok::rparen, ")", line, col};
      case '{': return {Tok::lbrace, "{", line, col};
      case '}': return {Tok::rbrace, "}", line, col};
      case ';': return {Tok::semicolon, ";", line, col};
      case '=': return {Tok::equals, "=", line, col};
      default:
        throw parse_error(line, col,
                          std::string("unexpected character '") + c + "'");
    }
  }

 private:
  char take() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text) { advance(); }

  SourceDocument document() {
    SourceDocument doc;
    expect_keyword("algebra", "a document starts with an algebra declaration");
    doc.signature = algebra_declaration();
    if (doc.signature.s() == 0)
      throw parse_error(cur_.line, cur_.column,
                        "the algebra needs at least one generator");
    while (cur_.kind != Tok::end) {
      if (cur_.kind != Tok::name)
        throw parse_error(cur_.line, cur_.column,
                          "expected 'map' or 'element'");
      if (cur_.text == "algebra")
        throw parse_error(cur_.line, cur_.column,
                          "only one algebra declaration per document");
      if (cur_.text == "map") {
        advance();
        map_definition(doc);
      } else if (cur_.text == "element") {
        advance();
        element_definition(doc);
      } else {
        throw parse_error(cur_.line, cur_.column,
                          "expected 'map' or 'element', got '" + cur_.text +
                              "'");
      }
    }
    return doc;
  }

  Element expression_only(const AlgebraSignature& sig) {
    Element e = expression(sig);
    if (cur_.kind != Tok::end)
      throw parse_error(cur_.line, cur_.column,
                        "trailing input after the expression");
    return e;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  void expect(Tok kind, const std::string& what) {
    if (cur_.kind != kind)
      throw parse_error(cur_.line, cur_.column,
                        "expected " + what + ", got '" + cur_.text + "'");
  }

  void expect_keyword(const std::string& kw, const std::string& message) {
    if (cur_.kind != Tok::name || cur_.text != kw)
      throw parse_error(cur_.line, cur_.column, message);
    advance();
  }

  std::uint32_t nonnegative_int() {
    expect(Tok::number, "a nonnegative integer");
    unsigned long v = 0;
    for (char c : cur_.text) {
      v = v * 10 + static_cast<unsigned long>(c - '0');
      if (v > 1000000)
        throw parse_error(cur_.line, cur_.column, "integer is too large");
    }
    advance();
    return static_cast<std::uint32_t>(v);
  }

  AlgebraSignature algebra_declaration() {
    expect_keyword("n", "expected 'n='");
    expect(Tok::equals, "'='");
    advance();
    std::uint32_t n = nonnegative_int();
    expect_keyword("m", "expected 'm='");
    expect(Tok::equals, "'='");
    advance();
    std::uint32_t m = nonnegative_int();
    expect(Tok::semicolon, "';'");
    advance();
    return AlgebraSignature(n, m);
  }

  void map_definition(SourceDocument& doc) {
    expect(Tok::name, "a map name");
    std::string name = cur_.text;
    Token name_tok = cur_;
    if (doc.find_map(name))
      throw parse_error(name_tok.line, name_tok.column,
                        "map '" + name + "' is already defined");
    advance();
    expect(Tok::lbrace, "'{'");
    advance();
    const AlgebraSignature& sig = doc.signature;
    std::vector<std::optional<Element>> images(sig.s());
    std::size_t arrows = 0;
    while (cur_.kind != Tok::rbrace) {
      expect(Tok::name, "a generator name");
      std::optional<std::uint32_t> index = sig.index_of_name(cur_.text);
      if (!index)
        throw parse_error(cur_.line, cur_.column,
                          "undeclared generator '" + cur_.text + "'");
      if (images[*index])
        throw parse_error(cur_.line, cur_.column,
                          "duplicate arrow for '" + cur_.text + "'");
      advance();
      expect(Tok::arrow, "'->'");
      advance();
      images[*index] = expression(sig);
      expect(Tok::semicolon, "';'");
      advance();
      ++arrows;
    }
    advance();  // '}'
    if (cur_.kind == Tok::semicolon) advance();
    if (arrows != sig.s())
      throw parse_error(name_tok.line, name_tok.column,
                        "map '" + name + "' needs one arrow per generator (" +
                            std::to_string(arrows) + " of " +
                            std::to_string(sig.s()) + " given)");
    std::vector<Element> final_images;
    final_images.reserve(sig.s());
    for (auto& im : images) final_images.push_back(std::move(*im));
    doc.maps.emplace_back(name, Endomorphism(sig, std::move(final_images)));
  }

  void element_definition(SourceDocument& doc) {
    expect(Tok::name, "an element name");
    std::string name = cur_.text;
    if (doc.find_element(name))
      throw parse_error(cur_.line, cur_.column,
                        "element '" + name + "' is already defined");
    advance();
    expect(Tok::equals, "'='");
    advance();
    Element value = expression(doc.signature);
    expect(Tok::semicolon, "';'");
    advance();
    doc.elements.emplace_back(std::move(name), std::move(value));
  }

  // expr := ['-'] term { ('+'|'-') term }
  Element expression(const AlgebraSignature& sig) {
    bool negate = false;
    if (cur_.kind == Tok::minus) {
      negate = true;
      advance();
    }
    Element acc = term(sig);
    if (negate) acc = -acc;
    while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      bool minus = cur_.kind == Tok::minus;
      advance();
      Element t = term(sig);
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  // term := factor { '*' factor }; '*' is noncommutative, left-associative.
  Element term(const AlgebraSignature& sig) {
    Element acc = factor(sig);
    while (cur_.kind == Tok::star) {
      advance();
      acc = acc * factor(sig);
    }
    return acc;
  }

  // factor := atom ['^' number]
  Element factor(const AlgebraSignature& sig) {
    Element base = atom(sig);
    if (cur_.kind == Tok::caret) {
      advance();
      if (cur_.kind != Tok::number)
        throw parse_error(cur_.line, cur_.column,
                          "'^' needs a nonnegative integer exponent");
      std::uint32_t e = nonnegative_int();
      base = power(base, e);
    }
    return base;
  }

  Element atom(const AlgebraSignature& sig) {
    if (cur_.kind == Tok::lparen) {
      advance();
      Element e = expression(sig);
      expect(Tok::rparen, "')'");
      advance();
      return e;
    }
    if (cur_.kind == Tok::number) {
      Scalar value(Integer(cur_.text));
      advance();
      if (cur_.kind == Tok::slash) {
        advance();
        expect(Tok::number, "a denominator");
        Integer den(cur_.text);
        if (sgn(den) == 0)
          throw parse_error(cur_.line, cur_.column, "zero denominator");
        advance();
        value /= Scalar(den);
      }
      return Element::constant(sig, value);
    }
    if (cur_.kind == Tok::name) {
      std::optional<std::uint32_t> index = sig.index_of_name(cur_.text);
      if (!index)
        throw parse_error(cur_.line, cur_.column,
                          "undeclared generator '" + cur_.text + "'");
      advance();
      return Element::generator(sig, *index);
    }
    throw parse_error(cur_.line, cur_.column,
                      "expected a number, generator or '(', got '" +
                          cur_.text + "'");
  }

  Lexer lexer_;
  Token cur_{Tok::end, "", 0, 0};
};

}  // namespace

SourceDocument parse_document(const std::string& text) {
  Parser parser(text);
  return parser.document();
}

Element parse_expression(const std::string& text,
                         const AlgebraSignature& sig) {
  Parser parser(text);
  return parser.expression_only(sig);
}

}  // namespace weyl
