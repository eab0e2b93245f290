#include "costlr/parser.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace costlr {

namespace {

std::string span_text(SourceSpan s) {
  return std::to_string(s.begin) + ".." + std::to_string(s.end);
}

}  // namespace

ParseError::ParseError(SourceSpan span, const std::string& detail)
    : std::runtime_error("parse error at " + span_text(span) + ": " + detail),
      span_(span) {}

namespace {

enum class Tok {
  Ident,
  Num,
  Backslash,
  Colon,
  Dot,
  Plus,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Semicolon,
  Comma,
  Arrow,
  KwNil,
  KwNat,
  KwNcase,
  KwLcase,
  KwPcase,
  KwLfold,
  KwIfold,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::int64_t num = 0;
  SourceSpan span;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = src.size();
  auto push = [&](Tok k, std::size_t begin, std::size_t end, std::string text = {},
                  std::int64_t num = 0) {
    out.push_back(Token{k, std::move(text), num, SourceSpan{begin, end}});
  };
  while (i < n) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t begin = i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < n && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
      std::string word(src.substr(i, j - i));
      i = j;
      if (word == "Nat")
        push(Tok::KwNat, begin, j);
      else if (word == "nil")
        push(Tok::KwNil, begin, j);
      else if (word == "ncase")
        push(Tok::KwNcase, begin, j);
      else if (word == "lcase")
        push(Tok::KwLcase, begin, j);
      else if (word == "pcase")
        push(Tok::KwPcase, begin, j);
      else if (word == "lfold")
        push(Tok::KwLfold, begin, j);
      else if (word == "ifold")
        push(Tok::KwIfold, begin, j);
      else if (std::islower(static_cast<unsigned char>(word[0])))
        push(Tok::Ident, begin, j, std::move(word));
      else
        throw ParseError({begin, j}, "unknown keyword '" + word + "'");
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      std::int64_t v = 0;
      while (j < n && std::isdigit(static_cast<unsigned char>(src[j]))) {
        int d = src[j] - '0';
        if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10)
          throw ParseError({i, j + 1}, "numeral too large");
        v = v * 10 + d;
        ++j;
      }
      i = j;
      push(Tok::Num, begin, j, {}, v);
      continue;
    }
    switch (c) {
      case '\\': push(Tok::Backslash, begin, i + 1); ++i; break;
      case ':': push(Tok::Colon, begin, i + 1); ++i; break;
      case '.': push(Tok::Dot, begin, i + 1); ++i; break;
      case '+': push(Tok::Plus, begin, i + 1); ++i; break;
      case '(': push(Tok::LParen, begin, i + 1); ++i; break;
      case ')': push(Tok::RParen, begin, i + 1); ++i; break;
      case '[': push(Tok::LBracket, begin, i + 1); ++i; break;
      case ']': push(Tok::RBracket, begin, i + 1); ++i; break;
      case '{': push(Tok::LBrace, begin, i + 1); ++i; break;
      case '}': push(Tok::RBrace, begin, i + 1); ++i; break;
      case ';': push(Tok::Semicolon, begin, i + 1); ++i; break;
      case ',': push(Tok::Comma, begin, i + 1); ++i; break;
      case '-':
        if (i + 1 < n && src[i + 1] == '>') {
          push(Tok::Arrow, begin, i + 2);
          i += 2;
          break;
        }
        throw ParseError({begin, i + 1}, "stray '-' (did you mean '->'?)");
      default:
        throw ParseError({begin, i + 1},
                         std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back(Token{Tok::End, {}, 0, SourceSpan{n, n}});
  return out;
}

const char* tok_name(Tok k) {
  switch (k) {
    case Tok::Ident: return "identifier";
    case Tok::Num: return "numeral";
    case Tok::Backslash: return "'\\'";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::Plus: return "'+'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Semicolon: return "';'";
    case Tok::Comma: return "','";
    case Tok::Arrow: return "'->'";
    case Tok::KwNil: return "'nil'";
    case Tok::KwNat: return "'Nat'";
    case Tok::KwNcase: return "'ncase'";
    case Tok::KwLcase: return "'lcase'";
    case Tok::KwPcase: return "'pcase'";
    case Tok::KwLfold: return "'lfold'";
    case Tok::KwIfold: return "'ifold'";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  TermPtr whole_term() {
    TermPtr t = term();
    expect(Tok::End, "expected end of input");
    return t;
  }

  TyPtr whole_type() {
    TyPtr t = type();
    expect(Tok::End, "expected end of input");
    return t;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& prev() const { return toks_[pos_ - 1]; }
  Token advance() { return toks_[pos_++]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool accept(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }
  Token expect(Tok k, const std::string& what) {
    if (!at(k))
      throw ParseError(peek().span,
                       what + " (found " + tok_name(peek().kind) + ")");
    return advance();
  }
  SourceSpan since(std::size_t begin) const { return {begin, prev().span.end}; }

  TyPtr type() {
    std::size_t begin = peek().span.begin;
    TyPtr left = atype();
    if (accept(Tok::Arrow)) {
      TyPtr right = type();
      return ty::arrow(std::move(left), std::move(right), since(begin));
    }
    return left;
  }

  TyPtr atype() {
    std::size_t begin = peek().span.begin;
    if (accept(Tok::KwNat)) return ty::nat(since(begin));
    if (at(Tok::Ident)) {
      std::string name = advance().text;
      return ty::var(std::move(name), since(begin));
    }
    if (accept(Tok::LBracket)) {
      TyPtr elem = type();
      expect(Tok::RBracket, "expected ']'");
      return ty::list(std::move(elem), since(begin));
    }
    if (accept(Tok::LParen)) {
      TyPtr first = type();
      if (accept(Tok::Comma)) {
        TyPtr second = type();
        expect(Tok::RParen, "expected ')'");
        return ty::pair(std::move(first), std::move(second), since(begin));
      }
      expect(Tok::RParen, "expected ')'");
      return first;
    }
    throw ParseError(peek().span,
                     std::string("expected a type (found ") + tok_name(peek().kind) + ")");
  }

  TermPtr term() {
    std::size_t begin = peek().span.begin;
    if (accept(Tok::Backslash)) {
      std::string binder = expect(Tok::Ident, "expected binder name").text;
      expect(Tok::Colon, "expected ':' after binder");
      TyPtr binder_ty = type();
      expect(Tok::Dot, "expected '.' after binder type");
      TermPtr body = term();
      return term::lam(std::move(binder), std::move(binder_ty), std::move(body),
                       since(begin));
    }
    return cons();
  }

  TermPtr cons() {
    std::size_t begin = peek().span.begin;
    TermPtr left = sum();
    if (accept(Tok::Colon)) {
      TermPtr right = cons();
      return term::cons(std::move(left), std::move(right), since(begin));
    }
    return left;
  }

  TermPtr sum() {
    std::size_t begin = peek().span.begin;
    TermPtr t = application();
    while (accept(Tok::Plus)) {
      TermPtr rhs = application();
      t = term::add(std::move(t), std::move(rhs), since(begin));
    }
    return t;
  }

  bool starts_atom() const {
    switch (peek().kind) {
      case Tok::Ident:
      case Tok::Num:
      case Tok::LParen:
      case Tok::KwNil:
      case Tok::KwNcase:
      case Tok::KwLcase:
      case Tok::KwPcase:
      case Tok::KwLfold:
      case Tok::KwIfold:
        return true;
      default:
        return false;
    }
  }

  TermPtr application() {
    std::size_t begin = peek().span.begin;
    TermPtr t = atom();
    while (starts_atom()) {
      TermPtr arg = atom();
      t = term::app(std::move(t), std::move(arg), since(begin));
    }
    return t;
  }

  TermPtr atom() {
    std::size_t begin = peek().span.begin;
    if (at(Tok::Ident)) {
      std::string name = advance().text;
      return term::var(std::move(name), since(begin));
    }
    if (at(Tok::Num)) {
      std::int64_t value = advance().num;
      return term::nat(value, since(begin));
    }
    if (accept(Tok::KwNil)) {
      expect(Tok::LBracket, "expected '[' after 'nil'");
      TyPtr elem = type();
      expect(Tok::RBracket, "expected ']'");
      return term::nil(std::move(elem), since(begin));
    }
    if (accept(Tok::LParen)) {
      TermPtr first = term();
      if (accept(Tok::Comma)) {
        TermPtr second = term();
        expect(Tok::RParen, "expected ')'");
        return term::pair(std::move(first), std::move(second), since(begin));
      }
      expect(Tok::RParen, "expected ')'");
      return first;
    }
    if (accept(Tok::KwNcase)) {
      TermPtr scrutinee = term();
      expect(Tok::LBrace, "expected '{'");
      Token zero = expect(Tok::Num, "expected '0' branch label");
      if (zero.num != 0)
        throw ParseError(zero.span, "zero branch must be labelled '0'");
      expect(Tok::Arrow, "expected '->'");
      TermPtr zero_branch = term();
      expect(Tok::Semicolon, "expected ';'");
      std::string binder = expect(Tok::Ident, "expected binder name").text;
      expect(Tok::Arrow, "expected '->'");
      TermPtr pos_branch = term();
      expect(Tok::RBrace, "expected '}'");
      return term::ncase(std::move(scrutinee), std::move(zero_branch),
                         std::move(binder), std::move(pos_branch), since(begin));
    }
    if (accept(Tok::KwLcase)) {
      TermPtr scrutinee = term();
      expect(Tok::LBrace, "expected '{'");
      expect(Tok::KwNil, "expected 'nil' branch label");
      expect(Tok::Arrow, "expected '->'");
      TermPtr nil_branch = term();
      expect(Tok::Semicolon, "expected ';'");
      std::string head = expect(Tok::Ident, "expected head binder").text;
      expect(Tok::Colon, "expected ':' between binders");
      std::string tail = expect(Tok::Ident, "expected tail binder").text;
      expect(Tok::Arrow, "expected '->'");
      TermPtr cons_branch = term();
      expect(Tok::RBrace, "expected '}'");
      return term::lcase(std::move(scrutinee), std::move(nil_branch), std::move(head),
                         std::move(tail), std::move(cons_branch), since(begin));
    }
    if (accept(Tok::KwPcase)) {
      TermPtr scrutinee = term();
      expect(Tok::LBrace, "expected '{'");
      expect(Tok::LParen, "expected '('");
      std::string first = expect(Tok::Ident, "expected binder name").text;
      expect(Tok::Comma, "expected ','");
      std::string second = expect(Tok::Ident, "expected binder name").text;
      expect(Tok::RParen, "expected ')'");
      expect(Tok::Arrow, "expected '->'");
      TermPtr body = term();
      expect(Tok::RBrace, "expected '}'");
      return term::pcase(std::move(scrutinee), std::move(first), std::move(second),
                         std::move(body), since(begin));
    }
    if (at(Tok::KwLfold) || at(Tok::KwIfold)) {
      bool is_lfold = advance().kind == Tok::KwLfold;
      expect(Tok::LParen, "expected '('");
      TermPtr step = term();
      expect(Tok::Comma, "expected ','");
      TermPtr init = term();
      expect(Tok::Comma, "expected ','");
      TermPtr last = term();
      expect(Tok::RParen, "expected ')'");
      return is_lfold ? term::lfold(std::move(step), std::move(init), std::move(last),
                                    since(begin))
                      : term::ifold(std::move(step), std::move(init), std::move(last),
                                    since(begin));
    }
    throw ParseError(peek().span,
                     std::string("expected a term (found ") + tok_name(peek().kind) + ")");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(std::string_view text) { return Parser(text).whole_term(); }

TyPtr parse_type(std::string_view text) { return Parser(text).whole_type(); }

}  // namespace costlr
