#include "wildcat/parser.hpp"

#include <cctype>

namespace wildcat {

namespace {

enum class Tok { KwClass, KwExtends, KwSuper, Ident, LAngle, RAngle, Comma, Question, End };

struct Token {
  Tok kind;
  std::string text;
  int line = 1;
  int col = 1;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::KwClass: return "'class'";
    case Tok::KwExtends: return "'extends'";
    case Tok::KwSuper: return "'super'";
    case Tok::Ident: return "identifier";
    case Tok::LAngle: return "'<'";
    case Tok::RAngle: return "'>'";
    case Tok::Comma: return "','";
    case Tok::Question: return "'?'";
    case Tok::End: return "end of input";
  }
  return "token";
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    cur_.line = line_;
    cur_.col = col_;
    if (pos_ >= text_.size()) {
      cur_ = {Tok::End, "", line_, col_};
      return;
    }
    char c = text_[pos_];
    if (c == '<' || c == '>' || c == ',' || c == '?') {
      cur_.kind = c == '<' ? Tok::LAngle : c == '>' ? Tok::RAngle : c == ',' ? Tok::Comma : Tok::Question;
      cur_.text = std::string(1, c);
      ++pos_;
      ++col_;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
        ++col_;
      }
      cur_.text = text_.substr(start, pos_ - start);
      cur_.kind = cur_.text == "class"     ? Tok::KwClass
                  : cur_.text == "extends" ? Tok::KwExtends
                  : cur_.text == "super"   ? Tok::KwSuper
                                           : Tok::Ident;
      return;
    }
    throw Error(Errc::Syntax, std::string("unexpected character '") + c + "'", line_, col_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token cur_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  ClassTable table() {
    ClassTable t;
    while (lex_.peek().kind != Tok::End) t.decls.push_back(decl());
    return t;
  }

  TypeTemplate type_expr() {
    TypeTemplate t = gtype();
    expect(Tok::End);
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) {
    const Token& t = lex_.peek();
    throw Error(Errc::Syntax,
                "expected " + expected + ", got " +
                    (t.kind == Tok::End ? "end of input" : "'" + t.text + "'"),
                t.line, t.col);
  }

  Token expect(Tok kind) {
    if (lex_.peek().kind != kind) fail(tok_name(kind));
    return lex_.take();
  }

  ClassDecl decl() {
    expect(Tok::KwClass);
    Token name = expect(Tok::Ident);
    if (name.text == "Null")
      throw Error(Errc::Syntax, "Null is a reserved name", name.line, name.col);
    ClassDecl d;
    d.name = name.text;
    if (lex_.peek().kind == Tok::LAngle) {
      lex_.take();
      d.params.push_back(tparam());
      while (lex_.peek().kind == Tok::Comma) {
        lex_.take();
        d.params.push_back(tparam());
      }
      expect(Tok::RAngle);
    }
    d.superclass = TypeTemplate::object();
    if (lex_.peek().kind == Tok::KwExtends) {
      lex_.take();
      d.superclass = stype();
    }
    return d;
  }

  TypeParam tparam() {
    TypeParam p;
    p.name = expect(Tok::Ident).text;
    if (lex_.peek().kind == Tok::KwExtends) {
      lex_.take();
      p.bound = stype();
    }
    return p;
  }

  TypeTemplate stype() {
    TypeTemplate t;
    t.kind = TypeTemplate::Kind::Class;
    t.name = expect(Tok::Ident).text;
    if (lex_.peek().kind == Tok::LAngle) t.args = targs();
    return t;
  }

  std::vector<TemplateArg> targs() {
    expect(Tok::LAngle);
    std::vector<TemplateArg> args;
    args.push_back(targ());
    while (lex_.peek().kind == Tok::Comma) {
      lex_.take();
      args.push_back(targ());
    }
    expect(Tok::RAngle);
    return args;
  }

  TemplateArg targ() {
    TemplateArg a;
    if (lex_.peek().kind == Tok::Question) {
      lex_.take();
      if (lex_.peek().kind == Tok::KwExtends) {
        lex_.take();
        a.surface = Surface::Extends;
        a.type = gtype();
      } else if (lex_.peek().kind == Tok::KwSuper) {
        lex_.take();
        a.surface = Surface::Super;
        a.type = gtype();
      } else {
        a.surface = Surface::Unbounded;
      }
      return a;
    }
    a.surface = Surface::Invariant;
    a.type = gtype();
    return a;
  }

  TypeTemplate gtype() {
    TypeTemplate t;
    Token name = expect(Tok::Ident);
    t.name = name.text;
    t.kind = TypeTemplate::Kind::Class;  // "Null" resolved later
    if (lex_.peek().kind == Tok::LAngle) t.args = targs();
    return t;
  }

  Lexer lex_;
};

// Desugars a resolved, parameter-free template into a ground term.
TypeTerm desugar(const ValidatedClassTable& vt, const TypeTemplate& t) {
  return subst_template_type(vt, t, {}, Endpoint::Upper);
}

}  // namespace

ClassTable parse_class_table(const SourceText& src) {
  Parser p(src.text);
  ClassTable t = p.table();
  t.origin = src.origin;
  return t;
}

TypeTerm parse_type(const SourceText& src, const SubtypeDecider& decider) {
  Parser p(src.text);
  TypeTemplate tpl = p.type_expr();

  // Resolve names against the table: no parameters in scope here.
  const ValidatedClassTable& vt = decider.table();
  std::function<void(TypeTemplate&)> resolve = [&](TypeTemplate& t) {
    if (t.name == "Null") {
      if (!t.args.empty()) throw Error(Errc::ArityMismatch, "Null takes no arguments");
      t.kind = TypeTemplate::Kind::Null;
      return;
    }
    if (!vt.is_declared(t.name)) throw Error(Errc::UnknownClass, t.name);
    if (t.args.size() != vt.arity(t.name))
      throw Error(Errc::ArityMismatch,
                  t.name + " expects " + std::to_string(vt.arity(t.name)) +
                      " arguments, got " + std::to_string(t.args.size()));
    for (auto& a : t.args)
      if (a.type) resolve(*a.type);
  };
  resolve(tpl);

  TypeTerm term = desugar(vt, tpl);
  decider.require_well_formed(term);
  return term;
}

}  // namespace wildcat
