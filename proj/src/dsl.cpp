#include "facthom/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace facthom::dsl {

std::string error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::syntax: return "syntax error";
    case ErrorKind::unknown_identifier: return "unknown identifier";
    case ErrorKind::duplicate: return "duplicate name";
    case ErrorKind::type_mismatch: return "type mismatch";
    case ErrorKind::invalid: return "invalid declaration";
  }
  return "error";
}

DslError::DslError(ErrorKind kind, Span span, const std::string& message)
    : std::runtime_error("line " + std::to_string(span.line) + ", column " + std::to_string(span.column) + ": " +
                         error_kind_name(kind) + ": " + message),
      kind_(kind),
      span_(span),
      detail_(message) {}

bool operator==(const TableLine& a, const TableLine& b) {
  return a.kind == b.kind && a.label == b.label && a.right == b.right && a.degree == b.degree &&
         a.weight == b.weight && a.terms == b.terms && a.scalar == b.scalar && a.value == b.value;
}

// ------------------------------------------------------------------ lexer

namespace {

struct Token {
  enum class Kind { word, punct, newline, end };
  Kind kind;
  std::string text;
  Span span;
};

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^' || c == '\'' || c == '.';
}

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    i += n;
    col += static_cast<int>(n);
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      out.push_back({Token::Kind::newline, "\n", {line, col, 1}});
      ++i;
      ++line;
      col = 1;
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
    } else if (word_char(c)) {
      std::size_t j = i;
      while (j < src.size() && word_char(src[j])) ++j;
      out.push_back({Token::Kind::word, src.substr(i, j - i), {line, col, static_cast<int>(j - i)}});
      advance(j - i);
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Token::Kind::punct, "->", {line, col, 2}});
      advance(2);
    } else if (std::string("=(),{}*+-/:").find(c) != std::string::npos) {
      out.push_back({Token::Kind::punct, std::string(1, c), {line, col, 1}});
      advance(1);
    } else {
      unsigned char u = static_cast<unsigned char>(c);
      std::string shown = u >= 0x20 && u < 0x7f ? "'" + std::string(1, c) + "'" : "byte " + std::to_string(u);
      throw DslError(ErrorKind::syntax, {line, col, 1}, "unexpected character " + shown);
    }
  }
  out.push_back({Token::Kind::end, "", {line, col, 0}});
  return out;
}

bool is_number(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Span join(const Span& a, const Span& b) {
  if (a.line != b.line) return a;
  return {a.line, a.column, b.column + b.length - a.column};
}

// ----------------------------------------------------------------- parser

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  SyntaxTree parse() {
    SyntaxTree tree;
    while (true) {
      skip_newlines();
      if (peek().kind == Token::Kind::end) break;
      tree.statements.push_back(statement());
    }
    return tree;
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  void skip_newlines() {
    while (peek().kind == Token::Kind::newline) next();
  }

  [[noreturn]] void fail(const Token& t, const std::string& expected) const {
    std::string found = t.kind == Token::Kind::end       ? "end of input"
                        : t.kind == Token::Kind::newline ? "end of line"
                                                         : "'" + t.text + "'";
    throw DslError(ErrorKind::syntax, t.span, "expected " + expected + ", found " + found);
  }

  bool at_word(const char* w) const { return peek().kind == Token::Kind::word && peek().text == w; }
  bool at_punct(const char* p) const { return peek().kind == Token::Kind::punct && peek().text == p; }
  bool at_line_end() const { return peek().kind == Token::Kind::newline || peek().kind == Token::Kind::end; }

  const Token& keyword(const char* w) {
    if (!at_word(w)) fail(peek(), std::string("'") + w + "'");
    return next();
  }
  const Token& punct(const char* p) {
    if (!at_punct(p)) fail(peek(), std::string("'") + p + "'");
    return next();
  }
  const Token& word(const std::string& what) {
    if (peek().kind != Token::Kind::word) fail(peek(), what);
    return next();
  }
  const Token& name(const std::string& what) {
    if (peek().kind != Token::Kind::word || !is_identifier(peek().text)) fail(peek(), what);
    return next();
  }
  void end_of_line() {
    if (!at_line_end()) fail(peek(), "end of line");
    if (peek().kind == Token::Kind::newline) next();
  }

  int integer(const std::string& what, bool allow_negative) {
    Span start = peek().span;
    bool negative = false;
    if (allow_negative && at_punct("-")) {
      next();
      negative = true;
    }
    if (peek().kind != Token::Kind::word || !is_number(peek().text)) fail(peek(), what);
    const Token& t = next();
    if (t.text.size() > 6) throw DslError(ErrorKind::syntax, join(start, t.span), what + " is out of range");
    int v = std::stoi(t.text);
    return negative ? -v : v;
  }

  // n or n/d, unsigned
  mpq_class magnitude() {
    const Token& num = next();
    mpq_class q(num.text);
    if (at_punct("/")) {
      next();
      if (peek().kind != Token::Kind::word || !is_number(peek().text)) fail(peek(), "a denominator");
      const Token& den = next();
      mpz_class d(den.text);
      if (d == 0) throw DslError(ErrorKind::syntax, den.span, "zero denominator");
      q = mpq_class(mpz_class(num.text), d);
      q.canonicalize();
    }
    return q;
  }

  mpq_class scalar() {
    bool negative = false;
    if (at_punct("-")) {
      next();
      negative = true;
    }
    if (peek().kind != Token::Kind::word || !is_number(peek().text)) fail(peek(), "a number");
    mpq_class q = magnitude();
    return negative ? mpq_class(-q) : q;
  }

  std::vector<Term> combination() {
    std::vector<Term> terms;
    if (peek().kind == Token::Kind::word && peek().text == "0" &&
        (peek(1).kind == Token::Kind::newline || peek(1).kind == Token::Kind::end)) {
      next();
      return terms;
    }
    bool first = true;
    while (true) {
      int sign = 1;
      if (at_punct("+") || at_punct("-")) {
        sign = next().text == "-" ? -1 : 1;
      } else if (!first) {
        fail(peek(), "'+', '-' or end of line");
      }
      first = false;
      if (peek().kind != Token::Kind::word) fail(peek(), "a term");
      mpq_class coefficient = 1;
      std::string label;
      if (is_number(peek().text) && (peek(1).kind == Token::Kind::word || (peek(1).kind == Token::Kind::punct &&
                                                                          peek(1).text == "/"))) {
        coefficient = magnitude();
        label = word("a basis label").text;
      } else {
        label = next().text;
      }
      terms.push_back({sign < 0 ? mpq_class(-coefficient) : coefficient, label});
      if (at_line_end()) return terms;
    }
  }

  Statement statement() {
    const Token& head = peek();
    if (head.kind != Token::Kind::word) fail(head, "a statement");
    Statement s;
    s.span = head.span;
    if (head.text == "field") {
      next();
      if (at_word("Q")) {
        s.span = join(s.span, next().span);
        s.node = FieldStmt{Field::rationals()};
      } else if (at_word("Fp")) {
        next();
        if (at_punct(":")) next();
        Span ps = peek().span;
        int p = integer("a prime", false);
        if (!is_prime(static_cast<std::uint64_t>(p)))
          throw DslError(ErrorKind::invalid, ps, std::to_string(p) + " is not a prime");
        s.span = join(s.span, ps);
        s.node = FieldStmt{Field::prime(static_cast<std::uint32_t>(p))};
      } else {
        fail(peek(), "'Q' or 'Fp'");
      }
      end_of_line();
    } else if (head.text == "algebra") {
      next();
      const Token& n = name("an algebra name");
      s.name_span = n.span;
      AlgebraStmt a{n.text, std::nullopt, {}};
      punct("=");
      if (at_word("preset")) {
        next();
        const Token& k = word("a preset kind");
        PresetSpec spec;
        try {
          spec.kind = parse_preset_kind(k.text);
        } catch (const std::invalid_argument&) {
          throw DslError(ErrorKind::syntax, k.span,
                         "unknown preset '" + k.text + "' (expected tensor, sym, exterior, truncpoly or squarezero)");
        }
        punct("(");
        spec.dim = integer("a dimension", false);
        spec.degree = 0;
        if (at_punct(",")) {
          next();
          spec.degree = integer("a degree", true);
        }
        s.span = join(s.span, punct(")").span);
        if (at_word("maxweight")) {
          next();
          Span ws = peek().span;
          spec.max_weight = integer("a weight bound", false);
          s.span = join(s.span, ws);
        }
        a.preset = spec;
        end_of_line();
      } else if (at_word("table")) {
        next();
        s.span = join(s.span, punct("{").span);
        end_of_line();
        while (true) {
          skip_newlines();
          if (at_punct("}")) {
            next();
            break;
          }
          if (peek().kind == Token::Kind::end) fail(peek(), "'}' closing the table");
          a.table.push_back(table_line());
        }
        end_of_line();
      } else {
        fail(peek(), "'preset' or 'table'");
      }
      s.node = std::move(a);
    } else if (head.text == "module") {
      next();
      const Token& n = name("a module name");
      s.name_span = n.span;
      punct("=");
      bool regular;
      if (at_word("regular") || at_word("aug")) {
        regular = next().text == "regular";
      } else {
        fail(peek(), "'regular' or 'aug'");
      }
      bool left;
      if (at_word("left") || at_word("right")) {
        left = next().text == "left";
      } else {
        fail(peek(), "'left' or 'right'");
      }
      const Token& alg = name("an algebra name");
      s.reference_spans.push_back(alg.span);
      s.span = join(s.span, alg.span);
      ModuleKind kind = regular ? (left ? ModuleKind::regular_left : ModuleKind::regular_right)
                                : (left ? ModuleKind::augmentation_left : ModuleKind::augmentation_right);
      s.node = ModuleStmt{n.text, kind, alg.text};
      end_of_line();
    } else if (head.text == "manifold") {
      next();
      const Token& n = name("a manifold name");
      s.name_span = n.span;
      punct("=");
      ManifoldStmt m;
      m.name = n.text;
      if (at_word("circle")) {
        next();
        const Token& a = name("an algebra name");
        s.reference_spans.push_back(a.span);
        s.span = join(s.span, a.span);
        m.kind = ManifoldStmt::Kind::circle;
        m.algebra = a.text;
      } else if (at_word("interval")) {
        next();
        const Token& a = name("an algebra name");
        s.reference_spans.push_back(a.span);
        keyword("left");
        punct("=");
        const Token& l = name("a module name");
        s.reference_spans.push_back(l.span);
        keyword("right");
        punct("=");
        const Token& r = name("a module name");
        s.reference_spans.push_back(r.span);
        s.span = join(s.span, r.span);
        m.kind = ManifoldStmt::Kind::interval;
        m.algebra = a.text;
        m.left = l.text;
        m.right = r.text;
      } else if (at_word("disjoint")) {
        next();
        m.kind = ManifoldStmt::Kind::disjoint;
        punct("(");
        while (true) {
          const Token& p = name("a manifold name");
          s.reference_spans.push_back(p.span);
          m.parts.push_back(p.text);
          if (at_punct(",")) {
            next();
            continue;
          }
          s.span = join(s.span, punct(")").span);
          break;
        }
      } else {
        fail(peek(), "'circle', 'interval' or 'disjoint'");
      }
      s.node = std::move(m);
      end_of_line();
    } else if (head.text == "compute") {
      next();
      keyword("facthom");
      const Token& m = name("a manifold name");
      s.name_span = m.span;
      s.reference_spans.push_back(m.span);
      keyword("maxdeg");
      Span ds = peek().span;
      ComputeStmt c{m.text, integer("a degree bound", false), false};
      s.span = join(s.span, ds);
      if (at_word("json")) {
        s.span = join(s.span, next().span);
        c.json = true;
      }
      s.node = c;
      end_of_line();
    } else if (head.text == "check") {
      next();
      keyword("excision");
      const Token& a = name("an algebra name");
      s.name_span = a.span;
      s.reference_spans.push_back(a.span);
      keyword("maxdeg");
      Span ds = peek().span;
      s.node = CheckStmt{a.text, integer("a degree bound", false)};
      s.span = join(s.span, ds);
      end_of_line();
    } else {
      fail(head, "a statement (field, algebra, module, manifold, compute or check)");
    }
    return s;
  }

  TableLine table_line() {
    const Token& head = word("a table line (basis, unit, mult, aug, maxweight or commutative)");
    TableLine l;
    l.span = head.span;
    if (head.text == "basis") {
      l.kind = TableLine::Kind::basis;
      l.label = word("a basis label").text;
      keyword("deg");
      l.degree = integer("a degree", true);
      if (at_word("weight")) {
        next();
        l.weight = integer("a weight", false);
      }
    } else if (head.text == "unit") {
      l.kind = TableLine::Kind::unit;
      l.label = word("a basis label").text;
    } else if (head.text == "mult") {
      l.kind = TableLine::Kind::mult;
      l.label = word("a basis label").text;
      punct("*");
      l.right = word("a basis label").text;
      punct("=");
      l.terms = combination();
    } else if (head.text == "aug") {
      l.kind = TableLine::Kind::aug;
      l.label = word("a basis label").text;
      punct("->");
      l.scalar = scalar();
    } else if (head.text == "maxweight") {
      l.kind = TableLine::Kind::maxweight;
      l.value = integer("a weight bound", false);
    } else if (head.text == "commutative") {
      l.kind = TableLine::Kind::commutative;
    } else {
      fail(head, "a table line (basis, unit, mult, aug, maxweight or commutative)");
    }
    l.span = join(l.span, toks_[pos_ - 1].span);
    end_of_line();
    return l;
  }
};

std::string rational_text(const mpq_class& q) { return q.get_str(); }

std::string combination_text(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    mpq_class c = terms[i].coefficient;
    bool negative = c < 0;
    if (negative) c = -c;
    if (i == 0) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (c != 1) s += rational_text(c) + " ";
    s += terms[i].label;
  }
  return s;
}

std::string module_kind_text(ModuleKind k) {
  switch (k) {
    case ModuleKind::regular_left: return "regular left";
    case ModuleKind::regular_right: return "regular right";
    case ModuleKind::augmentation_left: return "aug left";
    case ModuleKind::augmentation_right: return "aug right";
  }
  return "";
}

std::string table_line_text(const TableLine& l) {
  switch (l.kind) {
    case TableLine::Kind::basis:
      return "basis " + l.label + " deg " + std::to_string(l.degree) +
             (l.weight ? " weight " + std::to_string(*l.weight) : "");
    case TableLine::Kind::unit: return "unit " + l.label;
    case TableLine::Kind::mult: return "mult " + l.label + "*" + l.right + " = " + combination_text(l.terms);
    case TableLine::Kind::aug: return "aug " + l.label + " -> " + rational_text(l.scalar);
    case TableLine::Kind::maxweight: return "maxweight " + std::to_string(l.value);
    case TableLine::Kind::commutative: return "commutative";
  }
  return "";
}

struct Printer {
  std::ostringstream out;

  void operator()(const FieldStmt& f) {
    out << "field " << (f.field.is_rational() ? "Q" : "Fp " + std::to_string(f.field.modulus())) << "\n";
  }
  void operator()(const AlgebraStmt& a) {
    out << "algebra " << a.name << " = ";
    if (a.preset) {
      out << "preset " << describe(*a.preset) << "\n";
      return;
    }
    out << "table {\n";
    for (const auto& l : a.table) out << "  " << table_line_text(l) << "\n";
    out << "}\n";
  }
  void operator()(const ModuleStmt& m) {
    out << "module " << m.name << " = " << module_kind_text(m.kind) << " " << m.algebra << "\n";
  }
  void operator()(const ManifoldStmt& m) {
    out << "manifold " << m.name << " = ";
    switch (m.kind) {
      case ManifoldStmt::Kind::circle: out << "circle " << m.algebra; break;
      case ManifoldStmt::Kind::interval:
        out << "interval " << m.algebra << " left=" << m.left << " right=" << m.right;
        break;
      case ManifoldStmt::Kind::disjoint:
        out << "disjoint(";
        for (std::size_t i = 0; i < m.parts.size(); ++i) out << (i ? ", " : "") << m.parts[i];
        out << ")";
        break;
    }
    out << "\n";
  }
  void operator()(const ComputeStmt& c) {
    out << "compute facthom " << c.manifold << " maxdeg " << c.max_deg << (c.json ? " json" : "") << "\n";
  }
  void operator()(const CheckStmt& c) { out << "check excision " << c.algebra << " maxdeg " << c.max_deg << "\n"; }
};

bool same_statement(const Statement& x, const Statement& y) {
  if (x.node.index() != y.node.index()) return false;
  return std::visit(
      [&](const auto& a) -> bool {
        using T = std::decay_t<decltype(a)>;
        const T& b = std::get<T>(y.node);
        if constexpr (std::is_same_v<T, FieldStmt>) {
          return a.field == b.field;
        } else if constexpr (std::is_same_v<T, AlgebraStmt>) {
          if (a.name != b.name || a.preset.has_value() != b.preset.has_value() || a.table != b.table) return false;
          return !a.preset || describe(*a.preset) == describe(*b.preset);
        } else if constexpr (std::is_same_v<T, ModuleStmt>) {
          return a.name == b.name && a.kind == b.kind && a.algebra == b.algebra;
        } else if constexpr (std::is_same_v<T, ManifoldStmt>) {
          return a.name == b.name && a.kind == b.kind && a.algebra == b.algebra && a.left == b.left &&
                 a.right == b.right && a.parts == b.parts;
        } else if constexpr (std::is_same_v<T, ComputeStmt>) {
          return a.manifold == b.manifold && a.max_deg == b.max_deg && a.json == b.json;
        } else {
          return a.algebra == b.algebra && a.max_deg == b.max_deg;
        }
      },
      x.node);
}

// ---------------------------------------------------------------- resolver

class Resolver {
public:
  Program run(const SyntaxTree& tree) {
    for (const auto& s : tree.statements) std::visit([&](const auto& node) { handle(s, node); }, s.node);
    return std::move(program_);
  }

private:
  Program program_;
  bool field_seen_ = false;
  std::map<std::string, std::string> kinds_;  // name -> "algebra" | "module" | "manifold"

  Declarations& decls() { return program_.declarations; }

  void declare(const std::string& name, const std::string& kind, const Span& span) {
    auto [it, fresh] = kinds_.emplace(name, kind);
    if (!fresh)
      throw DslError(ErrorKind::duplicate, span, "'" + name + "' is already declared as " + article(it->second));
    decls().order.push_back(name);
  }

  static std::string article(const std::string& kind) { return (kind == "algebra" ? "an " : "a ") + kind; }

  void expect(const std::string& name, const std::string& kind, const Span& span) {
    auto it = kinds_.find(name);
    if (it == kinds_.end()) throw DslError(ErrorKind::unknown_identifier, span, "'" + name + "' is not declared");
    if (it->second != kind)
      throw DslError(ErrorKind::type_mismatch, span,
                     "'" + name + "' is " + article(it->second) + ", expected " + article(kind));
  }

  void handle(const Statement& s, const FieldStmt& f) {
    if (field_seen_) throw DslError(ErrorKind::duplicate, s.span, "the field is already set");
    if (!kinds_.empty()) throw DslError(ErrorKind::invalid, s.span, "the field must be set before any declaration");
    field_seen_ = true;
    decls().field = f.field;
  }

  FieldScalar scalar(const mpq_class& q, const Span& span) const {
    try {
      return FieldScalar(decls_field(), q);
    } catch (const std::domain_error& e) {
      throw DslError(ErrorKind::invalid, span, e.what());
    }
  }
  const Field& decls_field() const { return program_.declarations.field; }

  GradedAlgebra table_algebra(const AlgebraStmt& a, const Span& span) {
    RawAlgebraTable t;
    t.field = decls_field();
    std::set<std::string> labels;
    for (const auto& l : a.table)
      if (l.kind == TableLine::Kind::basis) {
        if (!labels.insert(l.label).second)
          throw DslError(ErrorKind::duplicate, l.span, "basis element '" + l.label + "' is declared twice");
        t.basis.push_back({l.label, l.degree, l.weight});
      }
    auto known = [&](const std::string& label, const Span& where) {
      if (!labels.count(label))
        throw DslError(ErrorKind::unknown_identifier, where, "'" + label + "' is not a basis element of " + a.name);
    };
    std::vector<std::pair<std::string, FieldScalar>> aug;
    bool has_aug = false;
    for (const auto& l : a.table) {
      switch (l.kind) {
        case TableLine::Kind::basis: break;
        case TableLine::Kind::unit:
          known(l.label, l.span);
          if (!t.unit.empty()) throw DslError(ErrorKind::duplicate, l.span, "the unit is already declared");
          t.unit = l.label;
          break;
        case TableLine::Kind::mult: {
          known(l.label, l.span);
          known(l.right, l.span);
          RawAlgebraTable::Product p{l.label, l.right, {}};
          for (const auto& term : l.terms) {
            known(term.label, l.span);
            p.result.emplace_back(term.label, scalar(term.coefficient, l.span));
          }
          t.products.push_back(std::move(p));
          break;
        }
        case TableLine::Kind::aug:
          known(l.label, l.span);
          has_aug = true;
          aug.emplace_back(l.label, scalar(l.scalar, l.span));
          break;
        case TableLine::Kind::maxweight: t.max_weight = l.value; break;
        case TableLine::Kind::commutative: t.commutative = true; break;
      }
    }
    if (t.unit.empty()) {
      if (!labels.count("1")) throw DslError(ErrorKind::invalid, span, "table " + a.name + " declares no unit");
      t.unit = "1";
    }
    if (has_aug) t.augmentation = std::move(aug);
    return make_algebra(t);
  }

  void handle(const Statement& s, const AlgebraStmt& a) {
    declare(a.name, "algebra", s.name_span);
    try {
      GradedAlgebra alg = a.preset ? preset(decls_field(), *a.preset) : table_algebra(a, s.span);
      decls().algebras.emplace(a.name, std::make_shared<const GradedAlgebra>(std::move(alg)));
    } catch (const DslError&) {
      throw;
    } catch (const std::exception& e) {
      throw DslError(ErrorKind::invalid, s.span, "algebra " + a.name + ": " + e.what());
    }
  }

  void handle(const Statement& s, const ModuleStmt& m) {
    expect(m.algebra, "algebra", s.reference_spans.at(0));
    declare(m.name, "module", s.name_span);
    try {
      decls().modules.emplace(m.name,
                              std::make_shared<const SidedModule>(module_from(m.kind, decls().algebras.at(m.algebra))));
    } catch (const std::exception& e) {
      throw DslError(ErrorKind::invalid, s.span, "module " + m.name + ": " + e.what());
    }
  }

  void handle(const Statement& s, const ManifoldStmt& m) {
    ManifoldExpr expr;
    switch (m.kind) {
      case ManifoldStmt::Kind::circle:
        expect(m.algebra, "algebra", s.reference_spans.at(0));
        expr = ManifoldExpr::circle(m.algebra, decls().algebras.at(m.algebra));
        break;
      case ManifoldStmt::Kind::interval: {
        expect(m.algebra, "algebra", s.reference_spans.at(0));
        expect(m.left, "module", s.reference_spans.at(1));
        expect(m.right, "module", s.reference_spans.at(2));
        const ModulePtr& left = decls().modules.at(m.left);
        const ModulePtr& right = decls().modules.at(m.right);
        const AlgebraPtr& a = decls().algebras.at(m.algebra);
        auto check = [&](const ModulePtr& mod, const std::string& name, Side side, const Span& span) {
          if (mod->algebra() != a)
            throw DslError(ErrorKind::type_mismatch, span,
                           "module " + name + " is not a module over " + m.algebra);
          if (mod->side() != side)
            throw DslError(ErrorKind::type_mismatch, span,
                           std::string("the ") + (side == Side::right ? "left" : "right") + " end needs a " +
                               (side == Side::right ? "right" : "left") + " module, but " + name + " is a " +
                               (side == Side::right ? "left" : "right") + " module");
        };
        check(left, m.left, Side::right, s.reference_spans.at(1));
        check(right, m.right, Side::left, s.reference_spans.at(2));
        expr = ManifoldExpr::interval(m.algebra, a, m.left, left, m.right, right);
        break;
      }
      case ManifoldStmt::Kind::disjoint: {
        std::vector<ManifoldExpr> parts;
        for (std::size_t i = 0; i < m.parts.size(); ++i) {
          expect(m.parts[i], "manifold", s.reference_spans.at(i));
          parts.push_back(decls().manifolds.at(m.parts[i]));
        }
        expr = ManifoldExpr::disjoint(std::move(parts));
        break;
      }
    }
    declare(m.name, "manifold", s.name_span);
    decls().manifolds.emplace(m.name, std::move(expr));
  }

  void handle(const Statement& s, const ComputeStmt& c) {
    expect(c.manifold, "manifold", s.name_span);
    Request r;
    r.kind = Request::Kind::facthom;
    r.computation = ComputationRequest{decls().manifolds.at(c.manifold), c.max_deg, decls_field(), c.json};
    r.target = c.manifold;
    r.max_deg = c.max_deg;
    r.field = decls_field();
    r.json = c.json;
    r.span = s.span;
    program_.requests.push_back(std::move(r));
  }

  void handle(const Statement& s, const CheckStmt& c) {
    expect(c.algebra, "algebra", s.name_span);
    Request r;
    r.kind = Request::Kind::excision;
    r.algebra = decls().algebras.at(c.algebra);
    r.target = c.algebra;
    r.max_deg = c.max_deg;
    r.field = decls_field();
    r.span = s.span;
    program_.requests.push_back(std::move(r));
  }
};

}  // namespace

SyntaxTree parse_syntax(const std::string& source) { return Parser(tokenize(source)).parse(); }

std::string pretty_print(const SyntaxTree& tree) {
  Printer p;
  for (const auto& s : tree.statements) std::visit(p, s.node);
  return p.out.str();
}

bool same_program(const SyntaxTree& a, const SyntaxTree& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (std::size_t i = 0; i < a.statements.size(); ++i)
    if (!same_statement(a.statements[i], b.statements[i])) return false;
  return true;
}

std::string Request::echo() const {
  if (kind == Kind::facthom)
    return "compute facthom " + target + " maxdeg " + std::to_string(max_deg) + (json ? " json" : "");
  return "check excision " + target + " maxdeg " + std::to_string(max_deg);
}

Program resolve(const SyntaxTree& tree) { return Resolver().run(tree); }

Program parse_program(const std::string& source) { return resolve(parse_syntax(source)); }

}  // namespace facthom::dsl
