#pragma once

#include "facthom/manifold.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace facthom::dsl {

/// 1-based line and column of the first character, length in characters.
struct Span {
  int line = 1;
  int column = 1;
  int length = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

enum class ErrorKind { syntax, unknown_identifier, duplicate, type_mismatch, invalid };

std::string error_kind_name(ErrorKind kind);

class DslError : public std::runtime_error {
public:
  DslError(ErrorKind kind, Span span, const std::string& message);

  ErrorKind kind() const { return kind_; }
  const Span& span() const { return span_; }
  /// The message without the location prefix.
  const std::string& detail() const { return detail_; }

private:
  ErrorKind kind_;
  Span span_;
  std::string detail_;
};

// ---------------------------------------------------------------- syntax tree

struct Term {
  mpq_class coefficient;
  std::string label;

  friend bool operator==(const Term&, const Term&) = default;
};

/// One line of a structure-constant table.
struct TableLine {
  enum class Kind { basis, unit, mult, aug, maxweight, commutative };
  Kind kind = Kind::basis;
  std::string label;  // basis, unit, aug, left factor of mult
  std::string right;  // right factor of mult
  int degree = 0;
  std::optional<int> weight;
  std::vector<Term> terms;  // mult
  mpq_class scalar;         // aug
  int value = 0;            // maxweight
  Span span;

  /// Spans are not compared.
  friend bool operator==(const TableLine& a, const TableLine& b);
};

struct FieldStmt {
  Field field;
};

struct AlgebraStmt {
  std::string name;
  std::optional<PresetSpec> preset;
  std::vector<TableLine> table;
};

struct ModuleStmt {
  std::string name;
  ModuleKind kind;
  std::string algebra;
};

struct ManifoldStmt {
  enum class Kind { circle, interval, disjoint };
  std::string name;
  Kind kind = Kind::circle;
  std::string algebra;
  std::string left;
  std::string right;
  std::vector<std::string> parts;
};

struct ComputeStmt {
  std::string manifold;
  int max_deg = 0;
  bool json = false;
};

struct CheckStmt {
  std::string algebra;
  int max_deg = 0;
};

struct Statement {
  std::variant<FieldStmt, AlgebraStmt, ModuleStmt, ManifoldStmt, ComputeStmt, CheckStmt> node;
  Span span;       // the whole first line
  Span name_span;  // the declared or referenced name
  /// Spans of the identifiers the statement refers to, in source order.
  std::vector<Span> reference_spans;
};

struct SyntaxTree {
  std::vector<Statement> statements;
};

/// Tokenizes and parses without resolving names.
SyntaxTree parse_syntax(const std::string& source);

/// Canonical text: one statement per line, single spaces, tables indented by
/// two spaces, comments and blank lines dropped.
std::string pretty_print(const SyntaxTree& tree);

/// Structural equality, ignoring spans.
bool same_program(const SyntaxTree& a, const SyntaxTree& b);

// ------------------------------------------------------------- resolved form

struct Declarations {
  Field field;
  std::map<std::string, AlgebraPtr> algebras;
  std::map<std::string, ModulePtr> modules;
  std::map<std::string, ManifoldExpr> manifolds;
  /// Declaration order, for listing.
  std::vector<std::string> order;
};

struct Request {
  enum class Kind { facthom, excision };
  Kind kind = Kind::facthom;
  /// facthom: the manifold to evaluate. excision: unset.
  std::optional<ComputationRequest> computation;
  AlgebraPtr algebra;  // excision
  std::string target;  // the name referred to
  int max_deg = 0;
  Field field;
  bool json = false;
  Span span;

  /// "compute facthom M maxdeg 4" style echo of the request.
  std::string echo() const;
};

struct Program {
  Declarations declarations;
  std::vector<Request> requests;
};

/// Resolves names in order: a name must be declared before use, and each
/// name is declared once across algebras, modules and manifolds. The field
/// line, if any, comes before the first algebra.
Program resolve(const SyntaxTree& tree);

/// parse_syntax followed by resolve.
Program parse_program(const std::string& source);

}  // namespace facthom::dsl
