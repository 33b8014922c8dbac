#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absplan/diagnostics.hpp"
#include "absplan/value.hpp"

namespace absplan {

// ---------------------------------------------------------------------------
// Variable types

struct VarType {
  enum class Kind { Bool, Finite, Int, Real, SetOf };

  Kind kind = Kind::Bool;
  // Finite domain or set universe; ordered, non-empty, duplicate-free.
  std::vector<Symbol> symbols;

  static VarType boolean() { return {Kind::Bool, {}}; }
  static VarType integer() { return {Kind::Int, {}}; }
  static VarType real() { return {Kind::Real, {}}; }
  static VarType finite(std::vector<Symbol> domain) { return {Kind::Finite, std::move(domain)}; }
  static VarType set_of(std::vector<Symbol> universe) { return {Kind::SetOf, std::move(universe)}; }

  bool is_numeric() const { return kind == Kind::Int || kind == Kind::Real; }
  // True iff v is a well-typed value for this variable (symbol in domain,
  // set within universe, exact kind match; Int never admits Real values).
  bool admits(const Value& v) const;

  std::string to_string() const;
  bool operator==(const VarType&) const = default;
};

// ---------------------------------------------------------------------------
// Expressions

// Static expression type. Sym/Set do not carry their domain; domain
// compatibility is checked where values flow into variables.
enum class TypeKind { Bool, Int, Real, Sym, Set };

std::string to_string(TypeKind t);

enum class Fn {
  And, Or, Not,
  Eq, Ne, Lt, Le, Gt, Ge,
  Add, Sub, Mul,
  AddElem, RemoveElem, Member, Cardinality, Subset,
};

const char* fn_name(Fn fn);                       // concrete-syntax spelling
std::optional<Fn> fn_from_name(const std::string& name);

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { VarRef, ConstRef, Literal, Apply };

  Kind kind;
  TypeKind type;
  SourceSpan span;

  // VarRef / ConstRef
  int index = -1;
  std::string name;

  // Literal
  Value value = Value::boolean(false);

  // Apply
  Fn fn = Fn::And;
  std::vector<Expr> args;
};

Expr make_var_ref(int index, std::string name, TypeKind type, SourceSpan span = {});
Expr make_const_ref(int index, std::string name, TypeKind type, SourceSpan span = {});
Expr make_literal(Value v, SourceSpan span = {});
Expr make_apply(Fn fn, std::vector<Expr> args, TypeKind type, SourceSpan span = {});

bool structurally_equal(const Expr& a, const Expr& b);
std::string expr_to_string(const Expr& e);
// Appends the indices of all variables referenced anywhere in e.
void collect_variables(const Expr& e, std::vector<int>& out);

// ---------------------------------------------------------------------------
// Actions and problems

struct Assignment {
  int var = -1;
  std::string var_name;
  Expr value;
  SourceSpan span;
};

struct Action {
  std::string name;
  std::vector<Expr> pre;          // conjunction of atomic boolean predicates
  std::vector<Assignment> eff;    // non-conflicting parallel assignments
  SourceSpan span;
};

struct VarDecl {
  std::string name;
  VarType type;
  SourceSpan span;
};

struct ConstDecl {
  std::string name;
  VarType type;
  Value value = Value::boolean(false);
  SourceSpan span;
};

// Total assignment of values to the problem's variables, by declaration index.
struct ConcreteState {
  std::vector<Value> values;

  bool operator==(const ConcreteState&) const = default;
  std::size_t hash() const;
};

struct ConcreteStateHash {
  std::size_t operator()(const ConcreteState& s) const { return s.hash(); }
};

struct Problem {
  std::string domain_name;
  std::string problem_name;
  std::vector<VarDecl> variables;
  std::vector<ConstDecl> constants;
  std::vector<Action> actions;
  ConcreteState init;
  std::vector<Expr> goal;
  // Deduplicated atomic predicates from all preconditions and the goal, in
  // source order, canonicalized by fold_literals.
  std::vector<Expr> predicate_pool;

  int var_index(const std::string& name) const;    // -1 when absent
  int const_index(const std::string& name) const;  // -1 when absent
  int action_index(const std::string& name) const; // -1 when absent
  // Index of a predicate in the pool (compared after folding); -1 when absent.
  int predicate_index(const Expr& predicate) const;

  std::string var_name(int index) const { return variables[index].name; }
};

// Folds Apply nodes whose subtrees are all literals, and resolves ConstRef
// nodes to their values. Canonical form for predicate identity.
Expr fold_literals(const Expr& e, const Problem& problem);

// Rebuilds predicate_pool from the problem's preconditions and goal.
void build_predicate_pool(Problem& problem);

// Indices of pooled predicates that mention at least one variable assigned by
// the action's effect. Superset-correct: never omits an affected predicate.
std::vector<int> affected_predicates(const Problem& problem, const Action& action);

struct TypecheckResult {
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

// Checks every model invariant, reporting all violations rather than the
// first: declaration well-formedness, expression typing, non-conflicting
// effects, init totality/typing, goal typing, and pool consistency.
TypecheckResult typecheck(const Problem& problem);

}  // namespace absplan
