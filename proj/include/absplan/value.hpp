#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

namespace absplan {

using Symbol = std::string;

// Immutable sorted-unique symbol collection; doubles as the representation of
// set values, finite domains and set universes.
class SymbolSet {
 public:
  SymbolSet() = default;
  explicit SymbolSet(std::vector<Symbol> elems);
  SymbolSet(std::initializer_list<Symbol> elems);

  bool contains(const Symbol& s) const;
  bool subset_of(const SymbolSet& other) const;
  bool disjoint_with(const SymbolSet& other) const;
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }

  SymbolSet with(const Symbol& s) const;
  SymbolSet without(const Symbol& s) const;
  SymbolSet set_union(const SymbolSet& other) const;
  SymbolSet set_intersection(const SymbolSet& other) const;
  SymbolSet set_difference(const SymbolSet& other) const;

  const std::vector<Symbol>& elements() const { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool operator==(const SymbolSet&) const = default;

 private:
  std::vector<Symbol> elems_;
};

// Runtime value: bool, exact integer, double, finite-domain symbol, or a
// finite set of symbols. Hashable and comparable so states can key hash maps.
class Value {
 public:
  enum class Kind { Bool, Int, Real, Sym, Set };

  static Value boolean(bool b) { return Value(b); }
  static Value integer(std::int64_t i) { return Value(i); }
  static Value real(double d);
  static Value symbol(Symbol s) { return Value(std::move(s)); }
  static Value set(SymbolSet s) { return Value(std::move(s)); }

  Kind kind() const { return static_cast<Kind>(v_.index()); }

  bool as_bool() const { return std::get<bool>(v_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
  double as_real() const { return std::get<double>(v_); }
  const Symbol& as_symbol() const { return std::get<Symbol>(v_); }
  const SymbolSet& as_set() const { return std::get<SymbolSet>(v_); }

  bool is_numeric() const { return kind() == Kind::Int || kind() == Kind::Real; }
  // Numeric value widened to double (exact for fixture-scale integers).
  double numeric() const;

  std::string to_string() const;
  std::size_t hash() const;

  bool operator==(const Value&) const = default;

 private:
  explicit Value(bool b) : v_(b) {}
  explicit Value(std::int64_t i) : v_(i) {}
  explicit Value(double d) : v_(d) {}
  explicit Value(Symbol s) : v_(std::move(s)) {}
  explicit Value(SymbolSet s) : v_(std::move(s)) {}

  std::variant<bool, std::int64_t, double, Symbol, SymbolSet> v_;
};

std::size_t hash_combine(std::size_t seed, std::size_t h);

}  // namespace absplan
