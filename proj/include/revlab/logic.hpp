#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace revlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed formula text.  position is the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownAtomError : public ParseError {
 public:
  UnknownAtomError(const std::string& atom, std::size_t position)
      : ParseError("unknown atom '" + atom + "'", position), atom_(atom) {}
  const std::string& atom() const { return atom_; }

 private:
  std::string atom_;
};

// Operation applied outside its domain: revision by false, conditioning on a
// formula ranked impossible, an observation contradicting prior knowledge, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

// Scenario or configuration file violates the expected schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// A world is a truth assignment over the vocabulary, encoded as an integer:
// atom i (0-based, in vocabulary order) occupies bit (n-1-i), so numeric order
// of ids equals lexicographic order of the corresponding bitstrings.
using WorldId = std::uint32_t;

class Vocabulary {
 public:
  explicit Vocabulary(std::vector<std::string> atoms);

  std::size_t size() const { return atoms_.size(); }
  WorldId world_count() const { return WorldId{1} << atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  // Bit of atom i within a world id.
  std::uint32_t atom_bit(std::size_t index) const {
    return std::uint32_t{1} << (atoms_.size() - 1 - index);
  }
  bool atom_true_in(WorldId w, std::size_t index) const {
    return (w & atom_bit(index)) != 0;
  }
  std::string world_name(WorldId w) const;
  std::optional<WorldId> world_from_name(std::string_view name) const;

  bool operator==(const Vocabulary&) const = default;

 private:
  std::vector<std::string> atoms_;
};

// Set of worlds over a universe of 2^n worlds, n = vocabulary size.
class WorldSet {
 public:
  WorldSet() : universe_(0) {}
  explicit WorldSet(WorldId universe);
  static WorldSet none(WorldId universe) { return WorldSet(universe); }
  static WorldSet all(WorldId universe);

  WorldId universe() const { return universe_; }
  bool contains(WorldId w) const {
    return (bits_[w >> 6] >> (w & 63)) & 1u;
  }
  void insert(WorldId w) { bits_[w >> 6] |= std::uint64_t{1} << (w & 63); }
  void erase(WorldId w) { bits_[w >> 6] &= ~(std::uint64_t{1} << (w & 63)); }

  std::size_t count() const;
  bool empty() const;
  bool full() const { return count() == universe_; }

  WorldSet intersect(const WorldSet& o) const;
  WorldSet unite(const WorldSet& o) const;
  WorldSet complement() const;
  bool subset_of(const WorldSet& o) const;
  bool intersects(const WorldSet& o) const;

  bool operator==(const WorldSet&) const = default;
  // Lexicographic on the universe then the bit blocks; usable as a map key.
  bool operator<(const WorldSet& o) const;

 private:
  WorldId universe_;
  std::vector<std::uint64_t> bits_;
};

// Immutable propositional formula over a fixed vocabulary.  Atoms are
// resolved at construction time, so evaluation needs only the world id.
class Formula {
 public:
  enum class Kind : std::uint8_t { False, True, Atom, Not, And, Or, Implies, Iff };

  static Formula constant(bool value);
  static Formula atom(std::string name, std::uint32_t bit);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);

  Kind kind() const { return node_->kind; }
  const std::string& atom_name() const { return node_->name; }
  std::uint32_t atom_bit() const { return node_->bit; }
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }

 private:
  struct Node {
    Kind kind;
    std::uint32_t bit = 0;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Grammar: atoms, `true`/`false` (case-insensitive), `!`, `&`, `|`, `->`,
// `<->`, parentheses.  Precedence ! > & > | > -> > <->, with -> right- and
// <-> left-associative.  Atoms must belong to the vocabulary.
Formula parse_formula(std::string_view text, const Vocabulary& vocab);

bool eval(const Formula& f, WorldId w);
WorldSet models(const Formula& f, const Vocabulary& vocab);

// Structural rendering with minimal parentheses (reparses to the same tree).
std::string formula_to_string(const Formula& f);

// Canonical full DNF of a model set: one parenthesized minterm per world in
// lexicographic order joined by " | ", or the constants for the extremes.
std::string dnf_string(const WorldSet& ws, const Vocabulary& vocab);
Formula dnf_formula(const WorldSet& ws, const Vocabulary& vocab);

// A deductively closed theory, represented extensionally by its models.
// Empty model set = the inconsistent belief set (contains every formula).
struct BeliefSet {
  WorldSet models;

  bool operator==(const BeliefSet&) const = default;
  bool operator<(const BeliefSet& o) const { return models < o.models; }
};

BeliefSet tautology_belief_set(const Vocabulary& vocab);
BeliefSet inconsistent_belief_set(const Vocabulary& vocab);

bool contains(const BeliefSet& k, const Formula& f, const Vocabulary& vocab);
BeliefSet expand(const BeliefSet& k, const Formula& f, const Vocabulary& vocab);
bool consistent(const BeliefSet& k);

std::string belief_set_to_string(const BeliefSet& k, const Vocabulary& vocab);

// One canonical representative (full DNF) per logical-equivalence class,
// ordered by the model-set bitmask; count is 2^(2^n).  Requires |vocab| <= 4.
std::vector<Formula> enumerate_formula_classes(const Vocabulary& vocab);

}  // namespace revlab
