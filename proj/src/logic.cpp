#include "revlab/logic.hpp"

#include <bit>
#include <cctype>
#include <set>

namespace revlab {

namespace {

bool valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw SchemaError("vocabulary must contain at least one atom");
  if (atoms_.size() > 16) throw SchemaError("vocabulary too large (at most 16 atoms)");
  std::set<std::string> seen;
  for (const auto& a : atoms_) {
    if (!valid_atom_name(a)) throw SchemaError("invalid atom name '" + a + "'");
    if (lowercase(a) == "true" || lowercase(a) == "false")
      throw SchemaError("atom name '" + a + "' is reserved");
    if (!seen.insert(a).second) throw SchemaError("duplicate atom '" + a + "'");
  }
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i] == name) return i;
  }
  return std::nullopt;
}

std::string Vocabulary::world_name(WorldId w) const {
  std::string s(atoms_.size(), '0');
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atom_true_in(w, i)) s[i] = '1';
  }
  return s;
}

std::optional<WorldId> Vocabulary::world_from_name(std::string_view name) const {
  if (name.size() != atoms_.size()) return std::nullopt;
  WorldId w = 0;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (name[i] == '1') {
      w |= atom_bit(i);
    } else if (name[i] != '0') {
      return std::nullopt;
    }
  }
  return w;
}

WorldSet::WorldSet(WorldId universe)
    : universe_(universe), bits_((universe + 63) / 64, 0) {}

WorldSet WorldSet::all(WorldId universe) {
  WorldSet s(universe);
  for (WorldId w = 0; w < universe; ++w) s.insert(w);
  return s;
}

std::size_t WorldSet::count() const {
  std::size_t n = 0;
  for (auto b : bits_) n += static_cast<std::size_t>(std::popcount(b));
  return n;
}

bool WorldSet::empty() const {
  for (auto b : bits_) {
    if (b != 0) return false;
  }
  return true;
}

WorldSet WorldSet::intersect(const WorldSet& o) const {
  WorldSet s(universe_);
  for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = bits_[i] & o.bits_[i];
  return s;
}

WorldSet WorldSet::unite(const WorldSet& o) const {
  WorldSet s(universe_);
  for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = bits_[i] | o.bits_[i];
  return s;
}

WorldSet WorldSet::complement() const {
  WorldSet s(universe_);
  for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = ~bits_[i];
  // Mask off bits beyond the universe.
  const WorldId tail = universe_ & 63;
  if (tail != 0 && !s.bits_.empty()) {
    s.bits_.back() &= (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

bool WorldSet::subset_of(const WorldSet& o) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & ~o.bits_[i]) return false;
  }
  return true;
}

bool WorldSet::intersects(const WorldSet& o) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] & o.bits_[i]) return true;
  }
  return false;
}

bool WorldSet::operator<(const WorldSet& o) const {
  if (universe_ != o.universe_) return universe_ < o.universe_;
  return bits_ < o.bits_;
}

Formula Formula::constant(bool value) {
  auto n = std::make_shared<Node>();
  n->kind = value ? Kind::True : Kind::False;
  return Formula(std::move(n));
}

Formula Formula::atom(std::string name, std::uint32_t bit) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(name);
  n->bit = bit;
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->lhs = f.node_;
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->lhs = lhs.node_;
  n->rhs = rhs.node_;
  return Formula(std::move(n));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->lhs = lhs.node_;
  n->rhs = rhs.node_;
  return Formula(std::move(n));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Implies;
  n->lhs = lhs.node_;
  n->rhs = rhs.node_;
  return Formula(std::move(n));
}

Formula Formula::biconditional(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Iff;
  n->lhs = lhs.node_;
  n->rhs = rhs.node_;
  return Formula(std::move(n));
}

bool eval(const Formula& f, WorldId w) {
  switch (f.kind()) {
    case Formula::Kind::False:
      return false;
    case Formula::Kind::True:
      return true;
    case Formula::Kind::Atom:
      return (w & f.atom_bit()) != 0;
    case Formula::Kind::Not:
      return !eval(f.lhs(), w);
    case Formula::Kind::And:
      return eval(f.lhs(), w) && eval(f.rhs(), w);
    case Formula::Kind::Or:
      return eval(f.lhs(), w) || eval(f.rhs(), w);
    case Formula::Kind::Implies:
      return !eval(f.lhs(), w) || eval(f.rhs(), w);
    case Formula::Kind::Iff:
      return eval(f.lhs(), w) == eval(f.rhs(), w);
  }
  return false;
}

WorldSet models(const Formula& f, const Vocabulary& vocab) {
  WorldSet out(vocab.world_count());
  for (WorldId w = 0; w < vocab.world_count(); ++w) {
    if (eval(f, w)) out.insert(w);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class TokKind { Atom, True, False, Not, And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({TokKind::LParen, "(", i});
      ++i;
    } else if (c == ')') {
      out.push_back({TokKind::RParen, ")", i});
      ++i;
    } else if (c == '!') {
      out.push_back({TokKind::Not, "!", i});
      ++i;
    } else if (c == '&') {
      out.push_back({TokKind::And, "&", i});
      ++i;
    } else if (c == '|') {
      out.push_back({TokKind::Or, "|", i});
      ++i;
    } else if (c == '-') {
      if (i + 1 < text.size() && text[i + 1] == '>') {
        out.push_back({TokKind::Implies, "->", i});
        i += 2;
      } else {
        throw ParseError("expected '->'", i);
      }
    } else if (c == '<') {
      if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
        out.push_back({TokKind::Iff, "<->", i});
        i += 3;
      } else {
        throw ParseError("expected '<->'", i);
      }
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        ++i;
      }
      std::string word(text.substr(start, i - start));
      std::string low = lowercase(word);
      if (low == "true") {
        out.push_back({TokKind::True, word, start});
      } else if (low == "false") {
        out.push_back({TokKind::False, word, start});
      } else {
        out.push_back({TokKind::Atom, word, start});
      }
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({TokKind::End, "", text.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Vocabulary& vocab)
      : tokens_(std::move(tokens)), vocab_(vocab) {}

  Formula parse() {
    Formula f = parse_iff();
    if (peek().kind != TokKind::End) {
      throw ParseError("unexpected token '" + peek().text + "'", peek().pos);
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  Formula parse_iff() {
    Formula f = parse_implies();
    while (peek().kind == TokKind::Iff) {
      take();
      f = Formula::biconditional(f, parse_implies());
    }
    return f;
  }

  Formula parse_implies() {
    Formula f = parse_or();
    if (peek().kind == TokKind::Implies) {
      take();
      return Formula::implication(f, parse_implies());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (peek().kind == TokKind::Or) {
      take();
      f = Formula::disjunction(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (peek().kind == TokKind::And) {
      take();
      f = Formula::conjunction(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    if (peek().kind == TokKind::Not) {
      take();
      return Formula::negation(parse_unary());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    Token t = take();
    switch (t.kind) {
      case TokKind::True:
        return Formula::constant(true);
      case TokKind::False:
        return Formula::constant(false);
      case TokKind::Atom: {
        auto idx = vocab_.index_of(t.text);
        if (!idx) throw UnknownAtomError(t.text, t.pos);
        return Formula::atom(t.text, vocab_.atom_bit(*idx));
      }
      case TokKind::LParen: {
        Formula f = parse_iff();
        if (peek().kind != TokKind::RParen) {
          throw ParseError("expected ')'", peek().pos);
        }
        take();
        return f;
      }
      default:
        throw ParseError("unexpected token '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> tokens_;
  const Vocabulary& vocab_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, const Vocabulary& vocab) {
  return Parser(lex(text), vocab).parse();
}

// ---------------------------------------------------------------------------
// Printing

namespace {

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff:
      return 1;
    case Formula::Kind::Implies:
      return 2;
    case Formula::Kind::Or:
      return 3;
    case Formula::Kind::And:
      return 4;
    default:
      return 5;  // atoms, constants, negation
  }
}

void print_into(const Formula& f, std::string& out, int parent_prec) {
  const int prec = precedence(f.kind());
  const bool parens = prec < parent_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::False:
      out += "false";
      break;
    case Formula::Kind::True:
      out += "true";
      break;
    case Formula::Kind::Atom:
      out += f.atom_name();
      break;
    case Formula::Kind::Not:
      out += '!';
      print_into(f.lhs(), out, 5);
      break;
    case Formula::Kind::And:
      print_into(f.lhs(), out, 4);
      out += " & ";
      print_into(f.rhs(), out, 5);
      break;
    case Formula::Kind::Or:
      print_into(f.lhs(), out, 3);
      out += " | ";
      print_into(f.rhs(), out, 4);
      break;
    case Formula::Kind::Implies:
      // Right-associative: the left child needs strictly higher precedence.
      print_into(f.lhs(), out, 3);
      out += " -> ";
      print_into(f.rhs(), out, 2);
      break;
    case Formula::Kind::Iff:
      print_into(f.lhs(), out, 1);
      out += " <-> ";
      print_into(f.rhs(), out, 2);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string formula_to_string(const Formula& f) {
  std::string out;
  print_into(f, out, 0);
  return out;
}

std::string dnf_string(const WorldSet& ws, const Vocabulary& vocab) {
  if (ws.empty()) return "false";
  if (ws.full()) return "true";
  std::string out;
  bool first_world = true;
  for (WorldId w = 0; w < ws.universe(); ++w) {
    if (!ws.contains(w)) continue;
    if (!first_world) out += " | ";
    first_world = false;
    out += '(';
    for (std::size_t i = 0; i < vocab.size(); ++i) {
      if (i > 0) out += " & ";
      if (!vocab.atom_true_in(w, i)) out += '!';
      out += vocab.atoms()[i];
    }
    out += ')';
  }
  return out;
}

Formula dnf_formula(const WorldSet& ws, const Vocabulary& vocab) {
  if (ws.empty()) return Formula::constant(false);
  if (ws.full()) return Formula::constant(true);
  std::optional<Formula> out;
  for (WorldId w = 0; w < ws.universe(); ++w) {
    if (!ws.contains(w)) continue;
    std::optional<Formula> minterm;
    for (std::size_t i = 0; i < vocab.size(); ++i) {
      Formula lit = Formula::atom(vocab.atoms()[i], vocab.atom_bit(i));
      if (!vocab.atom_true_in(w, i)) lit = Formula::negation(lit);
      minterm = minterm ? Formula::conjunction(*minterm, lit) : lit;
    }
    out = out ? Formula::disjunction(*out, *minterm) : *minterm;
  }
  return *out;
}

// ---------------------------------------------------------------------------
// Belief sets

BeliefSet tautology_belief_set(const Vocabulary& vocab) {
  return BeliefSet{WorldSet::all(vocab.world_count())};
}

BeliefSet inconsistent_belief_set(const Vocabulary& vocab) {
  return BeliefSet{WorldSet::none(vocab.world_count())};
}

bool contains(const BeliefSet& k, const Formula& f, const Vocabulary& vocab) {
  return k.models.subset_of(models(f, vocab));
}

BeliefSet expand(const BeliefSet& k, const Formula& f, const Vocabulary& vocab) {
  return BeliefSet{k.models.intersect(models(f, vocab))};
}

bool consistent(const BeliefSet& k) { return !k.models.empty(); }

std::string belief_set_to_string(const BeliefSet& k, const Vocabulary& vocab) {
  if (k.models.empty()) return "FALSE";
  if (k.models.full()) return "TRUE";
  return dnf_string(k.models, vocab);
}

std::vector<Formula> enumerate_formula_classes(const Vocabulary& vocab) {
  if (vocab.size() > 4) {
    throw DomainError("vocabulary too large for exhaustive formula enumeration (at most 4 atoms)");
  }
  const WorldId universe = vocab.world_count();
  const std::uint64_t class_count = std::uint64_t{1} << universe;
  std::vector<Formula> out;
  out.reserve(class_count);
  for (std::uint64_t mask = 0; mask < class_count; ++mask) {
    WorldSet ws(universe);
    for (WorldId w = 0; w < universe; ++w) {
      if ((mask >> w) & 1u) ws.insert(w);
    }
    out.push_back(dnf_formula(ws, vocab));
  }
  return out;
}

}  // namespace revlab
