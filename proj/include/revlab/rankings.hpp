#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "revlab/logic.hpp"

namespace revlab {

// Natural number or infinity.  Infinity is absorbing for addition; finite
// subtraction requires a finite, no-smaller minuend.
class Rank {
 public:
  constexpr Rank() : v_(0) {}
  constexpr Rank(std::uint32_t n) : v_(n) {}
  static constexpr Rank infinity() { return Rank(kInf, 0); }

  bool is_infinite() const { return v_ == kInf; }
  std::uint32_t finite_value() const;

  Rank plus(Rank o) const;
  // this - d, with infinity absorbing.  d must be finite.
  Rank minus(std::uint32_t d) const;

  auto operator<=>(const Rank&) const = default;  // kInf sorts above all finite

  std::string str() const;
  // Accepts a decimal numeral or "inf".
  static std::optional<Rank> parse(std::string_view text);

 private:
  constexpr Rank(std::uint32_t v, int) : v_(v) {}
  static constexpr std::uint32_t kInf = 0xFFFFFFFFu;
  std::uint32_t v_;
};

using Firmness = Rank;

// Total preorder on worlds, kept in normal form: the used ranks are exactly
// {0, ..., k}, so structural equality coincides with preorder equality.
class TotalPreorder {
 public:
  explicit TotalPreorder(std::vector<std::uint32_t> ranks);  // normalizes
  static TotalPreorder flat(WorldId world_count);

  WorldId world_count() const { return static_cast<WorldId>(ranks_.size()); }
  std::uint32_t rank(WorldId w) const { return ranks_[w]; }
  const std::vector<std::uint32_t>& ranks() const { return ranks_; }
  WorldSet worlds_at(std::uint32_t rank) const;

  bool operator==(const TotalPreorder&) const = default;

 private:
  std::vector<std::uint32_t> ranks_;
};

// Ordinal conditional function: world -> N u {inf}.  Valid OCFs have some
// world at rank 0; validity is checked by validate_ocf, not the constructor,
// so that violations can be represented and reported.
class Ocf {
 public:
  explicit Ocf(std::vector<Rank> ranks);
  static Ocf flat(WorldId world_count);

  WorldId world_count() const { return static_cast<WorldId>(ranks_.size()); }
  Rank rank(WorldId w) const { return ranks_[w]; }
  const std::vector<Rank>& ranks() const { return ranks_; }
  bool all_finite() const;

  bool operator==(const Ocf&) const = default;
  bool operator<(const Ocf& o) const;

 private:
  std::vector<Rank> ranks_;
};

// Least-ranked models of f; f must be satisfiable.
WorldSet min_worlds(const TotalPreorder& p, const WorldSet& fmodels);
WorldSet min_worlds(const TotalPreorder& p, const Formula& f, const Vocabulary& vocab);

// Belief set of a preorder: exactly the rank-0 worlds.
BeliefSet bel_preorder(const TotalPreorder& p);

// kappa(f) = min rank over models of f; infinity when f is unsatisfiable.
Rank kappa_value(const Ocf& k, const WorldSet& fmodels);
Rank kappa_value(const Ocf& k, const Formula& f, const Vocabulary& vocab);

// Defined only when kappa(f) = 0; then the firmness is kappa(!f).
std::optional<Firmness> firmness(const Ocf& k, const WorldSet& fmodels);
std::optional<Firmness> firmness(const Ocf& k, const Formula& f, const Vocabulary& vocab);

// Belief set of an OCF: the rank-0 worlds (formulas believed with firmness
// at least 1).
BeliefSet bel_ocf(const Ocf& k);

// nullopt when valid; otherwise a violation report.
std::optional<std::string> validate_ocf(const Ocf& k);

// Order-preserving collapse of kappa values onto contiguous ranks, with
// infinity strictly above all finite ranks.
TotalPreorder preorder_of_ocf(const Ocf& k);

// Serialization: "00:3 01:1 10:2 11:0" in lexicographic world order, with
// infinity rendered as "inf".
std::string rank_map_to_string(const Ocf& k, const Vocabulary& vocab);
std::string rank_map_to_string(const TotalPreorder& p, const Vocabulary& vocab);
Ocf parse_rank_map(std::string_view text, const Vocabulary& vocab);

}  // namespace revlab
