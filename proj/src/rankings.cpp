#include "revlab/rankings.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace revlab {

std::uint32_t Rank::finite_value() const {
  if (is_infinite()) throw DomainError("rank is infinite");
  return v_;
}

Rank Rank::plus(Rank o) const {
  if (is_infinite() || o.is_infinite()) return infinity();
  return Rank(v_ + o.v_);
}

Rank Rank::minus(std::uint32_t d) const {
  if (is_infinite()) return infinity();
  if (d > v_) throw DomainError("rank subtraction underflow");
  return Rank(v_ - d);
}

std::string Rank::str() const {
  return is_infinite() ? "inf" : std::to_string(v_);
}

std::optional<Rank> Rank::parse(std::string_view text) {
  if (text == "inf") return infinity();
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  if (v == kInf) return std::nullopt;
  return Rank(v);
}

TotalPreorder::TotalPreorder(std::vector<std::uint32_t> ranks) : ranks_(std::move(ranks)) {
  if (ranks_.empty()) throw DomainError("preorder needs at least one world");
  // Collapse the used ranks onto {0, ..., k} preserving order.
  std::vector<std::uint32_t> used(ranks_);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto& r : ranks_) {
    r = static_cast<std::uint32_t>(
        std::lower_bound(used.begin(), used.end(), r) - used.begin());
  }
}

TotalPreorder TotalPreorder::flat(WorldId world_count) {
  return TotalPreorder(std::vector<std::uint32_t>(world_count, 0));
}

WorldSet TotalPreorder::worlds_at(std::uint32_t rank) const {
  WorldSet out(world_count());
  for (WorldId w = 0; w < world_count(); ++w) {
    if (ranks_[w] == rank) out.insert(w);
  }
  return out;
}

Ocf::Ocf(std::vector<Rank> ranks) : ranks_(std::move(ranks)) {
  if (ranks_.empty()) throw DomainError("OCF needs at least one world");
}

Ocf Ocf::flat(WorldId world_count) {
  return Ocf(std::vector<Rank>(world_count, Rank(0)));
}

bool Ocf::all_finite() const {
  return std::none_of(ranks_.begin(), ranks_.end(),
                      [](Rank r) { return r.is_infinite(); });
}

bool Ocf::operator<(const Ocf& o) const { return ranks_ < o.ranks_; }

WorldSet min_worlds(const TotalPreorder& p, const WorldSet& fmodels) {
  if (fmodels.empty()) throw DomainError("min_worlds of an unsatisfiable formula");
  std::uint32_t best = 0;
  bool seen = false;
  for (WorldId w = 0; w < p.world_count(); ++w) {
    if (!fmodels.contains(w)) continue;
    if (!seen || p.rank(w) < best) {
      best = p.rank(w);
      seen = true;
    }
  }
  WorldSet out(p.world_count());
  for (WorldId w = 0; w < p.world_count(); ++w) {
    if (fmodels.contains(w) && p.rank(w) == best) out.insert(w);
  }
  return out;
}

WorldSet min_worlds(const TotalPreorder& p, const Formula& f, const Vocabulary& vocab) {
  return min_worlds(p, models(f, vocab));
}

BeliefSet bel_preorder(const TotalPreorder& p) {
  return BeliefSet{p.worlds_at(0)};
}

Rank kappa_value(const Ocf& k, const WorldSet& fmodels) {
  Rank best = Rank::infinity();
  for (WorldId w = 0; w < k.world_count(); ++w) {
    if (fmodels.contains(w) && k.rank(w) < best) best = k.rank(w);
  }
  return best;
}

Rank kappa_value(const Ocf& k, const Formula& f, const Vocabulary& vocab) {
  return kappa_value(k, models(f, vocab));
}

std::optional<Firmness> firmness(const Ocf& k, const WorldSet& fmodels) {
  if (kappa_value(k, fmodels) != Rank(0)) return std::nullopt;
  return kappa_value(k, fmodels.complement());
}

std::optional<Firmness> firmness(const Ocf& k, const Formula& f, const Vocabulary& vocab) {
  return firmness(k, models(f, vocab));
}

BeliefSet bel_ocf(const Ocf& k) {
  WorldSet out(k.world_count());
  for (WorldId w = 0; w < k.world_count(); ++w) {
    if (k.rank(w) == Rank(0)) out.insert(w);
  }
  return BeliefSet{out};
}

std::optional<std::string> validate_ocf(const Ocf& k) {
  for (WorldId w = 0; w < k.world_count(); ++w) {
    if (k.rank(w) == Rank(0)) return std::nullopt;
  }
  return "no rank-0 world";
}

TotalPreorder preorder_of_ocf(const Ocf& k) {
  std::vector<Rank> used(k.ranks());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<std::uint32_t> ranks(k.world_count());
  for (WorldId w = 0; w < k.world_count(); ++w) {
    ranks[w] = static_cast<std::uint32_t>(
        std::lower_bound(used.begin(), used.end(), k.rank(w)) - used.begin());
  }
  return TotalPreorder(std::move(ranks));
}

namespace {

template <typename RankStr>
std::string rank_map_string(WorldId world_count, const Vocabulary& vocab, RankStr&& rank_str) {
  std::string out;
  for (WorldId w = 0; w < world_count; ++w) {
    if (w > 0) out += ' ';
    out += vocab.world_name(w);
    out += ':';
    out += rank_str(w);
  }
  return out;
}

}  // namespace

std::string rank_map_to_string(const Ocf& k, const Vocabulary& vocab) {
  return rank_map_string(k.world_count(), vocab,
                         [&](WorldId w) { return k.rank(w).str(); });
}

std::string rank_map_to_string(const TotalPreorder& p, const Vocabulary& vocab) {
  return rank_map_string(p.world_count(), vocab,
                         [&](WorldId w) { return std::to_string(p.rank(w)); });
}

Ocf parse_rank_map(std::string_view text, const Vocabulary& vocab) {
  std::map<WorldId, Rank> entries;
  std::istringstream in{std::string(text)};
  std::string item;
  while (in >> item) {
    auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw SchemaError("rank map entry '" + item + "' is not world:rank");
    }
    auto world = vocab.world_from_name(item.substr(0, colon));
    if (!world) throw SchemaError("unknown world '" + item.substr(0, colon) + "'");
    auto rank = Rank::parse(item.substr(colon + 1));
    if (!rank) throw SchemaError("bad rank '" + item.substr(colon + 1) + "'");
    if (!entries.emplace(*world, *rank).second) {
      throw SchemaError("duplicate world '" + item.substr(0, colon) + "'");
    }
  }
  if (entries.size() != vocab.world_count()) {
    for (WorldId w = 0; w < vocab.world_count(); ++w) {
      if (!entries.count(w)) {
        throw SchemaError("rank map is missing world '" + vocab.world_name(w) + "'");
      }
    }
  }
  std::vector<Rank> ranks;
  ranks.reserve(vocab.world_count());
  for (WorldId w = 0; w < vocab.world_count(); ++w) ranks.push_back(entries.at(w));
  return Ocf(std::move(ranks));
}

}  // namespace revlab
