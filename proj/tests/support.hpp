#pragma once

// Shared generators for the unit tests and the acceptance run.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "vphi/element.hpp"
#include "vphi/error.hpp"

namespace vtest {

using namespace vphi;

inline ContextPtr make_context(GroupPtr g, Rule r) {
  switch (r) {
    case Rule::diagonal: return Context::make(WreathRecursion::diagonal(g));
    case Rule::vanishing: return Context::make(WreathRecursion::vanishing(g));
    case Rule::right: return Context::make(WreathRecursion::right(g));
    case Rule::left: return Context::make(WreathRecursion::left(g));
    case Rule::adding: return Context::make(WreathRecursion::adding(g));
    default: break;
  }
  throw PreconditionError("no default construction for this rule");
}

/// Leaves of a random binary forest with `leaves` leaves on `roots` roots.
inline std::vector<Address> random_forest(std::mt19937_64& rng, std::uint32_t roots,
                                          std::size_t leaves, std::size_t max_depth = 8) {
  std::vector<Address> out;
  for (std::uint32_t r = 0; r < roots; ++r) out.push_back({r, BitWord()});
  while (out.size() < leaves) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < out.size(); ++i)
      if (out[i].word.size() < max_depth) open.push_back(i);
    if (open.empty()) break;
    auto i = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
    Address a = out[i];
    out[i] = a.child(0);
    out.push_back(a.child(1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<BitWord> random_tree(std::mt19937_64& rng, std::size_t leaves,
                                        std::size_t max_depth = 8) {
  std::vector<BitWord> out;
  for (auto& a : random_forest(rng, 1, leaves, max_depth)) out.push_back(a.word);
  return out;
}

/// Random labeled forest diagram over the source group of ctx.
inline std::vector<Column> random_columns(const ContextPtr& ctx, std::mt19937_64& rng,
                                          std::uint32_t m, std::uint32_t n, std::size_t leaves,
                                          bool labels = true, std::size_t max_depth = 8,
                                          int scale = 3) {
  leaves = std::max<std::size_t>({leaves, m, n});
  auto dom = random_forest(rng, m, leaves, max_depth);
  auto ran = random_forest(rng, n, dom.size(), max_depth);
  // both sides may stop early when max_depth bites; trim to the common size
  while (ran.size() != dom.size()) {
    auto k = std::min(dom.size(), ran.size());
    dom = random_forest(rng, m, k, max_depth);
    ran = random_forest(rng, n, k, max_depth);
  }
  std::shuffle(ran.begin(), ran.end(), rng);
  const Group& G = *ctx->source()->group();
  std::vector<Column> cols;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    cols.push_back({dom[i], labels ? G.random(rng, scale) : G.identity(), ran[i]});
  }
  return cols;
}

inline Element random_element(const ContextPtr& ctx, std::mt19937_64& rng,
                              std::size_t max_leaves = 6, bool labels = true,
                              std::size_t max_depth = 8) {
  auto k = std::uniform_int_distribution<std::size_t>(1, max_leaves)(rng);
  return Element::from_columns(ctx, 1, 1, random_columns(ctx, rng, 1, 1, k, labels, max_depth));
}

inline EventuallyPeriodicWord random_point(std::mt19937_64& rng, std::size_t max_prefix = 6,
                                           std::size_t max_period = 4) {
  std::uniform_int_distribution<int> bit(0, 1);
  auto len = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::string pre(len(0, max_prefix), '0');
  std::string per(len(1, max_period), '0');
  for (auto& c : pre) c = bit(rng) ? '1' : '0';
  for (auto& c : per) c = bit(rng) ? '1' : '0';
  return EventuallyPeriodicWord(BitWord(pre), BitWord(per));
}

/// All words of length d.
inline std::vector<BitWord> all_words(std::size_t d) {
  std::vector<BitWord> out;
  for (std::size_t x = 0; x < (std::size_t{1} << d); ++x) {
    std::string s(d, '0');
    for (std::size_t i = 0; i < d; ++i) s[i] = ((x >> (d - 1 - i)) & 1U) ? '1' : '0';
    out.emplace_back(s);
  }
  return out;
}

}  // namespace vtest
