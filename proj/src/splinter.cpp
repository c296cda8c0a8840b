#include "vphi/splinter.hpp"

#include "vphi/error.hpp"

namespace vphi {

namespace {

void require_diagonal(const ContextPtr& ctx) {
  if (ctx->rule() != Rule::diagonal) {
    throw PreconditionError("the Splinter model needs the diagonal recursion");
  }
  if (!ctx->group().is_finite()) throw PreconditionError("the Splinter model needs a finite group");
}

}  // namespace

SplinterModel::SplinterModel(ContextPtr ctx) : ctx_(std::move(ctx)) {
  require_diagonal(ctx_);
  const Group& G = ctx_->group();
  const std::size_t n = *G.order();
  action_.assign(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t g = 0; g < n; ++g)
      action_[x][g] = G.index_of(G.mul(G.element_at(x), G.element_at(g)));
}

SplinterModel::SplinterModel(ContextPtr ctx, std::vector<std::vector<std::size_t>> action)
    : ctx_(std::move(ctx)), action_(std::move(action)) {
  require_diagonal(ctx_);
  validate();
}

void SplinterModel::validate() {
  const Group& G = ctx_->group();
  const std::size_t n = *G.order();
  const std::size_t k = action_.size();
  if (k == 0) throw PreconditionError("G-set is empty");
  for (const auto& row : action_) {
    if (row.size() != n) throw PreconditionError("G-set action must list every group element");
    for (auto y : row)
      if (y >= k) throw PreconditionError("G-set action leaves the set");
  }
  for (std::size_t x = 0; x < k; ++x) {
    if (action_[x][0] != x) throw PreconditionError("identity must act trivially");
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t h = 0; h < n; ++h) {
        auto gh = G.index_of(G.mul(G.element_at(g), G.element_at(h)));
        if (action_[action_[x][g]][h] != action_[x][gh]) {
          throw PreconditionError("G-set table is not a right action");
        }
      }
  }
  for (std::size_t g = 1; g < n; ++g) {
    bool moves = false;
    for (std::size_t x = 0; x < k && !moves; ++x) moves = action_[x][g] != x;
    if (!moves) throw PreconditionError("G-set action is not faithful");
  }
}

SplinterPoint SplinterModel::act(const Element& a, const SplinterPoint& p) const {
  if (a.context() != ctx_) throw PreconditionError("context mismatch");
  for (const auto& c : a.columns()) {
    if (c.dom.word.is_prefix_of(p.w)) {
      return {action_[p.x][ctx_->group().index_of(c.label)],
              c.ran.word + p.w.suffix(c.dom.word.size())};
    }
  }
  throw PreconditionError("insufficient depth");
}

bool SplinterModel::check_hom(const Element& a, const Element& b, std::size_t samples,
                              std::size_t depth, std::mt19937_64& rng) const {
  return check_hom(a, b, a * b, samples, depth, rng);
}

bool SplinterModel::check_hom(const Element& a, const Element& b, const Element& product,
                              std::size_t samples, std::size_t depth,
                              std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::size_t> px(0, action_.size() - 1);
  std::bernoulli_distribution bit;
  for (std::size_t s = 0; s < samples; ++s) {
    std::string w;
    for (std::size_t i = 0; i < depth; ++i) w.push_back(bit(rng) ? '1' : '0');
    SplinterPoint p{px(rng), BitWord(w)};
    if (act(product, p) != act(b, act(a, p))) return false;
  }
  return true;
}

bool SplinterModel::check_faithful(const Element& a, std::size_t depth) const {
  if (depth > 24) throw PreconditionError("depth too large for exhaustive scan");
  for (std::size_t x = 0; x < action_.size(); ++x) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << depth); ++bits) {
      std::string w(depth, '0');
      for (std::size_t i = 0; i < depth; ++i) w[i] = (bits >> (depth - 1 - i)) & 1U ? '1' : '0';
      SplinterPoint p{x, BitWord(w)};
      if (act(a, p) != p) return false;
    }
  }
  return true;
}

}  // namespace vphi
