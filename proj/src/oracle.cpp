#include "edgering/oracle.hpp"

#include <algorithm>
#include <cstring>
#include <functional>

namespace edgering {

// ---------------------------------------------------------------- T1

std::optional<T1Certificate> t1_member(const MixedGraph& g, const ExponentVector& alpha) {
  auto z = lattice_member(g, alpha);
  if (!z) return std::nullopt;
  auto c = cone_member(g, alpha);
  if (!c) return std::nullopt;
  return T1Certificate{std::move(*z), std::move(*c)};
}

std::int64_t default_coeff_cap(const MixedGraph& g, const ExponentVector& alpha) {
  return 2 * (alpha.l1_norm() + 2 * static_cast<std::int64_t>(g.edge_count()));
}

// ---------------------------------------------------------------- T2

BoundedSearch::BoundedSearch(std::vector<ExponentVector> gens) : gens_(std::move(gens)) {
  n_ = gens_.empty() ? 0 : gens_.front().size();
  const auto m = gens_.size();
  suffix_max_.assign(m + 1, std::vector<std::int64_t>(n_, 0));
  suffix_min_.assign(m + 1, std::vector<std::int64_t>(n_, 0));
  suffix_l1_.assign(m + 1, 0);
  for (std::size_t k = m; k-- > 0;) {
    if (gens_[k].size() != n_) throw PreconditionError("generators of different lengths");
    for (std::size_t i = 0; i < n_; ++i) {
      suffix_max_[k][i] = std::max(suffix_max_[k + 1][i], gens_[k][i]);
      suffix_min_[k][i] = std::min(suffix_min_[k + 1][i], gens_[k][i]);
    }
    suffix_l1_[k] = std::max(suffix_l1_[k + 1], gens_[k].l1_norm());
  }
}

std::string BoundedSearch::key(std::size_t k, const std::vector<std::int64_t>& residual) const {
  std::string s(sizeof(std::uint32_t) + residual.size() * sizeof(std::int64_t), '\0');
  const auto k32 = static_cast<std::uint32_t>(k);
  std::memcpy(s.data(), &k32, sizeof k32);
  std::memcpy(s.data() + sizeof k32, residual.data(), residual.size() * sizeof(std::int64_t));
  return s;
}

bool BoundedSearch::hopeless(std::size_t k, const std::vector<std::int64_t>& residual,
                             std::int64_t budget) const {
  std::int64_t l1 = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    const auto r = residual[i];
    if (r > budget * suffix_max_[k][i] || r < budget * suffix_min_[k][i]) return true;
    l1 += r < 0 ? -r : r;
  }
  return l1 > budget * suffix_l1_[k];
}

bool BoundedSearch::dfs(std::size_t k, std::vector<std::int64_t>& residual, std::int64_t budget) {
  if (std::all_of(residual.begin(), residual.end(), [](std::int64_t x) { return x == 0; })) {
    std::fill(counts_.begin() + static_cast<std::ptrdiff_t>(k), counts_.end(), 0);
    return true;
  }
  if (k == gens_.size() || hopeless(k, residual, budget)) return false;
  const auto id = key(k, residual);
  if (auto it = failed_.find(id); it != failed_.end() && it->second >= budget) return false;

  const auto& gen = gens_[k];
  for (std::int64_t z = 0; z <= budget; ++z) {
    counts_[k] = z;
    if (dfs(k + 1, residual, budget - z)) {
      for (std::size_t i = 0; i < n_; ++i) residual[i] += z * gen[i];
      return true;
    }
    for (std::size_t i = 0; i < n_; ++i) residual[i] -= gen[i];
  }
  for (std::size_t i = 0; i < n_; ++i) residual[i] += (budget + 1) * gen[i];
  counts_[k] = 0;

  if (failed_.size() > 4'000'000) failed_.clear();
  auto& slot = failed_[id];
  slot = std::max(slot, budget);
  return false;
}

std::optional<IntWeights> BoundedSearch::find(const ExponentVector& alpha, std::int64_t cap) {
  if (alpha.size() != n_ && !gens_.empty())
    throw PreconditionError("exponent vector does not match the generators");
  counts_.assign(gens_.size(), 0);
  if (alpha.is_zero()) return counts_;
  if (gens_.empty() || cap <= 0 || suffix_l1_[0] == 0) return std::nullopt;

  std::vector<std::int64_t> residual = alpha.coords();
  if (!dfs(0, residual, cap)) return std::nullopt;
  std::int64_t found = 0;
  for (auto c : counts_) found += c;
  // Shrink to a representation of least total.
  const auto lower = std::max<std::int64_t>(1, (alpha.l1_norm() + suffix_l1_[0] - 1) / suffix_l1_[0]);
  for (std::int64_t b = lower; b < found; ++b) {
    residual = alpha.coords();
    counts_.assign(gens_.size(), 0);
    if (dfs(0, residual, b)) return counts_;
  }
  residual = alpha.coords();
  counts_.assign(gens_.size(), 0);
  dfs(0, residual, found);
  return counts_;
}

namespace {

std::vector<ExponentVector> edge_vectors(const MixedGraph& g) {
  std::vector<ExponentVector> out;
  for (auto e : g.edges()) out.push_back(rho(g, e));
  return out;
}

}  // namespace

std::optional<IntWeights> t2_member_bounded(const MixedGraph& g, const ExponentVector& alpha,
                                            std::int64_t coeff_cap) {
  if (alpha.size() != g.vertex_count())
    throw PreconditionError("exponent vector does not match the graph");
  return BoundedSearch(edge_vectors(g)).find(alpha, coeff_cap);
}

// ---------------------------------------------------------------- windows

std::vector<ExponentVector> l1_window(std::size_t n, std::int64_t bound) {
  std::vector<ExponentVector> out;
  ExponentVector cur(n);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = -left; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - (v < 0 ? -v : v));
    }
    cur[i] = 0;
  };
  rec(0, bound);
  std::stable_sort(out.begin(), out.end(), [](const ExponentVector& a, const ExponentVector& b) {
    return a.l1_norm() < b.l1_norm();
  });
  return out;
}

namespace {

// Membership tests shared by the window scans.
class T1Test {
 public:
  explicit T1Test(const MixedGraph& g) : g_(g), lattice_(g) {
    if (g.edge_count() <= kFourierMotzkinEdgeLimit) cone_ = fm_cone_description(g);
  }

  bool contains(const ExponentVector& alpha) const {
    if (!lattice_.contains(alpha)) return false;
    if (cone_) return cone_->contains(alpha);
    return simplex_cone_member(g_, alpha).has_value();
  }

 private:
  const MixedGraph& g_;
  EdgeLattice lattice_;
  std::optional<ConeDescription> cone_;
};

}  // namespace

OracleVerdict oracle_normality(const MixedGraph& g, std::int64_t degree_bound,
                               std::int64_t coeff_cap) {
  if (degree_bound < 0 || coeff_cap < 0) throw PreconditionError("bounds must be nonnegative");
  OracleVerdict v;
  v.degree_bound = degree_bound;
  v.coeff_cap = coeff_cap;
  const T1Test t1(g);
  BoundedSearch search(edge_vectors(g));
  const auto window = l1_window(g.vertex_count(), degree_bound);
  v.window_size = window.size();
  for (const auto& alpha : window) {
    if (!t1.contains(alpha)) continue;
    ++v.t1_count;
    const auto cap = coeff_cap > 0 ? coeff_cap : default_coeff_cap(g, alpha);
    if (search.find(alpha, cap)) continue;
    v.normal_up_to_bounds = false;
    v.witness = alpha;
    v.witness_certificate = t1_member(g, alpha);
    for (std::int64_t k = 2; k <= cap; ++k) {
      if (auto w = search.find(k * alpha, cap)) {
        v.multiple = k;
        v.multiple_weights = std::move(w);
        break;
      }
    }
    break;
  }
  return v;
}

bool in_t1_not_t2(const MixedGraph& g, const ExponentVector& alpha, std::int64_t coeff_cap) {
  return t1_member(g, alpha).has_value() && !t2_member_bounded(g, alpha, coeff_cap).has_value();
}

GenerationVerdict verify_generation(const MixedGraph& g, const std::vector<ExponentVector>& gens,
                                    std::int64_t degree_bound, std::int64_t coeff_cap) {
  if (degree_bound < 0 || coeff_cap < 0) throw PreconditionError("bounds must be nonnegative");
  GenerationVerdict v;
  v.degree_bound = degree_bound;
  v.coeff_cap = coeff_cap;
  auto all = edge_vectors(g);
  for (const auto& m : gens) {
    if (m.size() != g.vertex_count()) throw PreconditionError("generator does not match the graph");
    all.push_back(m);
  }
  const T1Test t1(g);
  BoundedSearch search(std::move(all));
  for (const auto& alpha : l1_window(g.vertex_count(), degree_bound)) {
    if (!t1.contains(alpha)) continue;
    ++v.checked;
    const auto cap = coeff_cap > 0 ? coeff_cap : default_coeff_cap(g, alpha);
    if (!search.find(alpha, cap)) v.inexpressible.push_back(alpha);
  }
  v.all_expressible = v.inexpressible.empty();
  return v;
}

}  // namespace edgering
