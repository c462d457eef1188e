#include "edgering/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace edgering {

namespace {

using Row = std::vector<Rational>;

// Row over d weight variables followed by q parameters, read as row·(f, p) >= 0.
struct FmRow {
  Row r;
  std::uint64_t history = 0;
};

// Scale to a primitive integer row (positive factor only).
void normalize(Row& r) {
  Integer l = 1;
  for (const auto& x : r)
    if (x != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  for (auto& x : r) {
    x *= l;
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g > 1)
    for (auto& x : r) x /= g;
}

bool all_zero(const Row& r, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i)
    if (r[i] != 0) return false;
  return true;
}

// The system Σ c_e ρ(e) = p, c >= 0, with the pivot weights solved away.
// Free weights become the FM variables; p are the parameters.
struct ParametricSystem {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::vector<std::size_t> free;    // free columns
  std::vector<Row> reduced;         // rank rows of R·A (length m)
  std::vector<Row> transform;       // rows of R (length n)
  std::vector<Row> equalities;      // R_i for zero rows of R·A
};

ParametricSystem eliminate_equalities(const MixedGraph& g) {
  ParametricSystem s;
  s.m = g.edge_count();
  s.n = g.vertex_count();
  std::vector<Row> a(s.n, Row(s.m, Rational(0)));
  std::vector<Row> t(s.n, Row(s.n, Rational(0)));
  for (std::size_t k = 0; k < s.m; ++k) {
    const auto r = rho(g, g.edge_at(k));
    for (std::size_t i = 0; i < s.n; ++i) a[i][k] = to_rational(r[i]);
  }
  for (std::size_t i = 0; i < s.n; ++i) t[i][i] = 1;

  std::size_t row = 0;
  for (std::size_t col = 0; col < s.m && row < s.n; ++col) {
    std::size_t p = row;
    while (p < s.n && a[p][col] == 0) ++p;
    if (p == s.n) {
      s.free.push_back(col);
      continue;
    }
    std::swap(a[p], a[row]);
    std::swap(t[p], t[row]);
    const Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (auto& x : t[row]) x *= inv;
    for (std::size_t i = 0; i < s.n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t k = 0; k < s.m; ++k) a[i][k] -= f * a[row][k];
      for (std::size_t k = 0; k < s.n; ++k) t[i][k] -= f * t[row][k];
    }
    s.pivots.push_back(col);
    ++row;
  }
  for (std::size_t col = s.pivots.empty() ? 0 : s.pivots.back() + 1; col < s.m; ++col)
    if (std::find(s.free.begin(), s.free.end(), col) == s.free.end()) s.free.push_back(col);
  std::sort(s.free.begin(), s.free.end());
  for (std::size_t i = 0; i < row; ++i) {
    s.reduced.push_back(a[i]);
    s.transform.push_back(t[i]);
  }
  for (std::size_t i = row; i < s.n; ++i) s.equalities.push_back(t[i]);
  return s;
}

// Inequalities c_pivot >= 0 and c_free >= 0 over (free vars, parameters).
std::vector<FmRow> initial_rows(const ParametricSystem& s) {
  const auto d = s.free.size();
  std::vector<FmRow> rows;
  std::uint64_t bit = 1;
  for (std::size_t i = 0; i < s.pivots.size(); ++i) {
    Row r(d + s.n, Rational(0));
    for (std::size_t f = 0; f < d; ++f) r[f] = -s.reduced[i][s.free[f]];
    for (std::size_t k = 0; k < s.n; ++k) r[d + k] = s.transform[i][k];
    rows.push_back({std::move(r), bit});
    bit <<= 1;
  }
  for (std::size_t f = 0; f < d; ++f) {
    Row r(d + s.n, Rational(0));
    r[f] = 1;
    rows.push_back({std::move(r), bit});
    bit <<= 1;
  }
  return rows;
}

// Eliminates variable `var` (all variables above it are already gone).
std::vector<FmRow> eliminate(const std::vector<FmRow>& rows, std::size_t var, std::size_t eliminated) {
  std::vector<FmRow> out;
  std::set<Row> seen;
  auto keep = [&](FmRow row) {
    normalize(row.r);
    if (all_zero(row.r, 0, row.r.size())) return;
    if (!seen.insert(row.r).second) return;
    out.push_back(std::move(row));
  };
  std::vector<const FmRow*> pos, neg;
  for (const auto& row : rows) {
    if (row.r[var] > 0)
      pos.push_back(&row);
    else if (row.r[var] < 0)
      neg.push_back(&row);
    else
      keep(row);
  }
  for (const auto* p : pos) {
    for (const auto* q : neg) {
      const auto history = p->history | q->history;
      // Chernikov: a combination of more than eliminated+1 originals is redundant.
      if (static_cast<std::size_t>(std::popcount(history)) > eliminated + 1) continue;
      const Rational a = p->r[var];
      const Rational b = -q->r[var];
      FmRow row{Row(p->r.size()), history};
      for (std::size_t k = 0; k < row.r.size(); ++k) row.r[k] = b * p->r[k] + a * q->r[k];
      keep(std::move(row));
    }
  }
  return out;
}

Rational dot(const Row& r, std::size_t offset, const ExponentVector& alpha) {
  Rational s = 0;
  for (std::size_t k = 0; k < alpha.size(); ++k)
    if (alpha[k] != 0) s += r[offset + k] * to_rational(alpha[k]);
  return s;
}

}  // namespace

bool ConeDescription::contains(const ExponentVector& alpha) const {
  for (const auto& r : equalities)
    if (dot(r, 0, alpha) != 0) return false;
  for (const auto& r : inequalities)
    if (dot(r, 0, alpha) < 0) return false;
  return true;
}

ConeDescription fm_cone_description(const MixedGraph& g) {
  if (g.edge_count() > 64) throw DomainError("Fourier-Motzkin is limited to 64 edges");
  const auto s = eliminate_equalities(g);
  const auto d = s.free.size();
  auto rows = initial_rows(s);
  for (std::size_t k = 0; k < d; ++k) rows = eliminate(rows, d - 1 - k, k + 1);

  ConeDescription out;
  for (auto r : s.equalities) {
    normalize(r);
    if (!all_zero(r, 0, r.size())) out.equalities.push_back(std::move(r));
  }
  for (auto& row : rows) out.inequalities.emplace_back(row.r.begin() + static_cast<std::ptrdiff_t>(d), row.r.end());
  return out;
}

std::optional<RationalWeights> fm_cone_member(const MixedGraph& g, const ExponentVector& alpha) {
  if (alpha.size() != g.vertex_count())
    throw PreconditionError("exponent vector does not match the graph");
  if (g.edge_count() > 64) throw DomainError("Fourier-Motzkin is limited to 64 edges");
  const auto s = eliminate_equalities(g);
  for (const auto& r : s.equalities)
    if (dot(r, 0, alpha) != 0) return std::nullopt;
  const auto d = s.free.size();

  // Concrete rows: d variables and one constant column.
  std::vector<FmRow> rows;
  for (const auto& row : initial_rows(s)) {
    FmRow c{Row(row.r.begin(), row.r.begin() + static_cast<std::ptrdiff_t>(d)), row.history};
    c.r.push_back(dot(row.r, d, alpha));
    rows.push_back(std::move(c));
  }

  // stages[k] holds the system in variables 0..k-1.
  std::vector<std::vector<FmRow>> stages(d + 1);
  stages[d] = rows;
  for (std::size_t k = d; k-- > 0;) stages[k] = eliminate(stages[k + 1], k, d - k);
  for (const auto& row : stages[0])
    if (row.r.back() < 0) return std::nullopt;

  std::vector<Rational> f(d, Rational(0));
  for (std::size_t k = 0; k < d; ++k) {
    std::optional<Rational> lower, upper;
    for (const auto& row : stages[k + 1]) {
      const auto& a = row.r[k];
      if (a == 0) continue;
      Rational rest = row.r.back();
      for (std::size_t j = 0; j < k; ++j) rest += row.r[j] * f[j];
      const Rational bound = -rest / a;
      if (a > 0) {
        if (!lower || bound > *lower) lower = bound;
      } else if (!upper || bound < *upper) {
        upper = bound;
      }
    }
    f[k] = lower.value_or(Rational(0));
    if (upper && f[k] > *upper) throw InconsistencyError("Fourier-Motzkin back-substitution failed");
  }

  RationalWeights c(s.m, Rational(0));
  for (std::size_t k = 0; k < d; ++k) c[s.free[k]] = f[k];
  for (std::size_t i = 0; i < s.pivots.size(); ++i) {
    Rational v = dot(s.transform[i], 0, alpha);
    for (std::size_t k = 0; k < d; ++k) v -= s.reduced[i][s.free[k]] * f[k];
    c[s.pivots[i]] = v;
  }
  return c;
}

std::optional<RationalWeights> simplex_cone_member(const MixedGraph& g, const ExponentVector& alpha) {
  if (alpha.size() != g.vertex_count())
    throw PreconditionError("exponent vector does not match the graph");
  const auto n = g.vertex_count();
  const auto m = g.edge_count();
  const auto cols = m + n;  // weights, then one artificial per row
  std::vector<Row> t(n, Row(cols + 1, Rational(0)));
  for (std::size_t k = 0; k < m; ++k) {
    const auto r = rho(g, g.edge_at(k));
    for (std::size_t i = 0; i < n; ++i) t[i][k] = to_rational(r[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    t[i][cols] = to_rational(alpha[i]);
    if (alpha[i] < 0)
      for (auto& x : t[i]) x = -x;
    t[i][m + i] = 1;
  }
  std::vector<std::size_t> basis(n);
  for (std::size_t i = 0; i < n; ++i) basis[i] = m + i;

  // Phase one: minimise the sum of the artificials.
  Row cost(cols + 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= cols; ++k)
      if (k < m || k == cols) cost[k] -= t[i][k];

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t k = 0; k < cols; ++k)
      if (cost[k] < 0) {
        enter = k;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = n;
    Rational best;
    for (std::size_t i = 0; i < n; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave == n || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == n) throw InconsistencyError("phase-one simplex is unbounded");
    const Rational inv = 1 / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t k = 0; k <= cols; ++k) t[i][k] -= f * t[leave][k];
    }
    const Rational f = cost[enter];
    for (std::size_t k = 0; k <= cols; ++k) cost[k] -= f * t[leave][k];
    basis[leave] = enter;
  }
  if (cost[cols] != 0) return std::nullopt;

  RationalWeights c(m, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    if (basis[i] < m) c[basis[i]] = t[i][cols];
  return c;
}

std::optional<RationalWeights> cone_member(const MixedGraph& g, const ExponentVector& alpha) {
  return g.edge_count() <= kFourierMotzkinEdgeLimit ? fm_cone_member(g, alpha)
                                                     : simplex_cone_member(g, alpha);
}

}  // namespace edgering
