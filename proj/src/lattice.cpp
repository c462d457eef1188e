#include "edgering/oracle.hpp"

#include <utility>

namespace edgering {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

EdgeLattice::EdgeLattice(const MixedGraph& g) : n_(g.vertex_count()), m_(g.edge_count()) {
  h_.assign(n_, std::vector<Integer>(m_, Integer(0)));
  u_.assign(m_, std::vector<Integer>(m_, Integer(0)));
  for (std::size_t k = 0; k < m_; ++k) {
    const auto r = rho(g, g.edge_at(k));
    for (std::size_t i = 0; i < n_; ++i) h_[i][k] = to_integer(r[i]);
    u_[k][k] = 1;
  }

  auto combine = [this](std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                        const Integer& p, const Integer& q) {
    // col_a <- s*col_a + t*col_b ; col_b <- p*col_a + q*col_b  (old values)
    for (auto* mat : {&h_, &u_}) {
      for (auto& row : *mat) {
        Integer x = row[a];
        Integer y = row[b];
        row[a] = s * x + t * y;
        row[b] = p * x + q * y;
      }
    }
  };
  auto swap_cols = [this](std::size_t a, std::size_t b) {
    for (auto* mat : {&h_, &u_})
      for (auto& row : *mat) std::swap(row[a], row[b]);
  };
  auto negate_col = [this](std::size_t a) {
    for (auto* mat : {&h_, &u_})
      for (auto& row : *mat) row[a] = -row[a];
  };

  std::size_t r = 0;
  for (std::size_t i = 0; i < n_ && r < m_; ++i) {
    for (std::size_t c = r + 1; c < m_; ++c) {
      if (h_[i][c] == 0) continue;
      if (h_[i][r] == 0) {
        swap_cols(r, c);
        continue;
      }
      Integer g0, s, t;
      mpz_gcdext(g0.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h_[i][r].get_mpz_t(),
                 h_[i][c].get_mpz_t());
      Integer a = h_[i][r] / g0;
      Integer b = h_[i][c] / g0;
      combine(r, c, s, t, Integer(-b), a);
    }
    if (h_[i][r] == 0) continue;
    if (h_[i][r] < 0) negate_col(r);
    for (std::size_t c = 0; c < r; ++c) {
      Integer q = floor_div(h_[i][c], h_[i][r]);
      if (q != 0) combine(c, r, Integer(1), Integer(-q), Integer(0), Integer(1));
    }
    pivot_row_.push_back(i);
    ++r;
  }
  rank_ = r;
}

std::optional<IntegerWeights> EdgeLattice::solve(const ExponentVector& alpha) const {
  if (alpha.size() != n_) throw PreconditionError("exponent vector does not match the graph");
  std::vector<Integer> y(m_, Integer(0));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    Integer v = to_integer(alpha[i]);
    for (std::size_t c = 0; c < k; ++c) v -= h_[i][c] * y[c];
    if (k < rank_ && pivot_row_[k] == i) {
      if (!mpz_divisible_p(v.get_mpz_t(), h_[i][k].get_mpz_t())) return std::nullopt;
      y[k] = v / h_[i][k];
      ++k;
    } else if (v != 0) {
      return std::nullopt;
    }
  }
  IntegerWeights z(m_, Integer(0));
  for (std::size_t e = 0; e < m_; ++e)
    for (std::size_t c = 0; c < rank_; ++c) z[e] += u_[e][c] * y[c];
  return z;
}

std::vector<IntegerWeights> EdgeLattice::kernel() const {
  std::vector<IntegerWeights> out;
  for (std::size_t c = rank_; c < m_; ++c) {
    IntegerWeights col(m_);
    for (std::size_t e = 0; e < m_; ++e) col[e] = u_[e][c];
    out.push_back(std::move(col));
  }
  return out;
}

std::optional<IntegerWeights> lattice_member(const MixedGraph& g, const ExponentVector& alpha) {
  return EdgeLattice(g).solve(alpha);
}

}  // namespace edgering
