#include "edgering/exact.hpp"

#include <limits>

namespace edgering {

std::int64_t to_int64(const Integer& z) {
  if (!mpz_fits_slong_p(z.get_mpz_t())) throw DomainError("integer does not fit in 64 bits");
  return static_cast<std::int64_t>(mpz_get_si(z.get_mpz_t()));
}

std::vector<Rational> to_rationals(const ExponentVector& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (auto c : v.coords()) out.push_back(to_rational(c));
  return out;
}

namespace {

template <class T>
std::vector<T> rho_sum(const MixedGraph& g, const std::vector<T>& w) {
  if (w.size() != g.edge_count()) throw PreconditionError("weight vector does not match the graph");
  std::vector<T> out(g.vertex_count(), T(0));
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == 0) continue;
    const auto r = rho(g, g.edge_at(k));
    for (std::size_t i = 0; i < r.size(); ++i)
      if (r[i] != 0) out[i] += w[k] * to_integer(r[i]);
  }
  return out;
}

}  // namespace

std::vector<Rational> weighted_rho_sum(const MixedGraph& g, const RationalWeights& w) {
  return rho_sum(g, w);
}

std::vector<Integer> weighted_rho_sum(const MixedGraph& g, const std::vector<Integer>& w) {
  return rho_sum(g, w);
}

ExponentVector weighted_rho_sum(const MixedGraph& g, const IntWeights& w) {
  std::vector<Integer> big;
  big.reserve(w.size());
  for (auto x : w) big.push_back(to_integer(x));
  auto sum = rho_sum(g, big);
  ExponentVector out(g.vertex_count());
  for (std::size_t i = 0; i < sum.size(); ++i) out[i] = to_int64(sum[i]);
  return out;
}

bool equals(const std::vector<Rational>& a, const ExponentVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != to_rational(b[i])) return false;
  return true;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw DomainError("not a rational number: " + s);
  q.canonicalize();
  return q;
}

}  // namespace edgering
