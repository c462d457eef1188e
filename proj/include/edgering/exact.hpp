#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "edgering/errors.hpp"
#include "edgering/model.hpp"

namespace edgering {

using Integer = mpz_class;
using Rational = mpq_class;

/// Edge weights are indexed by flat edge index (signed edges first).
using IntWeights = std::vector<std::int64_t>;
using RationalWeights = std::vector<Rational>;

inline Integer to_integer(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

inline Rational to_rational(std::int64_t v) { return Rational(to_integer(v)); }

/// Throws DomainError when z does not fit.
std::int64_t to_int64(const Integer& z);

std::vector<Rational> to_rationals(const ExponentVector& v);

/// Σ w_e ρ(e), exactly.
std::vector<Rational> weighted_rho_sum(const MixedGraph& g, const RationalWeights& w);
std::vector<Integer> weighted_rho_sum(const MixedGraph& g, const std::vector<Integer>& w);
/// Throws DomainError on int64 overflow.
ExponentVector weighted_rho_sum(const MixedGraph& g, const IntWeights& w);

bool equals(const std::vector<Rational>& a, const ExponentVector& b);

/// `1/2`, `-3`, ...
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

}  // namespace edgering
