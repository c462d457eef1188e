#include "edgering/crosscheck.hpp"

namespace edgering {

CrossCheck crosscheck(const MixedGraph& g, std::int64_t degree_bound, std::int64_t coeff_cap,
                      std::size_t cycle_cap) {
  CrossCheck x;
  x.report = decide(g, cycle_cap);
  x.oracle = oracle_normality(g, degree_bound, coeff_cap);

  if (x.report.normal) {
    if (!x.oracle.normal_up_to_bounds) {
      x.agreement = Agreement::disagree;
      x.reason = "oracle found " + render_monomial(*x.oracle.witness) + " in T1 but not in T2";
    }
    return x;
  }

  x.generation = verify_generation(g, x.report.generators, degree_bound, coeff_cap);
  if (!x.generation->all_expressible) {
    x.agreement = Agreement::disagree;
    x.reason = render_monomial(x.generation->inexpressible.front()) +
               " is not generated by the edges and the reported generators";
    return x;
  }
  if (!x.oracle.normal_up_to_bounds) return x;

  for (const auto& m : x.report.generators) {
    if (m.l1_norm() <= degree_bound) {
      x.agreement = Agreement::disagree;
      x.reason = "generator " + render_monomial(m) + " lies in the window but the oracle found no witness";
      return x;
    }
    const auto cap = coeff_cap > 0 ? coeff_cap : default_coeff_cap(g, m);
    if (!in_t1_not_t2(g, m, cap)) {
      x.agreement = Agreement::disagree;
      x.reason = "generator " + render_monomial(m) + " is not in T1 minus T2";
      return x;
    }
    x.beyond_window.push_back(m);
  }
  x.agreement = Agreement::agree_beyond_window;
  return x;
}

}  // namespace edgering
