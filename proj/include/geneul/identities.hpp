#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "geneul/bignum.hpp"
#include "geneul/words.hpp"

namespace geneul {

// One failing instance: the parameter tuple plus both exact side values
// as decimal strings, so failures are debuggable without reruns.
struct Counterexample {
  nlohmann::ordered_json params;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::string identity;
  std::size_t grid_size = 0;
  std::vector<Counterexample> counterexamples;

  bool passed() const { return counterexamples.empty(); }

  // { "identity", "status": "pass"|"fail", "grid_size",
  //   "counterexamples": [{ "params", "lhs", "rhs" }] }
  nlohmann::ordered_json to_json() const;
};

// All (a, b, r, p) with a in [1, a_max], b in [0, a), r in [1, r_max],
// p in [1, p_max], in that nesting order.
std::vector<Params> make_grid(int a_max, int r_max, int p_max);

IdentityReport merge_reports(const std::string& identity,
                             const std::vector<IdentityReport>& parts);

// C(an+b, r)^p = sum_i A_{a,b,r}(p,i) C(n+rp-i, rp) for n in [0, n_max].
IdentityReport check_worpitzky(const Params& params, long long n_max);

// sum_{k=0}^{n} C(ak+b, r)^p = sum_i A_{a,b,r}(p,i) C(n+1+rp-i, rp+1)
// for n in [0, n_max].
IdentityReport check_sum_identity(const Params& params, long long n_max);

// sum_i A_{a,b,r}(p,i) = a^{rp} (rp)! / (r!)^p.
IdentityReport check_row_sum(const Params& params);

// Closed form vs exhaustive count: the generalized Eulerian row equals
// the weak-descent distribution entrywise at every grid point.
IdentityReport check_oracle_equivalence(
    const std::vector<Params>& grid,
    std::uint64_t budget = kDefaultEnumerationBudget);

// Non-terminal closed form vs exhaustive non-terminal counts. Runs on
// the threshold-0 points of the grid.
IdentityReport check_nonterminal_counts(
    const std::vector<Params>& grid,
    std::uint64_t budget = kDefaultEnumerationBudget);

// The two column-assignment counts behind the summed identity and the
// Worpitzky identity, each a Vandermonde-style convolution:
//   sum_l C(n+1, l) C(rp-i, l-i-1) = C(n+1+rp-i, rp+1)
//   sum_l C(n, l-1) C(rp-i, l-i-1) = C(n+rp-i, rp)
IdentityReport check_column_count(long long n, int rp, int i);

// All (n, rp, i) with n in [0, n_max], rp in [0, rp_max], i in [0, rp].
IdentityReport check_column_counts(long long n_max, int rp_max);

// Segmentation bijection suite per grid point and variant: word -> SCM
// round trips, no extraneous walls in canonical segmentations, and
// descent classes equinumerous to segment-count classes.
IdentityReport check_scm_bijection(
    const std::vector<Params>& grid,
    std::uint64_t budget = kDefaultEnumerationBudget);

// C(an+b, r)^p = C(a(n+shift)+reduced, r)^p for b in [0, threshold_max],
// n in [0, n_max].
IdentityReport check_b_normalization(int colors, int threshold_max,
                                     int multiplicity, int symbols,
                                     long long n_max);

}  // namespace geneul
