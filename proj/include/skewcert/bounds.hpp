#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace skewcert {

using BigInt = boost::multiprecision::cpp_int;

/// (sum ell)! / prod ell_r!  — the family-size bound under the multinomial
/// condition system.
BigInt bound_multinomial(const std::vector<int>& ell);

/// prod_{a<b}(ell_a+ell_b)! / (prod ell_r!)^{k-1} — the weaker bound that
/// needs only pairwise disjointness. Coincides with bound_multinomial at k=2.
BigInt bound_pairwise(const std::vector<int>& ell);

/// [(sum ell) - k t]! / prod (ell_r - t)! ; t=0 reduces to bound_multinomial.
/// Throws InvalidThreshold when some ell_r < t.
BigInt bound_multinomial_threshold(const std::vector<int>& ell, int t);

/// prod_{a<b}(ell_a+ell_b-2t)! / (prod (ell_r-t)!)^{k-1} ; t=0 reduces to
/// bound_pairwise. Throws InvalidThreshold when some ell_r < t.
BigInt bound_pairwise_threshold(const std::vector<int>& ell, int t);

/// Binomial coefficient by Pascal's rule (pure additions). Kept separate from
/// the factorial-ratio routes above so the two can cross-check each other.
BigInt binomial_pascal(int n, int k);

BigInt factorial(int n);

}  // namespace skewcert
