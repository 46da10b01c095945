#include "skewcert/bounds.hpp"

#include <stdexcept>

#include "skewcert/errors.hpp"
#include "skewcert/families.hpp"

namespace skewcert {

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative value");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt bound_multinomial(const std::vector<int>& ell) {
    int total = 0;
    BigInt denom = 1;
    for (int l : ell) {
        total += l;
        denom *= factorial(l);
    }
    return factorial(total) / denom;
}

BigInt bound_pairwise(const std::vector<int>& ell) {
    const int k = static_cast<int>(ell.size());
    BigInt num = 1;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) num *= factorial(ell[a] + ell[b]);
    BigInt denom_base = 1;
    for (int l : ell) denom_base *= factorial(l);
    BigInt denom = 1;
    for (int i = 0; i + 1 < k; ++i) denom *= denom_base;
    return num / denom;
}

BigInt bound_multinomial_threshold(const std::vector<int>& ell, int t) {
    validate_threshold(ell, t);
    const int k = static_cast<int>(ell.size());
    int total = 0;
    BigInt denom = 1;
    for (int l : ell) {
        total += l;
        denom *= factorial(l - t);
    }
    return factorial(total - k * t) / denom;
}

BigInt bound_pairwise_threshold(const std::vector<int>& ell, int t) {
    validate_threshold(ell, t);
    const int k = static_cast<int>(ell.size());
    BigInt num = 1;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) num *= factorial(ell[a] + ell[b] - 2 * t);
    BigInt denom_base = 1;
    for (int l : ell) denom_base *= factorial(l - t);
    BigInt denom = 1;
    for (int i = 0; i + 1 < k; ++i) denom *= denom_base;
    return num / denom;
}

BigInt binomial_pascal(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j >= 1; --j) row[j] += row[j - 1];
    return row[k];
}

}  // namespace skewcert
