#ifndef DUALVAR_DEGREE_FORMULAS_HPP
#define DUALVAR_DEGREE_FORMULAS_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace dualvar {

// Ambient dimension and the degrees of the degenerating family
// s*F_d + F_{d1}*F_{d2}: hypersurfaces of degree d = d1 + d2 in P^{n+1}.
struct DegreeProfile {
    int n;
    int d1;
    int d2;

    DegreeProfile(int n_, int d1_, int d2_) : n(n_), d1(d1_), d2(d2_) {
        if (n < 1)
            throw std::invalid_argument("DegreeProfile: need n >= 1");
        if (d1 < 1 || d2 < 1)
            throw std::invalid_argument("DegreeProfile: need d1, d2 >= 1");
    }

    int d() const noexcept { return d1 + d2; }
};

// deg dual(X) = d (d-1)^n for a smooth hypersurface of degree d in P^{n+1},
// with reflexive non-defective duals (d >= 2).
inline Int hypersurface_dual_degree(int n, int d) {
    if (n < 1)
        throw std::invalid_argument("hypersurface_dual_degree: need n >= 1");
    if (d < 2)
        throw std::invalid_argument(
            "hypersurface_dual_degree: a hyperplane has no dual hypersurface");
    return Int(d) * int_pow(Int(d - 1), static_cast<unsigned>(n));
}

// Degree of the dual of a smooth transverse complete intersection of
// multidegree (d_1, ..., d_k) and dimension m in P^{n+1}:
//   deg dual = d_1 ... d_k * [h^m] prod_i (1 - (d_i - 1) h)^{-1},
// the coefficient extracted from the truncated geometric series product.
// Returns nullopt when the coefficient is zero (degenerate dual, e.g. a
// linear space).
inline std::optional<Int> ci_dual_degree(int n, const std::vector<int>& degrees) {
    if (n < 1)
        throw std::invalid_argument("ci_dual_degree: need n >= 1");
    const int k = static_cast<int>(degrees.size());
    if (k < 1 || k > n + 1)
        throw std::invalid_argument("ci_dual_degree: need 1 <= k <= n + 1 forms");
    for (int d : degrees)
        if (d < 1)
            throw std::invalid_argument("ci_dual_degree: degrees must be positive");
    const int m = n + 1 - k; // dim X
    // series[j] = [h^j] prod_i 1/(1 - (d_i - 1) h), truncated at h^m
    std::vector<Int> series(static_cast<std::size_t>(m) + 1, Int(0));
    series[0] = 1;
    for (int d : degrees) {
        const Int e(d - 1);
        if (e == 0)
            continue; // factor is 1
        for (int j = 1; j <= m; ++j)
            series[j] += e * series[j - 1];
    }
    Int total = series[static_cast<std::size_t>(m)];
    for (int d : degrees)
        total *= d;
    if (total == 0)
        return std::nullopt;
    return total;
}

// Degree of the dual of X_{d1} meet X_{d2} (codimension 2, transverse):
//   d1 d2 * sum_{i+j = n-1} (d1-1)^i (d2-1)^j.
inline Int pair_dual_degree(int n, int d1, int d2) {
    if (n < 1)
        throw std::invalid_argument("pair_dual_degree: need n >= 1");
    if (d1 < 1 || d2 < 1)
        throw std::invalid_argument("pair_dual_degree: degrees must be positive");
    Int sum(0);
    for (int i = 0; i <= n - 1; ++i) {
        int j = n - 1 - i;
        sum += int_pow(Int(d1 - 1), static_cast<unsigned>(i)) *
               int_pow(Int(d2 - 1), static_cast<unsigned>(j));
    }
    return Int(d1) * Int(d2) * sum;
}

// Degree of the dual of X_d meet X_{d1} meet X_{d2} (codimension 3,
// transverse, needs n >= 2):
//   d d1 d2 * sum_{i+j+k = n-2} (d-1)^i (d1-1)^j (d2-1)^k.
inline Int triple_dual_degree(int n, int d, int d1, int d2) {
    if (n < 2)
        throw std::invalid_argument("triple_dual_degree: need n >= 2");
    if (d < 1 || d1 < 1 || d2 < 1)
        throw std::invalid_argument("triple_dual_degree: degrees must be positive");
    Int sum(0);
    for (int i = 0; i <= n - 2; ++i)
        for (int j = 0; j <= n - 2 - i; ++j) {
            int k = n - 2 - i - j;
            sum += int_pow(Int(d - 1), static_cast<unsigned>(i)) *
                   int_pow(Int(d1 - 1), static_cast<unsigned>(j)) *
                   int_pow(Int(d2 - 1), static_cast<unsigned>(k));
        }
    return Int(d) * Int(d1) * Int(d2) * sum;
}

// The conservation-of-degree ledger for the limit of duals at s = 0:
//   d(d-1)^n = d1(d1-1)^n + d2(d2-1)^n + N_triple + 2 N_pair,
// where degenerate pieces (hyperplane factors, n = 1 triple locus) contribute
// zero.
struct DecompositionLedger {
    DegreeProfile profile;
    Int lhs;           // d (d-1)^n
    Int dual1;         // d1 (d1-1)^n, 0 when d1 = 1
    Int dual2;         // d2 (d2-1)^n, 0 when d2 = 1
    Int pair;          // N_pair(n; d1, d2)
    Int pair_doubled;  // 2 N_pair
    Int triple;        // N_triple(n; d, d1, d2), 0 when n = 1
    bool balanced;
};

inline DecompositionLedger degree_ledger(const DegreeProfile& p) {
    DecompositionLedger led{p, Int(0), Int(0), Int(0), Int(0), Int(0), Int(0), false};
    led.lhs = hypersurface_dual_degree(p.n, p.d());
    led.dual1 = p.d1 >= 2 ? hypersurface_dual_degree(p.n, p.d1) : Int(0);
    led.dual2 = p.d2 >= 2 ? hypersurface_dual_degree(p.n, p.d2) : Int(0);
    led.pair = pair_dual_degree(p.n, p.d1, p.d2);
    led.pair_doubled = 2 * led.pair;
    led.triple = p.n >= 2 ? triple_dual_degree(p.n, p.d(), p.d1, p.d2) : Int(0);
    led.balanced = led.lhs == led.dual1 + led.dual2 + led.triple + led.pair_doubled;
    return led;
}

inline bool verify_degree_identity(const DegreeProfile& p) {
    return degree_ledger(p).balanced;
}

// Two recurrences tying the correction terms across ambient dimensions
// (n >= 3 so both sides stay in range):
//   (d-1) N_triple(n-1) = N_triple(n) - d N_pair(n-1)
//   N_triple(n) + 2 N_pair(n)
//     = (d-1) (N_triple(n-1) + 2 N_pair(n-1))
//       + d1 d2 ((d1-1)^{n-1} + (d2-1)^{n-1})
inline bool verify_degree_recurrence(const DegreeProfile& p) {
    if (p.n < 3)
        throw std::invalid_argument("verify_degree_recurrence: need n >= 3");
    const int n = p.n, d = p.d(), d1 = p.d1, d2 = p.d2;
    const Int t_n = triple_dual_degree(n, d, d1, d2);
    const Int t_nm1 = triple_dual_degree(n - 1, d, d1, d2);
    const Int p_n = pair_dual_degree(n, d1, d2);
    const Int p_nm1 = pair_dual_degree(n - 1, d1, d2);
    const bool first = Int(d - 1) * t_nm1 == t_n - Int(d) * p_nm1;
    const Int tail = Int(d1) * Int(d2) *
                     (int_pow(Int(d1 - 1), static_cast<unsigned>(n - 1)) +
                      int_pow(Int(d2 - 1), static_cast<unsigned>(n - 1)));
    const bool second = t_n + 2 * p_n == Int(d - 1) * (t_nm1 + 2 * p_nm1) + tail;
    return first && second;
}

} // namespace dualvar

#endif
