#ifndef DUALVAR_TESTS_RANDOM_POLYS_HPP
#define DUALVAR_TESTS_RANDOM_POLYS_HPP

// Seeded generators shared by the property suites.

#include <cstdint>
#include <random>
#include <vector>

#include <dualvar/dualvar.hpp>

namespace testutil {

inline dualvar::Rat random_rat(std::mt19937_64& rng, int num_range = 9, int den_range = 4) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return dualvar::make_rat(dualvar::Int(num(rng)), dualvar::Int(den(rng)));
}

inline dualvar::Polynomial random_poly(const dualvar::VarSetPtr& vars, std::mt19937_64& rng,
                                       int max_terms = 6, int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<std::int32_t> expo(0, max_exp);
    std::vector<dualvar::Term> terms;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        std::vector<std::int32_t> e(vars->size());
        for (auto& x : e)
            x = expo(rng);
        terms.push_back({dualvar::Monomial(std::move(e)), random_rat(rng)});
    }
    return dualvar::Polynomial::from_terms(vars, std::move(terms));
}

inline dualvar::Polynomial random_nonzero_poly(const dualvar::VarSetPtr& vars,
                                               std::mt19937_64& rng, int max_terms = 6,
                                               int max_exp = 3) {
    for (;;) {
        dualvar::Polynomial p = random_poly(vars, rng, max_terms, max_exp);
        if (!p.is_zero())
            return p;
    }
}

// Dense random form of the given degree; coefficients may vanish, the form
// itself is redrawn until nonzero.
inline dualvar::Polynomial random_homogeneous(const dualvar::VarSetPtr& vars, int degree,
                                              std::mt19937_64& rng) {
    for (;;) {
        std::vector<dualvar::Term> terms;
        for (auto& m : dualvar::monomials_of_degree(vars->size(), degree))
            terms.push_back({m, random_rat(rng)});
        dualvar::Polynomial p = dualvar::Polynomial::from_terms(vars, std::move(terms));
        if (!p.is_zero())
            return p;
    }
}

} // namespace testutil

#endif
