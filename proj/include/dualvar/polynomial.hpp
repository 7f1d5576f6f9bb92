#ifndef DUALVAR_POLYNOMIAL_HPP
#define DUALVAR_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "varset.hpp"

namespace dualvar {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
    if (den == 0)
        throw std::invalid_argument("make_rat: zero denominator");
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    if (e == 0)
        return Rat(1);
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r; // num/den coprime => powers coprime, already canonical
}

struct Term {
    Monomial mono;
    Rat coeff;
};

struct HomogeneityReport {
    bool homogeneous = false;
    std::optional<std::int64_t> degree; // unset for the zero polynomial
};

// Sparse multivariate polynomial with exact rational coefficients over a fixed
// VarSet. Terms are kept in descending grevlex order with no zero coefficients,
// so structural equality is mathematical equality and printing is canonical.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero(VarSetPtr vars) { return Polynomial(std::move(vars), {}); }

    static Polynomial constant(VarSetPtr vars, Rat c) {
        std::vector<Term> t;
        if (c != 0)
            t.push_back({Monomial(vars->size()), std::move(c)});
        return Polynomial(std::move(vars), std::move(t));
    }

    static Polynomial variable(VarSetPtr vars, std::size_t i) {
        std::vector<Term> t;
        t.push_back({Monomial::variable(vars->size(), i), Rat(1)});
        return Polynomial(std::move(vars), std::move(t));
    }

    static Polynomial variable(const VarSetPtr& vars, const std::string& name) {
        return variable(vars, vars->index(name));
    }

    // Builds canonical form from arbitrary (monomial, coefficient) pairs.
    static Polynomial from_terms(VarSetPtr vars, std::vector<Term> terms) {
        for (const auto& t : terms)
            if (t.mono.nvars() != vars->size())
                throw std::invalid_argument("Polynomial: monomial width mismatch");
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
            return grevlex_less(b.mono, a.mono); // descending
        });
        std::vector<Term> out;
        out.reserve(terms.size());
        for (auto& t : terms) {
            if (!out.empty() && out.back().mono == t.mono)
                out.back().coeff += t.coeff;
            else
                out.push_back(std::move(t));
            if (!out.empty() && out.back().coeff == 0)
                out.pop_back();
        }
        return Polynomial(std::move(vars), std::move(out));
    }

    const VarSetPtr& vars() const noexcept { return vars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
    }

    // Leading data under the canonical grevlex order.
    const Term& leading_term() const {
        if (terms_.empty())
            throw std::invalid_argument("Polynomial: zero polynomial has no leading term");
        return terms_.front();
    }

    std::int64_t total_degree() const { // -1 for zero
        std::int64_t d = -1;
        for (const auto& t : terms_)
            d = std::max(d, t.mono.degree());
        return d;
    }

    std::int64_t degree_in(std::size_t var) const {
        std::int64_t d = 0;
        for (const auto& t : terms_)
            d = std::max<std::int64_t>(d, t.mono[var]);
        return d;
    }

    std::int64_t degree_in_block(const std::vector<std::size_t>& block) const {
        std::int64_t d = terms_.empty() ? -1 : 0;
        for (const auto& t : terms_)
            d = std::max(d, t.mono.degree_in(block));
        return d;
    }

    bool depends_on(std::size_t var) const {
        for (const auto& t : terms_)
            if (t.mono.depends_on(var))
                return true;
        return false;
    }

    HomogeneityReport homogeneity(const std::vector<std::size_t>& block) const {
        HomogeneityReport rep;
        if (terms_.empty()) {
            rep.homogeneous = true;
            return rep;
        }
        std::int64_t d = terms_[0].mono.degree_in(block);
        for (const auto& t : terms_)
            if (t.mono.degree_in(block) != d)
                return rep;
        rep.homogeneous = true;
        rep.degree = d;
        return rep;
    }

    HomogeneityReport homogeneity() const {
        std::vector<std::size_t> all(vars_->size());
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = i;
        return homogeneity(all);
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_)
            t.coeff = -t.coeff;
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        require_same_vars(o);
        std::vector<Term> out;
        out.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            if (terms_[i].mono == o.terms_[j].mono) {
                Rat c = terms_[i].coeff + o.terms_[j].coeff;
                if (c != 0)
                    out.push_back({terms_[i].mono, std::move(c)});
                ++i, ++j;
            } else if (grevlex_less(o.terms_[j].mono, terms_[i].mono)) {
                out.push_back(terms_[i++]);
            } else {
                out.push_back(o.terms_[j++]);
            }
        }
        for (; i < terms_.size(); ++i)
            out.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j)
            out.push_back(o.terms_[j]);
        return Polynomial(vars_, std::move(out));
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        require_same_vars(o);
        if (is_zero() || o.is_zero())
            return zero(vars_);
        std::map<Monomial, Rat, bool (*)(const Monomial&, const Monomial&)> acc(&grevlex_less);
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) {
                Monomial m = a.mono * b.mono;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), a.coeff * b.coeff);
                else
                    it->second += a.coeff * b.coeff;
            }
        std::vector<Term> out;
        out.reserve(acc.size());
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (it->second != 0)
                out.push_back({it->first, it->second});
        return Polynomial(vars_, std::move(out));
    }

    Polynomial operator*(const Rat& c) const {
        if (c == 0)
            return zero(vars_);
        Polynomial r(*this);
        for (auto& t : r.terms_)
            t.coeff *= c;
        return r;
    }

    Polynomial pow(unsigned int e) const {
        Polynomial r = constant(vars_, 1);
        Polynomial b = *this;
        while (e > 0) {
            if (e & 1u)
                r = r * b;
            e >>= 1u;
            if (e)
                b = b * b;
        }
        return r;
    }

    Polynomial derivative(std::size_t var) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            auto e = t.mono[var];
            if (e == 0)
                continue;
            out.push_back({t.mono.with_exponent(var, e - 1), t.coeff * Rat(e)});
        }
        // dropping/shrinking one slot keeps descending grevlex order intact
        // only degree-by-degree; rebuild to stay canonical
        return from_terms(vars_, std::move(out));
    }

    // Substitute a rational value for one variable.
    Polynomial evaluate(std::size_t var, const Rat& value) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            auto e = t.mono[var];
            Rat c = t.coeff;
            if (e != 0)
                c *= rat_pow(value, static_cast<unsigned long>(e));
            if (c != 0)
                out.push_back({t.mono.with_exponent(var, 0), std::move(c)});
        }
        return from_terms(vars_, std::move(out));
    }

    // Full evaluation at a rational point (one value per variable).
    Rat evaluate_point(const std::vector<Rat>& point) const {
        if (point.size() != vars_->size())
            throw std::invalid_argument("evaluate_point: wrong point size");
        Rat sum(0);
        for (const auto& t : terms_) {
            Rat v = t.coeff;
            for (std::size_t i = 0; i < point.size(); ++i) {
                auto e = t.mono[i];
                if (e != 0)
                    v *= rat_pow(point[i], static_cast<unsigned long>(e));
            }
            sum += v;
        }
        return sum;
    }

    bool operator==(const Polynomial& o) const {
        if (!same_varset(vars_, o.vars_) || terms_.size() != o.terms_.size())
            return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
                return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string() const {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            Rat c = t.coeff;
            bool neg = c < 0;
            if (first) {
                if (neg)
                    os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            if (neg)
                c = -c;
            bool unit_mono = t.mono.is_unit();
            if (c != 1 || unit_mono) {
                os << c.get_num().get_str();
                if (c.get_den() != 1)
                    os << "/" << c.get_den().get_str();
                if (!unit_mono)
                    os << "*";
            }
            bool first_var = true;
            for (std::size_t i = 0; i < vars_->size(); ++i) {
                auto e = t.mono[i];
                if (e == 0)
                    continue;
                if (!first_var)
                    os << "*";
                first_var = false;
                os << vars_->name(i);
                if (e > 1)
                    os << "^" << e;
            }
        }
        return os.str();
    }

private:
    Polynomial(VarSetPtr vars, std::vector<Term> sorted_terms)
        : vars_(std::move(vars)), terms_(std::move(sorted_terms)) {}

    void require_same_vars(const Polynomial& o) const {
        if (!same_varset(vars_, o.vars_))
            throw std::invalid_argument("Polynomial: mismatched VarSets");
    }

    VarSetPtr vars_;
    std::vector<Term> terms_;

    friend Polynomial change_vars(const Polynomial&, const VarSetPtr&);
};

inline Polynomial operator*(const Rat& c, const Polynomial& p) { return p * c; }

// Remap a polynomial onto another VarSet by variable name. Works as both lift
// (target is a superset) and restriction (every variable actually used must
// exist in the target).
inline Polynomial change_vars(const Polynomial& p, const VarSetPtr& target) {
    const auto& src = *p.vars();
    std::vector<std::optional<std::size_t>> map(src.size());
    for (std::size_t i = 0; i < src.size(); ++i)
        map[i] = target->index_of(src.name(i));
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        std::vector<std::int32_t> e(target->size(), 0);
        for (std::size_t i = 0; i < src.size(); ++i) {
            auto x = t.mono[i];
            if (x == 0)
                continue;
            if (!map[i])
                throw std::invalid_argument("change_vars: variable '" + src.name(i) +
                                            "' missing from target VarSet");
            e[*map[i]] = x;
        }
        out.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(target, std::move(out));
}

// Scale so that all coefficients are integers with gcd 1 and the grevlex
// leading coefficient is positive. The canonical representative of the ray
// { c*p : c in Q* }, used for all "equal up to nonzero scalar" comparisons.
inline Polynomial canonical_scalar_form(const Polynomial& p) {
    if (p.is_zero())
        return p;
    Int den_lcm(1), num_gcd(0);
    for (const auto& t : p.terms())
        den_lcm = int_lcm(den_lcm, t.coeff.get_den());
    for (const auto& t : p.terms())
        num_gcd = int_gcd(num_gcd, t.coeff.get_num() * (den_lcm / t.coeff.get_den()));
    Rat scale = make_rat(den_lcm, num_gcd);
    if (p.leading_term().coeff < 0)
        scale = -scale;
    return p * scale;
}

inline bool equal_up_to_scalar(const Polynomial& a, const Polynomial& b) {
    return canonical_scalar_form(a) == canonical_scalar_form(b);
}

// Exact multivariate division: returns a/b when b divides a, nullopt when it
// does not. Successive leading-term division under grevlex; for an exact
// quotient the leading term of the running remainder is always divisible, so
// the first failure certifies non-divisibility.
inline std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
    if (!same_varset(a.vars(), b.vars()))
        throw std::invalid_argument("exact_divide: mismatched VarSets");
    if (b.is_zero())
        throw std::invalid_argument("exact_divide: division by zero polynomial");
    if (a.is_zero())
        return a;
    Polynomial h = a;
    std::vector<Term> quotient;
    const Term& bl = b.leading_term();
    while (!h.is_zero()) {
        const Term& hl = h.leading_term();
        if (!bl.mono.divides(hl.mono))
            return std::nullopt;
        Term q{hl.mono.divide_by(bl.mono), hl.coeff / bl.coeff};
        h = h - (b * Polynomial::from_terms(a.vars(), {q}));
        quotient.push_back(std::move(q));
    }
    return Polynomial::from_terms(a.vars(), std::move(quotient));
}

// Largest k with b^k | a. Requires a nonzero and b non-constant (otherwise the
// question has no finite answer).
inline int divisibility_multiplicity(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero())
        throw std::invalid_argument("divisibility_multiplicity: zero dividend");
    if (b.is_constant())
        throw std::invalid_argument("divisibility_multiplicity: constant divisor");
    int k = 0;
    Polynomial cur = a;
    while (auto q = exact_divide(cur, b)) {
        cur = *q;
        ++k;
    }
    return k;
}

struct ParameterContent {
    int power = 0;
    Polynomial primitive;
};

// Factor out the largest power of one variable: p = var^power * primitive.
inline ParameterContent strip_parameter_content(const Polynomial& p, std::size_t var) {
    if (p.is_zero())
        throw std::invalid_argument("strip_parameter_content: zero polynomial");
    std::int32_t k = std::numeric_limits<std::int32_t>::max();
    for (const auto& t : p.terms())
        k = std::min(k, t.mono[var]);
    ParameterContent out;
    out.power = k;
    if (k == 0) {
        out.primitive = p;
        return out;
    }
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms())
        terms.push_back({t.mono.with_exponent(var, t.mono[var] - k), t.coeff});
    out.primitive = Polynomial::from_terms(p.vars(), std::move(terms));
    return out;
}

namespace detail {

// Dense univariate polynomials over Q: coefficients by ascending exponent,
// no trailing zeros, {} is the zero polynomial.
using UPoly = std::vector<Rat>;

inline void upoly_trim(UPoly& a) {
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline UPoly upoly_rem(UPoly a, const UPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            a[shift + i] -= q * b[i];
        a.pop_back(); // leading entry cancels exactly
        upoly_trim(a);
    }
    return a;
}

inline void upoly_monic(UPoly& a) {
    if (a.empty() || a.back() == 1)
        return;
    Rat lead = a.back();
    for (auto& c : a)
        c /= lead;
}

inline UPoly upoly_gcd(UPoly a, UPoly b) {
    upoly_trim(a);
    upoly_trim(b);
    while (!b.empty()) {
        a = upoly_rem(std::move(a), b);
        std::swap(a, b);
    }
    upoly_monic(a);
    return a;
}

inline UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty())
        return {};
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

// Exact quotient a / b, nullopt when the division leaves a remainder.
inline std::optional<UPoly> upoly_div(UPoly a, const UPoly& b) {
    if (b.empty())
        throw std::invalid_argument("upoly_div: division by zero");
    upoly_trim(a);
    if (a.empty())
        return UPoly{};
    if (a.size() < b.size())
        return std::nullopt;
    UPoly q(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            a[shift + i] -= c * b[i];
        a.pop_back();
        upoly_trim(a);
    }
    if (!a.empty())
        return std::nullopt;
    return q;
}

inline UPoly upoly_lcm(const UPoly& a, const UPoly& b) {
    UPoly g = upoly_gcd(a, b);
    auto q = upoly_div(a, g);
    UPoly l = upoly_mul(*q, b);
    upoly_monic(l);
    return l;
}

inline Rat upoly_eval(const UPoly& a, const Rat& x) {
    Rat r(0);
    for (std::size_t i = a.size(); i-- > 0;)
        r = r * x + a[i];
    return r;
}

} // namespace detail

struct VariableContent {
    Polynomial content;   // univariate in var, monic
    Polynomial primitive; // p / content
};

// Full univariate content: view p in k[var][other vars] and factor out the
// gcd of its coefficient polynomials, so p = content(var) * primitive with
// the primitive part having coprime coefficients. Subsumes the monomial
// content var^k; the gcd runs over Q by plain Euclid, which the small
// var-degrees arising here keep cheap.
inline VariableContent strip_variable_content(const Polynomial& p, std::size_t var) {
    if (p.is_zero())
        throw std::invalid_argument("strip_variable_content: zero polynomial");
    // coefficient vectors in var, keyed by the var-free monomial part
    std::map<Monomial, detail::UPoly, bool (*)(const Monomial&, const Monomial&)>
        groups(grevlex_less);
    for (const auto& t : p.terms()) {
        auto& vec = groups[t.mono.with_exponent(var, 0)];
        std::size_t e = static_cast<std::size_t>(t.mono[var]);
        if (vec.size() <= e)
            vec.resize(e + 1, Rat(0));
        vec[e] = t.coeff;
    }
    detail::UPoly g;
    for (auto& [mono, vec] : groups) {
        g = detail::upoly_gcd(std::move(g), vec);
        if (g.size() == 1)
            break;
    }
    VariableContent out;
    if (g.size() <= 1) {
        out.content = Polynomial::constant(p.vars(), 1);
        out.primitive = p;
        return out;
    }
    std::vector<Term> cterms;
    for (std::size_t e = 0; e < g.size(); ++e)
        if (g[e] != 0)
            cterms.push_back({Monomial::variable(p.vars()->size(), var,
                                                 static_cast<std::int32_t>(e)),
                              g[e]});
    out.content = Polynomial::from_terms(p.vars(), std::move(cterms));
    auto q = exact_divide(p, out.content);
    if (!q)
        throw std::logic_error("strip_variable_content: content does not divide");
    out.primitive = std::move(*q);
    return out;
}

} // namespace dualvar

#endif
