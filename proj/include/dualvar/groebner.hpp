#ifndef DUALVAR_GROEBNER_HPP
#define DUALVAR_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "term_order.hpp"

namespace dualvar {

struct GroebnerStats {
    std::uint64_t pairs_considered = 0;
    std::uint64_t pairs_skipped = 0; // product + chain criteria
    std::uint64_t reductions_to_zero = 0;
    std::uint64_t basis_inserted = 0;
    std::uint64_t basis_final = 0;
    std::int64_t max_total_degree = 0;

    void absorb(const GroebnerStats& o) {
        pairs_considered += o.pairs_considered;
        pairs_skipped += o.pairs_skipped;
        reductions_to_zero += o.reductions_to_zero;
        basis_inserted += o.basis_inserted;
        basis_final += o.basis_final;
        max_total_degree = std::max(max_total_degree, o.max_total_degree);
    }
};

struct GroebnerBudget {
    std::size_t max_basis_size = 20000;
    std::int64_t max_degree = 60;
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what_limit, const GroebnerStats& stats)
        : std::runtime_error("Groebner budget exceeded: " + what_limit), stats_(stats) {}
    const GroebnerStats& stats() const noexcept { return stats_; }

private:
    GroebnerStats stats_;
};

struct GbOptions {
    GroebnerBudget budget{};
    TermOrder::Kind inner = TermOrder::Kind::grevlex; // within-block order for eliminations
    GroebnerStats* stats = nullptr;                   // optional cross-call accumulator
};

// Finitely generated ideal, represented by its generator list (zeros dropped;
// an empty list is the zero ideal).
struct Ideal {
    VarSetPtr vars;
    std::vector<Polynomial> gens;

    static Ideal make(VarSetPtr vars, std::vector<Polynomial> gens) {
        std::vector<Polynomial> kept;
        kept.reserve(gens.size());
        for (auto& g : gens) {
            if (!same_varset(g.vars(), vars))
                throw std::invalid_argument("Ideal: generator over mismatched VarSet");
            if (!g.is_zero())
                kept.push_back(std::move(g));
        }
        return Ideal{std::move(vars), std::move(kept)};
    }
};

namespace detail {

// Term vector sorted descending under one fixed TermOrder; parallel arrays for
// locality. The Groebner engine works on integer-primitive ZVecs and converts
// back to rational polynomials only at the boundary.
template <class C>
struct TVec {
    std::vector<Monomial> ms;
    std::vector<C> cs;
    bool empty() const noexcept { return ms.empty(); }
    std::size_t size() const noexcept { return ms.size(); }
    std::int64_t max_degree() const {
        std::int64_t d = 0;
        for (const auto& m : ms)
            d = std::max(d, m.degree());
        return d;
    }
};

using ZVec = TVec<Int>;
using QVec = TVec<Rat>;

// a*(ma o f) + b*(mb o g), merged descending under ord; null multiplier = 1.
template <class C>
TVec<C> combine(const TVec<C>& f, const C& a, const Monomial* ma, const TVec<C>& g,
                const C& b, const Monomial* mb, const TermOrder& ord) {
    TVec<C> r;
    r.ms.reserve(f.size() + g.size());
    r.cs.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    Monomial fm, gm;
    bool fm_ok = false, gm_ok = false;
    while (i < f.size() && j < g.size()) {
        if (!fm_ok) {
            fm = ma ? f.ms[i] * *ma : f.ms[i];
            fm_ok = true;
        }
        if (!gm_ok) {
            gm = mb ? g.ms[j] * *mb : g.ms[j];
            gm_ok = true;
        }
        if (fm == gm) {
            C c = a * f.cs[i] + b * g.cs[j];
            if (c != 0) {
                r.ms.push_back(fm);
                r.cs.push_back(std::move(c));
            }
            ++i, ++j;
            fm_ok = gm_ok = false;
        } else if (ord.less(gm, fm)) {
            C c = a * f.cs[i];
            if (c != 0) {
                r.ms.push_back(fm);
                r.cs.push_back(std::move(c));
            }
            ++i;
            fm_ok = false;
        } else {
            C c = b * g.cs[j];
            if (c != 0) {
                r.ms.push_back(gm);
                r.cs.push_back(std::move(c));
            }
            ++j;
            gm_ok = false;
        }
    }
    for (; i < f.size(); ++i) {
        C c = a * f.cs[i];
        if (c != 0) {
            r.ms.push_back(ma ? f.ms[i] * *ma : f.ms[i]);
            r.cs.push_back(std::move(c));
        }
    }
    for (; j < g.size(); ++j) {
        C c = b * g.cs[j];
        if (c != 0) {
            r.ms.push_back(mb ? g.ms[j] * *mb : g.ms[j]);
            r.cs.push_back(std::move(c));
        }
    }
    return r;
}

inline ZVec zvec_from(const Polynomial& p, const TermOrder& ord) {
    std::vector<std::size_t> idx(p.terms().size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return ord.less(p.terms()[b].mono, p.terms()[a].mono);
    });
    Int den_lcm(1);
    for (const auto& t : p.terms())
        den_lcm = int_lcm(den_lcm, t.coeff.get_den());
    ZVec v;
    v.ms.reserve(idx.size());
    v.cs.reserve(idx.size());
    for (auto i : idx) {
        const auto& t = p.terms()[i];
        v.ms.push_back(t.mono);
        v.cs.push_back(t.coeff.get_num() * (den_lcm / t.coeff.get_den()));
    }
    return v;
}

inline void strip_content(ZVec& v) {
    if (v.empty())
        return;
    Int g(0);
    for (const auto& c : v.cs) {
        g = int_gcd(g, c);
        if (g == 1)
            break;
    }
    if (v.cs[0] < 0)
        g = -g;
    if (g != 1)
        for (auto& c : v.cs)
            c /= g;
}

inline Polynomial polynomial_from(const ZVec& v, const VarSetPtr& vars) {
    std::vector<Term> terms;
    terms.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        terms.push_back({v.ms[i], Rat(v.cs[i])});
    return Polynomial::from_terms(vars, std::move(terms));
}

// Full multivariate division remainder over the integers: fraction-free steps
// h <- a*h - b*(m o g), with already-emitted remainder terms rescaled by a so
// the invariant "result is an integer multiple of the true remainder" holds.
inline ZVec reduce_full(ZVec h, const std::vector<const ZVec*>& reducers,
                        const TermOrder& ord) {
    ZVec rem;
    int scale_events = 0;
    while (!h.empty()) {
        const ZVec* g = nullptr;
        for (const ZVec* cand : reducers) {
            if (cand->ms[0].divides(h.ms[0])) {
                g = cand;
                break;
            }
        }
        if (!g) {
            rem.ms.push_back(std::move(h.ms[0]));
            rem.cs.push_back(std::move(h.cs[0]));
            h.ms.erase(h.ms.begin());
            h.cs.erase(h.cs.begin());
            continue;
        }
        const Int& lch = h.cs[0];
        const Int& lcg = g->cs[0]; // basis elements keep positive lead
        Int gamma = int_gcd(lch, lcg);
        Int a = lcg / gamma;
        Int b = lch / gamma;
        Monomial m = h.ms[0].divide_by(g->ms[0]);
        h = combine(h, a, nullptr, *g, Int(-b), &m, ord);
        if (a != 1) {
            for (auto& c : rem.cs)
                c *= a;
            if (++scale_events % 64 == 0 && !rem.empty()) {
                // joint content strip keeps coefficient growth in check
                Int cg(0);
                for (const auto& c : rem.cs) {
                    cg = int_gcd(cg, c);
                    if (cg == 1)
                        break;
                }
                if (cg != 1)
                    for (const auto& c : h.cs) {
                        cg = int_gcd(cg, c);
                        if (cg == 1)
                            break;
                    }
                if (cg != 1 && cg != 0) {
                    for (auto& c : rem.cs)
                        c /= cg;
                    for (auto& c : h.cs)
                        c /= cg;
                }
            }
        }
    }
    strip_content(rem);
    return rem;
}

class BuchbergerEngine {
public:
    BuchbergerEngine(TermOrder ord, GroebnerBudget budget)
        : ord_(std::move(ord)), budget_(budget), queue_(PairCmp{&ord_}) {}

    GroebnerStats stats;

    void add_generator(ZVec v) {
        strip_content(v);
        if (v.empty() || unit_)
            return;
        nvars_ = v.ms[0].nvars();
        if (v.ms[0].is_unit()) {
            unit_ = true;
            return;
        }
        insert(std::move(v));
    }

    void run() {
        if (unit_)
            return;
        while (!queue_.empty()) {
            Pair p = *queue_.begin();
            queue_.erase(queue_.begin());
            pending_.erase({p.i, p.j});
            ++stats.pairs_considered;
            if (p.lcm.degree() ==
                basis_[p.i].ms[0].degree() + basis_[p.j].ms[0].degree()) {
                ++stats.pairs_skipped; // coprime leading monomials
                continue;
            }
            if (chain_criterion(p)) {
                ++stats.pairs_skipped;
                continue;
            }
            ZVec s = spair(p);
            ZVec r = reduce_full(std::move(s), reducer_view(), ord_);
            if (r.empty()) {
                ++stats.reductions_to_zero;
                continue;
            }
            if (r.ms[0].is_unit()) {
                unit_ = true;
                return;
            }
            insert(std::move(r));
        }
    }

    bool is_unit() const noexcept { return unit_; }

    // Minimal, fully tail-reduced basis, integer-primitive, sorted by leading
    // monomial ascending under the engine order.
    std::vector<ZVec> reduced_basis() {
        std::vector<ZVec> out;
        if (unit_) {
            ZVec one;
            one.ms.push_back(Monomial(nvars_));
            one.cs.push_back(Int(1));
            out.push_back(std::move(one));
            stats.basis_final = 1;
            return out;
        }
        std::vector<std::size_t> kept;
        for (auto idx : sorted_) { // ascending leading monomials
            bool redundant = false;
            for (auto k : kept)
                if (basis_[k].ms[0].divides(basis_[idx].ms[0])) {
                    redundant = true;
                    break;
                }
            if (!redundant)
                kept.push_back(idx);
        }
        for (std::size_t pos = 0; pos < kept.size(); ++pos) {
            std::vector<const ZVec*> others;
            others.reserve(kept.size() - 1);
            for (std::size_t q = 0; q < kept.size(); ++q)
                if (q != pos)
                    others.push_back(&basis_[kept[q]]);
            out.push_back(reduce_full(basis_[kept[pos]], others, ord_));
        }
        stats.basis_final = out.size();
        return out;
    }

private:
    struct Pair {
        std::uint32_t i, j;
        Monomial lcm;
        std::int64_t deg;
    };
    struct PairCmp {
        const TermOrder* ord;
        bool operator()(const Pair& x, const Pair& y) const {
            if (x.deg != y.deg)
                return x.deg < y.deg;
            if (ord->less(x.lcm, y.lcm))
                return true;
            if (ord->less(y.lcm, x.lcm))
                return false;
            if (x.i != y.i)
                return x.i < y.i;
            return x.j < y.j;
        }
    };

    void insert(ZVec v) {
        std::int64_t deg = v.max_degree();
        stats.max_total_degree = std::max(stats.max_total_degree, deg);
        if (deg > budget_.max_degree)
            throw BudgetExceeded("max_degree " + std::to_string(budget_.max_degree), stats);
        if (basis_.size() + 1 > budget_.max_basis_size)
            throw BudgetExceeded("max_basis_size " + std::to_string(budget_.max_basis_size),
                                 stats);
        std::uint32_t idx = static_cast<std::uint32_t>(basis_.size());
        basis_.push_back(std::move(v));
        ++stats.basis_inserted;
        const Monomial& lm = basis_[idx].ms[0];
        auto pos = std::lower_bound(sorted_.begin(), sorted_.end(), idx,
                                    [&](std::uint32_t a, std::uint32_t b) {
                                        return ord_.less(basis_[a].ms[0], basis_[b].ms[0]);
                                    });
        sorted_.insert(pos, idx);
        for (std::uint32_t t = 0; t < idx; ++t) {
            Pair p{t, idx, Monomial::lcm(basis_[t].ms[0], lm), 0};
            p.deg = p.lcm.degree();
            queue_.insert(p);
            pending_.insert({t, idx});
        }
        reducers_dirty_ = true;
    }

    // Discard (i, j) when some k has lm_k | lcm(i, j) and both (i, k), (j, k)
    // were already taken off the queue.
    bool chain_criterion(const Pair& p) const {
        for (std::uint32_t k = 0; k < basis_.size(); ++k) {
            if (k == p.i || k == p.j)
                continue;
            if (!basis_[k].ms[0].divides(p.lcm))
                continue;
            if (pending_.count(key(p.i, k)) || pending_.count(key(p.j, k)))
                continue;
            return true;
        }
        return false;
    }

    static std::pair<std::uint32_t, std::uint32_t> key(std::uint32_t a, std::uint32_t b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    }

    ZVec spair(const Pair& p) {
        const ZVec& f = basis_[p.i];
        const ZVec& g = basis_[p.j];
        Int gamma = int_gcd(f.cs[0], g.cs[0]);
        Int a = g.cs[0] / gamma;
        Int b = f.cs[0] / gamma;
        Monomial mf = p.lcm.divide_by(f.ms[0]);
        Monomial mg = p.lcm.divide_by(g.ms[0]);
        return combine(f, a, &mf, g, Int(-b), &mg, ord_);
    }

    const std::vector<const ZVec*>& reducer_view() {
        if (reducers_dirty_) {
            reducers_.clear();
            reducers_.reserve(sorted_.size());
            for (auto idx : sorted_)
                reducers_.push_back(&basis_[idx]);
            reducers_dirty_ = false;
        }
        return reducers_;
    }

    TermOrder ord_;
    GroebnerBudget budget_;
    std::vector<ZVec> basis_;
    std::vector<std::uint32_t> sorted_; // basis indices by leading monomial, ascending
    std::vector<const ZVec*> reducers_;
    bool reducers_dirty_ = true;
    std::set<Pair, PairCmp> queue_;
    std::set<std::pair<std::uint32_t, std::uint32_t>> pending_;
    bool unit_ = false;
    std::size_t nvars_ = 0;
};

} // namespace detail

// Reduced Groebner basis: monic elements, no leading monomial divisible by
// another, tails fully reduced. Deterministic for a fixed input and order.
class GroebnerBasis {
public:
    GroebnerBasis(VarSetPtr vars, TermOrder order, std::vector<detail::ZVec> reduced,
                  GroebnerStats stats)
        : vars_(std::move(vars)), order_(std::move(order)), stats_(stats) {
        elements_.reserve(reduced.size());
        qvecs_.reserve(reduced.size());
        for (auto& v : reduced) {
            detail::QVec q;
            q.ms = v.ms;
            q.cs.reserve(v.size());
            Rat lead(v.cs[0]);
            for (const auto& c : v.cs)
                q.cs.push_back(Rat(c) / lead);
            elements_.push_back(detail::polynomial_from(v, vars_) * make_rat(1, v.cs[0]));
            qvecs_.push_back(std::move(q));
        }
    }

    const VarSetPtr& vars() const noexcept { return vars_; }
    const TermOrder& order() const noexcept { return order_; }
    const std::vector<Polynomial>& elements() const noexcept { return elements_; }
    const GroebnerStats& stats() const noexcept { return stats_; }
    bool is_unit_ideal() const {
        return elements_.size() == 1 && elements_[0].is_constant() && !elements_[0].is_zero();
    }

    const std::vector<detail::QVec>& internal() const noexcept { return qvecs_; }

private:
    VarSetPtr vars_;
    TermOrder order_;
    std::vector<Polynomial> elements_;
    std::vector<detail::QVec> qvecs_; // order-sorted monic copies for division
    GroebnerStats stats_;
};

inline GroebnerBasis buchberger(const Ideal& ideal, const TermOrder& ord,
                                const GbOptions& opts = {}) {
    detail::BuchbergerEngine eng(ord, opts.budget);
    for (const auto& g : ideal.gens)
        eng.add_generator(detail::zvec_from(g, ord));
    try {
        eng.run();
    } catch (BudgetExceeded&) {
        if (opts.stats)
            opts.stats->absorb(eng.stats);
        throw;
    }
    auto reduced = eng.reduced_basis();
    if (opts.stats)
        opts.stats->absorb(eng.stats);
    return GroebnerBasis(ideal.vars, ord, std::move(reduced), eng.stats);
}

// Unique remainder of exact multivariate division by a reduced basis.
inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (!same_varset(p.vars(), gb.vars()))
        throw std::invalid_argument("normal_form: mismatched VarSets");
    if (gb.elements().empty() || p.is_zero())
        return p;
    const TermOrder& ord = gb.order();
    detail::QVec h;
    {
        // keep the exact coefficients: clearing denominators here would scale
        // the remainder and break p - normal_form(p) being in the ideal
        std::vector<std::size_t> idx(p.terms().size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return ord.less(p.terms()[b].mono, p.terms()[a].mono);
        });
        h.ms.reserve(idx.size());
        h.cs.reserve(idx.size());
        for (auto i : idx) {
            h.ms.push_back(p.terms()[i].mono);
            h.cs.push_back(p.terms()[i].coeff);
        }
    }
    // rational division against monic elements; remainder is exact
    detail::QVec rem;
    const auto& basis = gb.internal();
    while (!h.empty()) {
        const detail::QVec* g = nullptr;
        for (const auto& cand : basis)
            if (cand.ms[0].divides(h.ms[0])) {
                g = &cand;
                break;
            }
        if (!g) {
            rem.ms.push_back(std::move(h.ms[0]));
            rem.cs.push_back(std::move(h.cs[0]));
            h.ms.erase(h.ms.begin());
            h.cs.erase(h.cs.begin());
            continue;
        }
        Monomial m = h.ms[0].divide_by(g->ms[0]);
        h = detail::combine(h, Rat(1), nullptr, *g, Rat(-h.cs[0]), &m, ord);
    }
    std::vector<Term> terms;
    terms.reserve(rem.size());
    for (std::size_t i = 0; i < rem.size(); ++i)
        terms.push_back({rem.ms[i], rem.cs[i]});
    return Polynomial::from_terms(p.vars(), std::move(terms));
}

// S-polynomial over Q with monic scaling; exposed for basis property checks.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               const TermOrder& ord) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("s_polynomial: zero input");
    auto lead = [&](const Polynomial& p) {
        const Term* best = &p.terms()[0];
        for (const auto& t : p.terms())
            if (ord.less(best->mono, t.mono))
                best = &t;
        return *best;
    };
    Term lf = lead(f), lg = lead(g);
    Monomial L = Monomial::lcm(lf.mono, lg.mono);
    Polynomial a = Polynomial::from_terms(
        f.vars(), {{L.divide_by(lf.mono), Rat(1) / lf.coeff}});
    Polynomial b = Polynomial::from_terms(
        g.vars(), {{L.divide_by(lg.mono), Rat(1) / lg.coeff}});
    return a * f - b * g;
}

inline bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p) {
    return normal_form(p, gb).is_zero();
}

inline bool ideal_contains(const Ideal& ideal, const Polynomial& p,
                           const GbOptions& opts = {}) {
    return ideal_contains(buchberger(ideal, TermOrder::grevlex(), opts), p);
}

inline bool ideal_equal(const Ideal& a, const Ideal& b, const GbOptions& opts = {}) {
    if (!same_varset(a.vars, b.vars))
        throw std::invalid_argument("ideal_equal: mismatched VarSets");
    auto ga = buchberger(a, TermOrder::grevlex(), opts);
    auto gb = buchberger(b, TermOrder::grevlex(), opts);
    for (const auto& g : a.gens)
        if (!ideal_contains(gb, g))
            return false;
    for (const auto& g : b.gens)
        if (!ideal_contains(ga, g))
            return false;
    return true;
}

// Elimination ideal: Groebner basis under a block order with `block` leading,
// then keep the elements free of the block. Generators stay over the same
// VarSet; use change_vars to restrict when needed.
inline Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& block,
                       const GbOptions& opts = {}) {
    auto idx = ideal.vars->indices(block);
    TermOrder ord = TermOrder::block(elimination_mask(ideal.vars->size(), idx), opts.inner);
    auto gb = buchberger(ideal, ord, opts);
    std::vector<Polynomial> kept;
    for (const auto& e : gb.elements()) {
        bool free = true;
        for (auto i : idx)
            if (e.depends_on(i)) {
                free = false;
                break;
            }
        if (free)
            kept.push_back(canonical_scalar_form(e));
    }
    return Ideal::make(ideal.vars, std::move(kept));
}

// Saturation I : g^infinity via the extra-variable trick: adjoin t, add the
// generator 1 - t*g, eliminate t.
inline Ideal saturate(const Ideal& ideal, const Polynomial& g, const GbOptions& opts = {}) {
    if (!same_varset(g.vars(), ideal.vars))
        throw std::invalid_argument("saturate: mismatched VarSets");
    if (g.is_zero())
        throw std::invalid_argument("saturate: zero polynomial");
    if (g.is_constant())
        return ideal;
    std::string t = ideal.vars->fresh_name("t");
    auto names = ideal.vars->names();
    names.push_back(t);
    VarSetPtr ext = make_varset(std::move(names));
    std::vector<Polynomial> gens;
    gens.reserve(ideal.gens.size() + 1);
    for (const auto& f : ideal.gens)
        gens.push_back(change_vars(f, ext));
    gens.push_back(Polynomial::constant(ext, 1) -
                   Polynomial::variable(ext, t) * change_vars(g, ext));
    Ideal lifted = Ideal::make(ext, std::move(gens));
    Ideal elim = eliminate(lifted, {t}, opts);
    std::vector<Polynomial> back;
    back.reserve(elim.gens.size());
    for (const auto& f : elim.gens)
        back.push_back(change_vars(f, ideal.vars));
    return Ideal::make(ideal.vars, std::move(back));
}

// Ideal intersection via the standard single-auxiliary-variable elimination:
// A cap B = (t*A + (1-t)*B) cap k[x].
inline Ideal intersect(const Ideal& a, const Ideal& b, const GbOptions& opts = {}) {
    if (!same_varset(a.vars, b.vars))
        throw std::invalid_argument("intersect: mismatched VarSets");
    std::string t = a.vars->fresh_name("t");
    auto names = a.vars->names();
    names.push_back(t);
    VarSetPtr ext = make_varset(std::move(names));
    Polynomial tv = Polynomial::variable(ext, t);
    Polynomial one_minus_t = Polynomial::constant(ext, 1) - tv;
    std::vector<Polynomial> gens;
    gens.reserve(a.gens.size() + b.gens.size());
    for (const auto& f : a.gens)
        gens.push_back(tv * change_vars(f, ext));
    for (const auto& f : b.gens)
        gens.push_back(one_minus_t * change_vars(f, ext));
    Ideal lifted = Ideal::make(ext, std::move(gens));
    Ideal elim = eliminate(lifted, {t}, opts);
    std::vector<Polynomial> back;
    back.reserve(elim.gens.size());
    for (const auto& f : elim.gens)
        back.push_back(change_vars(f, a.vars));
    return Ideal::make(a.vars, std::move(back));
}

// Does a homogeneous ideal cut out the empty set in the projective space with
// the given coordinates? Uses the finiteness criterion: after a grevlex basis,
// emptiness of the projective locus is equivalent to every coordinate having a
// pure power among the leading monomials (the affine cone is then {0}).
inline bool is_projectively_empty(const Ideal& ideal, const std::vector<std::string>& coords,
                                  const GbOptions& opts = {}) {
    auto idx = ideal.vars->indices(coords);
    for (const auto& g : ideal.gens) {
        for (std::size_t i = 0; i < ideal.vars->size(); ++i)
            if (g.depends_on(i) &&
                std::find(idx.begin(), idx.end(), i) == idx.end())
                throw std::invalid_argument(
                    "is_projectively_empty: generator involves a non-coordinate variable");
        if (!g.homogeneity(idx).homogeneous)
            throw std::invalid_argument("is_projectively_empty: non-homogeneous generator");
    }
    if (ideal.gens.empty())
        return false;
    auto gb = buchberger(ideal, TermOrder::grevlex(), opts);
    if (gb.is_unit_ideal())
        return true;
    for (auto i : idx) {
        bool pure = false;
        for (const auto& e : gb.elements()) {
            const Monomial& lm = e.leading_term().mono; // grevlex basis: canonical lead
            if (lm.degree() > 0 && lm[i] == lm.degree()) {
                pure = true;
                break;
            }
        }
        if (!pure)
            return false;
    }
    return true;
}

} // namespace dualvar

#endif
