#ifndef DUALVAR_LIMIT_PIPELINE_HPP
#define DUALVAR_LIMIT_PIPELINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degree_formulas.hpp"
#include "dual_variety.hpp"
#include "groebner.hpp"
#include "polynomial.hpp"

namespace dualvar {

// The degenerating pencil F_s = s F + F_1 F_2 over the affine s-line, with
// F, F_1, F_2 homogeneous of degrees d = d1 + d2, d1, d2.
struct Family {
    ProjectiveSpace space;
    Polynomial f;   // perturbation form, degree d
    Polynomial f1;  // factor, degree d1
    Polynomial f2;  // factor, degree d2
    int d;
    int d1;
    int d2;
    std::string s_name;
    VarSetPtr full_vars; // x-block, s, u-block
    VarSetPtr su_vars;   // s, u-block

    DegreeProfile profile() const { return DegreeProfile(space.n(), d1, d2); }

    // F_s over an arbitrary ring containing the coordinates and s.
    Polynomial family_form(const VarSetPtr& ring) const {
        return Polynomial::variable(ring, s_name) * change_vars(f, ring) +
               change_vars(f1, ring) * change_vars(f2, ring);
    }

    // The fiber form s0 F + F_1 F_2 over the primal ring.
    Polynomial fiber(const Rat& s0) const {
        return s0 * f + f1 * f2;
    }
};

inline Family build_family(const ProjectiveSpace& space, Polynomial f, Polynomial f1,
                           Polynomial f2) {
    if (space.n() < 1)
        throw std::invalid_argument("build_family: need ambient P^{n+1} with n >= 1");
    std::vector<std::size_t> all(space.coord_count());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    auto deg_of = [&](const Polynomial& p, const char* what) {
        if (!same_varset(p.vars(), space.primal_vars()))
            throw std::invalid_argument(std::string("build_family: ") + what +
                                        " over wrong VarSet");
        auto h = p.homogeneity(all);
        if (p.is_zero() || !h.homogeneous || *h.degree < 1)
            throw std::invalid_argument(std::string("build_family: ") + what +
                                        " must be homogeneous of positive degree");
        return static_cast<int>(*h.degree);
    };
    const int d = deg_of(f, "F");
    const int d1 = deg_of(f1, "F1");
    const int d2 = deg_of(f2, "F2");
    if (d != d1 + d2)
        throw std::invalid_argument("build_family: deg F must equal deg F1 + deg F2");
    std::string s_name = space.conormal_vars()->fresh_name("s");
    std::vector<std::string> full = space.coords();
    full.push_back(s_name);
    for (const auto& uname : space.duals())
        full.push_back(uname);
    std::vector<std::string> su{s_name};
    for (const auto& uname : space.duals())
        su.push_back(uname);
    return Family{space,
                  std::move(f),
                  std::move(f1),
                  std::move(f2),
                  d,
                  d1,
                  d2,
                  std::move(s_name),
                  make_varset(std::move(full)),
                  make_varset(std::move(su))};
}

// What the decomposition theorem assumes about the family.
struct GenericityRecord {
    bool factor1_smooth = false;
    bool factor2_smooth = false;
    bool pair_transverse = false;
    // n >= 2: (F, F1, F2) transverse; n = 1: the triple locus must be empty.
    bool triple_ok = false;
    bool fiber_smooth = false;
    Rat sample = Rat(1);

    bool ok() const {
        return factor1_smooth && factor2_smooth && pair_transverse && triple_ok &&
               fiber_smooth;
    }

    std::string describe() const {
        std::string out;
        auto flag = [&](bool b, const char* name) {
            out += name;
            out += b ? ": ok" : ": FAILED";
            out += "\n";
        };
        flag(factor1_smooth, "X_{d1} smooth");
        flag(factor2_smooth, "X_{d2} smooth");
        flag(pair_transverse, "(F1, F2) transverse");
        flag(triple_ok, "(F, F1, F2) generic");
        flag(fiber_smooth, "sampled fiber smooth");
        return out;
    }
};

class GenericityFailure : public std::runtime_error {
public:
    GenericityFailure(const std::string& msg, GenericityRecord rec)
        : std::runtime_error(msg), record(std::move(rec)) {}
    GenericityRecord record;
};

inline GenericityRecord check_genericity(const Family& fam, const Rat& s_sample = Rat(1),
                                         const GbOptions& opts = {}) {
    if (s_sample == 0)
        throw std::invalid_argument("check_genericity: sample must be nonzero");
    GenericityRecord rec;
    rec.sample = s_sample;
    rec.factor1_smooth = is_smooth_hypersurface(fam.f1, fam.space, opts);
    rec.factor2_smooth = is_smooth_hypersurface(fam.f2, fam.space, opts);
    rec.pair_transverse = is_transverse(
        make_complete_intersection(fam.space, {fam.f1, fam.f2}), fam.space, opts);
    if (fam.space.n() >= 2) {
        rec.triple_ok = is_transverse(
            make_complete_intersection(fam.space, {fam.f, fam.f1, fam.f2}), fam.space,
            opts);
    } else {
        rec.triple_ok = is_projectively_empty(
            Ideal::make(fam.space.primal_vars(), {fam.f, fam.f1, fam.f2}),
            fam.space.coords(), opts);
    }
    rec.fiber_smooth = is_smooth_hypersurface(fam.fiber(s_sample), fam.space, opts);
    return rec;
}

namespace detail {

// Reconstruct the reduced rational function p/q with deg p, deg q <= bound
// from samples p(r_j)/q(r_j) = v_j. With at least 2*bound + 2 samples the
// linearized constraints p(r_j) - v_j q(r_j) = 0 admit, up to scale, only the
// multiples of the reduced solution: for two solutions, p q' - p' q has degree
// at most 2*bound and vanishes at every sample point. Any nonzero kernel
// vector divided by its polynomial gcd therefore recovers the function.
// Returns nullopt when the kernel is trivial or the denominator comes out
// zero, i.e. when no such function fits the data.
inline std::optional<std::pair<UPoly, UPoly>> reconstruct_ratio(const std::vector<Rat>& points,
                                                                const std::vector<Rat>& values,
                                                                int bound) {
    const std::size_t cols = 2 * static_cast<std::size_t>(bound) + 2;
    const std::size_t rows = points.size();
    std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols, Rat(0)));
    for (std::size_t j = 0; j < rows; ++j) {
        Rat pw(1);
        for (int e = 0; e <= bound; ++e) {
            a[j][e] = pw;
            a[j][static_cast<std::size_t>(bound) + 1 + e] = -values[j] * pw;
            pw *= points[j];
        }
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t sel = rank;
        while (sel < rows && a[sel][c] == 0)
            ++sel;
        if (sel == rows)
            continue;
        std::swap(a[rank], a[sel]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][c] == 0)
                continue;
            Rat f = a[i][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                a[i][k] -= f * a[rank][k];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    if (pivot_col.size() == cols)
        return std::nullopt;
    std::vector<char> is_pivot(cols, 0);
    for (std::size_t c : pivot_col)
        is_pivot[c] = 1;
    std::size_t free_col = 0;
    while (is_pivot[free_col] != 0)
        ++free_col;
    std::vector<Rat> sol(cols, Rat(0));
    sol[free_col] = 1;
    // rows are fully reduced, so each pivot depends only on the free columns
    for (std::size_t i = pivot_col.size(); i-- > 0;) {
        const std::size_t c = pivot_col[i];
        Rat acc(0);
        for (std::size_t k = c + 1; k < cols; ++k)
            if (sol[k] != 0)
                acc += a[i][k] * sol[k];
        sol[c] = -acc / a[i][c];
    }
    UPoly p(sol.begin(), sol.begin() + bound + 1);
    UPoly q(sol.begin() + bound + 1, sol.end());
    upoly_trim(p);
    upoly_trim(q);
    if (q.empty())
        return std::nullopt;
    UPoly g = upoly_gcd(p, q);
    if (g.size() > 1) {
        p = *upoly_div(p, g);
        q = *upoly_div(q, g);
    }
    Rat lead = q.back();
    if (lead != 1) {
        for (auto& c : q)
            c /= lead;
        for (auto& c : p)
            c /= lead;
    }
    return std::make_pair(std::move(p), std::move(q));
}

// Rebuild the pencil generator G(s, u) from duals of sampled smooth fibers,
// for plane-curve pencils. Restricting F_s to the line u.x = 0 via a chart
// and clearing denominators gives a binary form of degree d whose
// coefficients are linear in s and u; G divides its u-discriminant, which has
// degree 2(d - 1) in the coefficients, so deg_s G <= 2(d - 1). Each
// coefficient of G, normalized by a reference coefficient, is then a rational
// function of s of bounded degree; sampling 2 * bound + 2 smooth fibers pins
// each one down exactly, and the least common denominator restores the
// s-primitive polynomial normalization. One extra fiber is held out and
// checked against the reconstruction. s = 0 is excluded (the fiber is the
// degenerate product) and s = 1 is excluded so that external consistency
// checks at s = 1 stay independent of the fit.
inline Polynomial interpolate_family_generator(const Family& fam, const GbOptions& gopts) {
    const ProjectiveSpace& space = fam.space;
    if (space.n() != 1)
        throw std::invalid_argument("interpolate_family_generator: plane-curve pencils only");
    const int bound = 2 * (fam.d - 1);
    const std::size_t want = 2 * static_cast<std::size_t>(bound) + 3;
    std::vector<Rat> points;
    std::vector<Polynomial> duals;
    for (long c = 2; points.size() < want && c < 1000; ++c) {
        for (long sign : {1L, -1L}) {
            if (points.size() >= want)
                break;
            Rat r(sign * c);
            Polynomial fiber = fam.fiber(r);
            if (!is_smooth_hypersurface(fiber, space, gopts))
                continue;
            auto ci = certify_transverse(make_complete_intersection(space, {fiber}), space,
                                         gopts);
            duals.push_back(dual_variety(ci, space, gopts));
            points.push_back(r);
        }
    }
    if (points.size() < want)
        throw std::runtime_error("interpolate_family_generator: not enough smooth fibers");

    const std::size_t fit = points.size() - 1; // last sample is the holdout
    std::map<Monomial, std::vector<Rat>, bool (*)(const Monomial&, const Monomial&)> values(
        grevlex_less);
    for (std::size_t j = 0; j < fit; ++j)
        for (const auto& t : duals[j].terms()) {
            auto [it, fresh] = values.try_emplace(t.mono);
            if (fresh)
                it->second.assign(fit, Rat(0));
            it->second[j] = t.coeff;
        }

    // reference coefficient: a monomial present in every sampled dual, so it
    // can serve as the common denominator of the normalized coefficients
    const Monomial* ref = nullptr;
    for (const auto& [m, vec] : values) {
        bool everywhere = true;
        for (const auto& v : vec)
            if (v == 0) {
                everywhere = false;
                break;
            }
        if (everywhere)
            ref = &m;
    }
    if (ref == nullptr)
        throw std::runtime_error("interpolate_family_generator: no common reference monomial");
    const std::vector<Rat> refvals = values.at(*ref);

    std::vector<Rat> fit_points(points.begin(), points.begin() + fit);
    std::vector<std::pair<const Monomial*, std::pair<UPoly, UPoly>>> ratios;
    UPoly denom{Rat(1)};
    for (auto& [m, vec] : values) {
        if (m == *ref)
            continue;
        for (std::size_t j = 0; j < fit; ++j)
            vec[j] /= refvals[j];
        auto pq = reconstruct_ratio(fit_points, vec, bound);
        if (!pq)
            throw std::runtime_error(
                "interpolate_family_generator: coefficient reconstruction failed");
        denom = upoly_lcm(denom, pq->second);
        ratios.emplace_back(&m, std::move(*pq));
    }
    if (static_cast<int>(denom.size()) - 1 > bound)
        throw std::runtime_error(
            "interpolate_family_generator: denominator exceeds the degree bound");

    const VarSetPtr& su = fam.su_vars;
    const std::size_t s_idx = su->index(fam.s_name);
    const VarSetPtr& dual_ring = space.dual_vars();
    std::vector<std::size_t> dual_to_su(dual_ring->size());
    for (std::size_t i = 0; i < dual_ring->size(); ++i)
        dual_to_su[i] = su->index(dual_ring->names()[i]);
    std::vector<Term> terms;
    auto push_coefficient = [&](const Monomial& um, const UPoly& cs) {
        for (std::size_t e = 0; e < cs.size(); ++e) {
            if (cs[e] == 0)
                continue;
            std::vector<std::int32_t> exps(su->size(), 0);
            exps[s_idx] = static_cast<std::int32_t>(e);
            for (std::size_t i = 0; i < dual_ring->size(); ++i)
                exps[dual_to_su[i]] = um[i];
            terms.push_back({Monomial(std::move(exps)), cs[e]});
        }
    };
    push_coefficient(*ref, denom);
    for (const auto& [m, pq] : ratios) {
        UPoly cs = upoly_mul(pq.first, *upoly_div(denom, pq.second));
        if (static_cast<int>(cs.size()) - 1 > bound)
            throw std::runtime_error(
                "interpolate_family_generator: coefficient exceeds the degree bound");
        push_coefficient(*m, cs);
    }
    Polynomial G = canonical_scalar_form(Polynomial::from_terms(su, std::move(terms)));

    // the lcm normalization should already be s-primitive; anything else
    // would silently corrupt the specialization at s = 0
    if (!strip_variable_content(G, s_idx).content.is_constant())
        throw std::logic_error("interpolate_family_generator: generator has s-content");
    Polynomial held = canonical_scalar_form(
        change_vars(G.evaluate(s_idx, points.back()), dual_ring));
    if (held != duals.back())
        throw std::runtime_error("interpolate_family_generator: held-out fiber mismatch");
    return G;
}

} // namespace detail

struct LimitOptions {
    GbOptions gb{};
    Rat s_sample = Rat(1);
    bool verify_genericity = true;
    // force the plane-curve fast path: rebuild the generator from sampled
    // fiber duals instead of the one-shot elimination. Off means automatic:
    // pencils of plane curves of degree >= 4 use it anyway, since the direct
    // elimination is impractical there and the reconstruction is certified
    // against a held-out fiber. Ignored in higher dimension.
    bool interpolate = false;
};

// The total dual: the s-primitive defining polynomial G(s, u) of the closure
// of { (s, u) : s != 0, u in dual(X_s) }, plus its specialization mu0 = G(0, u),
// the limit cycle of the duals.
struct LimitDual {
    Polynomial generator; // over (s, u)
    int s_content_power = 0;
    Polynomial mu0;       // over u only
    GenericityRecord genericity;
    GroebnerStats stats;
};

inline LimitDual limit_dual_polynomial(const Family& fam, const LimitOptions& opt = {}) {
    GenericityRecord rec;
    if (opt.verify_genericity) {
        GbOptions gopts = opt.gb;
        GroebnerStats genericity_stats;
        if (gopts.stats == nullptr)
            gopts.stats = &genericity_stats;
        rec = check_genericity(fam, opt.s_sample, gopts);
        if (!rec.ok())
            throw GenericityFailure("family fails genericity:\n" + rec.describe(), rec);
    }
    GroebnerStats stats;
    GbOptions gopts = opt.gb;
    GroebnerStats* outer = opt.gb.stats;
    gopts.stats = &stats;

    const ProjectiveSpace& space = fam.space;
    Polynomial G = Polynomial::zero(fam.su_vars);
    const bool fast_path = space.n() == 1 && (opt.interpolate || fam.d >= 4);
    if (fast_path) {
        G = detail::interpolate_family_generator(fam, gopts);
    } else {
        const VarSetPtr& R = fam.full_vars;
        Polynomial Fs = fam.family_form(R);

        // Conormal incidence over the s-line: F_s plus the 2x2 minors of
        // [u; grad_x F_s]. Partials are taken in the fiber directions only.
        std::vector<std::vector<Polynomial>> rows;
        {
            std::vector<Polynomial> urow;
            for (const auto& uname : space.duals())
                urow.push_back(Polynomial::variable(R, uname));
            rows.push_back(std::move(urow));
            std::vector<Polynomial> grad;
            for (const auto& xname : space.coords())
                grad.push_back(Fs.derivative(R->index(xname)));
            rows.push_back(std::move(grad));
        }
        std::vector<Polynomial> gens{Fs};
        for (auto& m : detail::row_minors(rows, R))
            gens.push_back(std::move(m));
        Ideal incidence = Ideal::make(R, std::move(gens));

        // Junk components of the incidence sit over grad_x F_s = 0, where every
        // x-partial vanishes, while no x-partial vanishes identically on the
        // (irreducible) conormal family once one fiber is certified smooth; one
        // saturation by the first nonzero partial therefore removes exactly the
        // junk before the x-block elimination.
        Polynomial sat_g = Polynomial::zero(R);
        for (const auto& xname : space.coords()) {
            Polynomial partial = Fs.derivative(R->index(xname));
            if (!partial.is_zero()) {
                sat_g = std::move(partial);
                break;
            }
        }
        if (sat_g.is_zero())
            throw std::logic_error("limit_dual_polynomial: family form has zero gradient");

        Ideal elim = eliminate(saturate(incidence, sat_g, gopts), space.coords(), gopts);
        if (elim.gens.empty())
            throw DualNotHypersurface("limit_dual_polynomial: elimination ideal is zero");
        std::vector<Polynomial> su_gens;
        su_gens.reserve(elim.gens.size());
        for (const auto& g : elim.gens)
            su_gens.push_back(change_vars(g, fam.su_vars));
        auto gb = buchberger(Ideal::make(fam.su_vars, std::move(su_gens)),
                             TermOrder::grevlex(), gopts);
        if (gb.elements().size() != 1)
            throw DualNotHypersurface(
                "limit_dual_polynomial: elimination ideal not principal over (s, u)");
        G = canonical_scalar_form(gb.elements()[0]);
        if (G.is_constant())
            throw DualNotHypersurface("limit_dual_polynomial: dual family is empty");
    }

    const std::size_t s_idx = fam.su_vars->index(fam.s_name);
    ParameterContent pc = strip_parameter_content(G, s_idx);
    // Any content in s alone carries no dual-variable information (it can
    // only arise from vertical junk over special fibers); dividing it out
    // leaves the s-primitive generator of the dual family.
    Polynomial primitive = strip_variable_content(pc.primitive, s_idx).primitive;
    Polynomial mu0_su = primitive.evaluate(s_idx, Rat(0));
    if (mu0_su.is_zero())
        throw std::logic_error("limit_dual_polynomial: s-primitive generator vanished at 0");
    Polynomial mu0 = canonical_scalar_form(change_vars(mu0_su, space.dual_vars()));

    if (outer != nullptr)
        outer->absorb(stats);
    LimitDual out;
    out.generator = canonical_scalar_form(std::move(primitive));
    out.s_content_power = pc.power;
    out.mu0 = std::move(mu0);
    out.genericity = rec;
    out.stats = stats;
    return out;
}

// One piece of the predicted limit decomposition.
struct ComponentEntry {
    std::string label;
    bool trivial = false;            // dual not a hypersurface; contributes nothing
    std::optional<Polynomial> dual;  // over the dual ring, when nontrivial
    int expected_multiplicity = 0;
    Int expected_degree{0};
    int measured_multiplicity = 0;
    Int measured_degree{0};

    bool consistent() const {
        if (trivial)
            return true;
        return measured_multiplicity == expected_multiplicity &&
               measured_degree == expected_degree;
    }
};

struct LimitReport {
    Family family;
    LimitDual limit;
    std::vector<ComponentEntry> components;
    Polynomial residual;       // mu0 / prod dual_i^{measured mult}, over the dual ring
    DecompositionLedger ledger;
    bool mu0_degree_ok = false;
    bool residual_constant = false;
    bool verdict = false;
    GroebnerStats stats;
};

namespace detail {

inline Int block_degree(const Polynomial& p, const std::vector<std::size_t>& block) {
    auto h = p.homogeneity(block);
    if (!h.homogeneous)
        throw std::logic_error("expected block-homogeneous polynomial");
    return h.degree ? Int(*h.degree) : Int(0);
}

} // namespace detail

// Verify the limit decomposition: compute each component dual independently,
// measure its multiplicity in mu0 by exact division, and balance the degree
// ledger d(d-1)^n = d1(d1-1)^n + d2(d2-1)^n + N_triple + 2 N_pair.
inline LimitReport decompose_limit(const Family& fam, const LimitOptions& opt = {}) {
    GroebnerStats stats;
    GbOptions gopts = opt.gb;
    GroebnerStats* outer = opt.gb.stats;
    gopts.stats = &stats;
    LimitOptions inner = opt;
    inner.gb = gopts;

    LimitReport rep{fam,
                    limit_dual_polynomial(fam, inner),
                    {},
                    Polynomial::zero(fam.space.dual_vars()),
                    degree_ledger(fam.profile()),
                    false,
                    false,
                    false,
                    {}};

    const ProjectiveSpace& space = fam.space;
    const int n = space.n();
    std::vector<std::size_t> ublock(space.coord_count());
    for (std::size_t i = 0; i < ublock.size(); ++i)
        ublock[i] = i;

    auto add_component = [&](std::string label, std::vector<Polynomial> forms,
                             int expected_mult, const Int& expected_deg) {
        ComponentEntry e;
        e.label = std::move(label);
        e.expected_multiplicity = expected_mult;
        e.expected_degree = expected_deg;
        if (expected_deg == 0) {
            e.trivial = true;
        } else {
            auto ci = certify_transverse(make_complete_intersection(space, std::move(forms)),
                                         space, gopts);
            Polynomial d = dual_variety(ci, space, gopts);
            e.measured_degree = detail::block_degree(d, ublock);
            e.measured_multiplicity = divisibility_multiplicity(rep.limit.mu0, d);
            e.dual = std::move(d);
        }
        rep.components.push_back(std::move(e));
    };

    const DecompositionLedger& led = rep.ledger;
    add_component("dual(X_{d1})", {fam.f1}, 1, led.dual1);
    add_component("dual(X_{d2})", {fam.f2}, 1, led.dual2);
    add_component("dual(X_{d1}∩X_{d2})", {fam.f1, fam.f2}, 2, led.pair);
    if (n >= 2)
        add_component("dual(X_d∩X_{d1}∩X_{d2})", {fam.f, fam.f1, fam.f2}, 1,
                      led.triple);

    // Peel the measured powers off mu0; the residual must be a nonzero constant.
    Polynomial residual = rep.limit.mu0;
    bool division_clean = true;
    for (const auto& e : rep.components) {
        if (e.trivial || e.measured_multiplicity == 0)
            continue;
        for (int i = 0; i < e.measured_multiplicity; ++i) {
            auto q = exact_divide(residual, *e.dual);
            if (!q) {
                division_clean = false;
                break;
            }
            residual = std::move(*q);
        }
        if (!division_clean)
            break;
    }
    rep.residual = residual;
    rep.residual_constant =
        division_clean && residual.is_constant() && !residual.is_zero();

    rep.mu0_degree_ok = detail::block_degree(rep.limit.mu0, ublock) == led.lhs;

    bool components_ok = true;
    for (const auto& e : rep.components)
        components_ok = components_ok && e.consistent();
    rep.verdict = components_ok && rep.residual_constant && rep.mu0_degree_ok &&
                  led.balanced;

    if (outer != nullptr)
        outer->absorb(stats);
    rep.stats = stats;
    return rep;
}

// All monomials of the given total degree, in descending lexicographic order
// of exponent vectors.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
    if (degree < 0)
        throw std::invalid_argument("monomials_of_degree: negative degree");
    std::vector<Monomial> out;
    std::vector<std::int32_t> exps(nvars, 0);
    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos + 1 == nvars) {
            exps[pos] = remaining;
            out.emplace_back(exps);
            exps[pos] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            exps[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        exps[pos] = 0;
    };
    if (nvars == 0)
        throw std::invalid_argument("monomials_of_degree: no variables");
    rec(rec, 0, degree);
    return out;
}

// Dense form of the given degree with every coefficient a nonzero integer in
// [-height, height], drawn from the engine. Deterministic for a fixed seed:
// mt19937_64 output is specified, and mapping is plain modular arithmetic.
inline Polynomial random_general_form(const ProjectiveSpace& space, int degree,
                                      std::mt19937_64& rng, int height = 5) {
    if (degree < 1)
        throw std::invalid_argument("random_general_form: degree must be positive");
    if (height < 1)
        throw std::invalid_argument("random_general_form: height must be positive");
    std::vector<Term> terms;
    for (auto& m : monomials_of_degree(space.coord_count(), degree)) {
        const std::uint64_t r = rng() % (2 * static_cast<std::uint64_t>(height));
        const long c = r < static_cast<std::uint64_t>(height)
                           ? -static_cast<long>(r) - 1
                           : static_cast<long>(r) - height + 1;
        terms.push_back(Term{std::move(m), Rat(c)});
    }
    return Polynomial::from_terms(space.primal_vars(), std::move(terms));
}

inline Polynomial random_general_form(const ProjectiveSpace& space, int degree,
                                      std::uint64_t seed, int height = 5) {
    std::mt19937_64 rng(seed);
    return random_general_form(space, degree, rng, height);
}

} // namespace dualvar

#endif
