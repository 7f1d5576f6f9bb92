#ifndef DUALVAR_DUAL_VARIETY_HPP
#define DUALVAR_DUAL_VARIETY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "parser.hpp"
#include "polynomial.hpp"

namespace dualvar {

// P^{n+1} with named primal coordinates and derived dual coordinates. For a
// three-coordinate space the duals are (u, v, w); otherwise u0, u1, ...; a
// clashing name falls back to the du* family.
class ProjectiveSpace {
public:
    static ProjectiveSpace from_coords(std::vector<std::string> coords) {
        if (coords.size() < 2)
            throw std::invalid_argument("ProjectiveSpace: need at least 2 coordinates");
        std::vector<std::string> duals = derive_duals(coords);
        return ProjectiveSpace(std::move(coords), std::move(duals));
    }

    static ProjectiveSpace standard(int n_plus_2) {
        std::vector<std::string> coords;
        for (int i = 0; i < n_plus_2; ++i)
            coords.push_back("x" + std::to_string(i));
        return from_coords(std::move(coords));
    }

    int n() const noexcept { return static_cast<int>(coords_.size()) - 2; }
    std::size_t coord_count() const noexcept { return coords_.size(); }
    const std::vector<std::string>& coords() const noexcept { return coords_; }
    const std::vector<std::string>& duals() const noexcept { return duals_; }

    const VarSetPtr& primal_vars() const noexcept { return primal_; }
    const VarSetPtr& dual_vars() const noexcept { return dual_; }
    // Combined (x-block, u-block) ring for incidence computations.
    const VarSetPtr& conormal_vars() const noexcept { return conormal_; }

private:
    ProjectiveSpace(std::vector<std::string> coords, std::vector<std::string> duals)
        : coords_(std::move(coords)), duals_(std::move(duals)) {
        primal_ = make_varset(coords_);
        dual_ = make_varset(duals_);
        std::vector<std::string> both = coords_;
        both.insert(both.end(), duals_.begin(), duals_.end());
        conormal_ = make_varset(std::move(both));
    }

    static std::vector<std::string> derive_duals(const std::vector<std::string>& coords) {
        auto taken = [&](const std::string& s) {
            for (const auto& c : coords)
                if (c == s)
                    return true;
            return false;
        };
        std::vector<std::string> duals;
        if (coords.size() == 3) {
            duals = {"u", "v", "w"};
            if (!taken("u") && !taken("v") && !taken("w"))
                return duals;
        }
        duals.clear();
        bool clash = false;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            duals.push_back("u" + std::to_string(i));
            if (taken(duals.back()))
                clash = true;
        }
        if (!clash)
            return duals;
        duals.clear();
        for (std::size_t i = 0; i < coords.size(); ++i) {
            duals.push_back("du" + std::to_string(i));
            if (taken(duals.back()))
                throw std::invalid_argument(
                    "ProjectiveSpace: cannot derive dual coordinate names");
        }
        return duals;
    }

    std::vector<std::string> coords_;
    std::vector<std::string> duals_;
    VarSetPtr primal_;
    VarSetPtr dual_;
    VarSetPtr conormal_;
};

class DualNotHypersurface : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TransversalityUnverified : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// k homogeneous forms cutting a complete intersection X = V(F_1, ..., F_k).
// The transversality certificate gates dual_variety.
struct CompleteIntersection {
    std::vector<Polynomial> forms;  // over the primal VarSet
    std::vector<int> degrees;
    bool certified = false;
};

inline CompleteIntersection make_complete_intersection(const ProjectiveSpace& space,
                                                       std::vector<Polynomial> forms) {
    if (forms.empty())
        throw std::invalid_argument("CompleteIntersection: no forms");
    if (forms.size() > space.coord_count())
        throw std::invalid_argument("CompleteIntersection: more forms than coordinates");
    CompleteIntersection ci;
    std::vector<std::size_t> all(space.coord_count());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    for (auto& f : forms) {
        if (!same_varset(f.vars(), space.primal_vars()))
            throw std::invalid_argument("CompleteIntersection: form over wrong VarSet");
        auto h = f.homogeneity(all);
        if (!h.homogeneous || !h.degree || *h.degree < 1)
            throw std::invalid_argument(
                "CompleteIntersection: forms must be homogeneous of positive degree");
        ci.degrees.push_back(static_cast<int>(*h.degree));
        ci.forms.push_back(std::move(f));
    }
    return ci;
}

namespace detail {

// Determinant of a small polynomial matrix by cofactor expansion on row 0.
inline Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m,
                           const VarSetPtr& vars) {
    const std::size_t n = m.size();
    if (n == 1)
        return m[0][0];
    Polynomial det = Polynomial::zero(vars);
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero())
            continue;
        std::vector<std::vector<Polynomial>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c)
                    row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][c] * poly_det(minor, vars);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

// All r x r minors of an r x N polynomial matrix (column subsets), zeros
// dropped. Column subsets are enumerated in lexicographic order, so output is
// deterministic.
inline std::vector<Polynomial> row_minors(const std::vector<std::vector<Polynomial>>& rows,
                                          const VarSetPtr& vars) {
    const std::size_t r = rows.size();
    const std::size_t N = rows[0].size();
    std::vector<Polynomial> out;
    std::vector<std::size_t> cols(r);
    for (std::size_t i = 0; i < r; ++i)
        cols[i] = i;
    for (;;) {
        std::vector<std::vector<Polynomial>> sq(r, std::vector<Polynomial>());
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                sq[i].push_back(rows[i][cols[j]]);
        Polynomial d = poly_det(sq, vars);
        if (!d.is_zero())
            out.push_back(canonical_scalar_form(d));
        // next column subset
        std::size_t i = r;
        while (i-- > 0) {
            if (cols[i] + (r - i) < N) {
                ++cols[i];
                for (std::size_t j = i + 1; j < r; ++j)
                    cols[j] = cols[j - 1] + 1;
                break;
            }
            if (i == 0)
                return out;
        }
    }
}

// Jacobian rows d(F_i)/d(x_j) over the target ring.
inline std::vector<std::vector<Polynomial>> jacobian_rows(
    const std::vector<Polynomial>& forms, const ProjectiveSpace& space,
    const VarSetPtr& target) {
    std::vector<std::vector<Polynomial>> rows;
    rows.reserve(forms.size());
    for (const auto& f : forms) {
        std::vector<Polynomial> row;
        row.reserve(space.coord_count());
        for (std::size_t j = 0; j < space.coord_count(); ++j)
            row.push_back(change_vars(f.derivative(j), target));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace detail

// Incidence ideal of (x, u) pairs with u conormal to X at x: the forms
// together with the (k+1) x (k+1) minors of the matrix stacking u over the
// Jacobian. Unsaturated; the rank-drop locus still has to be removed.
inline Ideal conormal_ideal(const CompleteIntersection& ci, const ProjectiveSpace& space) {
    const VarSetPtr& ring = space.conormal_vars();
    const std::size_t k = ci.forms.size();
    if (k > space.coord_count() - 1)
        throw std::invalid_argument("conormal_ideal: too many forms for a dual hypersurface");
    std::vector<std::vector<Polynomial>> rows;
    rows.reserve(k + 1);
    {
        std::vector<Polynomial> urow;
        for (const auto& uname : space.duals())
            urow.push_back(Polynomial::variable(ring, uname));
        rows.push_back(std::move(urow));
    }
    for (auto& row : detail::jacobian_rows(ci.forms, space, ring))
        rows.push_back(std::move(row));
    std::vector<Polynomial> gens;
    for (const auto& f : ci.forms)
        gens.push_back(change_vars(f, ring));
    for (auto& m : detail::row_minors(rows, ring))
        gens.push_back(std::move(m));
    return Ideal::make(ring, std::move(gens));
}

// Singular-locus test for one hypersurface: V(F, dF/dx_0, ..., dF/dx_{n+1})
// empty in P^{n+1}.
inline bool is_smooth_hypersurface(const Polynomial& f, const ProjectiveSpace& space,
                                   const GbOptions& opts = {}) {
    if (!same_varset(f.vars(), space.primal_vars()))
        throw std::invalid_argument("is_smooth_hypersurface: form over wrong VarSet");
    std::vector<std::size_t> all(space.coord_count());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    auto h = f.homogeneity(all);
    if (f.is_zero() || !h.homogeneous)
        throw std::invalid_argument("is_smooth_hypersurface: need a nonzero form");
    std::vector<Polynomial> gens{f};
    for (std::size_t j = 0; j < space.coord_count(); ++j)
        gens.push_back(f.derivative(j));
    return is_projectively_empty(Ideal::make(space.primal_vars(), std::move(gens)),
                                 space.coords(), opts);
}

// Rank of the Jacobian is full at every point of V(forms): the ideal of the
// forms plus all k x k Jacobian minors cuts the empty set.
inline bool is_transverse(const CompleteIntersection& ci, const ProjectiveSpace& space,
                          const GbOptions& opts = {}) {
    std::vector<Polynomial> gens = ci.forms;
    auto rows = detail::jacobian_rows(ci.forms, space, space.primal_vars());
    for (auto& m : detail::row_minors(rows, space.primal_vars()))
        gens.push_back(std::move(m));
    return is_projectively_empty(Ideal::make(space.primal_vars(), std::move(gens)),
                                 space.coords(), opts);
}

inline CompleteIntersection certify_transverse(CompleteIntersection ci,
                                               const ProjectiveSpace& space,
                                               const GbOptions& opts = {}) {
    if (!is_transverse(ci, space, opts))
        throw TransversalityUnverified("complete intersection is not transverse");
    ci.certified = true;
    return ci;
}

// Common degree of a homogeneous polynomial in the given block.
inline int degree_of(const Polynomial& p, const std::vector<std::size_t>& block) {
    auto h = p.homogeneity(block);
    if (!h.homogeneous)
        throw std::invalid_argument("degree_of: not homogeneous in the block");
    return h.degree ? static_cast<int>(*h.degree) : 0;
}

namespace detail {

// A linear coordinate form vanishing nowhere on V(forms), certified by a
// projective emptiness check. On a transverse complete intersection the
// rank-drop junk of the incidence ideal is confined to the cone vertex, so
// saturating by such a form equals saturating by the full minors ideal.
inline std::optional<Polynomial> avoiding_linear_form(const CompleteIntersection& ci,
                                                      const ProjectiveSpace& space,
                                                      const GbOptions& opts) {
    auto works = [&](Polynomial ell) -> std::optional<Polynomial> {
        std::vector<Polynomial> gens = ci.forms;
        gens.push_back(ell);
        if (is_projectively_empty(Ideal::make(space.primal_vars(), std::move(gens)),
                                  space.coords(), opts))
            return ell;
        return std::nullopt;
    };
    const VarSetPtr& ring = space.primal_vars();
    for (std::size_t j = 0; j < space.coord_count(); ++j)
        if (auto ell = works(Polynomial::variable(ring, j)))
            return ell;
    for (std::size_t i = 0; i < space.coord_count(); ++i)
        for (std::size_t j = i + 1; j < space.coord_count(); ++j) {
            Polynomial xi = Polynomial::variable(ring, i);
            Polynomial xj = Polynomial::variable(ring, j);
            if (auto ell = works(xi + xj))
                return ell;
            if (auto ell = works(xi - xj))
                return ell;
        }
    return std::nullopt;
}

// Eliminate the x-block from the saturated incidence ideal.
//
// k = 1, n >= 1: a certified-smooth form is irreducible, so no partial
// vanishes identically on the (irreducible) conormal variety, while every junk
// component lies over grad F = 0 where all partials vanish; one saturation by
// any nonzero partial therefore removes exactly the junk. k >= 2 (or the
// degenerate n = 0): saturate once by a certified avoiding linear form when
// one exists (equal to the minors-ideal saturation, see above); otherwise fall
// back to the honest minors-ideal saturation as the intersection of the
// single-minor saturations, which never removes a legitimate component even
// when a fixed minor vanishes identically on one.
inline Ideal saturate_rank_locus_and_eliminate(const Ideal& incidence,
                                               const CompleteIntersection& ci,
                                               const ProjectiveSpace& space,
                                               const GbOptions& opts) {
    const std::size_t k = ci.forms.size();
    const VarSetPtr& ring = incidence.vars;
    std::vector<Polynomial> minors;
    {
        auto rows = jacobian_rows(ci.forms, space, ring);
        minors = row_minors(rows, ring);
    }
    if (minors.empty())
        throw DualNotHypersurface("Jacobian has identically deficient rank");
    for (const auto& m : minors)
        if (m.is_constant() && !m.is_zero())
            return eliminate(incidence, space.coords(), opts); // rank never drops
    if (k == 1 && space.n() >= 1)
        return eliminate(saturate(incidence, minors[0], opts), space.coords(), opts);
    if (auto ell = avoiding_linear_form(ci, space, opts))
        return eliminate(saturate(incidence, change_vars(*ell, ring), opts), space.coords(),
                         opts);
    Ideal acc = saturate(incidence, minors[0], opts);
    for (std::size_t i = 1; i < minors.size(); ++i)
        acc = intersect(acc, saturate(incidence, minors[i], opts), opts);
    return eliminate(acc, space.coords(), opts);
}

} // namespace detail

// Defining polynomial of the dual variety of a transverse complete
// intersection, by conormal incidence, saturation, and elimination of the
// x-block. Throws DualNotHypersurface when the elimination ideal is not
// principal (dual of codimension >= 2, e.g. the dual of a hyperplane is a
// point) and TransversalityUnverified when the certificate is missing.
inline Polynomial dual_variety(const CompleteIntersection& ci, const ProjectiveSpace& space,
                               const GbOptions& opts = {}) {
    if (!ci.certified)
        throw TransversalityUnverified("dual_variety: transversality not certified");
    Ideal incidence = conormal_ideal(ci, space);
    Ideal elim = detail::saturate_rank_locus_and_eliminate(incidence, ci, space, opts);
    if (elim.gens.empty())
        throw DualNotHypersurface("dual_variety: elimination ideal is zero");
    std::vector<Polynomial> dual_gens;
    dual_gens.reserve(elim.gens.size());
    for (const auto& g : elim.gens)
        dual_gens.push_back(change_vars(g, space.dual_vars()));
    auto gb = buchberger(Ideal::make(space.dual_vars(), std::move(dual_gens)),
                         TermOrder::grevlex(), opts);
    if (gb.elements().size() != 1)
        throw DualNotHypersurface(
            "dual_variety: elimination ideal not principal; dual has codimension >= 2");
    Polynomial g = canonical_scalar_form(gb.elements()[0]);
    if (g.is_constant())
        throw DualNotHypersurface("dual_variety: dual locus is empty");
    return g;
}

} // namespace dualvar

#endif
