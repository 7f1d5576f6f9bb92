#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <dualvar/dualvar.hpp>

#include "random_polys.hpp"

using namespace dualvar;

namespace {

Polynomial dual_of(const ProjectiveSpace& space, const std::vector<std::string>& forms) {
    std::vector<Polynomial> parsed;
    for (const auto& f : forms)
        parsed.push_back(parse_polynomial(f, space.primal_vars()));
    auto ci = certify_transverse(make_complete_intersection(space, std::move(parsed)), space);
    return dual_variety(ci, space);
}

} // namespace

TEST_CASE("plane curve duals match hand-checked values", "[dual]") {
    ProjectiveSpace plane = ProjectiveSpace::from_coords({"x", "y", "z"});
    auto dv = plane.dual_vars();

    SECTION("smooth conic") {
        REQUIRE(dual_of(plane, {"x*y + z^2"}) == parse_polynomial("4*u*v + w^2", dv));
    }
    SECTION("Fermat cubic") {
        REQUIRE(dual_of(plane, {"x^3 + y^3 + z^3"}) ==
                parse_polynomial(
                    "u^6 - 2*u^3*v^3 + v^6 - 2*u^3*w^3 - 2*v^3*w^3 + w^6", dv));
    }
    SECTION("point as a linear complete intersection") {
        // the dual of the point (0:0:1) is the plane of lines through it
        REQUIRE(dual_of(plane, {"x", "y"}) == parse_polynomial("w", dv));
    }
    SECTION("a hyperplane has no dual hypersurface") {
        REQUIRE_THROWS_AS(dual_of(plane, {"x"}), DualNotHypersurface);
    }
    SECTION("transverse pair of conics: four tangent lines, degree 4") {
        Polynomial pair_dual = dual_of(plane, {"x^2 + y^2 - z^2", "x*y - z^2"});
        REQUIRE(pair_dual.total_degree() == 4);
        REQUIRE(Int(pair_dual.total_degree()) == *ci_dual_degree(plane.n(), {2, 2}));
        REQUIRE(pair_dual ==
                parse_polynomial("u^4 + 2*u^3*v + 3*u^2*v^2 + 2*u*v^3 + v^4 - u^2*w^2 "
                                 "- 4*u*v*w^2 - v^2*w^2 + w^4",
                                 dv));
    }
}

TEST_CASE("dual degree equals d(d-1) for seeded smooth plane curves", "[dual]") {
    ProjectiveSpace plane = ProjectiveSpace::from_coords({"x", "y", "z"});
    std::mt19937_64 rng(301);
    for (int d : {2, 3}) {
        Polynomial f = random_general_form(plane, d, rng);
        while (!is_smooth_hypersurface(f, plane))
            f = random_general_form(plane, d, rng);
        auto ci = certify_transverse(make_complete_intersection(plane, {f}), plane);
        Polynomial dual = dual_variety(ci, plane);
        REQUIRE(Int(dual.total_degree()) == hypersurface_dual_degree(1, d));
    }
}

TEST_CASE("dual is invariant under rescaling the form", "[dual][property]") {
    ProjectiveSpace plane = ProjectiveSpace::from_coords({"x", "y", "z"});
    Polynomial f = parse_polynomial("x*y + z^2", plane.primal_vars());
    Polynomial reference = dual_of(plane, {"x*y + z^2"});
    std::mt19937_64 rng(302);
    for (int i = 0; i < 25; ++i) {
        Rat c = testutil::random_rat(rng);
        if (c == 0)
            continue;
        auto ci = certify_transverse(make_complete_intersection(plane, {f * c}), plane);
        REQUIRE(dual_variety(ci, plane) == reference);
    }
}

TEST_CASE("dual is covariant under coordinate permutation", "[dual]") {
    ProjectiveSpace plane = ProjectiveSpace::from_coords({"x", "y", "z"});
    auto dv = plane.dual_vars();
    // cycle x -> y -> z -> x applied to the conic x*y + z^2
    Polynomial dual_orig = dual_of(plane, {"x*y + z^2"});
    Polynomial dual_cycled = dual_of(plane, {"y*z + x^2"});
    // the same cycle on the dual coordinates u -> v -> w -> u
    auto cycle = [&](const Polynomial& p) {
        std::vector<Term> out;
        for (const auto& t : p.terms()) {
            std::vector<std::int32_t> e{t.mono[2], t.mono[0], t.mono[1]};
            out.push_back({Monomial(std::move(e)), t.coeff});
        }
        return Polynomial::from_terms(dv, std::move(out));
    };
    REQUIRE(dual_cycled == cycle(dual_orig));
}

TEST_CASE("tangency membership: gradients of curve points lie on the dual",
          "[dual][property]") {
    ProjectiveSpace plane = ProjectiveSpace::from_coords({"x", "y", "z"});
    std::mt19937_64 rng(303);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);

    auto check_point = [&](const Polynomial& f, const Polynomial& dual,
                           const std::vector<Rat>& p) {
        REQUIRE(f.evaluate_point(p) == 0);
        std::vector<Rat> grad;
        bool nonzero = false;
        for (std::size_t i = 0; i < 3; ++i) {
            grad.push_back(f.derivative(i).evaluate_point(p));
            if (grad.back() != 0)
                nonzero = true;
        }
        REQUIRE(nonzero);
        REQUIRE(dual.evaluate_point(grad) == 0);
    };

    SECTION("conic x*y + z^2 via its rational parametrization") {
        Polynomial f = parse_polynomial("x*y + z^2", plane.primal_vars());
        Polynomial dual = dual_of(plane, {"x*y + z^2"});
        int done = 0;
        while (done < 100) {
            Rat t = make_rat(Int(num(rng)), Int(den(rng)));
            check_point(f, dual, {Rat(1), -t * t, t});
            ++done;
        }
    }

    SECTION("circle x^2 + y^2 - z^2 via Pythagorean triples") {
        Polynomial f = parse_polynomial("x^2 + y^2 - z^2", plane.primal_vars());
        Polynomial dual = dual_of(plane, {"x^2 + y^2 - z^2"});
        std::uniform_int_distribution<long> leg(1, 40);
        int done = 0;
        while (done < 100) {
            long m = leg(rng), n = leg(rng);
            if (m == n)
                continue;
            check_point(f, dual,
                        {Rat(m * m - n * n), Rat(2 * m * n), Rat(m * m + n * n)});
            ++done;
        }
    }
}

TEST_CASE("transversality checks tell tangent from transverse", "[dual]") {
    ProjectiveSpace plane = ProjectiveSpace::from_coords({"x", "y", "z"});
    auto pv = plane.primal_vars();

    // a line and a conic meeting transversally at two (conjugate) points
    auto good = make_complete_intersection(
        plane, {parse_polynomial("x", pv), parse_polynomial("x^2 + y^2 + z^2", pv)});
    REQUIRE(is_transverse(good, plane));
    REQUIRE(certify_transverse(good, plane).certified);

    // tangent contact at (0:0:1): both gradients are proportional there
    auto bad = make_complete_intersection(
        plane, {parse_polynomial("x", pv), parse_polynomial("x*z + y^2", pv)});
    REQUIRE_FALSE(is_transverse(bad, plane));
    REQUIRE_THROWS_AS(certify_transverse(bad, plane), TransversalityUnverified);

    // a singular "curve" is rejected too
    Polynomial cusp = parse_polynomial("y^2*z - x^3", pv);
    REQUIRE_FALSE(is_smooth_hypersurface(cusp, plane));
    auto singular = make_complete_intersection(plane, {cusp});
    REQUIRE_THROWS_AS(certify_transverse(singular, plane), TransversalityUnverified);

    REQUIRE(is_smooth_hypersurface(parse_polynomial("x^3 + y^3 + z^3", pv), plane));
}

TEST_CASE("uncertified input is refused by dual_variety", "[dual]") {
    ProjectiveSpace plane = ProjectiveSpace::from_coords({"x", "y", "z"});
    auto ci = make_complete_intersection(
        plane, {parse_polynomial("x*y + z^2", plane.primal_vars())});
    REQUIRE_THROWS_AS(dual_variety(ci, plane), TransversalityUnverified);
}
