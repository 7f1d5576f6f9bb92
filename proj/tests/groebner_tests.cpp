#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <dualvar/dualvar.hpp>

#include "random_polys.hpp"

using namespace dualvar;
using testutil::random_nonzero_poly;
using testutil::random_poly;

namespace {

Ideal random_ideal(const VarSetPtr& vars, std::mt19937_64& rng, int ngens = 2,
                   int max_terms = 4, int max_exp = 2) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < ngens; ++i)
        gens.push_back(random_nonzero_poly(vars, rng, max_terms, max_exp));
    return Ideal::make(vars, std::move(gens));
}

} // namespace

TEST_CASE("buchberger bases absorb their inputs and their S-polynomials",
          "[groebner][property]") {
    auto vars = make_varset("x,y,z");
    std::mt19937_64 rng(201);
    for (int i = 0; i < 200; ++i) {
        Ideal ideal = random_ideal(vars, rng);
        auto gb = buchberger(ideal, TermOrder::grevlex());
        for (const auto& g : ideal.gens)
            REQUIRE(normal_form(g, gb).is_zero());
        const auto& basis = gb.elements();
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = a + 1; b < basis.size(); ++b)
                REQUIRE(normal_form(s_polynomial(basis[a], basis[b], gb.order()), gb)
                            .is_zero());
        // normal forms are canonical representatives
        Polynomial p = random_poly(vars, rng);
        Polynomial r = normal_form(p, gb);
        REQUIRE(normal_form(r, gb) == r);
        REQUIRE(normal_form(p - r, gb).is_zero());
    }
}

TEST_CASE("elimination returns the subring part of the ideal", "[groebner][property]") {
    auto vars = make_varset("x,y,z");
    std::mt19937_64 rng(202);
    for (int i = 0; i < 100; ++i) {
        Ideal ideal = random_ideal(vars, rng);
        Ideal elim = eliminate(ideal, {"x"});
        auto full = buchberger(ideal, TermOrder::grevlex());
        for (const auto& g : elim.gens) {
            REQUIRE_FALSE(g.depends_on(vars->index("x")));
            REQUIRE(normal_form(g, full).is_zero());
        }
    }

    SECTION("implicitization of the rational circle") {
        auto tv = make_varset("t,x,y");
        auto t = Polynomial::variable(tv, "t");
        auto x = Polynomial::variable(tv, "x");
        auto y = Polynomial::variable(tv, "y");
        auto one = Polynomial::constant(tv, Rat(1));
        // x = (1 - t^2)/(1 + t^2), y = 2t/(1 + t^2)
        Ideal graph = Ideal::make(
            tv, {x * (one + t * t) - (one - t * t), y * (one + t * t) - Rat(2) * t});
        Ideal elim = eliminate(graph, {"t"});
        Polynomial circle = x * x + y * y - one;
        REQUIRE(ideal_equal(elim, Ideal::make(tv, {circle})));
    }
}

TEST_CASE("saturation grows the ideal, absorbs the multiplier, and is idempotent",
          "[groebner][property]") {
    auto vars = make_varset("x,y,z");
    std::mt19937_64 rng(203);
    std::uniform_int_distribution<std::size_t> pick(0, 2);
    for (int i = 0; i < 200; ++i) {
        Polynomial a = random_nonzero_poly(vars, rng, 3, 2);
        Polynomial b = random_nonzero_poly(vars, rng, 3, 2);
        Polynomial g = Polynomial::variable(vars, pick(rng));
        // plant g as a common factor; saturation must strip it
        Ideal ideal = Ideal::make(vars, {g * a, g * b});
        Ideal sat = saturate(ideal, g);
        auto sat_gb = buchberger(sat, TermOrder::grevlex());
        REQUIRE(ideal_contains(sat_gb, a));
        REQUIRE(ideal_contains(sat_gb, b));
        for (const auto& gen : ideal.gens)
            REQUIRE(ideal_contains(sat_gb, gen));
        // multiplier absorption on the returned generators
        for (const auto& gen : sat.gens)
            REQUIRE(ideal_contains(sat_gb, gen * g));
    }

    SECTION("idempotence and small goldens") {
        auto x = Polynomial::variable(vars, "x");
        auto y = Polynomial::variable(vars, "y");
        auto z = Polynomial::variable(vars, "z");

        Ideal planted = Ideal::make(vars, {x * y, x * z});
        Ideal sat = saturate(planted, x);
        REQUIRE(ideal_equal(sat, Ideal::make(vars, {y, z})));
        REQUIRE(ideal_equal(saturate(sat, x), sat));

        REQUIRE(ideal_equal(saturate(Ideal::make(vars, {x * x * y}), x),
                            Ideal::make(vars, {y})));

        std::mt19937_64 rng2(204);
        for (int i = 0; i < 25; ++i) {
            Ideal ideal = random_ideal(vars, rng2, 2, 3, 2);
            Polynomial g = Polynomial::variable(vars, i % 3);
            Ideal once = saturate(ideal, g);
            REQUIRE(ideal_equal(saturate(once, g), once));
        }
    }
}

TEST_CASE("ideal intersection", "[groebner]") {
    auto vars = make_varset("x,y,z");
    auto x = Polynomial::variable(vars, "x");
    auto y = Polynomial::variable(vars, "y");
    auto z = Polynomial::variable(vars, "z");

    REQUIRE(ideal_equal(intersect(Ideal::make(vars, {x}), Ideal::make(vars, {y})),
                        Ideal::make(vars, {x * y})));
    REQUIRE(ideal_equal(intersect(Ideal::make(vars, {x, y}), Ideal::make(vars, {z})),
                        Ideal::make(vars, {x * z, y * z})));
    // intersection with a containing ideal is the smaller one
    REQUIRE(ideal_equal(intersect(Ideal::make(vars, {x * y}), Ideal::make(vars, {x})),
                        Ideal::make(vars, {x * y})));
}

TEST_CASE("projective emptiness criterion", "[groebner]") {
    auto vars = make_varset("x,y,z");
    auto x = Polynomial::variable(vars, "x");
    auto y = Polynomial::variable(vars, "y");
    auto z = Polynomial::variable(vars, "z");
    std::vector<std::string> coords{"x", "y", "z"};

    REQUIRE(is_projectively_empty(Ideal::make(vars, {x, y, z}), coords));
    REQUIRE(is_projectively_empty(Ideal::make(vars, {Polynomial::constant(vars, Rat(1))}),
                                  coords));
    REQUIRE_FALSE(is_projectively_empty(Ideal::make(vars, {x, y}), coords));
    // nonempty over the algebraic closure despite having no rational points
    REQUIRE_FALSE(is_projectively_empty(Ideal::make(vars, {x * x + y * y, z}), coords));
    REQUIRE(is_projectively_empty(Ideal::make(vars, {x * x + y * y, x + y, z}), coords));
}

TEST_CASE("budgets stop runaway computations", "[groebner]") {
    auto vars = make_varset("x,y,z");
    auto x = Polynomial::variable(vars, "x");
    auto y = Polynomial::variable(vars, "y");
    auto z = Polynomial::variable(vars, "z");
    Ideal ideal = Ideal::make(vars, {x * x + y, y * y + z, z * z + x});
    GbOptions opts;
    opts.budget.max_basis_size = 2;
    REQUIRE_THROWS_AS(buchberger(ideal, TermOrder::grevlex(), opts), BudgetExceeded);
    opts = GbOptions{};
    opts.budget.max_degree = 1;
    REQUIRE_THROWS_AS(buchberger(ideal, TermOrder::grevlex(), opts), BudgetExceeded);
}
