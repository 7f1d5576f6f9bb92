// End-to-end acceptance checks, one line of output per criterion.
// Usage: acceptance <path-to-cli-binary>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include <dualvar/dualvar.hpp>

#include "random_polys.hpp"

using namespace dualvar;
using nlohmann::ordered_json;

namespace {

std::string g_cli;
int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct CliResult {
    int exit_code = -1;
    ordered_json out;
};

CliResult run_cli(const std::string& args, const std::string& tag) {
    const std::string path = "/tmp/acceptance_" + tag + ".json";
    const std::string cmd = g_cli + " " + args + " > " + path + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(path);
    if (in)
        in >> r.out;
    return r;
}

void criterion(int number, const std::string& name, double bound_seconds,
               const std::function<bool(std::string&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double dt = seconds_since(t0);
    if (dt >= bound_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time bound");
    }
    if (!ok)
        ++g_failures;
    std::printf("%s  criterion %d: %s (%.2fs, bound %.0fs)%s%s\n", ok ? "PASS" : "FAIL",
                number, name.c_str(), dt, bound_seconds, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
}

Family draw_quartic_family(std::uint64_t seed) {
    ProjectiveSpace plane = ProjectiveSpace::from_coords({"x", "y", "z"});
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 32; ++i) {
        Polynomial f = random_general_form(plane, 4, rng);
        Polynomial f1 = random_general_form(plane, 2, rng);
        Polynomial f2 = random_general_form(plane, 2, rng);
        Family cand = build_family(plane, std::move(f), std::move(f1), std::move(f2));
        if (check_genericity(cand).ok())
            return cand;
    }
    throw std::runtime_error("no generic quartic family found");
}

Polynomial fiber_dual(const Family& fam, const Rat& s0) {
    auto ci = certify_transverse(
        make_complete_intersection(fam.space, {fam.fiber(s0)}), fam.space);
    return dual_variety(ci, fam.space);
}

bool generator_matches_fiber(const Family& fam, const LimitDual& ld, const Rat& s0) {
    std::size_t s_idx = fam.su_vars->index(fam.s_name);
    Polynomial evaluated = canonical_scalar_form(
        change_vars(ld.generator.evaluate(s_idx, s0), fam.space.dual_vars()));
    return evaluated == fiber_dual(fam, s0);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];

    criterion(1, "conic pencil s*z^2 + x*y: doubled point dual", 5.0, [](std::string& why) {
        CliResult r = run_cli("limit --vars x,y,z 'z^2' 'x' 'y' --format json --stats", "c1");
        if (r.exit_code != 0) {
            why = "exit code " + std::to_string(r.exit_code);
            return false;
        }
        const ordered_json& j = r.out;
        if (j["verdict"] != "pass" || j["generator"] != "4*s*u*v + w^2" ||
            j["mu0"] != "w^2") {
            why = "wrong generator/mu0/verdict";
            return false;
        }
        const auto& point = j["components"][2];
        if (point["poly"] != "w" || point["measured_mult"] != 2) {
            why = "point dual not doubled";
            return false;
        }
        return true;
    });

    criterion(2, "cubic splitting into line + conic", 600.0, [](std::string& why) {
        CliResult r = run_cli(
            "limit --vars x,y,z 'x^3 + y^3 + z^3' 'x' 'x^2 + y^2 + z^2' --format json",
            "c2");
        if (r.exit_code != 0) {
            why = "exit code " + std::to_string(r.exit_code);
            return false;
        }
        const ordered_json& j = r.out;
        if (j["verdict"] != "pass" || j["degree"] != 6) {
            why = "verdict or degree";
            return false;
        }
        const auto& c = j["components"];
        if (c[0]["poly"] != "trivial: not a hypersurface" ||
            c[1]["poly"] != "u^2 + v^2 + w^2" || c[1]["measured_mult"] != 1 ||
            c[2]["poly"] != "v^2 + w^2" || c[2]["measured_mult"] != 2) {
            why = "component mismatch";
            return false;
        }
        std::string residual = j["residual"].get<std::string>();
        if (residual.find_first_of("uvw") != std::string::npos || residual == "0") {
            why = "residual not a nonzero constant";
            return false;
        }
        const auto& led = j["ledger"];
        if (led["lhs"] != 6 || led["dual2"] != 2 || led["pair"] != 2 ||
            led["balanced"] != true) {
            why = "ledger mismatch";
            return false;
        }
        return true;
    });

    criterion(3, "degree identity sweep with recurrence", 1.0, [](std::string& why) {
        for (int n = 1; n <= 12; ++n)
            for (int d1 = 1; d1 <= 8; ++d1)
                for (int d2 = d1; d2 <= 8; ++d2) {
                    DegreeProfile p(n, d1, d2);
                    if (!verify_degree_identity(p)) {
                        why = "identity fails";
                        return false;
                    }
                    if (n >= 3 && !verify_degree_recurrence(p)) {
                        why = "recurrence fails";
                        return false;
                    }
                }
        return true;
    });

    criterion(4, "quintic surface ledger 80 = 12 + 2 + 2*18 + 30", 1.0,
              [](std::string& why) {
        DecompositionLedger led = degree_ledger(DegreeProfile(2, 2, 3));
        bool ok = hypersurface_dual_degree(2, 5) == 80 &&
                  hypersurface_dual_degree(2, 3) == 12 &&
                  hypersurface_dual_degree(2, 2) == 2 && pair_dual_degree(2, 2, 3) == 18 &&
                  triple_dual_degree(2, 5, 2, 3) == 30 && led.lhs == 80 && led.balanced;
        if (!ok)
            why = "ledger terms off";
        return ok;
    });

    criterion(5, "computed dual degree equals d(d-1) for d = 2, 3, 4", 900.0,
              [](std::string& why) {
        ProjectiveSpace plane = ProjectiveSpace::from_coords({"x", "y", "z"});
        std::mt19937_64 rng(500);
        for (int d : {2, 3, 4}) {
            Polynomial f = random_general_form(plane, d, rng);
            while (!is_smooth_hypersurface(f, plane))
                f = random_general_form(plane, d, rng);
            auto ci = certify_transverse(make_complete_intersection(plane, {f}), plane);
            Polynomial dual = dual_variety(ci, plane);
            if (Int(dual.total_degree()) != hypersurface_dual_degree(1, d)) {
                why = "degree mismatch at d = " + std::to_string(d);
                return false;
            }
        }
        return true;
    });

    criterion(6, "series coefficient degrees match the closed forms", 1.0,
              [](std::string& why) {
        for (int n = 1; n <= 12; ++n)
            for (int d = 2; d <= 8; ++d)
                if (*ci_dual_degree(n, {d}) != hypersurface_dual_degree(n, d)) {
                    why = "hypersurface case";
                    return false;
                }
        for (int n = 1; n <= 12; ++n)
            for (int d1 = 1; d1 <= 8; ++d1)
                for (int d2 = d1; d2 <= 8; ++d2) {
                    auto got = ci_dual_degree(n, {d1, d2});
                    if ((got ? *got : Int(0)) != pair_dual_degree(n, d1, d2)) {
                        why = "pair case";
                        return false;
                    }
                }
        for (int n = 2; n <= 12; ++n)
            for (int d = 1; d <= 8; ++d)
                for (int d1 = 1; d1 <= 8; ++d1)
                    for (int d2 = d1; d2 <= 8; ++d2) {
                        auto got = ci_dual_degree(n, {d, d1, d2});
                        if ((got ? *got : Int(0)) != triple_dual_degree(n, d, d1, d2)) {
                            why = "triple case";
                            return false;
                        }
                    }
        return true;
    });

    criterion(7, "family generator at s = 1 equals the fiber dual", 1200.0,
              [](std::string& why) {
        ProjectiveSpace plane = ProjectiveSpace::from_coords({"x", "y", "z"});
        auto pv = plane.primal_vars();
        Family cubic = build_family(plane, parse_polynomial("x^3 + y^3 + z^3", pv),
                                    parse_polynomial("x", pv),
                                    parse_polynomial("x^2 + y^2 + z^2", pv));
        if (!generator_matches_fiber(cubic, limit_dual_polynomial(cubic), Rat(1))) {
            why = "cubic family";
            return false;
        }
        Family quartic = draw_quartic_family(11);
        LimitOptions opt;
        opt.verify_genericity = false; // the accepted draw was already checked
        opt.interpolate = true;        // fibers sampled away from s = 1
        if (!generator_matches_fiber(quartic, limit_dual_polynomial(quartic, opt),
                                     Rat(1))) {
            why = "quartic family";
            return false;
        }
        return true;
    });

    criterion(8, "property suites, 200 seeded cases each", 120.0, [](std::string& why) {
        auto vars = make_varset("x,y,z");
        std::mt19937_64 rng(800);

        for (int i = 0; i < 200; ++i) { // ring axioms
            Polynomial a = testutil::random_poly(vars, rng);
            Polynomial b = testutil::random_poly(vars, rng);
            Polynomial c = testutil::random_poly(vars, rng);
            if ((a + b) + c != a + (b + c) || a * b != b * a ||
                (a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c) {
                why = "ring axioms";
                return false;
            }
        }

        std::uniform_int_distribution<std::size_t> pick(0, 2);
        for (int i = 0; i < 200; ++i) { // Leibniz
            Polynomial a = testutil::random_poly(vars, rng);
            Polynomial b = testutil::random_poly(vars, rng);
            std::size_t v = pick(rng);
            if ((a * b).derivative(v) != a.derivative(v) * b + a * b.derivative(v)) {
                why = "Leibniz";
                return false;
            }
        }

        std::uniform_int_distribution<int> degree(1, 5);
        for (int i = 0; i < 200; ++i) { // Euler
            int d = degree(rng);
            Polynomial f = testutil::random_homogeneous(vars, d, rng);
            Polynomial sum = Polynomial::zero(vars);
            for (std::size_t v = 0; v < 3; ++v)
                sum = sum + Polynomial::variable(vars, v) * f.derivative(v);
            if (sum != f * Rat(d)) {
                why = "Euler";
                return false;
            }
        }

        for (int i = 0; i < 200; ++i) { // exact division round-trip
            Polynomial a = testutil::random_poly(vars, rng);
            Polynomial b = testutil::random_nonzero_poly(vars, rng);
            auto q = exact_divide(a * b, b);
            if (!q || *q != a) {
                why = "exact division";
                return false;
            }
        }

        for (int i = 0; i < 200; ++i) { // S-polynomial reduction
            Ideal ideal = Ideal::make(vars, {testutil::random_nonzero_poly(vars, rng, 4, 2),
                                             testutil::random_nonzero_poly(vars, rng, 4, 2)});
            auto gb = buchberger(ideal, TermOrder::grevlex());
            const auto& basis = gb.elements();
            for (std::size_t a = 0; a < basis.size(); ++a)
                for (std::size_t b = a + 1; b < basis.size(); ++b)
                    if (!normal_form(s_polynomial(basis[a], basis[b], gb.order()), gb)
                             .is_zero()) {
                        why = "S-polynomial reduction";
                        return false;
                    }
        }

        for (int i = 0; i < 200; ++i) { // saturation idempotence
            Polynomial a = testutil::random_nonzero_poly(vars, rng, 3, 2);
            Polynomial b = testutil::random_nonzero_poly(vars, rng, 3, 2);
            Polynomial g = Polynomial::variable(vars, pick(rng));
            Ideal sat = saturate(Ideal::make(vars, {g * a, g * b}), g);
            if (!ideal_contains(sat, a) || !ideal_equal(saturate(sat, g), sat)) {
                why = "saturation idempotence";
                return false;
            }
        }

        { // tangency membership
            ProjectiveSpace plane = ProjectiveSpace::from_coords({"x", "y", "z"});
            auto pv = plane.primal_vars();
            auto tangent_ok = [&](const Polynomial& f, const Polynomial& dual,
                                  const std::vector<Rat>& p) {
                if (f.evaluate_point(p) != 0)
                    return false;
                std::vector<Rat> grad;
                for (std::size_t i = 0; i < 3; ++i)
                    grad.push_back(f.derivative(i).evaluate_point(p));
                return dual.evaluate_point(grad) == 0;
            };
            Polynomial conic = parse_polynomial("x*y + z^2", pv);
            Polynomial conic_dual = dual_variety(
                certify_transverse(make_complete_intersection(plane, {conic}), plane),
                plane);
            Polynomial circle = parse_polynomial("x^2 + y^2 - z^2", pv);
            Polynomial circle_dual = dual_variety(
                certify_transverse(make_complete_intersection(plane, {circle}), plane),
                plane);
            std::uniform_int_distribution<long> num(-50, 50), den(1, 20), leg(1, 40);
            int done = 0;
            while (done < 200) {
                if (done % 2 == 0) {
                    Rat t = make_rat(Int(num(rng)), Int(den(rng)));
                    if (!tangent_ok(conic, conic_dual, {Rat(1), -t * t, t})) {
                        why = "tangency membership (conic)";
                        return false;
                    }
                } else {
                    long m = leg(rng), n = leg(rng);
                    if (m == n)
                        continue;
                    if (!tangent_ok(circle, circle_dual,
                                    {Rat(m * m - n * n), Rat(2 * m * n),
                                     Rat(m * m + n * n)})) {
                        why = "tangency membership (circle)";
                        return false;
                    }
                }
                ++done;
            }
        }
        return true;
    });

    if (g_failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
