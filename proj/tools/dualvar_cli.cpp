// Command-line front-end: exact projective duals, degree formulas, the
// degree-conservation identity sweep, and the limit-decomposition pipeline.
//
// Exit codes: 0 success/pass, 1 verification failure or budget exhaustion,
// 2 malformed input or failed genericity hypothesis.

#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <dualvar/dualvar.hpp>

namespace {

struct CommonOpts {
    std::size_t budget_basis = 20000;
    std::int64_t budget_degree = 60;
    std::string order = "grevlex";
    std::string format = "text";
    bool stats = false;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--budget-basis", c.budget_basis, "cap on Groebner basis size")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget-degree", c.budget_degree, "cap on intermediate total degree")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--order", c.order, "term order inside eliminations")
        ->check(CLI::IsMember({"lex", "grevlex"}));
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--stats", c.stats, "report Groebner statistics");
}

dualvar::GbOptions gb_options(const CommonOpts& c, dualvar::GroebnerStats* st) {
    dualvar::GbOptions o;
    o.budget.max_basis_size = c.budget_basis;
    o.budget.max_degree = c.budget_degree;
    o.inner = c.order == "lex" ? dualvar::TermOrder::Kind::lex
                               : dualvar::TermOrder::Kind::grevlex;
    o.stats = st;
    return o;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

dualvar::Rat parse_rat(const std::string& s) {
    mpq_class q;
    try {
        q = mpq_class(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational number: '" + s + "'");
    }
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

// "a..b" or a single integer.
std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        int lo = std::stoi(s.substr(0, dots));
        int hi = std::stoi(s.substr(dots + 2));
        if (lo > hi)
            throw std::invalid_argument("empty range: '" + s + "'");
        return {lo, hi};
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("range bound out of range: '" + s + "'");
    }
}

struct DualArgs {
    std::string vars;
    std::vector<std::string> forms;
    CommonOpts common;
};

int run_dual(const DualArgs& a) {
    using namespace dualvar;
    GroebnerStats stats;
    GbOptions opts = gb_options(a.common, &stats);
    ProjectiveSpace space = ProjectiveSpace::from_coords(split_commas(a.vars));
    std::vector<Polynomial> forms;
    for (const auto& text : a.forms)
        forms.push_back(parse_polynomial(text, space.primal_vars()));
    CompleteIntersection ci = make_complete_intersection(space, std::move(forms));
    const std::vector<int> degrees = ci.degrees;
    try {
        ci = certify_transverse(std::move(ci), space, opts);
    } catch (const TransversalityUnverified&) {
        std::cerr << "error: the forms do not cut a smooth transverse complete "
                     "intersection\n";
        return 2;
    }
    Polynomial dual = Polynomial::zero(space.dual_vars());
    try {
        dual = dual_variety(ci, space, opts);
    } catch (const DualNotHypersurface& e) {
        if (ci.forms.size() == 1 && degrees[0] == 1)
            std::cerr << "error: dual is a point, not a hypersurface\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    auto predicted = ci_dual_degree(space.n(), degrees);
    if (a.common.format == "json") {
        json j;
        j["vars"] = space.coords();
        j["dual_vars"] = space.duals();
        j["forms"] = a.forms;
        j["dual"] = dual.to_string();
        j["degree"] = dual.total_degree();
        j["predicted_degree"] = predicted ? int_json(*predicted) : json(nullptr);
        if (a.common.stats)
            j["stats"] = stats_json(stats);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "dual: " << dual.to_string() << "\n";
        std::cout << "degree: " << dual.total_degree() << "\n";
        std::cout << "predicted degree: ";
        if (predicted)
            std::cout << *predicted << "\n";
        else
            std::cout << "none (dual is not a hypersurface)\n";
        if (a.common.stats)
            std::cout << "stats: pairs=" << stats.pairs_considered
                      << " basis=" << stats.basis_final
                      << " maxdeg=" << stats.max_total_degree << "\n";
    }
    return 0;
}

struct DegreeArgs {
    int dim = 0;
    std::vector<int> degrees;
    CommonOpts common;
};

int run_degree(const DegreeArgs& a) {
    using namespace dualvar;
    const int k = static_cast<int>(a.degrees.size());
    const int n = a.dim + k - 1;
    if (n < 1) {
        std::cerr << "error: need dim + #degrees - 1 >= 1\n";
        return 2;
    }
    auto v = ci_dual_degree(n, a.degrees);
    if (a.common.format == "json") {
        json j;
        j["dim"] = a.dim;
        j["n"] = n;
        j["degrees"] = a.degrees;
        j["dual_degree"] = v ? int_json(*v) : json(nullptr);
        std::cout << j.dump(2) << "\n";
    } else {
        if (v) {
            std::cout << *v << "\n";
        } else {
            std::cout << 0 << "\n";
            std::cerr << "note: the dual is degenerate (not a hypersurface)\n";
        }
    }
    return 0;
}

struct IdentityArgs {
    std::string n_range = "1..12";
    std::string d1_range = "1..8";
    std::string d2_range = "1..8";
    CommonOpts common;
};

int run_identity(const IdentityArgs& a) {
    using namespace dualvar;
    auto [n_lo, n_hi] = parse_range(a.n_range);
    auto [d1_lo, d1_hi] = parse_range(a.d1_range);
    auto [d2_lo, d2_hi] = parse_range(a.d2_range);
    bool all_balanced = true;
    json arr = json::array();
    for (int n = n_lo; n <= n_hi; ++n)
        for (int d1 = d1_lo; d1 <= d1_hi; ++d1)
            for (int d2 = d2_lo; d2 <= d2_hi; ++d2) {
                DecompositionLedger led = degree_ledger(DegreeProfile(n, d1, d2));
                all_balanced = all_balanced && led.balanced;
                if (a.common.format == "json")
                    arr.push_back(ledger_json(led));
                else
                    std::cout << "n=" << n << " d1=" << d1 << " d2=" << d2 << ": "
                              << ledger_text(led) << "\n";
            }
    if (a.common.format == "json")
        std::cout << arr.dump(2) << "\n";
    return all_balanced ? 0 : 1;
}

struct LimitArgs {
    std::string vars;
    std::vector<std::string> forms;
    bool random = false;
    int n = 1;
    int d1 = 0;
    int d2 = 0;
    std::uint64_t seed = 0;
    std::string s_sample = "1";
    bool interpolate = false;
    CommonOpts common;
};

int run_limit(const LimitArgs& a) {
    using namespace dualvar;
    GroebnerStats stats;
    LimitOptions opt;
    opt.gb = gb_options(a.common, &stats);
    opt.s_sample = parse_rat(a.s_sample);
    opt.interpolate = a.interpolate;
    if (opt.s_sample == 0) {
        std::cerr << "error: --s-sample must be nonzero\n";
        return 2;
    }

    std::optional<Family> fam;
    if (a.random) {
        if (a.d1 < 1 || a.d2 < 1) {
            std::cerr << "error: --random needs --d1 and --d2\n";
            return 2;
        }
        ProjectiveSpace space = a.vars.empty()
                                    ? ProjectiveSpace::standard(a.n + 2)
                                    : ProjectiveSpace::from_coords(split_commas(a.vars));
        if (space.n() != a.n) {
            std::cerr << "error: --vars must name n + 2 coordinates\n";
            return 2;
        }
        std::mt19937_64 rng(a.seed);
        const int attempts = 32;
        for (int i = 0; i < attempts; ++i) {
            Polynomial f = random_general_form(space, a.d1 + a.d2, rng);
            Polynomial f1 = random_general_form(space, a.d1, rng);
            Polynomial f2 = random_general_form(space, a.d2, rng);
            Family cand = build_family(space, std::move(f), std::move(f1), std::move(f2));
            if (check_genericity(cand, opt.s_sample, opt.gb).ok()) {
                fam = std::move(cand);
                break;
            }
        }
        if (!fam) {
            std::cerr << "error: no generic family found in " << attempts
                      << " draws for seed " << a.seed << "\n";
            return 2;
        }
        opt.verify_genericity = false; // already checked on the accepted draw
    } else {
        if (a.forms.size() != 3) {
            std::cerr << "error: limit needs F, F1, F2 (or --random)\n";
            return 2;
        }
        if (a.vars.empty()) {
            std::cerr << "error: --vars is required with explicit forms\n";
            return 2;
        }
        ProjectiveSpace space = ProjectiveSpace::from_coords(split_commas(a.vars));
        fam = build_family(space, parse_polynomial(a.forms[0], space.primal_vars()),
                           parse_polynomial(a.forms[1], space.primal_vars()),
                           parse_polynomial(a.forms[2], space.primal_vars()));
    }

    LimitReport rep = decompose_limit(*fam, opt);
    if (a.common.format == "json")
        std::cout << report_json(rep, a.common.stats).dump(2) << "\n";
    else
        std::cout << report_text(rep, a.common.stats);
    return rep.verdict ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact projective duals and limit decompositions"};
    app.require_subcommand(1);

    DualArgs dual_args;
    CLI::App* dual_cmd = app.add_subcommand("dual", "dual variety of a complete intersection");
    dual_cmd->add_option("--vars", dual_args.vars, "comma-separated coordinates")->required();
    dual_cmd->add_option("forms", dual_args.forms, "homogeneous forms")->required();
    add_common(dual_cmd, dual_args.common);

    DegreeArgs degree_args;
    CLI::App* degree_cmd =
        app.add_subcommand("degree", "predicted dual degree of a complete intersection");
    degree_cmd->add_option("--dim", degree_args.dim, "dimension of the intersection")
        ->required();
    degree_cmd->add_option("degrees", degree_args.degrees, "form degrees")->required();
    add_common(degree_cmd, degree_args.common);

    IdentityArgs id_args;
    CLI::App* id_cmd =
        app.add_subcommand("identity", "sweep the degree-conservation identity");
    id_cmd->add_option("--n", id_args.n_range, "ambient range, e.g. 1..12");
    id_cmd->add_option("--d1", id_args.d1_range, "first degree range, e.g. 1..8");
    id_cmd->add_option("--d2", id_args.d2_range, "second degree range, e.g. 1..8");
    add_common(id_cmd, id_args.common);

    LimitArgs limit_args;
    CLI::App* limit_cmd =
        app.add_subcommand("limit", "decompose the limit of duals of s*F + F1*F2");
    limit_cmd->add_option("--vars", limit_args.vars, "comma-separated coordinates");
    limit_cmd->add_option("forms", limit_args.forms, "F, F1, F2");
    limit_cmd->add_flag("--random", limit_args.random, "draw a seeded random family");
    limit_cmd->add_option("--n", limit_args.n, "ambient dimension parameter for --random");
    limit_cmd->add_option("--d1", limit_args.d1, "degree of F1 for --random");
    limit_cmd->add_option("--d2", limit_args.d2, "degree of F2 for --random");
    limit_cmd->add_option("--seed", limit_args.seed, "random seed");
    limit_cmd->add_option("--s-sample", limit_args.s_sample,
                          "nonzero rational s for the smooth-fiber check");
    limit_cmd->add_flag("--interpolate", limit_args.interpolate,
                        "force the sampled-fiber reconstruction for plane curves "
                        "(automatic from degree 4)");
    add_common(limit_cmd, limit_args.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(dual_cmd))
            return run_dual(dual_args);
        if (app.got_subcommand(degree_cmd))
            return run_degree(degree_args);
        if (app.got_subcommand(id_cmd))
            return run_identity(id_args);
        if (app.got_subcommand(limit_cmd))
            return run_limit(limit_args);
    } catch (const dualvar::GenericityFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dualvar::TransversalityUnverified& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dualvar::ParseError& e) {
        std::cerr << "error: " << e.what() << " (at position " << e.position() << ")\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dualvar::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const dualvar::DualNotHypersurface& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
