#ifndef DUALVAR_REPORT_HPP
#define DUALVAR_REPORT_HPP

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "degree_formulas.hpp"
#include "groebner.hpp"
#include "limit_pipeline.hpp"

namespace dualvar {

using json = nlohmann::ordered_json;

inline json int_json(const Int& v) {
    if (v.fits_slong_p())
        return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

inline json ledger_json(const DecompositionLedger& led) {
    json j;
    j["n"] = led.profile.n;
    j["d"] = led.profile.d();
    j["d1"] = led.profile.d1;
    j["d2"] = led.profile.d2;
    j["lhs"] = int_json(led.lhs);
    j["dual1"] = int_json(led.dual1);
    j["dual2"] = int_json(led.dual2);
    j["pair"] = int_json(led.pair);
    j["pair_doubled"] = int_json(led.pair_doubled);
    j["triple"] = int_json(led.triple);
    j["balanced"] = led.balanced;
    return j;
}

inline std::string ledger_text(const DecompositionLedger& led) {
    std::ostringstream os;
    os << led.lhs << " = " << led.dual1 << " + " << led.dual2 << " + " << led.triple
       << " + 2*" << led.pair << (led.balanced ? "  [balanced]" : "  [UNBALANCED]");
    return os.str();
}

inline json stats_json(const GroebnerStats& st) {
    json j;
    j["pairs_considered"] = st.pairs_considered;
    j["pairs_skipped"] = st.pairs_skipped;
    j["reductions_to_zero"] = st.reductions_to_zero;
    j["basis_inserted"] = st.basis_inserted;
    j["basis_final"] = st.basis_final;
    j["max_total_degree"] = st.max_total_degree;
    return j;
}

inline json family_json(const Family& fam) {
    json j;
    j["vars"] = fam.space.coords();
    j["dual_vars"] = fam.space.duals();
    j["s"] = fam.s_name;
    j["n"] = fam.space.n();
    j["d"] = fam.d;
    j["d1"] = fam.d1;
    j["d2"] = fam.d2;
    j["F"] = fam.f.to_string();
    j["F1"] = fam.f1.to_string();
    j["F2"] = fam.f2.to_string();
    return j;
}

inline const char* trivial_note() { return "trivial: not a hypersurface"; }

// Column width in code points (labels carry a UTF-8 intersection sign).
inline std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80)
            ++w;
    return w;
}

inline json component_json(const ComponentEntry& e) {
    json j;
    j["label"] = e.label;
    j["poly"] = e.trivial ? std::string(trivial_note()) : e.dual->to_string();
    j["expected_mult"] = e.expected_multiplicity;
    j["measured_mult"] = e.measured_multiplicity;
    j["degree"] = int_json(e.measured_degree);
    j["expected_degree"] = int_json(e.expected_degree);
    return j;
}

inline json report_json(const LimitReport& rep, bool include_stats = false) {
    json j;
    j["family"] = family_json(rep.family);
    j["mu0"] = rep.limit.mu0.to_string();
    j["degree"] = int_json(Int(rep.limit.mu0.total_degree()));
    j["components"] = json::array();
    for (const auto& e : rep.components)
        j["components"].push_back(component_json(e));
    j["residual"] = rep.residual.to_string();
    j["ledger"] = ledger_json(rep.ledger);
    j["verdict"] = rep.verdict ? "pass" : "fail";
    if (include_stats) {
        j["generator"] = rep.limit.generator.to_string();
        j["s_content_power"] = rep.limit.s_content_power;
        j["stats"] = stats_json(rep.stats);
    }
    return j;
}

inline std::string report_text(const LimitReport& rep, bool include_stats = false) {
    std::ostringstream os;
    const Family& fam = rep.family;
    os << "family: F_s = " << fam.s_name << "*(" << fam.f.to_string() << ") + ("
       << fam.f1.to_string() << ")*(" << fam.f2.to_string() << ")\n";
    os << "  n = " << fam.space.n() << ", d = " << fam.d << " = " << fam.d1 << " + "
       << fam.d2 << "\n";
    os << "generator: " << rep.limit.generator.to_string() << "\n";
    os << "mu0 = " << rep.limit.mu0.to_string() << "   (degree "
       << rep.limit.mu0.total_degree() << ")\n";
    os << "components:\n";
    std::size_t label_w = 5;
    for (const auto& e : rep.components)
        label_w = std::max(label_w, display_width(e.label));
    os << "  " << std::left << "label" << std::string(label_w - 5, ' ')
       << "  expected  measured  degree  polynomial\n";
    for (const auto& e : rep.components) {
        os << "  " << e.label << std::string(label_w - display_width(e.label), ' ');
        os << "  " << std::setw(8) << e.expected_multiplicity;
        if (e.trivial)
            os << "  " << std::setw(8) << "-";
        else
            os << "  " << std::setw(8) << e.measured_multiplicity;
        os << "  " << std::setw(6) << e.measured_degree.get_str();
        os << "  " << (e.trivial ? std::string(trivial_note()) : e.dual->to_string())
           << "\n";
    }
    os << "residual: " << rep.residual.to_string() << "\n";
    os << "ledger: " << ledger_text(rep.ledger) << "\n";
    if (include_stats) {
        os << "s-content power: " << rep.limit.s_content_power << "\n";
        os << "stats: pairs=" << rep.stats.pairs_considered
           << " skipped=" << rep.stats.pairs_skipped
           << " zero-reductions=" << rep.stats.reductions_to_zero
           << " basis=" << rep.stats.basis_final
           << " maxdeg=" << rep.stats.max_total_degree << "\n";
    }
    os << "verdict: " << (rep.verdict ? "pass" : "fail") << "\n";
    return os.str();
}

} // namespace dualvar

#endif
