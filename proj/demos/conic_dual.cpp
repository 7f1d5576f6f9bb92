// Duals of a few plane curves, computed exactly: the smooth conic xy + z^2,
// the Fermat cubic, and the point {x = y = 0} (whose dual is the line w = 0).

#include <iostream>

#include <dualvar/dualvar.hpp>

int main() {
    using namespace dualvar;
    ProjectiveSpace plane = ProjectiveSpace::from_coords({"x", "y", "z"});

    auto show = [&](const std::vector<std::string>& forms) {
        std::vector<Polynomial> parsed;
        for (const auto& f : forms)
            parsed.push_back(parse_polynomial(f, plane.primal_vars()));
        auto ci = certify_transverse(make_complete_intersection(plane, std::move(parsed)),
                                     plane);
        std::cout << "dual of {";
        for (std::size_t i = 0; i < forms.size(); ++i)
            std::cout << (i ? ", " : "") << forms[i];
        std::cout << "}:\n";
        try {
            Polynomial dual = dual_variety(ci, plane);
            auto predicted = ci_dual_degree(plane.n(), ci.degrees);
            std::cout << "  " << dual.to_string() << "   (degree " << dual.total_degree()
                      << ", predicted " << (predicted ? predicted->get_str() : "none")
                      << ")\n";
        } catch (const DualNotHypersurface& e) {
            std::cout << "  " << e.what() << "\n";
        }
    };

    show({"x*y + z^2"});
    show({"x^3 + y^3 + z^3"});
    show({"x", "y"});
    show({"x"}); // a line: its dual is a point, reported as such
    return 0;
}
