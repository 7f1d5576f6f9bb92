// Degeneration of duals for the pencil s*z^2 + x*y in the plane: as s -> 0 the
// smooth conic degenerates to the line pair xy = 0, and the flat limit of the
// dual conics is the point-dual line w = 0 counted twice.

#include <iostream>

#include <dualvar/dualvar.hpp>

int main() {
    using namespace dualvar;
    ProjectiveSpace plane = ProjectiveSpace::from_coords({"x", "y", "z"});
    Family fam = build_family(plane, parse_polynomial("z^2", plane.primal_vars()),
                              parse_polynomial("x", plane.primal_vars()),
                              parse_polynomial("y", plane.primal_vars()));
    LimitReport rep = decompose_limit(fam);
    std::cout << report_text(rep, /*include_stats=*/true);
    return rep.verdict ? 0 : 1;
}
