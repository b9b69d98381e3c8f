#include "bead/svg.hpp"

#include <iomanip>

#include "bead/scaling.hpp"

namespace bead {

void write_svg(std::ostream& os, const HexagonSpec& spec, const std::vector<BeadConfiguration>& configs,
               int curve_points) {
    const int p = spec.p, q = spec.q;
    const double W = p + q, k = double(q - p) / p;
    // one unit per line across, the unit interval stretched to half the width
    const double px = 40.0, stretch = W / 2;
    os << std::setprecision(6);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (W + 1) * px << "\" height=\""
       << 1.1 * stretch * px << "\" viewBox=\"-0.5 -0.05 " << W + 1 << " 1.1\" preserveAspectRatio=\"none\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"1\" fill=\"none\" stroke=\"#999\" "
          "stroke-width=\"1\" vector-effect=\"non-scaling-stroke\"/>\n";
    // y grows downwards in SVG, positions grow upwards
    for (int which = 0; which < 2; ++which) {
        os << "<polyline class=\"" << (which ? "upper" : "lower")
           << "\" fill=\"none\" stroke=\"#c00\" stroke-width=\"2\" vector-effect=\"non-scaling-stroke\" points=\"";
        for (int i = 0; i < curve_points; ++i) {
            double t = W * i / (curve_points - 1);
            auto [c, d] = support_interval(k, t / p);
            os << t << ',' << 1.0 - (which ? d : c) << ' ';
        }
        os << "\"/>\n";
    }
    os << "<g class=\"particles\" fill=\"#036\">\n";
    for (const auto& cfg : configs)
        for (std::size_t t = 0; t < cfg.lines.size(); ++t)
            for (double x : cfg.lines[t])
                os << "<ellipse cx=\"" << t + 1 << "\" cy=\"" << 1.0 - x << "\" rx=\"0.08\" ry=\"" << 0.08 / stretch
                   << "\" fill-opacity=\"0.5\"/>\n";
    os << "</g>\n</svg>\n";
}

}  // namespace bead
