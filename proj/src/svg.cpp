#include "permlab/svg.hpp"

#include <algorithm>
#include <sstream>

namespace permlab {

namespace {

constexpr double kSize = 480.0;
constexpr double kPad = 20.0;

std::string svg_open(double w, double h) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    return out.str();
}

}  // namespace

std::string svg_permutation(const Permutation& sigma) {
    const int n = sigma.size();
    std::ostringstream out;
    out << svg_open(kSize, kSize);
    out << "<rect x=\"" << kPad << "\" y=\"" << kPad << "\" width=\"" << kSize - 2 * kPad << "\" height=\""
        << kSize - 2 * kPad << "\" fill=\"white\" stroke=\"black\"/>\n";
    if (n > 0) {
        double cell = (kSize - 2 * kPad) / n;
        double r = std::max(1.5, std::min(5.0, cell / 3));
        for (int i = 1; i <= n; ++i) {
            double cx = kPad + (i - 0.5) * cell;
            double cy = kSize - kPad - (sigma(i) - 0.5) * cell;
            out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r << "\" fill=\"black\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string svg_walk(const Walk2D& walk) {
    const int n = walk.size();
    std::ostringstream out;
    out << svg_open(kSize, kSize);
    if (n > 0) {
        int hi = 1;
        for (const auto& [x, y] : walk.points) hi = std::max({hi, x, y});
        double sx = (kSize - 2 * kPad) / std::max(1, n - 1);
        double sy = (kSize - 2 * kPad) / hi;
        auto path_of = [&](bool first) {
            std::ostringstream p;
            for (int t = 1; t <= n; ++t) {
                double px = kPad + (t - 1) * sx;
                int v = first ? walk.at(t).first : walk.at(t).second;
                double py = kSize - kPad - v * sy;
                p << (t == 1 ? 'M' : 'L') << px << ' ' << py << ' ';
            }
            return p.str();
        };
        out << "<path d=\"" << path_of(true) << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n";
        out << "<path d=\"" << path_of(false) << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string svg_coalescent(const CoalescentWalk& z) {
    const int n = z.size();
    std::ostringstream out;
    out << svg_open(kSize, kSize);
    int lo = 0, hi = 1;
    for (int i = 1; i <= n; ++i)
        for (int t = i; t <= n; ++t) {
            lo = std::min(lo, z.value(i, t));
            hi = std::max(hi, z.value(i, t));
        }
    double sx = (kSize - 2 * kPad) / std::max(1, n - 1);
    double sy = (kSize - 2 * kPad) / std::max(1, hi - lo);
    auto ypix = [&](int v) { return kSize - kPad - (v - lo) * sy; };
    out << "<line x1=\"" << kPad << "\" y1=\"" << ypix(0) << "\" x2=\"" << kSize - kPad << "\" y2=\""
        << ypix(0) << "\" stroke=\"#bbbbbb\"/>\n";
    for (int i = 1; i <= n; ++i) {
        out << "<path d=\"";
        for (int t = i; t <= n; ++t)
            out << (t == i ? 'M' : 'L') << kPad + (t - 1) * sx << ' ' << ypix(z.value(i, t)) << ' ';
        out << "\" fill=\"none\" stroke=\"hsl(" << (i * 360) / std::max(1, n) << ",70%,45%)\" stroke-width=\"1.5\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace permlab
