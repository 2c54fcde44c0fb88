#include "darboux3/exportio.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "darboux3/errors.hpp"

namespace dbx {

namespace {

std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s, const std::string& path) {
    double v = 0;
    const char* b = s.data();
    const auto res = std::from_chars(b, b + s.size(), v);
    if (res.ec != std::errc() || res.ptr != b + s.size())
        throw IoError("malformed number '" + s + "' in " + path);
    return v;
}

}  // namespace

std::optional<Plane> plane_from_string(const std::string& text) {
    if (text == "xy") return Plane::xy;
    if (text == "xz") return Plane::xz;
    if (text == "yz") return Plane::yz;
    return std::nullopt;
}

std::string plane_name(Plane plane) {
    switch (plane) {
        case Plane::xy: return "xy";
        case Plane::xz: return "xz";
        default: return "yz";
    }
}

void write_csv(const Trajectory& traj, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "t,x,y,z\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        out << fmt(traj.times[i]) << ',' << fmt(traj.states[i][0]) << ','
            << fmt(traj.states[i][1]) << ',' << fmt(traj.states[i][2]) << '\n';
    }
    if (!out.good()) throw IoError("write failed for " + path);
}

Trajectory read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty file " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "t,x,y,z") throw IoError("unexpected header in " + path);

    Trajectory traj;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::array<std::string, 4> cells;
        std::size_t start = 0;
        for (int c = 0; c < 4; ++c) {
            const std::size_t comma = line.find(',', start);
            if (c < 3) {
                if (comma == std::string::npos) throw IoError("short row in " + path);
                cells[c] = line.substr(start, comma - start);
                start = comma + 1;
            } else {
                if (comma != std::string::npos) throw IoError("extra column in " + path);
                cells[c] = line.substr(start);
            }
        }
        traj.times.push_back(parse_double(cells[0], path));
        traj.states.push_back({parse_double(cells[1], path), parse_double(cells[2], path),
                               parse_double(cells[3], path)});
    }
    return traj;
}

void write_svg(const Trajectory& traj, Plane plane, const std::string& path, int width,
               int height) {
    const int ca = plane == Plane::yz ? 1 : 0;
    const int cb = plane == Plane::xy ? 1 : 2;
    const char axis_a = "xyz"[ca];
    const char axis_b = "xyz"[cb];

    double amin = 0, amax = 1, bmin = 0, bmax = 1;
    if (!traj.states.empty()) {
        amin = amax = traj.states[0][ca];
        bmin = bmax = traj.states[0][cb];
        for (const auto& s : traj.states) {
            amin = std::min(amin, s[ca]);
            amax = std::max(amax, s[ca]);
            bmin = std::min(bmin, s[cb]);
            bmax = std::max(bmax, s[cb]);
        }
    }
    const double apad = amax > amin ? 0.05 * (amax - amin) : 0.5;
    const double bpad = bmax > bmin ? 0.05 * (bmax - bmin) : 0.5;
    amin -= apad;
    amax += apad;
    bmin -= bpad;
    bmax += bpad;

    const double ml = 50, mr = 15, mt = 15, mb = 35;
    const double pw = width - ml - mr, ph = height - mt - mb;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
        << "  <rect x=\"" << fmt(ml) << "\" y=\"" << fmt(mt) << "\" width=\"" << fmt(pw)
        << "\" height=\"" << fmt(ph)
        << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n"
        << "  <text x=\"" << fmt(ml + pw / 2) << "\" y=\"" << height - 8
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << axis_a
        << "</text>\n"
        << "  <text x=\"14\" y=\"" << fmt(mt + ph / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
           "transform=\"rotate(-90 14 "
        << fmt(mt + ph / 2) << ")\">" << axis_b << "</text>\n";

    if (!traj.states.empty()) {
        svg << "  <polyline fill=\"none\" stroke=\"#20639b\" stroke-width=\"0.8\" points=\"";
        for (std::size_t i = 0; i < traj.states.size(); ++i) {
            const double px = ml + (traj.states[i][ca] - amin) / (amax - amin) * pw;
            const double py = height - mb - (traj.states[i][cb] - bmin) / (bmax - bmin) * ph;
            if (i) svg << ' ';
            svg << fmt(px) << ',' << fmt(py);
        }
        svg << "\"/>\n";
    }
    svg << "</svg>\n";

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << svg.str();
    if (!out.good()) throw IoError("write failed for " + path);
}

}  // namespace dbx
