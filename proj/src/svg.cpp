#include <sstream>
#include <stdexcept>
#include <string>

#include "polyvenn/io.hpp"
#include "polyvenn/polyomino.hpp"
#include "polyvenn/validation.hpp"

namespace polyvenn {

namespace {

constexpr int kCellUnits = 32;
constexpr int kMarginUnits = 16;

constexpr const char* kPalette[8] = {
    "#e6194b", "#3cb44b", "#4363d8", "#f58231",
    "#911eb4", "#008080", "#9a6324", "#f032e6",
};

// Coordinates are kept in integer hundredths of a unit so output is exact.
std::string centi(long value) {
    std::string out = std::to_string(value / 100);
    long frac = value % 100;
    if (frac != 0) {
        char buf[8];
        std::snprintf(buf, sizeof(buf), ".%02ld", frac);
        out += buf;
        while (out.back() == '0') out.pop_back();
    }
    return out;
}

struct Step {
    int dx;
    int dy;
};

Step direction(Cell from, Cell to) { return {to.x - from.x, to.y - from.y}; }
Step left_of(Step s) { return {-s.dy, s.dx}; }

}  // namespace

std::string render_svg(const GridDiagram& d) {
    ValidationReport report = validate_venn(d);
    if (!report.overall)
        throw std::invalid_argument("render_svg: diagram fails check " +
                                    first_failed_check(report));

    Box box = bounding_box(d);
    const long width_centi = 100L * (kCellUnits * box.width() + 2 * kMarginUnits);
    const long height_centi = 100L * (kCellUnits * box.height() + 2 * kMarginUnits);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << centi(width_centi)
        << "\" height=\"" << centi(height_centi) << "\" viewBox=\"0 0 "
        << centi(width_centi) << " " << centi(height_centi) << "\">\n";
    out << "<rect width=\"" << centi(width_centi) << "\" height=\"" << centi(height_centi)
        << "\" fill=\"white\"/>\n";

    for (int curve = 0; curve < d.curve_count(); ++curve) {
        PerimeterPath path = trace_perimeter(curve_cells(d, curve));
        const long inset = 6L * (curve + 1);  // hundredths of a cell
        const std::size_t count = path.vertices.size();
        out << "<path d=\"";
        for (std::size_t i = 0; i < count; ++i) {
            Cell prev = path.vertices[(i + count - 1) % count];
            Cell here = path.vertices[i];
            Cell next = path.vertices[(i + 1) % count];
            Step in = direction(prev, here);
            Step away = direction(here, next);
            // Shift every edge toward the interior (the left of a
            // counterclockwise walk); a corner combines both edge normals.
            Step a = left_of(in);
            Step b = left_of(away);
            bool straight = a.dx == b.dx && a.dy == b.dy;
            int off_x = straight ? a.dx : a.dx + b.dx;
            int off_y = straight ? a.dy : a.dy + b.dy;
            // Positions in hundredths of a cell; one cell is kCellUnits wide.
            long cell_x = 100L * here.x + inset * off_x;
            long cell_y = 100L * here.y + inset * off_y;
            long px = 100L * kMarginUnits + (cell_x - 100L * box.lo.x) * kCellUnits;
            long py = 100L * kMarginUnits + (100L * (box.hi.y + 1) - cell_y) * kCellUnits;
            out << (i == 0 ? "M" : " L") << centi(px) << " " << centi(py);
        }
        out << " Z\" fill=\"none\" stroke=\"" << kPalette[curve % 8]
            << "\" stroke-width=\"2\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace polyvenn
