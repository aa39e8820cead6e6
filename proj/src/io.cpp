#include "polyvenn/io.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace polyvenn {

namespace {

std::string hex_token(SubsetMask m) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%x", m.bits);
    return buf;
}

// Token grid of the diagram, top row first, columns space-aligned.
std::string grid_block(const GridDiagram& d) {
    if (d.empty()) return {};
    Box box = bounding_box(d);
    std::size_t token_width = 1;
    for (const auto& [cell, mask] : d.cells())
        token_width = std::max(token_width, hex_token(mask).size());
    std::ostringstream out;
    for (int y = box.hi.y; y >= box.lo.y; --y) {
        for (int x = box.lo.x; x <= box.hi.x; ++x) {
            auto mask = d.mask_at({x, y});
            std::string token = mask ? hex_token(*mask) : ".";
            if (x > box.lo.x) out << ' ';
            out << std::string(token_width - token.size(), ' ') << token;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::string serialize_pvn(const GridDiagram& d) {
    std::ostringstream out;
    out << "pvn 1\n";
    out << "n " << d.curve_count() << "\n";
    if (d.empty()) {
        out << "rows 0\ncols 0\norigin 0 0\n";
        return out.str();
    }
    Box box = bounding_box(d);
    out << "rows " << box.height() << "\n";
    out << "cols " << box.width() << "\n";
    out << "origin " << box.lo.x << " " << box.lo.y << "\n";
    out << grid_block(d);
    return out.str();
}

PvnParseError::PvnParseError(int line_number, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
      line(line_number) {}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.emplace_back(text.substr(start));
            break;
        }
        lines.emplace_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

long parse_int(const std::string& token, int line_no, const char* what) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(token, &used);
    } catch (const std::exception&) {
        throw PvnParseError(line_no, std::string(what) + ": expected an integer, got '" +
                                         token + "'");
    }
    if (used != token.size())
        throw PvnParseError(line_no, std::string(what) + ": expected an integer, got '" +
                                         token + "'");
    return value;
}

long header_int(const std::vector<std::string>& lines, std::size_t idx, const char* key,
                int token_count) {
    int line_no = static_cast<int>(idx) + 1;
    if (idx >= lines.size()) throw PvnParseError(line_no, std::string("missing '") + key + "' line");
    auto tokens = tokens_of(lines[idx]);
    if (tokens.size() != static_cast<std::size_t>(token_count) || tokens[0] != key)
        throw PvnParseError(line_no, std::string("expected '") + key + " ...'");
    return parse_int(tokens[1], line_no, key);
}

}  // namespace

GridDiagram parse_pvn(std::string_view text) {
    auto lines = split_lines(text);

    if (lines.empty() || tokens_of(lines[0]) != std::vector<std::string>{"pvn", "1"})
        throw PvnParseError(1, "expected header 'pvn 1'");

    long n = header_int(lines, 1, "n", 2);
    if (n < 1 || n > 31) throw PvnParseError(2, "curve count must be in 1..31");
    long rows = header_int(lines, 2, "rows", 2);
    long cols = header_int(lines, 3, "cols", 2);
    if (rows < 0 || cols < 0) throw PvnParseError(rows < 0 ? 3 : 4, "negative grid size");

    if (lines.size() < 5) throw PvnParseError(5, "missing 'origin' line");
    auto origin_tokens = tokens_of(lines[4]);
    if (origin_tokens.size() != 3 || origin_tokens[0] != "origin")
        throw PvnParseError(5, "expected 'origin <x> <y>'");
    long origin_x = parse_int(origin_tokens[1], 5, "origin x");
    long origin_y = parse_int(origin_tokens[2], 5, "origin y");

    std::vector<GridDiagram::Entry> entries;
    for (long r = 0; r < rows; ++r) {
        std::size_t idx = 5 + static_cast<std::size_t>(r);
        int line_no = static_cast<int>(idx) + 1;
        if (idx >= lines.size()) throw PvnParseError(line_no, "missing grid row");
        auto tokens = tokens_of(lines[idx]);
        if (tokens.size() != static_cast<std::size_t>(cols))
            throw PvnParseError(line_no, "row has " + std::to_string(tokens.size()) +
                                             " tokens, expected " + std::to_string(cols));
        long y = origin_y + (rows - 1 - r);  // topmost row first
        for (long c = 0; c < cols; ++c) {
            const std::string& token = tokens[c];
            if (token == ".") continue;
            std::uint32_t bits = 0;
            for (char ch : token) {
                int digit;
                if (ch >= '0' && ch <= '9')
                    digit = ch - '0';
                else if (ch >= 'a' && ch <= 'f')
                    digit = ch - 'a' + 10;
                else
                    throw PvnParseError(line_no, "token '" + token +
                                                     "' is not '.' or lowercase hex");
                if (bits > (UINT32_MAX >> 4))
                    throw PvnParseError(line_no, "mask token '" + token + "' out of range");
                bits = bits << 4 | static_cast<std::uint32_t>(digit);
            }
            if (bits == 0)
                throw PvnParseError(line_no,
                                    "zero mask; empty cells are written as '.'");
            SubsetMask mask{bits};
            if (!mask.fits(static_cast<int>(n)))
                throw PvnParseError(line_no, "mask '" + token + "' uses a curve index >= " +
                                                 std::to_string(n));
            entries.push_back({{static_cast<int>(origin_x + c), static_cast<int>(y)}, mask});
        }
    }
    for (std::size_t idx = 5 + rows; idx < lines.size(); ++idx)
        if (!tokens_of(lines[idx]).empty())
            throw PvnParseError(static_cast<int>(idx) + 1, "trailing content");

    return GridDiagram(static_cast<int>(n), std::move(entries));
}

std::string render_ascii(const GridDiagram& d) { return grid_block(d); }

}  // namespace polyvenn
