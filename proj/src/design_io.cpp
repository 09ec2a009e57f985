#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qrlab/designs.hpp"

namespace qrlab {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::runtime_error("design file line " + std::to_string(line) + ": " + what);
}

}  // namespace

Design read_design(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) parse_fail(1, "missing header");
    std::istringstream header(line);
    Design d;
    int64_t b = 0;
    if (!(header >> d.v >> d.k >> b) || d.v < 0 || d.k < 0 || d.k > d.v || b < 0)
        parse_fail(1, "header must be 'v k b'");

    int lineno = 1;
    for (int64_t i = 0; i < b; ++i) {
        if (!std::getline(in, line)) parse_fail(lineno + 1, "unexpected end of file");
        ++lineno;
        std::istringstream row(line);
        BitVector blk(std::size_t(d.v));
        int prev = -1, p = 0, count = 0;
        while (row >> p) {
            if (p < 0 || p >= d.v) parse_fail(lineno, "point out of range");
            if (p <= prev) parse_fail(lineno, "points must be strictly ascending");
            blk.set(std::size_t(p));
            prev = p;
            ++count;
        }
        if (!row.eof()) parse_fail(lineno, "malformed point index");
        if (count != d.k) parse_fail(lineno, "block size != k");
        d.blocks.push_back(std::move(blk));
    }
    std::sort(d.blocks.begin(), d.blocks.end());
    if (std::adjacent_find(d.blocks.begin(), d.blocks.end()) != d.blocks.end())
        parse_fail(lineno, "duplicate block");
    return d;
}

void write_design(std::ostream& out, const Design& d) {
    out << d.v << " " << d.k << " " << d.blocks.size() << "\n";
    for (const auto& blk : d.blocks) {
        bool first = true;
        for (int p : blk.support()) {
            if (!first) out << " ";
            out << p;
            first = false;
        }
        out << "\n";
    }
}

}  // namespace qrlab
