#include "rado/coloring.hpp"

#include <algorithm>
#include <charconv>

#include "rado/errors.hpp"

namespace rado {

Coloring::Coloring(std::vector<Color> cells) : cells_(std::move(cells)) {
    if (cells_.empty())
        throw PreconditionError("coloring domain must be nonempty");
}

Color Coloring::at(Int pos) const {
    if (pos < 1 || pos > domain_size())
        throw PreconditionError("coloring position out of range");
    return cells_[static_cast<std::size_t>(pos - 1)];
}

Coloring Coloring::flipped() const {
    std::vector<Color> out(cells_.size());
    std::transform(cells_.begin(), cells_.end(), out.begin(), [](Color c) { return flip(c); });
    return Coloring(std::move(out));
}

PartialColoring::PartialColoring(Int n) {
    if (n < 1)
        throw PreconditionError("coloring domain must be nonempty");
    cells_.assign(static_cast<std::size_t>(n), kUnset);
}

std::size_t PartialColoring::idx(Int pos) const {
    if (pos < 1 || pos > domain_size())
        throw PreconditionError("coloring position out of range");
    return static_cast<std::size_t>(pos - 1);
}

Color PartialColoring::at(Int pos) const {
    std::uint8_t v = cells_[idx(pos)];
    if (v == kUnset)
        throw PreconditionError("position is unset");
    return static_cast<Color>(v);
}

void PartialColoring::set(Int pos, Color c) { cells_[idx(pos)] = static_cast<std::uint8_t>(c); }

Int PartialColoring::unset_count() const {
    return static_cast<Int>(std::count(cells_.begin(), cells_.end(), kUnset));
}

Coloring PartialColoring::to_coloring() const {
    std::vector<Color> out;
    out.reserve(cells_.size());
    for (std::uint8_t v : cells_) {
        if (v == kUnset)
            throw PreconditionError("partial coloring has unset positions");
        out.push_back(static_cast<Color>(v));
    }
    return Coloring(std::move(out));
}

std::string write_coloring(const Coloring& c) {
    std::string out = "# rado-coloring v1\nN ";
    out += std::to_string(c.domain_size());
    out += '\n';
    for (Color col : c.cells())
        out += color_char(col);
    out += '\n';
    return out;
}

Coloring read_coloring(std::string_view bytes) {
    constexpr std::string_view header = "# rado-coloring v1\n";
    if (bytes.substr(0, header.size()) != header)
        throw ParseError("malformed coloring header");
    bytes.remove_prefix(header.size());
    if (bytes.substr(0, 2) != "N ")
        throw ParseError("malformed N line");
    bytes.remove_prefix(2);
    std::size_t nl = bytes.find('\n');
    if (nl == std::string_view::npos)
        throw ParseError("malformed N line");
    Int n = 0;
    auto [ptr, ec] = std::from_chars(bytes.data(), bytes.data() + nl, n);
    if (ec != std::errc{} || ptr != bytes.data() + nl || n < 1)
        throw ParseError("malformed N line");
    bytes.remove_prefix(nl + 1);
    if (static_cast<Int>(bytes.size()) != n + 1 || bytes.back() != '\n')
        throw ParseError("color line length does not match declared N");
    std::vector<Color> cells;
    cells.reserve(static_cast<std::size_t>(n));
    for (char ch : bytes.substr(0, static_cast<std::size_t>(n))) {
        if (ch == 'R')
            cells.push_back(Color::Red);
        else if (ch == 'B')
            cells.push_back(Color::Blue);
        else
            throw ParseError("color line contains a character outside {R,B}");
    }
    return Coloring(std::move(cells));
}

} // namespace rado
