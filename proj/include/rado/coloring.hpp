#ifndef RADO_COLORING_HPP
#define RADO_COLORING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rado/checked.hpp"

namespace rado {

// Red is "the first color" everywhere: an instance must avoid all-Red
// solutions to e0 and all-Blue solutions to e1.
enum class Color : std::uint8_t { Red = 0, Blue = 1 };

inline Color flip(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }

/// A total two-coloring of [1,N]. Immutable after construction.
class Coloring {
  public:
    explicit Coloring(std::vector<Color> cells);

    Int domain_size() const { return static_cast<Int>(cells_.size()); }
    Color at(Int pos) const; // 1-based
    const std::vector<Color>& cells() const { return cells_; }

    Coloring flipped() const;

    bool operator==(const Coloring&) const = default;

  private:
    std::vector<Color> cells_;
};

/// Solver search state: each position is Red, Blue, or not yet set.
class PartialColoring {
  public:
    explicit PartialColoring(Int n);

    Int domain_size() const { return static_cast<Int>(cells_.size()); }
    bool is_set(Int pos) const { return cells_[idx(pos)] != kUnset; }
    Color at(Int pos) const;
    void set(Int pos, Color c);
    void unset(Int pos) { cells_[idx(pos)] = kUnset; }
    Int unset_count() const;

    /// Requires every position set.
    Coloring to_coloring() const;

  private:
    static constexpr std::uint8_t kUnset = 2;
    std::size_t idx(Int pos) const;
    std::vector<std::uint8_t> cells_;
};

/// Coloring file format (bit-exact ASCII):
///   # rado-coloring v1
///   N <decimal>
///   <N characters over {R,B}>
/// with each line terminated by a single linefeed.
std::string write_coloring(const Coloring& c);
Coloring read_coloring(std::string_view bytes);

} // namespace rado

#endif
