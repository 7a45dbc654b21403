#pragma once

#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "staircase/composition.hpp"
#include "staircase/errors.hpp"

namespace staircase {

/// The box diagram of a composition: row i (bottom-up) holds a set of
/// occupied columns, left-justified as the interval [1, a_i] for a plain
/// composition. Deleting one box gives the gapped diagrams the ladder-move
/// algorithm works on; moving boxes may leave transient floating boxes
/// until they settle flush with a shorter row.
class BoxDiagram {
public:
    explicit BoxDiagram(const Composition& a)
        : degree_(a.degree()),
          grid_(static_cast<std::size_t>(a.degree() - 1),
                std::vector<bool>(static_cast<std::size_t>(a.degree() - 1), false)) {
        for (int r = 1; r <= degree_ - 1; ++r)
            for (int c = 1; c <= a.part(r); ++c)
                grid_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = true;
    }

    /// The diagram of `a` with one box removed.
    static BoxDiagram deleted_box(const Composition& a, int row, int col) {
        BoxDiagram d(a);
        if (!d.occupied(row, col))
            throw index_error("no box at (" + std::to_string(row) + "," + std::to_string(col) +
                              ")");
        d.grid_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)] = false;
        return d;
    }

    int degree() const noexcept { return degree_; }

    /// Cells outside the staircase grid read as unoccupied.
    bool occupied(int row, int col) const {
        if (row < 1 || row > degree_ - 1 || col < 1 || col > degree_ - 1) return false;
        return grid_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)];
    }

    /// Rightmost occupied column of the row, 0 when the row is empty.
    int rightmost(int row) const {
        for (int c = degree_ - 1; c >= 1; --c)
            if (occupied(row, c)) return c;
        return 0;
    }

    int box_count() const {
        int count = 0;
        for (int r = 1; r <= degree_ - 1; ++r)
            for (int c = 1; c <= degree_ - 1; ++c)
                if (occupied(r, c)) ++count;
        return count;
    }

    bool left_justified() const {
        for (int r = 1; r <= degree_ - 1; ++r)
            for (int c = 2; c <= degree_ - 1; ++c)
                if (occupied(r, c) && !occupied(r, c - 1)) return false;
        return true;
    }

    /// The composition whose diagram this is, when rows are left-justified.
    std::optional<Composition> to_composition() const {
        if (!left_justified()) return std::nullopt;
        std::vector<int> parts(static_cast<std::size_t>(degree_ - 1), 0);
        for (int r = 1; r <= degree_ - 1; ++r)
            parts[static_cast<std::size_t>(r - 1)] = rightmost(r);
        return Composition(std::move(parts), degree_);
    }

    bool operator==(const BoxDiagram&) const = default;

private:
    friend std::optional<std::pair<BoxDiagram, std::pair<int, int>>>
    ladder_move_landing(const BoxDiagram&, int, int);

    int degree_;
    std::vector<std::vector<bool>> grid_;
};

/// One ladder move with its landing cell: the box at (row, col) rises past
/// rows occupied in its column and drops one column left at the first row
/// that is not, provided that cell is free. Returns nothing when the box
/// is at column 1, every higher row blocks it, or the landing cell is
/// taken. The box must be movable: rightmost in its row, or hanging with
/// an empty cell at its left.
inline std::optional<std::pair<BoxDiagram, std::pair<int, int>>>
ladder_move_landing(const BoxDiagram& d, int row, int col) {
    if (!d.occupied(row, col))
        throw index_error("no box at (" + std::to_string(row) + "," + std::to_string(col) + ")");
    const bool hanging = col >= 2 && !d.occupied(row, col - 1);
    if (col != d.rightmost(row) && !hanging)
        throw index_error("box at (" + std::to_string(row) + "," + std::to_string(col) +
                          ") is neither rightmost nor hanging");
    if (col == 1) return std::nullopt;
    for (int r = row + 1; r <= d.degree() - 1; ++r) {
        if (d.occupied(r, col)) continue;
        if (d.occupied(r, col - 1)) return std::nullopt;
        BoxDiagram moved = d;
        moved.grid_[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col - 1)] = false;
        moved.grid_[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(col - 2)] = true;
        return std::make_pair(std::move(moved), std::make_pair(r, col - 1));
    }
    return std::nullopt;
}

inline std::optional<BoxDiagram> ladder_move(const BoxDiagram& d, int row, int col) {
    auto landing = ladder_move_landing(d, row, col);
    if (!landing) return std::nullopt;
    return std::move(landing->first);
}

/// Removal decided purely by diagram surgery: delete the box at
/// (i, a_i - z + 1) and walk each remaining box of row i, left to right,
/// through ladder moves until it settles flush with some row. The walk
/// certifies a cover exactly when every box settles and all of them settle
/// in one common row; the settled diagram is then the covered composition.
/// `trace`, when given, collects every intermediate diagram.
inline std::optional<Composition>
ladder_removal(const Composition& a, int i, int z, std::vector<BoxDiagram>* trace = nullptr) {
    if (i < 1 || i > a.degree() - 1)
        throw index_error("row " + std::to_string(i) + " out of range");
    if (z < 1 || z > a.part(i))
        throw index_error("removal amount " + std::to_string(z) + " outside [1," +
                          std::to_string(a.part(i)) + "]");
    BoxDiagram d = BoxDiagram::deleted_box(a, i, a.part(i) - z + 1);
    if (trace) trace->push_back(d);

    int common_row = 0;
    for (int start = a.part(i) - z + 2; start <= a.part(i); ++start) {
        int row = i;
        int col = start;
        while (true) {
            auto landing = ladder_move_landing(d, row, col);
            if (!landing) return std::nullopt;
            d = std::move(landing->first);
            row = landing->second.first;
            col = landing->second.second;
            if (trace) trace->push_back(d);
            if (col == 1 || d.occupied(row, col - 1)) break;
        }
        if (common_row == 0) common_row = row;
        if (row != common_row) return std::nullopt;
    }
    assert(d.left_justified());
    return d.to_composition();
}

/// Bottom-up text rendering: the top printed line is row degree-1, the
/// bottom line row 1, one glyph per box. The all-zero composition renders
/// as the empty string. `top_down` flips to matrix-style viewing.
inline std::string render(const Composition& a, std::string_view glyph = "□",
                          bool top_down = false) {
    if (weight(a) == 0) return "";
    std::string out;
    const auto line = [&](int r) {
        std::string text;
        for (int c = 0; c < a.part(r); ++c) text += glyph;
        text += '\n';
        return text;
    };
    if (top_down)
        for (int r = 1; r <= a.degree() - 1; ++r) out += line(r);
    else
        for (int r = a.degree() - 1; r >= 1; --r) out += line(r);
    return out;
}

/// The staircase path of row i: starts at (i, a_i), steps straight up
/// where the next row reaches the current column and diagonally up-left
/// where it does not. The accumulated left shift on reaching row j-1
/// equals the extended code entry c_{i,j}; vertices run through row
/// degree(), where parts read as zero.
inline std::vector<std::pair<int, int>> extended_code_path(const Composition& a, int i) {
    if (i < 1 || i > a.degree() - 1)
        throw index_error("row " + std::to_string(i) + " out of range");
    if (a.part(i) == 0)
        throw index_error("row " + std::to_string(i) + " is empty");
    std::vector<std::pair<int, int>> vertices;
    int col = a.part(i);
    vertices.emplace_back(i, col);
    for (int r = i + 1; r <= a.degree(); ++r) {
        if (a.part(r) < col) --col;
        vertices.emplace_back(r, col);
    }
    return vertices;
}

/// Rendering with the row-i path overlaid: `|` marks a straight step,
/// `/` a diagonal one, `*` the start.
inline std::string render_with_path(const Composition& a, int i) {
    const auto path = extended_code_path(a, i);
    const int n = a.degree();
    std::vector<std::string> cells(static_cast<std::size_t>(n - 1));
    for (int r = 1; r <= n - 1; ++r) {
        auto& row = cells[static_cast<std::size_t>(r - 1)];
        for (int c = 0; c < a.part(r); ++c) row += 'o';
    }
    const auto put = [&](int r, int c, char glyph) {
        if (r < 1 || r > n - 1 || c < 1) return;
        auto& row = cells[static_cast<std::size_t>(r - 1)];
        if (static_cast<int>(row.size()) < c) row.resize(static_cast<std::size_t>(c), ' ');
        row[static_cast<std::size_t>(c - 1)] = glyph;
    };
    put(path[0].first, path[0].second, '*');
    for (std::size_t k = 1; k < path.size(); ++k) {
        const auto [r, c] = path[k];
        put(r, c, c == path[k - 1].second ? '|' : '/');
    }
    std::string out;
    for (int r = n - 1; r >= 1; --r) out += cells[static_cast<std::size_t>(r - 1)] + '\n';
    return out;
}

/// Text form of an arbitrary diagram, for the ladder-move traces.
inline std::string render(const BoxDiagram& d, std::string_view glyph = "□") {
    std::string out;
    for (int r = d.degree() - 1; r >= 1; --r) {
        std::string line;
        int gap = 0;
        for (int c = 1; c <= d.degree() - 1; ++c) {
            if (d.occupied(r, c)) {
                line.append(static_cast<std::size_t>(gap), ' ');
                gap = 0;
                line += glyph;
            } else {
                ++gap;
            }
        }
        out += line + '\n';
    }
    return out;
}

} // namespace staircase
