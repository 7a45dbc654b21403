#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "staircase/composition.hpp"
#include "staircase/errors.hpp"
#include "staircase/permutation.hpp"
#include "staircase/poset.hpp"

namespace staircase {

/// A word in the simple transpositions s_1 .. s_{n-1}, stored as 1-based
/// generator indices. Reducedness is a property checked on demand, not an
/// invariant of the type.
class ReducedWord {
public:
    ReducedWord(std::vector<int> letters, int degree)
        : letters_(std::move(letters)), degree_(degree) {
        if (degree < 1)
            throw index_error("word degree must be at least 1");
        for (int s : letters_)
            if (s < 1 || s >= degree)
                throw index_error("letter " + std::to_string(s) + " outside [1," +
                                  std::to_string(degree - 1) + "]");
    }

    int degree() const noexcept { return degree_; }
    int size() const noexcept { return static_cast<int>(letters_.size()); }
    const std::vector<int>& letters() const noexcept { return letters_; }

    /// 1-based letter access.
    int letter(int position) const {
        if (position < 1 || position > size())
            throw index_error("letter position " + std::to_string(position) + " out of range");
        return letters_[static_cast<std::size_t>(position - 1)];
    }

    bool operator==(const ReducedWord&) const = default;

private:
    std::vector<int> letters_;
    int degree_;
};

/// The canonical reduced word of the composition: each row read right to
/// left, rows bottom to top. Row i contributes s_{a_i+i-1} ... s_{i+1} s_i
/// and the word length equals the weight.
inline ReducedWord row_reading(const Composition& a) {
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(weight(a)));
    for (int i = 1; i <= a.degree() - 1; ++i)
        for (int s = a.part(i) + i - 1; s >= i; --s) letters.push_back(s);
    return ReducedWord(std::move(letters), a.degree());
}

/// Identity multiplied on the right by each letter in turn; s_k swaps the
/// values at positions k and k+1.
inline Permutation evaluate(const ReducedWord& word) {
    std::vector<int> values(static_cast<std::size_t>(word.degree()));
    for (int i = 0; i < word.degree(); ++i) values[static_cast<std::size_t>(i)] = i + 1;
    for (int s : word.letters())
        std::swap(values[static_cast<std::size_t>(s - 1)], values[static_cast<std::size_t>(s)]);
    return Permutation(std::move(values));
}

inline bool is_reduced(const ReducedWord& word) {
    return word.size() == length(evaluate(word));
}

/// The word with the letter at 1-based position removed.
inline ReducedWord delete_letter(const ReducedWord& word, int position) {
    if (position < 1 || position > word.size())
        throw index_error("letter position " + std::to_string(position) + " out of range");
    std::vector<int> letters = word.letters();
    letters.erase(letters.begin() + (position - 1));
    return ReducedWord(std::move(letters), word.degree());
}

enum class MoveKind { commutation, braid };

/// One rewriting step at an absolute letter position, valid at the moment
/// it is applied.
struct Move {
    int position;
    MoveKind kind;

    bool operator==(const Move&) const = default;
};

/// Applies a single commutation (s_a s_b = s_b s_a for |a-b| >= 2) or
/// braid (s_a s_b s_a = s_b s_a s_b for |a-b| = 1) at the given position.
/// Evaluation and length are preserved.
inline ReducedWord apply_move(const ReducedWord& word, int position, MoveKind kind) {
    std::vector<int> letters = word.letters();
    const int len = word.size();
    if (kind == MoveKind::commutation) {
        if (position < 1 || position + 1 > len)
            throw index_error("commutation position " + std::to_string(position) +
                              " out of range");
        int& a = letters[static_cast<std::size_t>(position - 1)];
        int& b = letters[static_cast<std::size_t>(position)];
        if (std::abs(a - b) < 2)
            throw pattern_mismatch("letters " + std::to_string(a) + "," + std::to_string(b) +
                                   " at " + std::to_string(position) + " do not commute");
        std::swap(a, b);
    } else {
        if (position < 1 || position + 2 > len)
            throw index_error("braid position " + std::to_string(position) + " out of range");
        int& a = letters[static_cast<std::size_t>(position - 1)];
        int& b = letters[static_cast<std::size_t>(position)];
        int& c = letters[static_cast<std::size_t>(position + 1)];
        if (a != c || std::abs(a - b) != 1)
            throw pattern_mismatch("letters " + std::to_string(a) + "," + std::to_string(b) +
                                   "," + std::to_string(c) + " at " + std::to_string(position) +
                                   " are not a braid");
        std::swap(a, b);
        c = a;
    }
    return ReducedWord(std::move(letters), word.degree());
}

namespace detail {

inline void check_witness(const Composition& a, const CoverWitness& witness) {
    if (witness.i < 1 || witness.i > a.degree() - 1 || witness.z < 1 ||
        witness.z > a.part(witness.i))
        throw invalid_witness("witness (" + std::to_string(witness.i) + "," +
                              std::to_string(witness.j) + "," + std::to_string(witness.z) +
                              ") out of range for " + to_string(a));
    auto cover = try_removal(a, witness.i, witness.z);
    if (!cover || cover->second != witness)
        throw invalid_witness("witness (" + std::to_string(witness.i) + "," +
                              std::to_string(witness.j) + "," + std::to_string(witness.z) +
                              ") does not certify a cover of " + to_string(a));
}

} // namespace detail

/// The 1-based position I such that deleting letter I from the row reading
/// of `a` gives a reduced word for the covered composition: the prefix
/// weight through row i minus the lowered part, i.e. prefix + z.
inline int cover_index(const Composition& a, const CoverWitness& witness) {
    detail::check_witness(a, witness);
    int index = 0;
    for (int k = 1; k <= witness.i; ++k) index += a.part(k);
    return index - (a.part(witness.i) - witness.z);
}

/// The explicit move sequence carrying the deleted row reading of `a` to
/// the row reading of the covered composition. Empty when z = 1, where the
/// two words already coincide. Each stray letter of row i is walked right
/// in turn: it commutes through rows whose part plus code entry falls
/// below the lowered part, and braids through rows where that sum reaches
/// a_i, finally landing at the head of row j. Positions are absolute and
/// valid at application time; replay must be sequential.
inline std::vector<Move> move_schedule(const Composition& a, const CoverWitness& witness) {
    detail::check_witness(a, witness);
    if (witness.z == 1) return {};

    const int i = witness.i;
    const int j = witness.j;
    const int part_upper = a.part(i);
    const int part_lower = part_upper - witness.z;

    ReducedWord word = delete_letter(row_reading(a), cover_index(a, witness));
    std::vector<Move> moves;
    const auto emit = [&](int position, MoveKind kind) {
        moves.push_back(Move{position, kind});
        word = apply_move(word, position, kind);
    };

    int prefix = 0;
    for (int k = 1; k < i; ++k) prefix += a.part(k);

    for (int m = part_lower + 1; m <= part_upper - 1; ++m) {
        int position = prefix + 1 + (part_upper - 1 - m);
        int letter = m + i;
        for (int s = 0; s < part_lower; ++s) emit(position++, MoveKind::commutation);
        for (int k = i + 1; k <= j - 1; ++k) {
            const int code = extended_code_entry(a, i, k);
            assert(letter == m + k - 1 - code);
            if (a.part(k) + code >= part_upper) {
                const int before = a.part(k) + k - letter - 2;
                for (int s = 0; s < before; ++s) emit(position++, MoveKind::commutation);
                emit(position, MoveKind::braid);
                position += 2;
                for (int s = 0; s < letter - k; ++s) emit(position++, MoveKind::commutation);
                ++letter;
            } else {
                assert(a.part(k) + code < part_lower);
                for (int s = 0; s < a.part(k); ++s) emit(position++, MoveKind::commutation);
            }
        }
        assert(letter == m + j - 1 + a.part(j) - part_lower);
        assert(word.letter(position) == letter);
    }
    assert(word == row_reading(removal(a, i, witness.z)));
    return moves;
}

/// Plain text form, space-separated: `4 3 2 1 6 5 4 3 2`.
inline std::string to_string(const ReducedWord& word) {
    std::string out;
    for (int p = 1; p <= word.size(); ++p) {
        if (p > 1) out += ' ';
        out += std::to_string(word.letter(p));
    }
    return out;
}

/// Row-grouped display of the row reading, nonempty rows separated by
/// a centered dot: `4 3 2 1 · 6 5 4 3 2 · 6 5 4 3 · 4 · 7 6`.
inline std::string row_grouped_string(const Composition& a) {
    std::string out;
    for (int i = 1; i <= a.degree() - 1; ++i) {
        if (a.part(i) == 0) continue;
        if (!out.empty()) out += " · ";
        for (int s = a.part(i) + i - 1; s >= i; --s) {
            if (s < a.part(i) + i - 1) out += ' ';
            out += std::to_string(s);
        }
    }
    return out;
}

} // namespace staircase
