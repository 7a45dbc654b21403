#pragma once

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "staircase/errors.hpp"

namespace staircase {

/// A staircase composition: non-negative parts (a_1, ..., a_{n-1}) with
/// a_i <= n - i, in bijection with the permutations of degree n via the
/// Lehmer code. Parts are stored at full length n-1 with explicit zeros;
/// indices beyond n-1 read as 0. Equality is structural on (parts, degree).
class Composition {
public:
    /// Validates the staircase bounds. Inputs shorter than n-1 are padded
    /// with zeros; longer inputs are accepted only if the excess is zero.
    Composition(std::vector<int> parts, int degree) : degree_(degree) {
        if (degree < 1)
            throw index_error("composition degree must be at least 1");
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const int i = static_cast<int>(k) + 1;
            const int bound = i <= degree - 1 ? degree - i : 0;
            if (parts[k] < 0 || parts[k] > bound)
                throw staircase_violation(
                    i, "part " + std::to_string(i) + " = " + std::to_string(parts[k]) +
                           " exceeds bound " + std::to_string(bound) + " for degree " +
                           std::to_string(degree));
        }
        parts.resize(static_cast<std::size_t>(degree - 1), 0);
        parts_ = std::move(parts);
    }

    static Composition zero(int degree) { return Composition({}, degree); }

    int degree() const noexcept { return degree_; }

    /// 1-based part access; indices past the stored length read as 0.
    int part(int i) const {
        if (i < 1)
            throw index_error("part index must be positive");
        return i <= degree_ - 1 ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    const std::vector<int>& parts() const noexcept { return parts_; }

    bool operator==(const Composition&) const = default;

private:
    std::vector<int> parts_;
    int degree_;
};

/// Sum of the parts; equals the length of the decoded permutation.
inline int weight(const Composition& a) {
    return std::accumulate(a.parts().begin(), a.parts().end(), 0);
}

/// The smallest degree whose staircase contains the composition:
/// max over nonzero parts of (a_i + i). The all-zero composition fits in
/// every staircase; we use 1 so that the extended code stabilizes at
/// column min_degree + 1 in all cases.
inline int min_degree(const Composition& a) {
    int best = 1;
    for (int i = 1; i <= a.degree() - 1; ++i)
        if (a.part(i) != 0) best = std::max(best, a.part(i) + i);
    return best;
}

/// Entry c_{i,j} of the extended code of `a`, computed by the column
/// recursion: zero for j <= i+1, and thereafter incremented exactly when
/// the preceding part is strictly below the remaining budget a_i - c.
/// Columns past degree+1 repeat the stable value at degree+1.
inline int extended_code_entry(const Composition& a, int i, int j) {
    if (i < 1 || i > a.degree() - 1)
        throw index_error("extended code row " + std::to_string(i) + " out of range");
    if (j < 1)
        throw index_error("extended code column must be positive");
    j = std::min(j, a.degree() + 1);
    int c = 0;
    for (int m = i + 1; m < j; ++m)
        if (a.part(m) < a.part(i) - c) ++c;
    return c;
}

/// The extended code of `a` as a dense (degree-1) x (degree+1) table.
/// Row i stabilizes at value a_i from column min_degree(a)+1 onward.
class CMatrix {
public:
    explicit CMatrix(const Composition& a) : degree_(a.degree()) {
        rows_.reserve(static_cast<std::size_t>(degree_ - 1));
        for (int i = 1; i <= degree_ - 1; ++i) {
            std::vector<int> row(static_cast<std::size_t>(degree_ + 1), 0);
            int c = 0;
            for (int j = i + 2; j <= degree_ + 1; ++j) {
                if (a.part(j - 1) < a.part(i) - c) ++c;
                row[static_cast<std::size_t>(j - 1)] = c;
            }
            rows_.push_back(std::move(row));
        }
    }

    int degree() const noexcept { return degree_; }
    int row_count() const noexcept { return degree_ - 1; }
    int column_count() const noexcept { return degree_ + 1; }

    /// 1-based access, i in [1, degree-1], j in [1, degree+1].
    int at(int i, int j) const {
        if (i < 1 || i > row_count() || j < 1 || j > column_count())
            throw index_error("extended code matrix index out of range");
        return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }

    bool operator==(const CMatrix&) const = default;

private:
    std::vector<std::vector<int>> rows_;
    int degree_;
};

inline CMatrix extended_code_matrix(const Composition& a) { return CMatrix(a); }

/// The dual composition, a_i* = n - i - a_i. An involution exchanging
/// removals and insertions.
inline Composition dual(const Composition& a) {
    const int n = a.degree();
    std::vector<int> parts(static_cast<std::size_t>(n - 1));
    for (int i = 1; i <= n - 1; ++i)
        parts[static_cast<std::size_t>(i - 1)] = n - i - a.part(i);
    return Composition(std::move(parts), n);
}

/// The least k > i with a_k < a_i, scanning the implicit zeros past the
/// stored length. Defined exactly when a_i > 0 (part degree() is always an
/// implicit zero, so the scan terminates there at the latest).
inline int next_smaller(const Composition& a, int i) {
    if (i < 1 || i > a.degree() - 1)
        throw index_error("row " + std::to_string(i) + " out of range");
    if (a.part(i) == 0)
        throw no_descent("part " + std::to_string(i) + " is zero");
    int k = i + 1;
    while (a.part(k) >= a.part(i)) ++k;
    return k;
}

/// Text form `4,5,4,1,0,2,0@8`; the empty composition of degree 1 prints
/// as `@1`.
inline std::string to_string(const Composition& a) {
    std::string out;
    for (int i = 1; i <= a.degree() - 1; ++i) {
        if (i > 1) out += ',';
        out += std::to_string(a.part(i));
    }
    out += '@';
    out += std::to_string(a.degree());
    return out;
}

namespace detail {

inline int parse_int(std::string_view token, std::string_view what) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw parse_error("bad " + std::string(what) + ": '" + std::string(token) + "'");
    return value;
}

inline std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
    std::vector<int> values;
    if (text.empty()) return values;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const auto token = text.substr(start, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - start);
        values.push_back(parse_int(token, what));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return values;
}

} // namespace detail

inline Composition parse_composition(std::string_view text) {
    const std::size_t at = text.find('@');
    if (at == std::string_view::npos)
        throw parse_error("composition needs a degree suffix, e.g. '1,0@3'");
    const auto parts = detail::parse_int_list(text.substr(0, at), "composition part");
    const int degree = detail::parse_int(text.substr(at + 1), "composition degree");
    return Composition(parts, degree);
}

/// Every composition of the given staircase, in lexicographic order of the
/// part vector. There are n! of them.
inline std::vector<Composition> all_compositions(int degree) {
    if (degree < 1)
        throw index_error("degree must be at least 1");
    std::vector<Composition> out;
    std::vector<int> parts(static_cast<std::size_t>(degree - 1), 0);
    while (true) {
        out.push_back(Composition(parts, degree));
        int i = degree - 2;
        while (i >= 0 && parts[static_cast<std::size_t>(i)] == degree - 1 - i)
            parts[static_cast<std::size_t>(i)] = 0, --i;
        if (i < 0) break;
        ++parts[static_cast<std::size_t>(i)];
    }
    return out;
}

} // namespace staircase
