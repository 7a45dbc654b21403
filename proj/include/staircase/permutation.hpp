#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "staircase/composition.hpp"
#include "staircase/errors.hpp"

namespace staircase {

/// A permutation of [n] in one-line notation, 1-based. The ambient degree
/// is carried explicitly, so embeddings into larger symmetric groups are
/// spelled out by the caller, never implicit.
class Permutation {
public:
    explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
        const int n = static_cast<int>(values_.size());
        if (n < 1)
            throw index_error("permutation degree must be at least 1");
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int v : values_) {
            if (v < 1 || v > n)
                throw parse_error("value " + std::to_string(v) + " outside [1," +
                                  std::to_string(n) + "]");
            if (seen[static_cast<std::size_t>(v - 1)])
                throw parse_error("value " + std::to_string(v) + " repeated");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
    }

    static Permutation identity(int n) {
        if (n < 1)
            throw index_error("permutation degree must be at least 1");
        std::vector<int> values(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = i + 1;
        return Permutation(std::move(values));
    }

    int degree() const noexcept { return static_cast<int>(values_.size()); }

    /// w(i), 1-based.
    int operator()(int i) const {
        if (i < 1 || i > degree())
            throw index_error("position " + std::to_string(i) + " out of range");
        return values_[static_cast<std::size_t>(i - 1)];
    }

    const std::vector<int>& values() const noexcept { return values_; }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> values_;
};

/// A pair of positions i < j to be swapped by right multiplication.
struct Transposition {
    int i;
    int j;

    bool operator==(const Transposition&) const = default;
};

/// Inversion count #{(i,j) : i < j, w(i) > w(j)}.
inline int length(const Permutation& w) {
    int count = 0;
    const int n = w.degree();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) ++count;
    return count;
}

/// w . (i,j): the values at positions i and j swapped.
inline Permutation multiply_right_transposition(const Permutation& w, Transposition t) {
    if (t.i < 1 || t.j > w.degree() || t.i >= t.j)
        throw index_error("transposition (" + std::to_string(t.i) + "," +
                          std::to_string(t.j) + ") out of range");
    std::vector<int> values = w.values();
    std::swap(values[static_cast<std::size_t>(t.i - 1)], values[static_cast<std::size_t>(t.j - 1)]);
    return Permutation(std::move(values));
}

/// Ground-truth Bruhat covering test on one-line notation: w covers w'
/// exactly when w = w'.(i,j) for positions i < j with w'(i) < w'(j) and no
/// k strictly between with w'(i) < w'(k) < w'(j). Scans all transpositions
/// and applies the intermediate-value test directly; transparency over
/// speed, this is the oracle everything else is checked against.
inline std::optional<Transposition> bruhat_cover_oracle(const Permutation& w,
                                                        const Permutation& w_prime) {
    const int n = w.degree();
    if (n != w_prime.degree())
        throw degree_mismatch("oracle got degrees " + std::to_string(n) + " and " +
                              std::to_string(w_prime.degree()));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (w_prime(i) >= w_prime(j)) continue;
            bool matches = w(i) == w_prime(j) && w(j) == w_prime(i);
            for (int k = 1; matches && k <= n; ++k)
                if (k != i && k != j && w(k) != w_prime(k)) matches = false;
            if (!matches) continue;
            bool blocked = false;
            for (int k = i + 1; k < j && !blocked; ++k)
                if (w_prime(i) < w_prime(k) && w_prime(k) < w_prime(j)) blocked = true;
            if (!blocked) return Transposition{i, j};
        }
    }
    return std::nullopt;
}

/// All w' covered by w, each with its witnessing transposition.
inline std::vector<std::pair<Permutation, Transposition>>
all_bruhat_lower_covers(const Permutation& w) {
    std::vector<std::pair<Permutation, Transposition>> covers;
    const int n = w.degree();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (w(i) <= w(j)) continue;
            bool blocked = false;
            for (int k = i + 1; k < j && !blocked; ++k)
                if (w(j) < w(k) && w(k) < w(i)) blocked = true;
            if (blocked) continue;
            covers.emplace_back(multiply_right_transposition(w, {i, j}), Transposition{i, j});
        }
    }
    return covers;
}

/// The Lehmer code of w: a_i = #{k > i : w(k) < w(i)} for i in [n-1].
inline Composition encode(const Permutation& w) {
    const int n = w.degree();
    std::vector<int> parts(static_cast<std::size_t>(n - 1), 0);
    for (int i = 1; i <= n - 1; ++i)
        for (int k = i + 1; k <= n; ++k)
            if (w(k) < w(i)) ++parts[static_cast<std::size_t>(i - 1)];
    return Composition(std::move(parts), n);
}

/// The unique permutation with the given code: w(i) is the (a_i + 1)-th
/// smallest of the labels not yet used, rows taken in ascending order.
inline Permutation decode(const Composition& a) {
    const int n = a.degree();
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int rank = a.part(i) + 1;
        int label = 0;
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v - 1)]) continue;
            if (--rank == 0) {
                label = v;
                break;
            }
        }
        used[static_cast<std::size_t>(label - 1)] = true;
        values[static_cast<std::size_t>(i - 1)] = label;
    }
    return Permutation(std::move(values));
}

/// #{k : i < k < j, w(k) < w(i)} for 1 <= i < j <= n+1. The permutation
/// side of the extended code: with j = n+1 this is the code entry a_i.
inline int extended_code_count(const Permutation& w, int i, int j) {
    const int n = w.degree();
    if (i < 1 || i > n || j <= i || j > n + 1)
        throw index_error("extended code count indices (" + std::to_string(i) + "," +
                          std::to_string(j) + ") out of range for degree " + std::to_string(n));
    int count = 0;
    for (int k = i + 1; k < j; ++k)
        if (w(k) < w(i)) ++count;
    return count;
}

/// Text form `5,7,6,2,1,8,3,4`. Duplicates and gaps are rejected.
inline std::string to_string(const Permutation& w) {
    std::string out;
    for (int i = 1; i <= w.degree(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(w(i));
    }
    return out;
}

inline Permutation parse_permutation(std::string_view text) {
    auto values = detail::parse_int_list(text, "permutation value");
    if (values.empty())
        throw parse_error("empty permutation");
    return Permutation(std::move(values));
}

/// Embed w into a larger symmetric group by appending fixed points.
inline Permutation embed(const Permutation& w, int degree) {
    if (degree < w.degree())
        throw degree_mismatch("cannot embed degree " + std::to_string(w.degree()) +
                              " into smaller degree " + std::to_string(degree));
    std::vector<int> values = w.values();
    for (int v = w.degree() + 1; v <= degree; ++v) values.push_back(v);
    return Permutation(std::move(values));
}

} // namespace staircase
