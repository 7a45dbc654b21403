#pragma once

#include <algorithm>
#include <chrono>
#include <string>
#include <tuple>
#include <vector>

#include "staircase/composition.hpp"
#include "staircase/diagram.hpp"
#include "staircase/errors.hpp"
#include "staircase/monk.hpp"
#include "staircase/permutation.hpp"
#include "staircase/poset.hpp"

namespace staircase {

/// Every permutation of degree n in lexicographic one-line order.
inline std::vector<Permutation> all_permutations(int n) {
    if (n < 1)
        throw index_error("degree must be at least 1");
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(values));
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

struct Mismatch {
    std::string subject;
    std::string against;
    std::string oracle_answer;
    std::string poset_answer;
};

/// Result of one exhaustive cross-check. The report is empty of
/// mismatches exactly when the checked equivalence holds at this degree.
/// `elapsed_ms` is informational and excluded from machine output so that
/// reports stay byte-stable.
struct VerifyReport {
    int degree = 0;
    std::string mode;
    long long pairs_checked = 0;
    std::vector<Mismatch> mismatches;
    double elapsed_ms = 0.0;

    bool ok() const noexcept { return mismatches.empty(); }
};

namespace detail {

inline void guard_degree(int n, bool force) {
    if (n < 1)
        throw index_error("degree must be at least 1");
    if (n > HasseDiagram::degree_cap && !force)
        throw resource_limit("degree " + std::to_string(n) + " above cap " +
                             std::to_string(HasseDiagram::degree_cap) +
                             "; pass force to override");
}

inline std::string transposition_string(const std::optional<Transposition>& t) {
    if (!t) return "none";
    return "(" + std::to_string(t->i) + "," + std::to_string(t->j) + ")";
}

inline std::string witness_string(const std::optional<CoverWitness>& w) {
    if (!w) return "none";
    return "(" + std::to_string(w->i) + "," + std::to_string(w->j) + "," +
           std::to_string(w->z) + ")";
}

template <typename Body>
VerifyReport timed_report(int n, std::string mode, Body&& body) {
    VerifyReport report;
    report.degree = n;
    report.mode = std::move(mode);
    const auto start = std::chrono::steady_clock::now();
    body(report);
    const auto stop = std::chrono::steady_clock::now();
    report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

} // namespace detail

/// Cross-checks the covering equivalence at one degree: over all ordered
/// pairs with length difference one, the one-line oracle and the
/// composition-side test must agree, including the positions (i, j).
inline VerifyReport verify_theorem(int n, bool force = false) {
    detail::guard_degree(n, force);
    return detail::timed_report(n, "theorem", [&](VerifyReport& report) {
        const auto perms = all_permutations(n);
        const int max_length = n * (n - 1) / 2;
        std::vector<std::vector<const Permutation*>> by_length(
            static_cast<std::size_t>(max_length + 1));
        std::vector<Composition> codes;
        codes.reserve(perms.size());
        for (const auto& w : perms) {
            by_length[static_cast<std::size_t>(length(w))].push_back(&w);
            codes.push_back(encode(w));
        }
        for (std::size_t a = 0; a < perms.size(); ++a) {
            const Permutation& w = perms[a];
            const int l = length(w);
            if (l == 0) continue;
            for (const Permutation* lower : by_length[static_cast<std::size_t>(l - 1)]) {
                ++report.pairs_checked;
                const auto oracle = bruhat_cover_oracle(w, *lower);
                const auto poset = check_cover(codes[a], encode(*lower));
                const bool agree = oracle.has_value() == poset.has_value() &&
                                   (!oracle || (oracle->i == poset->i && oracle->j == poset->j));
                if (!agree)
                    report.mismatches.push_back(Mismatch{
                        to_string(w), to_string(*lower), detail::transposition_string(oracle),
                        detail::witness_string(poset)});
            }
        }
    });
}

/// Cross-checks the Monk enumeration at one degree: for every permutation
/// and every r, the insertion-side terms must match the brute-force set of
/// length-raising transpositions (i, j) with i <= r < j, computed in the
/// one-larger symmetric group, targets included.
inline VerifyReport verify_monk(int n, bool force = false) {
    detail::guard_degree(n, force);
    return detail::timed_report(n, "monk", [&](VerifyReport& report) {
        using Term = std::tuple<int, int, std::vector<int>>;
        for (const auto& w : all_permutations(n)) {
            const Composition code = encode(w);
            const Permutation lifted = embed(w, n + 1);
            const int lifted_length = length(lifted);
            for (int r = 1; r <= n - 1; ++r) {
                ++report.pairs_checked;
                std::vector<Term> actual;
                for (const auto& term : monk_terms(code, r))
                    actual.emplace_back(term.i, term.j, term.target.parts());
                std::vector<Term> expected;
                for (int i = 1; i <= r; ++i)
                    for (int j = r + 1; j <= n + 1; ++j) {
                        const Permutation product =
                            multiply_right_transposition(lifted, {i, j});
                        if (length(product) == lifted_length + 1)
                            expected.emplace_back(i, j, encode(product).parts());
                    }
                std::sort(actual.begin(), actual.end());
                std::sort(expected.begin(), expected.end());
                if (actual != expected) {
                    std::string actual_pairs;
                    for (const auto& [i, j, parts] : actual)
                        actual_pairs += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                    std::string expected_pairs;
                    for (const auto& [i, j, parts] : expected)
                        expected_pairs +=
                            "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                    report.mismatches.push_back(Mismatch{to_string(w), "r=" + std::to_string(r),
                                                         expected_pairs, actual_pairs});
                }
            }
        }
    });
}

/// Cross-checks the diagram machinery at one degree: path shifts against
/// the code recursion for every row, and ladder-move removal against the
/// algebraic removal for every (i, z).
inline VerifyReport verify_geometric(int n, bool force = false) {
    detail::guard_degree(n, force);
    return detail::timed_report(n, "geometric", [&](VerifyReport& report) {
        for (const auto& a : all_compositions(n)) {
            for (int i = 1; i <= n - 1; ++i) {
                if (a.part(i) == 0) continue;
                ++report.pairs_checked;
                const auto path = extended_code_path(a, i);
                for (const auto& [row, col] : path) {
                    const int shift = a.part(i) - col;
                    if (shift != extended_code_entry(a, i, row + 1)) {
                        report.mismatches.push_back(
                            Mismatch{to_string(a), "path row " + std::to_string(row),
                                     std::to_string(extended_code_entry(a, i, row + 1)),
                                     std::to_string(shift)});
                        break;
                    }
                }
            }
            for (int i = 1; i <= n - 1; ++i) {
                for (int z = 1; z <= a.part(i); ++z) {
                    ++report.pairs_checked;
                    const auto geometric = ladder_removal(a, i, z);
                    const auto algebraic = detail::try_removal(a, i, z);
                    const bool agree =
                        geometric.has_value() == algebraic.has_value() &&
                        (!geometric || *geometric == algebraic->first);
                    if (!agree)
                        report.mismatches.push_back(Mismatch{
                            to_string(a),
                            "(" + std::to_string(i) + "," + std::to_string(z) + ")",
                            algebraic ? to_string(algebraic->first) : "none",
                            geometric ? to_string(*geometric) : "none"});
                }
            }
        }
    });
}

} // namespace staircase
