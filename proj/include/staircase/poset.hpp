#pragma once

#include <cassert>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "staircase/composition.hpp"
#include "staircase/errors.hpp"

namespace staircase {

/// Certificate that one composition covers another: the lower position i,
/// the upper position j, and the amount z removed from part i. The partner
/// part gains z - 1, so weight drops by exactly one.
struct CoverWitness {
    int i;
    int j;
    int z;

    bool operator==(const CoverWitness&) const = default;
};

namespace detail {

/// Greatest column j > i at which row i of the extended codes of `a` and
/// `b` agree. `a` and `b` differ only in part i, so both rows stabilize to
/// different values and the maximum exists; the scan window ends one past
/// the larger stabilization column.
inline int partner_column(const Composition& a, const Composition& b, int i) {
    const int window = std::max(min_degree(a), min_degree(b)) + 1;
    int ca = 0;
    int cb = 0;
    int last = i + 1;
    for (int j = i + 2; j <= window; ++j) {
        if (a.part(j - 1) < a.part(i) - ca) ++ca;
        if (b.part(j - 1) < b.part(i) - cb) ++cb;
        if (ca == cb) last = j;
    }
    return last;
}

inline void check_removal_range(const Composition& a, int i, int z) {
    if (i < 1 || i > a.degree() - 1)
        throw index_error("row " + std::to_string(i) + " out of range");
    if (z < 1 || z > a.part(i))
        throw index_error("removal amount " + std::to_string(z) + " outside [1," +
                          std::to_string(a.part(i)) + "]");
}

inline void check_insertion_range(const Composition& a, int i, int z) {
    if (i < 1 || i > a.degree() - 1)
        throw index_error("row " + std::to_string(i) + " out of range");
    const int room = a.degree() - i - a.part(i);
    if (z < 1 || z > room)
        throw index_error("insertion amount " + std::to_string(z) + " outside [1," +
                          std::to_string(room) + "]");
}

} // namespace detail

/// The partner position of an (i,z)-removal: the greatest column at which
/// row i of the extended code is unchanged by lowering part i by z. This
/// is where the removed amount (less one) lands.
inline int removal_partner(const Composition& a, int i, int z) {
    detail::check_removal_range(a, i, z);
    std::vector<int> parts = a.parts();
    parts[static_cast<std::size_t>(i - 1)] -= z;
    return detail::partner_column(a, Composition(std::move(parts), a.degree()), i);
}

/// The partner position of an (i,z)-insertion, computed directly from the
/// raised composition. Equals the removal partner of the dual, which the
/// debug build cross-checks.
inline int insertion_partner(const Composition& a, int i, int z) {
    detail::check_insertion_range(a, i, z);
    std::vector<int> parts = a.parts();
    parts[static_cast<std::size_t>(i - 1)] += z;
    const int j = detail::partner_column(a, Composition(std::move(parts), a.degree()), i);
    assert(j == removal_partner(dual(a), i, z));
    return j;
}

namespace detail {

inline std::optional<std::pair<Composition, CoverWitness>>
try_removal(const Composition& a, int i, int z) {
    const int j = removal_partner(a, i, z);
    if (extended_code_entry(a, i, j) != a.part(i) - a.part(j) - z)
        return std::nullopt;
    std::vector<int> parts = a.parts();
    parts[static_cast<std::size_t>(i - 1)] -= z;
    if (j <= a.degree() - 1)
        parts[static_cast<std::size_t>(j - 1)] += z - 1;
    else
        assert(z == 1);
    return std::make_pair(Composition(std::move(parts), a.degree()), CoverWitness{i, j, z});
}

inline std::optional<std::pair<Composition, CoverWitness>>
try_insertion(const Composition& a, int i, int z) {
    const int j = insertion_partner(a, i, z);
    if (extended_code_entry(a, i, j) != a.part(i) - a.part(j) + z - 1)
        return std::nullopt;
    std::vector<int> parts = a.parts();
    parts[static_cast<std::size_t>(i - 1)] += z;
    if (j <= a.degree() - 1)
        parts[static_cast<std::size_t>(j - 1)] -= z - 1;
    else
        assert(z == 1);
    return std::make_pair(Composition(std::move(parts), a.degree()), CoverWitness{i, j, z});
}

} // namespace detail

/// Whether some composition covered by `a` has part i lowered by z.
/// Out-of-range (i,z) is an error, not false.
inline bool is_removable(const Composition& a, int i, int z) {
    return detail::try_removal(a, i, z).has_value();
}

/// The unique composition covered by `a` with part i lowered by z.
inline Composition removal(const Composition& a, int i, int z) {
    auto result = detail::try_removal(a, i, z);
    if (!result)
        throw not_removable("(" + std::to_string(i) + "," + std::to_string(z) +
                            ") does not remove from " + to_string(a));
    return std::move(result->first);
}

/// Whether some composition covering `a` has part i raised by z.
inline bool is_insertable(const Composition& a, int i, int z) {
    return detail::try_insertion(a, i, z).has_value();
}

/// The unique composition covering `a` with part i raised by z.
inline Composition insertion(const Composition& a, int i, int z) {
    auto result = detail::try_insertion(a, i, z);
    if (!result)
        throw not_insertable("(" + std::to_string(i) + "," + std::to_string(z) +
                             ") does not insert into " + to_string(a));
    return std::move(result->first);
}

/// Decides whether `upper` covers `lower`, returning the witness when it
/// does. The candidate pair (i,j) is read off the part differences: i is
/// the unique index that decreased, j the unique other changed index, or
/// the removal partner when z = 1 leaves only one changed part.
inline std::optional<CoverWitness> check_cover(const Composition& upper,
                                               const Composition& lower) {
    const int n = upper.degree();
    if (n != lower.degree())
        throw degree_mismatch("check_cover got degrees " + std::to_string(n) + " and " +
                              std::to_string(lower.degree()));
    if (weight(upper) != weight(lower) + 1) return std::nullopt;
    std::vector<int> changed;
    for (int m = 1; m <= n - 1; ++m)
        if (upper.part(m) != lower.part(m)) changed.push_back(m);
    if (changed.size() == 1) {
        const int i = changed.front();
        if (lower.part(i) != upper.part(i) - 1) return std::nullopt;
        return CoverWitness{i, removal_partner(upper, i, 1), 1};
    }
    if (changed.size() != 2) return std::nullopt;
    const int i = changed[0];
    const int j = changed[1];
    const int z = upper.part(i) - lower.part(i);
    if (z < 1) return std::nullopt;
    if (lower.part(j) != upper.part(j) + z - 1) return std::nullopt;
    const int c = extended_code_entry(upper, i, j);
    if (c != extended_code_entry(lower, i, j)) return std::nullopt;
    if (c != lower.part(i) - upper.part(j)) return std::nullopt;
    return CoverWitness{i, j, z};
}

/// All compositions covered by `a`, each with its witness, ordered by
/// (i, z). Distinct (i, z) give distinct results, and z is pruned by the
/// next smaller part: removing more than a_i - a_{next_smaller} never
/// certifies.
inline std::vector<std::pair<Composition, CoverWitness>>
lower_covers(const Composition& a) {
    std::vector<std::pair<Composition, CoverWitness>> covers;
    for (int i = 1; i <= a.degree() - 1; ++i) {
        if (a.part(i) == 0) continue;
        const int z_max = a.part(i) - a.part(next_smaller(a, i));
        for (int z = 1; z <= z_max; ++z)
            if (auto cover = detail::try_removal(a, i, z)) covers.push_back(std::move(*cover));
    }
    return covers;
}

/// All compositions covering `a`, enumerated through insertions. Agrees
/// with dualizing the lower covers of the dual.
inline std::vector<std::pair<Composition, CoverWitness>>
upper_covers(const Composition& a) {
    std::vector<std::pair<Composition, CoverWitness>> covers;
    const Composition d = dual(a);
    for (int i = 1; i <= a.degree() - 1; ++i) {
        if (d.part(i) == 0) continue;
        const int k = next_smaller(d, i);
        const int z_max = a.part(k) - a.part(i) + k - i;
        for (int z = 1; z <= z_max; ++z)
            if (auto cover = detail::try_insertion(a, i, z)) covers.push_back(std::move(*cover));
    }
    return covers;
}

/// The order relation: `a` is below `b` when repeated covers lead from b
/// down to a. Breadth-first descent by weight level; a branch is abandoned
/// when some prefix sum of `a` exceeds the branch's, since covers only
/// ever lower prefix sums.
inline bool leq(const Composition& a, const Composition& b) {
    const int n = a.degree();
    if (n != b.degree())
        throw degree_mismatch("leq got degrees " + std::to_string(n) + " and " +
                              std::to_string(b.degree()));
    if (weight(a) >= weight(b)) return a == b;

    std::vector<int> target_prefix(static_cast<std::size_t>(n - 1), 0);
    int sum = 0;
    for (int m = 1; m <= n - 1; ++m) {
        sum += a.part(m);
        target_prefix[static_cast<std::size_t>(m - 1)] = sum;
    }
    const auto reachable = [&](const Composition& c) {
        int prefix = 0;
        for (int m = 1; m <= n - 1; ++m) {
            prefix += c.part(m);
            if (prefix < target_prefix[static_cast<std::size_t>(m - 1)]) return false;
        }
        return true;
    };

    std::set<std::vector<int>> level{b.parts()};
    for (int w = weight(b); w > weight(a); --w) {
        std::set<std::vector<int>> next;
        for (const auto& parts : level)
            for (auto& [below, witness] : lower_covers(Composition(parts, n)))
                if (reachable(below)) next.insert(below.parts());
        if (next.empty()) return false;
        level = std::move(next);
    }
    return level.contains(a.parts());
}

struct HasseEdge {
    int upper;
    int lower;
    CoverWitness witness;

    bool operator==(const HasseEdge&) const = default;
};

/// The full cover graph of the staircase poset for one degree: all n!
/// compositions ordered by (weight, lex), one edge per cover. Degrees
/// above the cap are refused unless forced; 9! nodes is the desk ceiling.
class HasseDiagram {
public:
    static constexpr int degree_cap = 9;

    explicit HasseDiagram(int degree, bool force = false) : degree_(degree) {
        if (degree < 1)
            throw index_error("degree must be at least 1");
        if (degree > degree_cap && !force)
            throw resource_limit("degree " + std::to_string(degree) + " above cap " +
                                 std::to_string(degree_cap) + "; pass force to override");
        nodes_ = all_compositions(degree);
        std::stable_sort(nodes_.begin(), nodes_.end(),
                         [](const Composition& x, const Composition& y) {
                             return weight(x) < weight(y);
                         });
        std::map<std::vector<int>, int> index;
        for (int k = 0; k < static_cast<int>(nodes_.size()); ++k)
            index[nodes_[static_cast<std::size_t>(k)].parts()] = k;
        for (int k = 0; k < static_cast<int>(nodes_.size()); ++k)
            for (auto& [below, witness] : lower_covers(nodes_[static_cast<std::size_t>(k)]))
                edges_.push_back(HasseEdge{k, index.at(below.parts()), witness});
    }

    int degree() const noexcept { return degree_; }
    const std::vector<Composition>& nodes() const noexcept { return nodes_; }
    const std::vector<HasseEdge>& edges() const noexcept { return edges_; }

    std::string to_dot() const {
        std::string out = "digraph hasse" + std::to_string(degree_) + " {\n";
        for (const auto& node : nodes_)
            out += "  \"" + to_string(node) + "\";\n";
        for (const auto& edge : edges_) {
            out += "  \"" + to_string(nodes_[static_cast<std::size_t>(edge.upper)]) +
                   "\" -> \"" + to_string(nodes_[static_cast<std::size_t>(edge.lower)]) +
                   "\" [label=\"(" + std::to_string(edge.witness.i) + "," +
                   std::to_string(edge.witness.j) + "," + std::to_string(edge.witness.z) +
                   ")\"];\n";
        }
        out += "}\n";
        return out;
    }

    /// One edge per line: upper, lower (composition text form), i, j, z.
    std::string to_jsonl() const {
        std::string out;
        for (const auto& edge : edges_) {
            out += "{\"upper\":\"" + to_string(nodes_[static_cast<std::size_t>(edge.upper)]) +
                   "\",\"lower\":\"" + to_string(nodes_[static_cast<std::size_t>(edge.lower)]) +
                   "\",\"i\":" + std::to_string(edge.witness.i) +
                   ",\"j\":" + std::to_string(edge.witness.j) +
                   ",\"z\":" + std::to_string(edge.witness.z) + "}\n";
        }
        return out;
    }

private:
    int degree_;
    std::vector<Composition> nodes_;
    std::vector<HasseEdge> edges_;
};

inline HasseDiagram hasse(int degree, bool force = false) {
    return HasseDiagram(degree, force);
}

} // namespace staircase
