#pragma once

#include <string>
#include <vector>

#include "staircase/composition.hpp"
#include "staircase/errors.hpp"
#include "staircase/poset.hpp"

namespace staircase {

/// One term of the Monk product for a fixed position r: the transposition
/// (i, j) with i <= r < j whose product raises length by one, and the code
/// of that product. The target's degree reports the staircase actually
/// used.
struct MonkTerm {
    int i;
    int j;
    Composition target;

    bool operator==(const MonkTerm&) const = default;
};

/// Enumerates the Monk cover terms through insertions: every (i, z) with
/// an insertion whose partner lands past r contributes the pair
/// (i, partner). The composition is first embedded into the next larger
/// staircase, which is the smallest one keeping all such insertions legal.
/// For fixed i the partner shrinks as z grows, so the scan stops at the
/// first insertable z whose partner falls at or below r.
inline std::vector<MonkTerm> monk_terms(const Composition& a, int r) {
    if (r < 1 || r > a.degree() - 1)
        throw index_error("position r = " + std::to_string(r) + " outside [1," +
                          std::to_string(a.degree() - 1) + "]");
    const Composition embedded(a.parts(), a.degree() + 1);
    const Composition d = dual(embedded);
    std::vector<MonkTerm> terms;
    for (int i = 1; i <= r; ++i) {
        if (d.part(i) == 0) continue;
        const int k = next_smaller(d, i);
        const int z_bound = embedded.part(k) - embedded.part(i) + k - i;
        for (int z = 1; z <= z_bound; ++z) {
            auto term = detail::try_insertion(embedded, i, z);
            if (!term) continue;
            if (term->second.j <= r) break;
            terms.push_back(MonkTerm{i, term->second.j, std::move(term->first)});
        }
    }
    return terms;
}

} // namespace staircase
