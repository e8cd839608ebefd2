#pragma once

#include <vector>

#include "orbindex/rootsys.hpp"

namespace orbindex {

/// Weyl group element stored as its exact matrix action on weight
/// coordinates. det == (-1)^length, and the matrix preserves the Gram form.
struct WeylElement {
    int rank = 0;
    std::vector<Rat> matrix;  // row-major rank*rank
    int length = 0;
    int det = 1;

    static WeylElement identity(int rank);
    WeightVec apply(const WeightVec& v) const;
    WeylElement compose(const WeylElement& other) const;  // this after other
};

bool operator==(const WeylElement& a, const WeylElement& b);
int compare_elements(const WeylElement& a, const WeylElement& b);  // (length, lex matrix)

struct WeylGroup {
    std::vector<WeylElement> elements;    // sorted by (length, lex matrix); [0] is e
    std::vector<WeylElement> generators;  // simple reflections of the defining subsystem
    int rank = 0;

    size_t order() const { return elements.size(); }
    const WeylElement& identity() const { return elements.front(); }
};

/// Full enumeration of the Weyl group of a reflection-closed (sub)system.
/// Throws GroupTooLarge past size_bound elements.
WeylGroup enumerate_weyl(const std::vector<Root>& system, const BilinearForm& form,
                         size_t size_bound = 100000);

/// Minimal-length representatives of right cosets sub\whole, one per coset,
/// ties broken by lexicographic matrix order. |result| = |whole|/|sub|.
std::vector<WeylElement> coset_reps(const WeylGroup& sub, const WeylGroup& whole);

struct DominantResult {
    WeylElement w;
    WeightVec dominant;  // w(mu)
    bool strict = false;
};

/// Finds w of minimal length with (w(mu), alpha) >= 0 for every given
/// positive root. Singular mu is allowed and flagged non-strict.
DominantResult dominant_representative(const WeightVec& mu, const WeylGroup& W,
                                       const std::vector<WeightVec>& positives,
                                       const BilinearForm& form);

}  // namespace orbindex
