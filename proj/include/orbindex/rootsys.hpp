#pragma once

#include <string>
#include <vector>

#include "orbindex/weight.hpp"

namespace orbindex {

struct Root {
    WeightVec vec;
    bool positive = false;
    bool compact = false;
};

/// Root system of an equal-rank symmetric pair, with compact/noncompact
/// marking. Roots are stored as canonically ordered positives followed by
/// their negatives in matching order, so roots[i + n_pos] == -roots[i].
/// Immutable after construction; all operations on it are pure.
struct SymmetricPair {
    std::string name;
    int rank = 0;  // ambient coordinate dimension
    BilinearForm form;
    std::vector<Root> roots;
    int dim_GK = 0;  // = number of noncompact roots in the equal-rank case
    bool equal_rank = true;

    size_t positive_count() const { return roots.size() / 2; }

    std::vector<WeightVec> positive_vectors() const;
    std::vector<WeightVec> compact_positive_vectors() const;
    std::vector<WeightVec> noncompact_positive_vectors() const;

    /// The +/- compact roots, suitable for Weyl group enumeration.
    std::vector<Root> compact_subsystem() const;

    WeightVec rho() const;    // half sum of positive roots
    WeightVec rho_c() const;  // half sum of positive compact roots
    WeightVec rho_n() const;  // rho - rho_c

    bool is_root(const WeightVec& v) const;

    /// Builds the pair from positive root vectors (canonical order is
    /// re-established internally) and per-positive compact flags.
    static SymmetricPair assemble(std::string name, int rank, BilinearForm form,
                                  std::vector<WeightVec> positives,
                                  std::vector<bool> compact_flags, bool equal_rank = true);
};

/// Closure of the given simple roots under their reflections. Positivity is
/// assigned by the sign of the expansion in the simple basis; positives come
/// back sorted by (height, lexicographic). Compact flags are left false.
/// Throws InvalidRootDatum on dependent simples, non-integral Cartan
/// pairings, or closure exceeding max_roots.
std::vector<Root> generate_root_system(const std::vector<WeightVec>& simple_roots,
                                       const BilinearForm& form, size_t max_roots = 1000);

/// (1/2) * sum of the given vectors. Empty input of known rank comes back as
/// zero; use the rank-taking overload when the subset may be empty.
WeightVec half_sum(const std::vector<WeightVec>& roots, int rank);

/// Sub-pair of roots pairing integrally with X, i.e. the root system of the
/// centralizer of exp(2*pi*i*X). Positivity and compactness are inherited.
SymmetricPair centralizer_subsystem(const SymmetricPair& pair, const WeightVec& X);

/// True iff (mu, alpha) != 0 for every root alpha of the pair.
bool is_regular(const WeightVec& mu, const SymmetricPair& pair);

/// Structural invariant check; returns human-readable violations instead of
/// throwing. Empty result means the pair is consistent.
std::vector<std::string> validate_pair(const SymmetricPair& pair);

/// Weight lattice test: every coordinate denominator divides 2 * lcm of the
/// root coordinate denominators. Spinor weights (half shifts) are admitted.
bool lattice_integral(const WeightVec& mu, const SymmetricPair& pair);

}  // namespace orbindex
