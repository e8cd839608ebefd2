#pragma once

#include "orbindex/indexss.hpp"

namespace orbindex {

/// Catalog description of a cuspidal-parabolic Levi factor sharing the
/// compact torus: the roots of M as indices into the base pair's canonical
/// positive list, plus the maximality attribute.
struct LeviData {
    std::string name;
    std::vector<int> m_positive_indices;
    bool maximal = false;
};

/// The root system of M as a sub-pair of the base (same ambient coordinates,
/// inherited positivity and compactness). Validates reflection closure.
SymmetricPair levi_pair(const SymmetricPair& base, const LeviData& levi);

/// Graded spinor character of k/(k cap m): the product over the positive
/// compact roots of the base that are not roots of M.
LaurentChar knm_spin_character(const SymmetricPair& base, const LeviData& levi);

struct DecompTerm {
    WeightVec lambda_U;  // highest weight for R+(K cap M, T)
    long long mult = 0;  // may be negative
};

/// Virtual decomposition of spin(k/(k cap m)) tensor W restricted to
/// K cap M, sorted by lambda_U. Requires a maximal levi (shared torus).
std::vector<DecompTerm> mU_decomposition(const DiracInput& input, const LeviData& levi);

/// Pairing of the degree-dim(A') cocycle attached to (P, gamma) with the
/// index. Zero for non-maximal P and for gamma hyperbolic in M; otherwise
/// the M-level central/elliptic evaluation summed over the decomposition.
std::complex<double> higher_pairing(const DiracInput& input, const LeviData& levi,
                                    const ElementDescriptor& gamma,
                                    DenomSign display_sign = DenomSign::MinusExp);

}  // namespace orbindex
