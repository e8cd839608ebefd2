#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "orbindex/charalg.hpp"

namespace orbindex {

/// Twisted Dirac operator datum: an equal-rank pair and the highest weight of
/// the twist with respect to the positive compact roots. Construction
/// validates dominance and lattice integrality of lambda - rho_n.
struct DiracInput {
    SymmetricPair pair;
    WeightVec lambda;

    DiracInput(SymmetricPair p, WeightVec lambda_w);
};

/// prod over R^+(sub) of (mu, alpha) / (rho_sub, alpha). Exact; returns 0
/// exactly when mu is singular for the subsystem.
Rat formal_degree(const WeightVec& mu, const SymmetricPair& sub);

/// Unvalidated user element spec, as it arrives from the CLI or a file.
struct RawElementSpec {
    std::string type;  // "central" | "elliptic" | "hyperbolic"
    std::optional<WeightVec> X;
};

/// Validates the claimed kind against the pair; a false centrality claim is
/// a MisclassifiedElement error.
ElementDescriptor classify_element(const SymmetricPair& pair, const RawElementSpec& raw);

/// Central value e^{lambda - rho_n}(gamma) * d^G_{lambda + rho_c}.
std::complex<double> tau_central(const DiracInput& input, const ElementDescriptor& gamma);

/// Hyperbolic classes contribute exactly zero.
std::complex<double> tau_hyperbolic();

/// Elliptic value with per-coset diagnostics. `value` follows the fixed-point
/// path through the centralizer; `display_value` is the closed-form cross
/// check evaluated under the given denominator sign convention.
struct SsContribution {
    std::complex<double> value{};
    ElementDescriptor element;
    std::vector<std::pair<WeylElement, std::complex<double>>> per_coset_terms;
    std::complex<double> common_denominator{};
    std::complex<double> display_value{};
    DenomSign display_sign = DenomSign::MinusExp;
};

SsContribution tau_elliptic(const DiracInput& input, const TorusElement& gamma,
                            DenomSign display_sign = DenomSign::MinusExp);

/// Closed-form path of the elliptic value alone (the display formula).
std::complex<double> tau_elliptic_display(const DiracInput& input, const TorusElement& gamma,
                                          DenomSign sign = DenomSign::MinusExp);

/// Dispatch on the element kind.
std::complex<double> tau_semisimple(const DiracInput& input, const ElementDescriptor& gamma,
                                    DenomSign display_sign = DenomSign::MinusExp);

}  // namespace orbindex
