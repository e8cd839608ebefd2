#include "orbindex/indexhigher.hpp"

#include <algorithm>

#include "orbindex/errors.hpp"

namespace orbindex {

SymmetricPair levi_pair(const SymmetricPair& base, const LeviData& levi) {
    const auto base_positives = base.positive_vectors();
    std::vector<WeightVec> positives;
    std::vector<bool> flags;
    for (int idx : levi.m_positive_indices) {
        if (idx < 0 || static_cast<size_t>(idx) >= base_positives.size())
            throw UsageError("levi root index " + std::to_string(idx) + " out of range");
        positives.push_back(base_positives[idx]);
        flags.push_back(base.roots[idx].compact);
    }
    SymmetricPair m = SymmetricPair::assemble(base.name + ":" + levi.name, base.rank, base.form,
                                              std::move(positives), std::move(flags),
                                              /*equal_rank=*/true);
    for (const auto& a : m.roots)
        for (const auto& b : m.roots) {
            Rat c = 2 * m.form.inner(b.vec, a.vec) / m.form.inner(a.vec, a.vec);
            if (!m.is_root(b.vec - c * a.vec))
                throw InvalidRootDatum("levi '" + levi.name + "' is not reflection closed");
        }
    return m;
}

LaurentChar knm_spin_character(const SymmetricPair& base, const LeviData& levi) {
    const SymmetricPair m = levi_pair(base, levi);
    std::vector<WeightVec> s;
    for (const auto& beta : base.compact_positive_vectors())
        if (!m.is_root(beta)) s.push_back(beta);
    return spin_graded_character(s, base.rank);
}

std::vector<DecompTerm> mU_decomposition(const DiracInput& input, const LeviData& levi) {
    if (!levi.maximal)
        throw RequiresMaximal("decomposition needs a maximal levi (shared torus)");
    const SymmetricPair& base = input.pair;
    const SymmetricPair m = levi_pair(base, levi);

    const auto k_positives = base.compact_positive_vectors();
    const WeylGroup w_k = enumerate_weyl(base.compact_subsystem(), base.form);
    LaurentChar w_char =
        irr_character(input.lambda, k_positives, w_k, base.rho_c(), base.form);
    LaurentChar product = knm_spin_character(base, levi) * w_char;

    const auto km_positives = m.compact_positive_vectors();
    const WeylGroup w_km = enumerate_weyl(m.compact_subsystem(), m.form);
    auto strip = decompose(product, km_positives, w_km, m.rho_c(), m.form);

    std::vector<DecompTerm> out;
    out.reserve(strip.size());
    for (auto& [w, c] : strip) out.push_back(DecompTerm{std::move(w), c});
    std::sort(out.begin(), out.end(), [](const DecompTerm& a, const DecompTerm& b) {
        return compare_lex(a.lambda_U, b.lambda_U) < 0;
    });
    return out;
}

std::complex<double> higher_pairing(const DiracInput& input, const LeviData& levi,
                                    const ElementDescriptor& gamma, DenomSign display_sign) {
    if (!levi.maximal) return 0.0;
    if (gamma.kind == ElementDescriptor::Kind::Hyperbolic) return 0.0;
    if (!gamma.torus) throw WrongElementKind("elliptic or central element needs coordinates");

    const SymmetricPair m = levi_pair(input.pair, levi);
    const auto terms = mU_decomposition(input, levi);
    const TorusElement& g = *gamma.torus;

    bool central_in_m = true;
    for (const auto& r : m.roots)
        if (!is_integer(dot(r.vec, g.X))) {
            central_in_m = false;
            break;
        }

    std::complex<double> total = 0.0;
    if (central_in_m) {
        const WeightVec rho_m_c = m.rho_c();
        const WeightVec rho_m_n = m.rho_n();
        for (const auto& t : terms) {
            Rat degree = formal_degree(t.lambda_U + rho_m_c, m);
            total += static_cast<double>(t.mult) * eval_exp(t.lambda_U - rho_m_n, g) *
                     to_double(degree);
        }
        return total;
    }
    for (const auto& t : terms) {
        DiracInput m_input(m, t.lambda_U);
        total += static_cast<double>(t.mult) * tau_elliptic(m_input, g, display_sign).value;
    }
    return total;
}

}  // namespace orbindex
