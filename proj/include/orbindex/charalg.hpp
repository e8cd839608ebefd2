#pragma once

#include <complex>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "orbindex/weyl.hpp"

namespace orbindex {

/// Rational point X of the torus Lie algebra; the group element is
/// exp(2*pi*sqrt(-1) X). Exponents stay exact until the final complex
/// exponential.
struct TorusElement {
    WeightVec X;
};

/// Least N >= 1 with N<alpha,X> integral for all given roots; 0 never occurs.
long torus_order(const TorusElement& g, const std::vector<WeightVec>& root_vectors);

/// gamma is central iff <alpha, X> is an integer for every root alpha.
bool is_central(const TorusElement& g, const SymmetricPair& pair);

struct ElementDescriptor {
    enum class Kind { Central, Elliptic, Hyperbolic };
    Kind kind = Kind::Hyperbolic;
    std::optional<TorusElement> torus;  // present for Central and Elliptic
};

/// Integer-coefficient formal sum of weights. Zero coefficients are never
/// stored; addition and multiplication are exact.
class LaurentChar {
public:
    using Terms = std::map<WeightVec, long long>;

    LaurentChar() = default;
    static LaurentChar one(int rank);
    static LaurentChar monomial(WeightVec w, long long coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    long long coeff(const WeightVec& w) const;
    long long dimension() const;  // sum of coefficients

    void add_term(const WeightVec& w, long long coeff);
    LaurentChar& operator+=(const LaurentChar& o);
    LaurentChar& operator-=(const LaurentChar& o);
    LaurentChar& operator*=(long long s);
    LaurentChar apply(const WeylElement& w) const;

    friend LaurentChar operator+(LaurentChar a, const LaurentChar& b) { return a += b; }
    friend LaurentChar operator-(LaurentChar a, const LaurentChar& b) { return a -= b; }
    friend LaurentChar operator*(const LaurentChar& a, const LaurentChar& b);
    friend bool operator==(const LaurentChar& a, const LaurentChar& b) {
        return a.terms_ == b.terms_;
    }

private:
    Terms terms_;
};

/// e^mu(gamma) = exp(2 pi i <mu, X>), the exponent reduced mod 1 exactly.
std::complex<double> eval_exp(const WeightVec& mu, const TorusElement& g);

/// Termwise evaluation sum coeff * e^mu(gamma).
std::complex<double> eval_character(const LaurentChar& chi, const TorusElement& g);

/// Alternating orbit sum: sum over W of det(w) e^{w mu}.
LaurentChar weyl_numerator(const WeightVec& mu, const WeylGroup& W);

enum class DenomSign { MinusExp, PlusExp };

/// e^rho(gamma) * prod over positives of (1 - e^{-alpha}(gamma)) under the
/// default MinusExp convention; PlusExp uses (1 - e^{alpha}(gamma)).
std::complex<double> weyl_denominator_value(const TorusElement& g,
                                            const std::vector<WeightVec>& positives,
                                            const WeightVec& rho,
                                            DenomSign sign = DenomSign::MinusExp);

/// Dimension of the irreducible with the given highest weight:
/// prod (mu + rho, alpha) / (rho, alpha) over positives, asserted integral.
long long weyl_dim(const WeightVec& mu_hw, const std::vector<WeightVec>& positives,
                   const WeightVec& rho, const BilinearForm& form);

/// Irreducible character by exact Laurent division of alternating sums.
LaurentChar irr_character(const WeightVec& mu_hw, const std::vector<WeightVec>& positives,
                          const WeylGroup& W, const WeightVec& rho, const BilinearForm& form);

/// Weight multiplicities of the irreducible with highest weight mu_hw, by
/// the Freudenthal recursion. Independent of the character-division path.
std::map<WeightVec, long long> freudenthal_multiplicities(
    const WeightVec& mu_hw, const std::vector<WeightVec>& positives, const BilinearForm& form);

/// Virtual decomposition of a W-invariant character into irreducibles by
/// iterated leading-term stripping; multiplicities may be negative.
std::vector<std::pair<WeightVec, long long>> decompose(const LaurentChar& chi,
                                                       const std::vector<WeightVec>& positives,
                                                       const WeylGroup& W, const WeightVec& rho,
                                                       const BilinearForm& form);

/// Graded spinor character prod over beta in S of (e^{beta/2} - e^{-beta/2}).
/// The coefficient of the extreme weight (1/2) sum S is +1.
LaurentChar spin_graded_character(const std::vector<WeightVec>& S, int rank);

/// Positive roots indecomposable within the given positive set; the simple
/// roots of the subsystem they span.
std::vector<WeightVec> indecomposable_positives(const std::vector<WeightVec>& positives);

/// Reflects mu into the dominant chamber of the given simples.
WeightVec dominantize(WeightVec mu, const std::vector<WeightVec>& simples,
                      const BilinearForm& form);

}  // namespace orbindex
