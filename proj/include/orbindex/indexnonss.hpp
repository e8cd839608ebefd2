#pragma once

#include <optional>

#include "orbindex/indexss.hpp"

namespace orbindex {

enum class BernoulliConvention {
    Classical,  // B_1 = 1/6, B_2 = 1/30, ...
    Modern,     // B_1 = -1/2, B_2 = 1/6, B_4 = -1/30, ...
};

/// Exact Bernoulli number under the chosen indexing. Classical B_n equals
/// |modern B_{2n}|.
Rat bernoulli(int n, BernoulliConvention conv);

/// Area of the unit sphere S^{d-1}: 2 pi^{d/2} / Gamma(d/2).
double sphere_area(int d);

/// Real-rank-one structure constants of a catalog group. Everything here is
/// catalog data under the documented normalization; nothing is derived from
/// the root system at query time.
struct RankOneData {
    int dim_n_lambda = 0;
    int dim_n_2lambda = 0;
    Rat lambda_res_norm_sq;          // ||lambda_restricted||^2, exact
    std::optional<int> su_family_n;  // n when G = SU(2n,1)
    std::optional<WeightVec> z0;     // coweight for the sign of R+(G,T)
    WeightVec zvec;                  // coweight computing k(mu)
    std::vector<int> rplus0;         // root indices for eps(lambda + rho_c); empty = default
    SymmetricPair m_pair;            // root data of M in restricted coordinates
    std::vector<WeightVec> restriction;     // rows: i t* -> i (t cap m)*
    std::vector<int> wm_positive_indices;   // W_M as a subsystem of R+(K,T)
    std::optional<int> real_hyperbolic_dim; // set when G/K is real hyperbolic
};

/// User-supplied constants of Gamma. Never fabricated; missing pieces raise
/// MissingGammaData where a formula needs them.
struct SsClass {
    ElementDescriptor element;
    double volume = 0.0;
};

struct GammaData {
    long l = 0;  // Gamma-conjugacy classes of Gamma-cuspidal parabolics
    std::optional<std::vector<double>> cusp_volume_ratios;
    double C_lambda = 0.0;
    double C_2lambda = 0.0;
    std::vector<SsClass> ss_classes;
    std::optional<std::vector<double>> residual_traces;
};

/// C_2(Gamma) = sum of cusp ratios * (2 pi)^{2n} / (2n)! * B_n.
double c2_gamma(const GammaData& gd, int n, BernoulliConvention conv);

/// Sign of the product of <alpha, Z_0> over noncompact positive roots.
int epsilon_Rplus(const RankOneData& data, const SymmetricPair& pair);

/// Which norm feeds the SU(2n,1) unipotent term.
enum class LambdaNormSource { RestrictedRoot, HighestWeight };

/// The N_{2 lambda} orbital term. Zero unless G = SU(2n,1).
double tau_n0_contribution(const DiracInput& input, const RankOneData& data, const GammaData& gd,
                           BernoulliConvention conv,
                           LambdaNormSource norm = LambdaNormSource::RestrictedRoot);

/// Identically zero.
double tau_lambda_contribution();

/// Residual term: zero for regular lambda + rho_c, else twice the sum of the
/// supplied residual traces.
double tau_res_contribution(const DiracInput& input, const GammaData& gd);

/// The integer k with <mu, zvec> = k. NonIntegralK when the pairing is not
/// an integer.
long long k_of_mu(const WeightVec& mu, const RankOneData& data);

/// Exact pairing behind k_of_mu, for sign-only consumers.
Rat k_pairing(const WeightVec& mu, const RankOneData& data);

/// Sign of (lambda + rho_c) against the configured positive system R+_0.
int epsilon_weight(const WeightVec& mu, const RankOneData& data, const SymmetricPair& pair);

/// Which weight feeds the M-representation subscript in the remainder term.
enum class RemSubscript { Display, Prose };

/// The trace-formula remainder term. Zero on real hyperbolic space of
/// dimension >= 4; requires lambda + rho_c regular otherwise.
double tau_rem_contribution(const DiracInput& input, const RankOneData& data, const GammaData& gd,
                            RemSubscript subscript = RemSubscript::Display);

}  // namespace orbindex
