#include "orbindex/indexnonss.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "orbindex/errors.hpp"

namespace orbindex {

namespace {

// Modern-convention Bernoulli numbers B_0..B_n by the defining recurrence
// sum_{k<=m} C(m+1,k) B_k = 0.
std::vector<Rat> bernoulli_row(int n) {
    std::vector<Rat> b(n + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rat acc(0);
        for (int k = 0; k < m; ++k)
            acc += binomial(static_cast<unsigned long>(m) + 1, static_cast<unsigned long>(k)) * b[k];
        b[m] = -acc / Rat(m + 1);
    }
    return b;
}

int half_dim_sign(int dim) { return (dim / 2) % 2 == 0 ? 1 : -1; }

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

Rat bernoulli(int n, BernoulliConvention conv) {
    if (n < 0) throw UsageError("Bernoulli index must be nonnegative");
    if (conv == BernoulliConvention::Modern) return bernoulli_row(n)[n];
    Rat b = bernoulli_row(2 * n)[2 * n];
    return b < 0 ? -b : b;
}

double sphere_area(int d) {
    if (d < 1) throw UsageError("sphere_area needs d >= 1");
    return 2.0 * std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0);
}

double c2_gamma(const GammaData& gd, int n, BernoulliConvention conv) {
    if (!gd.cusp_volume_ratios)
        throw MissingGammaData("cusp volume ratios are required for C_2(Gamma)");
    double ratio_sum = 0.0;
    for (double r : *gd.cusp_volume_ratios) ratio_sum += r;
    const double coeff = std::pow(2.0 * std::numbers::pi, 2 * n) / factorial(2 * n);
    return ratio_sum * coeff * to_double(bernoulli(n, conv));
}

int epsilon_Rplus(const RankOneData& data, const SymmetricPair& pair) {
    if (!data.z0) throw NotSupported("Z_0 is only defined for the SU(2n,1) catalogs");
    int sign = 1;
    for (const auto& alpha : pair.noncompact_positive_vectors()) {
        int s = sign_of(dot(alpha, *data.z0));
        if (s == 0) throw DegenerateZ0("<" + to_string(alpha) + ", Z_0> = 0");
        sign *= s;
    }
    return sign;
}

double tau_n0_contribution(const DiracInput& input, const RankOneData& data, const GammaData& gd,
                           BernoulliConvention conv, LambdaNormSource norm) {
    if (!data.su_family_n) return 0.0;
    const int n = *data.su_family_n;
    const double lambda_norm =
        norm == LambdaNormSource::RestrictedRoot
            ? std::sqrt(to_double(data.lambda_res_norm_sq))
            : std::sqrt(to_double(input.pair.form.inner(input.lambda, input.lambda)));
    const long long dim_w = weyl_dim(input.lambda, input.pair.compact_positive_vectors(),
                                     input.pair.rho_c(), input.pair.form);
    const double coeff = std::pow(2.0, 3 * n - 3) * std::pow(2.0 * n + 1.0, n) / sphere_area(4 * n);
    return lambda_norm * coeff * c2_gamma(gd, n, conv) *
           static_cast<double>(epsilon_Rplus(data, input.pair)) * static_cast<double>(dim_w);
}

double tau_lambda_contribution() { return 0.0; }

double tau_res_contribution(const DiracInput& input, const GammaData& gd) {
    if (is_regular(input.lambda + input.pair.rho_c(), input.pair)) return 0.0;
    if (!gd.residual_traces)
        throw MissingGammaData(
            "lambda + rho_c is singular; residual traces Tr(c+_{Gamma,lambda}(sigma)) are required");
    double sum = 0.0;
    for (double t : *gd.residual_traces) sum += t;
    return 2.0 * sum;
}

Rat k_pairing(const WeightVec& mu, const RankOneData& data) {
    if (mu.rank() != data.zvec.rank())
        throw RankMismatch("weight rank does not match the k(mu) coweight");
    return dot(mu, data.zvec);
}

long long k_of_mu(const WeightVec& mu, const RankOneData& data) {
    Rat k = k_pairing(mu, data);
    if (!is_integer(k))
        throw NonIntegralK("<" + to_string(mu) + ", zvec> = " + rational_string(k));
    return to_long(k);
}

int epsilon_weight(const WeightVec& mu, const RankOneData& data, const SymmetricPair& pair) {
    std::vector<WeightVec> positives;
    if (data.rplus0.empty()) {
        positives = pair.positive_vectors();
    } else {
        if (data.rplus0.size() != pair.positive_count())
            throw UsageError("rplus0 must select one of each +/- root pair");
        for (int idx : data.rplus0) {
            if (idx < 0 || static_cast<size_t>(idx) >= pair.roots.size())
                throw UsageError("rplus0 index out of range");
            positives.push_back(pair.roots[idx].vec);
        }
        for (const auto& alpha : positives)
            for (const auto& beta : positives)
                if (alpha == -beta) throw UsageError("rplus0 contains a +/- pair");
    }
    int sign = 1;
    for (const auto& alpha : positives) {
        int s = sign_of(pair.form.inner(mu, alpha));
        if (s == 0)
            throw InternalError("epsilon of a weight singular for R+_0 at " + to_string(alpha));
        sign *= s;
    }
    return sign;
}

namespace {

WeightVec restrict_weight(const WeightVec& mu, const RankOneData& data) {
    std::vector<Rat> coords;
    coords.reserve(data.restriction.size());
    for (const auto& row : data.restriction) coords.push_back(dot(row, mu));
    return WeightVec(std::move(coords));
}

}  // namespace

double tau_rem_contribution(const DiracInput& input, const RankOneData& data, const GammaData& gd,
                            RemSubscript subscript) {
    if (data.real_hyperbolic_dim && *data.real_hyperbolic_dim >= 4) return 0.0;

    const SymmetricPair& pair = input.pair;
    const WeightVec mu = input.lambda + pair.rho_c();
    if (!is_regular(mu, pair))
        throw NotSupported("lambda + rho_c is singular; only the regular branch is implemented");

    const WeylGroup w_k = enumerate_weyl(pair.compact_subsystem(), pair.form);
    std::vector<Root> wm_roots;
    const auto base_positives = pair.positive_vectors();
    for (int idx : data.wm_positive_indices) {
        if (idx < 0 || static_cast<size_t>(idx) >= base_positives.size())
            throw UsageError("W_M root index out of range");
        if (!pair.roots[idx].compact)
            throw UsageError("W_M must be generated by compact roots");
        wm_roots.push_back(pair.roots[idx]);
        wm_roots.push_back(pair.roots[idx + pair.positive_count()]);
    }
    const WeylGroup w_m_in_k = enumerate_weyl(wm_roots, pair.form);
    const auto reps = coset_reps(w_m_in_k, w_k);

    const WeylGroup w_m = enumerate_weyl(data.m_pair.roots, data.m_pair.form);
    const auto m_positives = data.m_pair.positive_vectors();
    const WeightVec rho_m = data.m_pair.rho();

    double total = 0.0;
    for (const auto& w : reps) {
        const WeightVec w_mu = w.apply(mu);
        const int k_sign = sign_of(k_pairing(w_mu, data));
        if (k_sign == 0)
            throw AmbiguousSign("k(w(lambda + rho_c)) = 0 at w with length " +
                                std::to_string(w.length));
        const WeightVec restricted = restrict_weight(w_mu, data);
        const auto dom = dominant_representative(restricted, w_m, m_positives, data.m_pair.form);
        Rat degree;
        if (subscript == RemSubscript::Display) {
            degree = formal_degree(dom.dominant, data.m_pair);
        } else {
            const WeightVec alt = restrict_weight(w.apply(input.lambda - pair.rho_c()), data);
            degree = formal_degree(dom.w.apply(alt), data.m_pair);
        }
        total += w.det * k_sign * to_double(degree);
    }
    const double prefactor = half_dim_sign(pair.dim_GK) * 0.5 * static_cast<double>(gd.l) *
                             static_cast<double>(epsilon_weight(mu, data, pair));
    return prefactor * total;
}

}  // namespace orbindex
