#include "orbindex/indexss.hpp"

#include "orbindex/errors.hpp"

namespace orbindex {

DiracInput::DiracInput(SymmetricPair p, WeightVec lambda_w)
    : pair(std::move(p)), lambda(std::move(lambda_w)) {
    if (lambda.rank() != pair.rank)
        throw InvalidDiracInput("highest weight rank does not match the pair");
    for (const auto& alpha : pair.compact_positive_vectors())
        if (pair.form.inner(lambda, alpha) < 0)
            throw InvalidDiracInput("highest weight " + to_string(lambda) +
                                    " is not dominant for the compact positive roots");
    if (!lattice_integral(lambda - pair.rho_n(), pair))
        throw InvalidDiracInput("lambda - rho_n = " + to_string(lambda - pair.rho_n()) +
                                " is not lattice integral");
}

Rat formal_degree(const WeightVec& mu, const SymmetricPair& sub) {
    const WeightVec rho_sub = sub.rho();
    Rat value(1);
    for (const auto& alpha : sub.positive_vectors()) {
        Rat denom = sub.form.inner(rho_sub, alpha);
        if (denom == 0) throw InternalError("(rho_sub, alpha) = 0 in a formal degree");
        value *= sub.form.inner(mu, alpha) / denom;
    }
    return value;
}

ElementDescriptor classify_element(const SymmetricPair& pair, const RawElementSpec& raw) {
    ElementDescriptor out;
    if (raw.type == "hyperbolic") {
        out.kind = ElementDescriptor::Kind::Hyperbolic;
        return out;
    }
    if (raw.type != "central" && raw.type != "elliptic")
        throw UsageError("unknown element type '" + raw.type + "'");
    if (!raw.X) throw UsageError("element type '" + raw.type + "' requires coordinates X");
    if (raw.X->rank() != pair.rank)
        throw UsageError("element coordinates have rank " + std::to_string(raw.X->rank()) +
                         ", expected " + std::to_string(pair.rank));
    TorusElement g{*raw.X};
    if (raw.type == "central") {
        for (const auto& r : pair.roots) {
            Rat p = dot(r.vec, g.X);
            if (!is_integer(p))
                throw MisclassifiedElement("claimed central but <" + to_string(r.vec) + ", X> = " +
                                           rational_string(p) + " is not an integer");
        }
        out.kind = ElementDescriptor::Kind::Central;
    } else {
        out.kind = ElementDescriptor::Kind::Elliptic;
    }
    out.torus = std::move(g);
    return out;
}

std::complex<double> tau_central(const DiracInput& input, const ElementDescriptor& gamma) {
    if (gamma.kind != ElementDescriptor::Kind::Central || !gamma.torus)
        throw WrongElementKind("central evaluation requires a central element");
    if (!is_central(*gamma.torus, input.pair))
        throw WrongElementKind("element descriptor fails the centrality test");
    Rat degree = formal_degree(input.lambda + input.pair.rho_c(), input.pair);
    return eval_exp(input.lambda - input.pair.rho_n(), *gamma.torus) * to_double(degree);
}

std::complex<double> tau_hyperbolic() { return 0.0; }

namespace {

struct EllipticContext {
    SymmetricPair sub;
    WeylGroup w_k;
    WeylGroup w_k_sub;
    std::vector<WeylElement> reps;
    std::vector<WeightVec> extra_positives;  // R^+(G) \ R^+(G_gamma)
};

EllipticContext elliptic_context(const DiracInput& input, const TorusElement& gamma) {
    if (!input.pair.equal_rank)
        throw RankMismatch("elliptic evaluation needs an equal-rank pair");
    if (gamma.X.rank() != input.pair.rank)
        throw RankMismatch("torus element rank does not match the pair");
    EllipticContext ctx;
    ctx.sub = centralizer_subsystem(input.pair, gamma.X);
    ctx.w_k = enumerate_weyl(input.pair.compact_subsystem(), input.pair.form);
    ctx.w_k_sub = enumerate_weyl(ctx.sub.compact_subsystem(), input.pair.form);
    ctx.reps = coset_reps(ctx.w_k_sub, ctx.w_k);
    for (const auto& alpha : input.pair.positive_vectors())
        if (!ctx.sub.is_root(alpha)) ctx.extra_positives.push_back(alpha);
    return ctx;
}

int half_dim_sign(int dim) { return (dim / 2) % 2 == 0 ? 1 : -1; }

}  // namespace

SsContribution tau_elliptic(const DiracInput& input, const TorusElement& gamma,
                            DenomSign display_sign) {
    EllipticContext ctx = elliptic_context(input, gamma);
    const SymmetricPair& pair = input.pair;
    const WeightVec rho = pair.rho();
    const WeightVec rho_n = pair.rho_n();
    const WeightVec rho_sub = ctx.sub.rho();

    std::complex<double> extra_product = 1.0;
    for (const auto& alpha : ctx.extra_positives) {
        if (is_integer(dot(alpha, gamma.X)))
            throw InternalError("root outside the centralizer pairs integrally with X");
        extra_product *= 1.0 - eval_exp(-alpha, gamma);
    }
    const std::complex<double> common = eval_exp(rho - rho_sub, gamma) * extra_product;

    SsContribution out;
    out.element.kind = ElementDescriptor::Kind::Elliptic;
    out.element.torus = gamma;
    out.common_denominator = common;
    out.display_sign = display_sign;

    const int sign_sub = half_dim_sign(ctx.sub.dim_GK);
    std::complex<double> total = 0.0;
    for (const auto& w : ctx.reps) {
        const std::complex<double> trace = eval_exp(w.apply(input.lambda - rho_n), gamma);
        const Rat degree = formal_degree(w.apply(input.lambda + rho_sub - rho_n), ctx.sub);
        const std::complex<double> numer = trace * static_cast<double>(sign_sub) * to_double(degree);
        const std::complex<double> denom =
            eval_exp(w.apply(rho_sub - rho), gamma) * static_cast<double>(w.det) * common;
        const std::complex<double> term = numer / denom;
        out.per_coset_terms.emplace_back(w, term);
        total += term;
    }
    out.value = static_cast<double>(half_dim_sign(pair.dim_GK)) * total;
    out.display_value = tau_elliptic_display(input, gamma, display_sign);
    return out;
}

std::complex<double> tau_elliptic_display(const DiracInput& input, const TorusElement& gamma,
                                          DenomSign sign) {
    EllipticContext ctx = elliptic_context(input, gamma);
    const SymmetricPair& pair = input.pair;
    const WeightVec rho = pair.rho();
    const WeightVec rho_c = pair.rho_c();
    const WeightVec rho_n = pair.rho_n();
    const WeightVec rho_sub = ctx.sub.rho();

    std::complex<double> numerator = 0.0;
    for (const auto& w : ctx.reps) {
        const Rat degree = formal_degree(w.apply(input.lambda + rho_sub - rho_n), ctx.sub);
        numerator += static_cast<double>(w.det) *
                     eval_exp(w.apply(input.lambda + rho_c - rho_sub), gamma) * to_double(degree);
    }
    std::complex<double> denominator = eval_exp(rho - rho_sub, gamma);
    for (const auto& alpha : ctx.extra_positives) {
        const WeightVec arg = sign == DenomSign::MinusExp ? -alpha : alpha;
        denominator *= 1.0 - eval_exp(arg, gamma);
    }
    const int prefactor = half_dim_sign(pair.dim_GK) * half_dim_sign(ctx.sub.dim_GK);
    return static_cast<double>(prefactor) * numerator / denominator;
}

std::complex<double> tau_semisimple(const DiracInput& input, const ElementDescriptor& gamma,
                                    DenomSign display_sign) {
    switch (gamma.kind) {
        case ElementDescriptor::Kind::Central:
            return tau_central(input, gamma);
        case ElementDescriptor::Kind::Hyperbolic:
            return tau_hyperbolic();
        case ElementDescriptor::Kind::Elliptic:
            return tau_elliptic(input, *gamma.torus, display_sign).value;
    }
    throw InternalError("unreachable element kind");
}

}  // namespace orbindex
