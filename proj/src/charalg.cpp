#include "orbindex/charalg.hpp"

#include <algorithm>
#include <deque>
#include <numbers>
#include <set>

#include "orbindex/errors.hpp"

namespace orbindex {

namespace {

constexpr size_t kDivisionStepBound = 2'000'000;
constexpr size_t kStripStepBound = 100'000;

WeightVec reflect(const WeightVec& v, const WeightVec& alpha, const BilinearForm& form) {
    Rat c = 2 * form.inner(v, alpha) / form.inner(alpha, alpha);
    return v - c * alpha;
}

// Total order on weights refining the dominance order of the subsystem:
// compare (mu, sum of positives) first, lexicographic second. The maximum of
// a W-invariant character under this order sits at a dominant weight.
struct TermOrder {
    WeightVec two_rho;
    const BilinearForm* form;

    explicit TermOrder(const std::vector<WeightVec>& positives, const BilinearForm& f, int rank)
        : two_rho(WeightVec::zero(rank)), form(&f) {
        for (const auto& p : positives) two_rho += p;
    }

    // < 0 when a precedes b.
    int compare(const WeightVec& a, const WeightVec& b) const {
        int c = cmp(form->inner(a, two_rho), form->inner(b, two_rho));
        if (c != 0) return c;
        return compare_lex(a, b);
    }

    const WeightVec* leading(const LaurentChar& chi) const {
        const WeightVec* best = nullptr;
        for (const auto& [w, c] : chi.terms())
            if (!best || compare(w, *best) > 0) best = &w;
        return best;
    }
};

}  // namespace

long torus_order(const TorusElement& g, const std::vector<WeightVec>& root_vectors) {
    mpz_class n(1);
    for (const auto& alpha : root_vectors) {
        Rat p = dot(alpha, g.X);
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), n.get_mpz_t(), p.get_den_mpz_t());
        n = l;
    }
    if (!n.fits_slong_p()) throw InternalError("torus element order out of range");
    return n.get_si();
}

bool is_central(const TorusElement& g, const SymmetricPair& pair) {
    for (const auto& r : pair.roots)
        if (!is_integer(dot(r.vec, g.X))) return false;
    return true;
}

LaurentChar LaurentChar::one(int rank) { return monomial(WeightVec::zero(rank), 1); }

LaurentChar LaurentChar::monomial(WeightVec w, long long coeff) {
    LaurentChar c;
    if (coeff != 0) c.terms_.emplace(std::move(w), coeff);
    return c;
}

long long LaurentChar::coeff(const WeightVec& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

long long LaurentChar::dimension() const {
    long long d = 0;
    for (const auto& [w, c] : terms_) d += c;
    return d;
}

void LaurentChar::add_term(const WeightVec& w, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentChar& LaurentChar::operator+=(const LaurentChar& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

LaurentChar& LaurentChar::operator-=(const LaurentChar& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

LaurentChar& LaurentChar::operator*=(long long s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

LaurentChar LaurentChar::apply(const WeylElement& w) const {
    LaurentChar out;
    for (const auto& [mu, c] : terms_) out.add_term(w.apply(mu), c);
    return out;
}

LaurentChar operator*(const LaurentChar& a, const LaurentChar& b) {
    LaurentChar out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) out.add_term(wa + wb, ca * cb);
    return out;
}

std::complex<double> eval_exp(const WeightVec& mu, const TorusElement& g) {
    Rat t = frac_part(dot(mu, g.X));
    // Quarter turns are exact; they carry the central and order-2 cases.
    if (t == 0) return {1.0, 0.0};
    if (t == Rat(1, 2)) return {-1.0, 0.0};
    if (t == Rat(1, 4)) return {0.0, 1.0};
    if (t == Rat(3, 4)) return {0.0, -1.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * to_double(t));
}

std::complex<double> eval_character(const LaurentChar& chi, const TorusElement& g) {
    std::complex<double> s = 0;
    for (const auto& [w, c] : chi.terms()) s += static_cast<double>(c) * eval_exp(w, g);
    return s;
}

LaurentChar weyl_numerator(const WeightVec& mu, const WeylGroup& W) {
    LaurentChar out;
    for (const auto& w : W.elements) out.add_term(w.apply(mu), w.det);
    return out;
}

std::complex<double> weyl_denominator_value(const TorusElement& g,
                                            const std::vector<WeightVec>& positives,
                                            const WeightVec& rho, DenomSign sign) {
    std::complex<double> out = eval_exp(rho, g);
    for (const auto& alpha : positives) {
        const WeightVec arg = sign == DenomSign::MinusExp ? -alpha : alpha;
        out *= 1.0 - eval_exp(arg, g);
    }
    return out;
}

long long weyl_dim(const WeightVec& mu_hw, const std::vector<WeightVec>& positives,
                   const WeightVec& rho, const BilinearForm& form) {
    Rat dim(1);
    for (const auto& alpha : positives) {
        if (form.inner(mu_hw, alpha) < 0)
            throw NotDominant("weight " + to_string(mu_hw) + " is not dominant");
        dim *= form.inner(mu_hw + rho, alpha) / form.inner(rho, alpha);
    }
    if (!is_integer(dim))
        throw InternalError("Weyl dimension " + rational_string(dim) + " is not integral");
    return to_long(dim);
}

namespace {

LaurentChar divide_exact(LaurentChar num, const LaurentChar& den, const TermOrder& order) {
    const WeightVec* dlead = order.leading(den);
    if (!dlead) throw InternalError("division by zero character");
    const WeightVec dlead_w = *dlead;
    const long long dlead_c = den.coeff(dlead_w);
    LaurentChar quotient;
    size_t steps = 0;
    while (!num.is_zero()) {
        if (++steps > kDivisionStepBound)
            throw InternalError("Laurent division does not terminate");
        const WeightVec* nlead = order.leading(num);
        const long long nc = num.coeff(*nlead);
        if (nc % dlead_c != 0)
            throw InternalError("Laurent division leaves a remainder (coefficient)");
        const long long q = nc / dlead_c;
        const WeightVec shift = *nlead - dlead_w;
        quotient.add_term(shift, q);
        LaurentChar sub;
        for (const auto& [w, c] : den.terms()) sub.add_term(w + shift, c * q);
        num -= sub;
    }
    return quotient;
}

}  // namespace

LaurentChar irr_character(const WeightVec& mu_hw, const std::vector<WeightVec>& positives,
                          const WeylGroup& W, const WeightVec& rho, const BilinearForm& form) {
    for (const auto& alpha : positives)
        if (form.inner(mu_hw, alpha) < 0)
            throw NotDominant("highest weight " + to_string(mu_hw) + " is not dominant");
    TermOrder order(positives, form, mu_hw.rank());
    LaurentChar num = weyl_numerator(mu_hw + rho, W);
    LaurentChar den = weyl_numerator(rho, W);
    return divide_exact(std::move(num), den, order);
}

std::vector<WeightVec> indecomposable_positives(const std::vector<WeightVec>& positives) {
    std::set<WeightVec> pos_set(positives.begin(), positives.end());
    std::vector<WeightVec> simples;
    for (const auto& a : positives) {
        bool decomposable = false;
        for (const auto& b : positives) {
            if (b == a) continue;
            if (pos_set.count(a - b)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simples.push_back(a);
    }
    return simples;
}

WeightVec dominantize(WeightVec mu, const std::vector<WeightVec>& simples,
                      const BilinearForm& form) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& s : simples) {
            if (form.inner(mu, s) < 0) {
                mu = reflect(mu, s, form);
                changed = true;
            }
        }
    }
    return mu;
}

std::map<WeightVec, long long> freudenthal_multiplicities(
    const WeightVec& mu_hw, const std::vector<WeightVec>& positives, const BilinearForm& form) {
    const int rank = mu_hw.rank();
    const auto simples = indecomposable_positives(positives);
    for (const auto& alpha : positives)
        if (form.inner(mu_hw, alpha) < 0)
            throw NotDominant("highest weight " + to_string(mu_hw) + " is not dominant");
    if (positives.empty()) return {{mu_hw, 1}};

    const WeightVec rho = half_sum(positives, rank);
    const Rat norm_bound = form.inner(mu_hw, mu_hw);
    const Rat shifted_top = form.inner(mu_hw + rho, mu_hw + rho);

    // Candidate lattice: points of mu_hw - N.simples inside the |mu_hw| ball.
    // Every weight of the representation lies in it.
    std::set<WeightVec> visited{mu_hw};
    std::deque<WeightVec> queue{mu_hw};
    while (!queue.empty()) {
        WeightVec v = queue.front();
        queue.pop_front();
        for (const auto& s : simples) {
            WeightVec next = v - s;
            if (form.inner(next, next) > norm_bound) continue;
            if (visited.insert(next).second) queue.push_back(next);
        }
    }

    std::vector<WeightVec> dominants;
    for (const auto& v : visited) {
        bool dom = true;
        for (const auto& s : simples)
            if (form.inner(v, s) < 0) {
                dom = false;
                break;
            }
        if (dom) dominants.push_back(v);
    }
    TermOrder order(positives, form, rank);
    std::sort(dominants.begin(), dominants.end(),
              [&](const WeightVec& a, const WeightVec& b) { return order.compare(a, b) > 0; });

    std::map<WeightVec, long long> dominant_mult;
    for (const auto& mu : dominants) {
        if (mu == mu_hw) {
            dominant_mult[mu] = 1;
            continue;
        }
        Rat rhs(0);
        for (const auto& alpha : positives) {
            for (long k = 1;; ++k) {
                WeightVec nu = mu + Rat(k) * alpha;
                Rat nn = form.inner(nu, nu);
                if (nn > norm_bound) break;  // multiplicity is zero past the ball
                auto it = dominant_mult.find(dominantize(nu, simples, form));
                if (it != dominant_mult.end() && it->second != 0)
                    rhs += form.inner(nu, alpha) * Rat(static_cast<long>(it->second));
            }
        }
        Rat denom = shifted_top - form.inner(mu + rho, mu + rho);
        if (denom == 0)
            throw InternalError("Freudenthal denominator vanished at " + to_string(mu));
        Rat m = 2 * rhs / denom;
        long long mult = to_long(m);
        if (mult < 0) throw InternalError("negative Freudenthal multiplicity at " + to_string(mu));
        if (mult > 0) dominant_mult[mu] = mult;
    }

    // Expand dominant multiplicities over full Weyl orbits.
    std::map<WeightVec, long long> result;
    for (const auto& [mu, m] : dominant_mult) {
        if (m == 0) continue;
        std::set<WeightVec> orbit{mu};
        std::deque<WeightVec> todo{mu};
        while (!todo.empty()) {
            WeightVec v = todo.front();
            todo.pop_front();
            for (const auto& s : simples) {
                WeightVec w = reflect(v, s, form);
                if (orbit.insert(w).second) todo.push_back(w);
            }
        }
        for (const auto& v : orbit) result[v] = m;
    }
    return result;
}

std::vector<std::pair<WeightVec, long long>> decompose(const LaurentChar& chi,
                                                       const std::vector<WeightVec>& positives,
                                                       const WeylGroup& W, const WeightVec& rho,
                                                       const BilinearForm& form) {
    for (const auto& g : W.generators)
        if (!(chi.apply(g) == chi))
            throw NotInvariant("character is not invariant under the Weyl group");

    TermOrder order(positives, form, rho.rank());
    std::vector<std::pair<WeightVec, long long>> out;
    LaurentChar rest = chi;
    size_t steps = 0;
    while (!rest.is_zero()) {
        if (++steps > kStripStepBound) throw InternalError("leading-term stripping does not terminate");
        const WeightVec lead = *order.leading(rest);
        for (const auto& alpha : positives)
            if (form.inner(lead, alpha) < 0)
                throw InternalError("leading term " + to_string(lead) +
                                    " of an invariant character is not dominant");
        const long long mult = rest.coeff(lead);
        out.emplace_back(lead, mult);
        LaurentChar piece = irr_character(lead, positives, W, rho, form);
        piece *= mult;
        rest -= piece;
    }
    return out;
}

LaurentChar spin_graded_character(const std::vector<WeightVec>& S, int rank) {
    LaurentChar out = LaurentChar::one(rank);
    for (const auto& beta : S) {
        LaurentChar factor;
        factor.add_term(Rat(1, 2) * beta, 1);
        factor.add_term(Rat(-1, 2) * beta, -1);
        out = out * factor;
    }
    return out;
}

}  // namespace orbindex
