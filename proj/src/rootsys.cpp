#include "orbindex/rootsys.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "orbindex/errors.hpp"

namespace orbindex {

namespace {

WeightVec reflect(const WeightVec& v, const WeightVec& alpha, const BilinearForm& form) {
    Rat c = 2 * form.inner(v, alpha) / form.inner(alpha, alpha);
    return v - c * alpha;
}

// Coefficients of v in the basis of simple roots, via the Gram matrix of the
// simples. Requires the simples to be linearly independent.
std::vector<Rat> simple_coefficients(const WeightVec& v, const std::vector<WeightVec>& simples,
                                     const BilinearForm& form) {
    const int k = static_cast<int>(simples.size());
    std::vector<Rat> gram(static_cast<size_t>(k) * k), rhs(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) gram[static_cast<size_t>(i) * k + j] = form.inner(simples[j], simples[i]);
        rhs[i] = form.inner(v, simples[i]);
    }
    auto sol = solve_linear(std::move(gram), k, std::move(rhs));
    if (!sol) throw InvalidRootDatum("simple roots are linearly dependent");
    return *sol;
}

}  // namespace

std::vector<WeightVec> SymmetricPair::positive_vectors() const {
    std::vector<WeightVec> out;
    for (const auto& r : roots)
        if (r.positive) out.push_back(r.vec);
    return out;
}

std::vector<WeightVec> SymmetricPair::compact_positive_vectors() const {
    std::vector<WeightVec> out;
    for (const auto& r : roots)
        if (r.positive && r.compact) out.push_back(r.vec);
    return out;
}

std::vector<WeightVec> SymmetricPair::noncompact_positive_vectors() const {
    std::vector<WeightVec> out;
    for (const auto& r : roots)
        if (r.positive && !r.compact) out.push_back(r.vec);
    return out;
}

std::vector<Root> SymmetricPair::compact_subsystem() const {
    std::vector<Root> out;
    for (const auto& r : roots)
        if (r.compact) out.push_back(r);
    return out;
}

WeightVec SymmetricPair::rho() const { return half_sum(positive_vectors(), rank); }
WeightVec SymmetricPair::rho_c() const { return half_sum(compact_positive_vectors(), rank); }
WeightVec SymmetricPair::rho_n() const { return rho() - rho_c(); }

bool SymmetricPair::is_root(const WeightVec& v) const {
    for (const auto& r : roots)
        if (r.vec == v) return true;
    return false;
}

SymmetricPair SymmetricPair::assemble(std::string name, int rank, BilinearForm form,
                                      std::vector<WeightVec> positives,
                                      std::vector<bool> compact_flags, bool equal_rank) {
    if (positives.size() != compact_flags.size())
        throw InvalidRootDatum("compact flag count does not match positive root count");
    SymmetricPair pair;
    pair.name = std::move(name);
    pair.rank = rank;
    pair.form = std::move(form);
    pair.equal_rank = equal_rank;
    pair.roots.reserve(2 * positives.size());
    for (size_t i = 0; i < positives.size(); ++i)
        pair.roots.push_back(Root{positives[i], true, compact_flags[i]});
    for (size_t i = 0; i < positives.size(); ++i)
        pair.roots.push_back(Root{-positives[i], false, compact_flags[i]});
    int noncompact = 0;
    for (const auto& r : pair.roots)
        if (!r.compact) ++noncompact;
    pair.dim_GK = noncompact;
    return pair;
}

std::vector<Root> generate_root_system(const std::vector<WeightVec>& simple_roots,
                                       const BilinearForm& form, size_t max_roots) {
    if (simple_roots.empty()) return {};
    for (const auto& a : simple_roots)
        for (const auto& b : simple_roots) {
            Rat cartan = 2 * form.inner(a, b) / form.inner(b, b);
            if (!is_integer(cartan))
                throw InvalidRootDatum("non-integral Cartan pairing 2(a,b)/(b,b) = " +
                                       rational_string(cartan));
        }

    std::set<WeightVec> seen(simple_roots.begin(), simple_roots.end());
    std::vector<WeightVec> queue(simple_roots.begin(), simple_roots.end());
    while (!queue.empty()) {
        WeightVec v = queue.back();
        queue.pop_back();
        for (const auto& s : simple_roots) {
            WeightVec w = reflect(v, s, form);
            if (seen.insert(w).second) {
                if (seen.size() > 2 * max_roots)
                    throw InvalidRootDatum("root closure exceeds size bound");
                queue.push_back(w);
            }
        }
    }

    // Split by the sign pattern of the simple-basis expansion; sort positives
    // by (height, lex) so catalog indices are stable.
    std::vector<std::pair<Rat, WeightVec>> positives;
    for (const auto& v : seen) {
        auto coeffs = simple_coefficients(v, simple_roots, form);
        bool nonneg = true, nonpos = true;
        Rat height(0);
        for (const auto& c : coeffs) {
            if (c < 0) nonneg = false;
            if (c > 0) nonpos = false;
            height += c;
        }
        if (!nonneg && !nonpos)
            throw InvalidRootDatum("generated vector " + to_string(v) +
                                   " has mixed signs in the simple basis");
        if (nonneg) positives.emplace_back(height, v);
    }
    std::sort(positives.begin(), positives.end(), [](const auto& a, const auto& b) {
        int c = cmp(a.first, b.first);
        if (c != 0) return c < 0;
        return compare_lex(a.second, b.second) < 0;
    });

    std::vector<Root> out;
    out.reserve(2 * positives.size());
    for (const auto& [h, v] : positives) out.push_back(Root{v, true, false});
    for (const auto& [h, v] : positives) out.push_back(Root{-v, false, false});
    return out;
}

WeightVec half_sum(const std::vector<WeightVec>& roots, int rank) {
    WeightVec s = WeightVec::zero(rank);
    for (const auto& r : roots) s += r;
    return Rat(1, 2) * s;
}

SymmetricPair centralizer_subsystem(const SymmetricPair& pair, const WeightVec& X) {
    std::vector<WeightVec> positives;
    std::vector<bool> flags;
    for (const auto& r : pair.roots) {
        if (!r.positive) continue;
        if (is_integer(dot(r.vec, X))) {
            positives.push_back(r.vec);
            flags.push_back(r.compact);
        }
    }
    return SymmetricPair::assemble(pair.name + "_centralizer", pair.rank, pair.form,
                                   std::move(positives), std::move(flags), pair.equal_rank);
}

bool is_regular(const WeightVec& mu, const SymmetricPair& pair) {
    for (const auto& r : pair.roots)
        if (pair.form.inner(mu, r.vec) == 0) return false;
    return true;
}

std::vector<std::string> validate_pair(const SymmetricPair& pair) {
    std::vector<std::string> violations;
    for (const auto& v : pair.form.validate()) violations.push_back(v);

    std::map<WeightVec, const Root*> index;
    for (const auto& r : pair.roots) {
        if (r.vec.rank() != pair.rank) violations.push_back("root rank mismatch");
        if (r.vec.is_zero()) violations.push_back("zero vector listed as root");
        if (!index.emplace(r.vec, &r).second) violations.push_back("duplicate root " + to_string(r.vec));
    }
    for (const auto& r : pair.roots) {
        auto it = index.find(-r.vec);
        if (it == index.end()) {
            violations.push_back("missing negative of " + to_string(r.vec));
            continue;
        }
        if (it->second->positive == r.positive)
            violations.push_back("both or neither of +/-" + to_string(r.vec) + " marked positive");
        if (it->second->compact != r.compact)
            violations.push_back("compactness differs between +/-" + to_string(r.vec));
    }

    // Closure under reflections.
    for (const auto& a : pair.roots)
        for (const auto& b : pair.roots) {
            WeightVec w = reflect(b.vec, a.vec, pair.form);
            if (index.find(w) == index.end()) {
                violations.push_back("reflection of " + to_string(b.vec) + " in " +
                                     to_string(a.vec) + " leaves the root set");
                break;
            }
        }

    // Z/2 grading: noncompactness parity is additive along root sums. The
    // compact-subsystem condition is the (compact, compact) case.
    for (const auto& a : pair.roots)
        for (const auto& b : pair.roots) {
            auto it = index.find(a.vec + b.vec);
            if (it == index.end()) continue;
            bool want_noncompact = (!a.compact) != (!b.compact);
            if (!it->second->compact != want_noncompact) {
                violations.push_back("grading violated at " + to_string(a.vec) + " + " +
                                     to_string(b.vec));
            }
        }

    int noncompact = 0;
    for (const auto& r : pair.roots)
        if (!r.compact) ++noncompact;
    if (pair.equal_rank) {
        if (pair.dim_GK != noncompact)
            violations.push_back("dim(G/K) != number of noncompact roots");
        if (pair.dim_GK % 2 != 0) violations.push_back("dim(G/K) is odd");
    }
    return violations;
}

bool lattice_integral(const WeightVec& mu, const SymmetricPair& pair) {
    mpz_class root_den(1);
    for (const auto& r : pair.roots)
        for (const auto& c : r.vec.coords) {
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), root_den.get_mpz_t(), c.get_den_mpz_t());
            root_den = l;
        }
    mpz_class lattice_den = 2 * root_den;
    for (const auto& c : mu.coords)
        if (!mpz_divisible_p(lattice_den.get_mpz_t(), c.get_den_mpz_t())) return false;
    return true;
}

}  // namespace orbindex
