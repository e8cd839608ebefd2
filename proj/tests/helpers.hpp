#pragma once

#include <random>
#include <string>
#include <vector>

#include "orbindex/assemble.hpp"

namespace testutil {

using namespace orbindex;

inline WeightVec wv(const std::vector<std::string>& parts) {
    std::vector<Rat> coords;
    for (const auto& p : parts) coords.push_back(parse_rational(p));
    return WeightVec(std::move(coords));
}

inline SymmetricPair make_system(const std::string& name, int rank,
                                 const std::vector<std::vector<std::string>>& simples,
                                 const std::vector<int>& compact_positive_indices = {}) {
    BilinearForm form = BilinearForm::identity(rank);
    std::vector<WeightVec> simple_roots;
    for (const auto& s : simples) simple_roots.push_back(wv(s));
    auto roots = generate_root_system(simple_roots, form);
    std::vector<WeightVec> positives;
    for (const auto& r : roots)
        if (r.positive) positives.push_back(r.vec);
    std::vector<bool> compact(positives.size(), false);
    for (int i : compact_positive_indices) compact[i] = true;
    return SymmetricPair::assemble(name, rank, form, std::move(positives), std::move(compact));
}

inline SymmetricPair a1_system() { return make_system("a1", 2, {{"1", "-1"}}); }
inline SymmetricPair a2_system() { return make_system("a2", 3, {{"1", "-1", "0"}, {"0", "1", "-1"}}); }
inline SymmetricPair b2_system() { return make_system("b2", 2, {{"1", "-1"}, {"0", "1"}}); }

/// Random torsion element with coordinate denominators up to max_den.
inline TorusElement random_torsion(std::mt19937& rng, int rank, int max_den = 12) {
    std::uniform_int_distribution<int> den_dist(1, max_den);
    std::vector<Rat> coords;
    for (int i = 0; i < rank; ++i) {
        int q = den_dist(rng);
        std::uniform_int_distribution<int> num_dist(-q, q);
        Rat c(num_dist(rng), q);
        c.canonicalize();
        coords.push_back(c);
    }
    return TorusElement{WeightVec(std::move(coords))};
}

/// Random torsion element with <alpha, X> non-integral for every root.
inline TorusElement random_regular_torsion(std::mt19937& rng, const SymmetricPair& pair,
                                           int max_den = 12) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        TorusElement g = random_torsion(rng, pair.rank, max_den);
        bool regular = true;
        for (const auto& r : pair.roots)
            if (is_integer(dot(r.vec, g.X))) {
                regular = false;
                break;
            }
        if (regular) return g;
    }
    throw std::runtime_error("failed to sample a regular torsion element");
}

inline double cabs(const std::complex<double>& z) { return std::abs(z); }

}  // namespace testutil
