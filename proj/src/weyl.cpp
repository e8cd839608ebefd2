#include "orbindex/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "orbindex/errors.hpp"

namespace orbindex {

WeylElement WeylElement::identity(int rank) {
    WeylElement e;
    e.rank = rank;
    e.matrix.assign(static_cast<size_t>(rank) * rank, Rat(0));
    for (int i = 0; i < rank; ++i) e.matrix[static_cast<size_t>(i) * rank + i] = 1;
    e.length = 0;
    e.det = 1;
    return e;
}

WeightVec WeylElement::apply(const WeightVec& v) const {
    if (v.rank() != rank) throw RankMismatch("weight rank does not match Weyl element rank");
    std::vector<Rat> out(rank, Rat(0));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (v.coords[j] != 0) out[i] += matrix[static_cast<size_t>(i) * rank + j] * v.coords[j];
    return WeightVec(std::move(out));
}

WeylElement WeylElement::compose(const WeylElement& other) const {
    WeylElement r;
    r.rank = rank;
    r.matrix.assign(static_cast<size_t>(rank) * rank, Rat(0));
    for (int i = 0; i < rank; ++i)
        for (int k = 0; k < rank; ++k) {
            const Rat& a = matrix[static_cast<size_t>(i) * rank + k];
            if (a == 0) continue;
            for (int j = 0; j < rank; ++j)
                r.matrix[static_cast<size_t>(i) * rank + j] += a * other.matrix[static_cast<size_t>(k) * rank + j];
        }
    return r;  // length/det filled in by the enumerator
}

bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.rank == b.rank && a.matrix == b.matrix;
}

int compare_elements(const WeylElement& a, const WeylElement& b) {
    if (a.length != b.length) return a.length < b.length ? -1 : 1;
    for (size_t i = 0; i < a.matrix.size(); ++i) {
        int c = cmp(a.matrix[i], b.matrix[i]);
        if (c != 0) return c;
    }
    return 0;
}

namespace {

WeylElement reflection_matrix(const WeightVec& alpha, const BilinearForm& form) {
    const int n = form.rank;
    WeylElement s = WeylElement::identity(n);
    // s(v) = v - 2 (v,alpha)/(alpha,alpha) alpha, i.e. I - c alpha (G alpha)^T.
    Rat norm = form.inner(alpha, alpha);
    std::vector<Rat> g_alpha(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g_alpha[i] += form.at(i, j) * alpha.coords[j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            s.matrix[static_cast<size_t>(i) * n + j] -= 2 * alpha.coords[i] * g_alpha[j] / norm;
    s.length = 1;
    s.det = -1;
    return s;
}

// Positive roots of the subsystem not expressible as a sum of two of them.
std::vector<WeightVec> simple_of_subsystem(const std::vector<WeightVec>& positives) {
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

}  // namespace

WeylGroup enumerate_weyl(const std::vector<Root>& system, const BilinearForm& form,
                         size_t size_bound) {
    const int n = form.rank;
    std::vector<WeightVec> positives;
    for (const auto& r : system)
        if (r.positive) positives.push_back(r.vec);

    WeylGroup group;
    group.rank = n;
    for (const auto& s : simple_of_subsystem(positives))
        group.generators.push_back(reflection_matrix(s, form));

    std::set<WeightVec> pos_set(positives.begin(), positives.end());
    auto fill_length = [&](WeylElement& w) {
        int len = 0;
        for (const auto& beta : positives)
            if (!pos_set.count(w.apply(beta))) ++len;
        w.length = len;
        w.det = (len % 2 == 0) ? 1 : -1;
    };

    std::map<std::vector<Rat>, size_t> seen;
    std::deque<WeylElement> queue;
    WeylElement e = WeylElement::identity(n);
    seen.emplace(e.matrix, 0);
    group.elements.push_back(e);
    queue.push_back(e);
    while (!queue.empty()) {
        WeylElement w = queue.front();
        queue.pop_front();
        for (const auto& s : group.generators) {
            WeylElement next = s.compose(w);
            if (seen.count(next.matrix)) continue;
            if (group.elements.size() >= size_bound)
                throw GroupTooLarge("Weyl group exceeds size bound " + std::to_string(size_bound));
            fill_length(next);
            if (determinant(next.matrix, n) != next.det)
                throw InternalError("Weyl element determinant disagrees with length parity");
            seen.emplace(next.matrix, group.elements.size());
            group.elements.push_back(next);
            queue.push_back(next);
        }
    }
    std::sort(group.elements.begin(), group.elements.end(),
              [](const WeylElement& a, const WeylElement& b) { return compare_elements(a, b) < 0; });
    return group;
}

std::vector<WeylElement> coset_reps(const WeylGroup& sub, const WeylGroup& whole) {
    std::map<std::vector<Rat>, size_t> whole_index;
    for (size_t i = 0; i < whole.elements.size(); ++i)
        whole_index.emplace(whole.elements[i].matrix, i);
    for (const auto& s : sub.elements)
        if (!whole_index.count(s.matrix))
            throw NotASubgroup("subgroup element not contained in the ambient group");
    if (whole.order() % sub.order() != 0)
        throw NotASubgroup("subgroup order does not divide group order");

    // Representative of the coset sub*w = minimal element of {s w : s in sub}.
    std::set<std::vector<Rat>> chosen;
    std::vector<WeylElement> reps;
    for (const auto& w : whole.elements) {
        const WeylElement* best = nullptr;
        WeylElement best_el;
        for (const auto& s : sub.elements) {
            WeylElement sw = s.compose(w);
            auto it = whole_index.find(sw.matrix);
            if (it == whole_index.end())
                throw NotASubgroup("coset left the ambient group; not a subgroup");
            const WeylElement& candidate = whole.elements[it->second];
            if (!best || compare_elements(candidate, best_el) < 0) {
                best_el = candidate;
                best = &best_el;
            }
        }
        if (chosen.insert(best_el.matrix).second) reps.push_back(best_el);
    }
    if (reps.size() != whole.order() / sub.order())
        throw InternalError("coset representative count mismatch");
    std::sort(reps.begin(), reps.end(),
              [](const WeylElement& a, const WeylElement& b) { return compare_elements(a, b) < 0; });
    return reps;
}

DominantResult dominant_representative(const WeightVec& mu, const WeylGroup& W,
                                       const std::vector<WeightVec>& positives,
                                       const BilinearForm& form) {
    // Elements are (length, lex)-sorted, so the first valid hit is minimal.
    for (const auto& w : W.elements) {
        WeightVec v = w.apply(mu);
        bool ok = true, strict = true;
        for (const auto& alpha : positives) {
            int s = sign_of(form.inner(v, alpha));
            if (s < 0) {
                ok = false;
                break;
            }
            if (s == 0) strict = false;
        }
        if (ok) return DominantResult{w, std::move(v), strict};
    }
    throw InternalError("no dominant representative found; positives inconsistent with W");
}

}  // namespace orbindex
