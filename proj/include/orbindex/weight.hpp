#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbindex/rational.hpp"

namespace orbindex {

/// Point of the (co)weight space in a fixed ambient rational basis.
/// Coordinates are exact; equality is coordinate-wise exact equality.
struct WeightVec {
    std::vector<Rat> coords;

    WeightVec() = default;
    explicit WeightVec(std::vector<Rat> c) : coords(std::move(c)) {}

    static WeightVec zero(int rank) { return WeightVec(std::vector<Rat>(rank, Rat(0))); }

    int rank() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;

    WeightVec& operator+=(const WeightVec& o);
    WeightVec& operator-=(const WeightVec& o);
};

WeightVec operator+(WeightVec a, const WeightVec& b);
WeightVec operator-(WeightVec a, const WeightVec& b);
WeightVec operator-(const WeightVec& a);
WeightVec operator*(const Rat& s, const WeightVec& a);
bool operator==(const WeightVec& a, const WeightVec& b);
bool operator!=(const WeightVec& a, const WeightVec& b);

/// Lexicographic comparison on coordinates; total order used for map keys
/// and deterministic tie-breaking.
int compare_lex(const WeightVec& a, const WeightVec& b);
bool operator<(const WeightVec& a, const WeightVec& b);

/// Coordinate pairing <mu, X> of a weight against a torus coordinate vector.
/// Distinct from BilinearForm::inner, which pairs two weights.
Rat dot(const WeightVec& a, const WeightVec& b);

std::string to_string(const WeightVec& v);

/// Symmetric positive definite Gram matrix fixing the inner product on the
/// weight space. Catalogs absorb their normalization convention here.
struct BilinearForm {
    int rank = 0;
    std::vector<Rat> gram;  // row-major rank*rank

    static BilinearForm identity(int rank);

    const Rat& at(int i, int j) const { return gram[static_cast<size_t>(i) * rank + j]; }
    Rat inner(const WeightVec& a, const WeightVec& b) const;

    /// Invariant check: symmetric and all leading principal minors > 0.
    std::vector<std::string> validate() const;
};

/// Exact determinant of an n x n rational matrix (row-major).
Rat determinant(std::vector<Rat> m, int n);

/// Solve A x = b exactly for square A; nullopt when A is singular.
std::optional<std::vector<Rat>> solve_linear(std::vector<Rat> a, int n, std::vector<Rat> b);

}  // namespace orbindex
