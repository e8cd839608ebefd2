#include "orbindex/weight.hpp"

#include <sstream>

#include "orbindex/errors.hpp"

namespace orbindex {

namespace {

void check_same_rank(const WeightVec& a, const WeightVec& b) {
    if (a.rank() != b.rank())
        throw RankMismatch("weight ranks differ: " + std::to_string(a.rank()) + " vs " +
                           std::to_string(b.rank()));
}

}  // namespace

bool WeightVec::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

WeightVec& WeightVec::operator+=(const WeightVec& o) {
    check_same_rank(*this, o);
    for (size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

WeightVec& WeightVec::operator-=(const WeightVec& o) {
    check_same_rank(*this, o);
    for (size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
}

WeightVec operator+(WeightVec a, const WeightVec& b) { return a += b; }
WeightVec operator-(WeightVec a, const WeightVec& b) { return a -= b; }

WeightVec operator-(const WeightVec& a) {
    WeightVec r = a;
    for (auto& c : r.coords) c = -c;
    return r;
}

WeightVec operator*(const Rat& s, const WeightVec& a) {
    WeightVec r = a;
    for (auto& c : r.coords) c *= s;
    return r;
}

bool operator==(const WeightVec& a, const WeightVec& b) {
    if (a.rank() != b.rank()) return false;
    for (int i = 0; i < a.rank(); ++i)
        if (a.coords[i] != b.coords[i]) return false;
    return true;
}

bool operator!=(const WeightVec& a, const WeightVec& b) { return !(a == b); }

int compare_lex(const WeightVec& a, const WeightVec& b) {
    check_same_rank(a, b);
    for (int i = 0; i < a.rank(); ++i) {
        int c = cmp(a.coords[i], b.coords[i]);
        if (c != 0) return c;
    }
    return 0;
}

bool operator<(const WeightVec& a, const WeightVec& b) { return compare_lex(a, b) < 0; }

Rat dot(const WeightVec& a, const WeightVec& b) {
    check_same_rank(a, b);
    Rat s(0);
    for (int i = 0; i < a.rank(); ++i) s += a.coords[i] * b.coords[i];
    return s;
}

std::string to_string(const WeightVec& v) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < v.rank(); ++i) {
        if (i) os << ",";
        os << rational_string(v.coords[i]);
    }
    os << ")";
    return os.str();
}

BilinearForm BilinearForm::identity(int rank) {
    BilinearForm f;
    f.rank = rank;
    f.gram.assign(static_cast<size_t>(rank) * rank, Rat(0));
    for (int i = 0; i < rank; ++i) f.gram[static_cast<size_t>(i) * rank + i] = 1;
    return f;
}

Rat BilinearForm::inner(const WeightVec& a, const WeightVec& b) const {
    if (a.rank() != rank || b.rank() != rank)
        throw RankMismatch("weight rank does not match form rank");
    Rat s(0);
    for (int i = 0; i < rank; ++i) {
        if (a.coords[i] == 0) continue;
        Rat row(0);
        for (int j = 0; j < rank; ++j) row += at(i, j) * b.coords[j];
        s += a.coords[i] * row;
    }
    return s;
}

std::vector<std::string> BilinearForm::validate() const {
    std::vector<std::string> violations;
    if (gram.size() != static_cast<size_t>(rank) * rank) {
        violations.push_back("gram matrix has wrong size");
        return violations;
    }
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
            if (at(i, j) != at(j, i)) violations.push_back("gram matrix not symmetric");
    for (int k = 1; k <= rank; ++k) {
        std::vector<Rat> minor(static_cast<size_t>(k) * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor[static_cast<size_t>(i) * k + j] = at(i, j);
        if (determinant(std::move(minor), k) <= 0) {
            violations.push_back("gram matrix not positive definite (leading minor " +
                                 std::to_string(k) + ")");
            break;
        }
    }
    return violations;
}

Rat determinant(std::vector<Rat> m, int n) {
    // Exact Gaussian elimination with partial (first nonzero) pivoting.
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (m[static_cast<size_t>(row) * n + col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != col) {
            for (int j = 0; j < n; ++j)
                std::swap(m[static_cast<size_t>(pivot) * n + j], m[static_cast<size_t>(col) * n + j]);
            det = -det;
        }
        const Rat p = m[static_cast<size_t>(col) * n + col];
        det *= p;
        for (int row = col + 1; row < n; ++row) {
            Rat f = m[static_cast<size_t>(row) * n + col] / p;
            if (f == 0) continue;
            for (int j = col; j < n; ++j)
                m[static_cast<size_t>(row) * n + j] -= f * m[static_cast<size_t>(col) * n + j];
        }
    }
    return det;
}

std::optional<std::vector<Rat>> solve_linear(std::vector<Rat> a, int n, std::vector<Rat> b) {
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (a[static_cast<size_t>(row) * n + col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return std::nullopt;
        if (pivot != col) {
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<size_t>(pivot) * n + j], a[static_cast<size_t>(col) * n + j]);
            std::swap(b[pivot], b[col]);
        }
        const Rat p = a[static_cast<size_t>(col) * n + col];
        for (int row = 0; row < n; ++row) {
            if (row == col) continue;
            Rat f = a[static_cast<size_t>(row) * n + col] / p;
            if (f == 0) continue;
            for (int j = col; j < n; ++j)
                a[static_cast<size_t>(row) * n + j] -= f * a[static_cast<size_t>(col) * n + j];
            b[row] -= f * b[col];
        }
    }
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / a[static_cast<size_t>(i) * n + i];
    return x;
}

}  // namespace orbindex
