#include "spherical/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace spherical {

IntMatrix::IntMatrix(std::vector<IntVec> entries) : a(std::move(entries)) {
    rows = a.size();
    cols = rows ? a[0].size() : 0;
    for (const auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.a[i][i] = 1;
    return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
    if (cols != other.rows) throw std::invalid_argument("mul: shape mismatch");
    IntMatrix r(rows, other.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < other.cols; ++j)
                r.a[i][j] += a[i][k] * other.a[k][j];
        }
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) r.a[j][i] = a[i][j];
    return r;
}

IntVec SmithDecomposition::divisors() const {
    IntVec out;
    for (std::size_t i = 0; i < std::min(d.rows, d.cols); ++i)
        if (d.a[i][i] != 0) out.push_back(d.a[i][i]);
    return out;
}

namespace {

void swap_rows(IntMatrix& m, IntMatrix& u, std::size_t i, std::size_t j) {
    std::swap(m.a[i], m.a[j]);
    std::swap(u.a[i], u.a[j]);
}

void swap_cols(IntMatrix& m, IntMatrix& v, std::size_t i, std::size_t j) {
    for (auto& row : m.a) std::swap(row[i], row[j]);
    for (auto& row : v.a) std::swap(row[i], row[j]);
}

// row i -= q * row j
void add_row(IntMatrix& m, IntMatrix& u, std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t k = 0; k < m.cols; ++k) m.a[i][k] -= q * m.a[j][k];
    for (std::size_t k = 0; k < u.cols; ++k) u.a[i][k] -= q * u.a[j][k];
}

// col i -= q * col j
void add_col(IntMatrix& m, IntMatrix& v, std::size_t i, std::size_t j, const Int& q) {
    for (auto& row : m.a) row[i] -= q * row[j];
    for (auto& row : v.a) row[i] -= q * row[j];
}

void negate_row(IntMatrix& m, IntMatrix& u, std::size_t i) {
    for (auto& x : m.a[i]) x = -x;
    for (auto& x : u.a[i]) x = -x;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m0) {
    IntMatrix m = m0;
    IntMatrix u = IntMatrix::identity(m.rows);
    IntMatrix v = IntMatrix::identity(m.cols);
    const std::size_t n = std::min(m.rows, m.cols);

    for (std::size_t t = 0; t < n; ++t) {
        // pivot: smallest nonzero absolute value in the trailing block
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < m.rows; ++i)
            for (std::size_t j = t; j < m.cols; ++j) {
                if (m.a[i][j] == 0) continue;
                if (!found || abs(m.a[i][j]) < abs(m.a[pi][pj])) { pi = i; pj = j; found = true; }
            }
        if (!found) break;
        swap_rows(m, u, t, pi);
        swap_cols(m, v, t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < m.rows; ++i) {
                if (m.a[i][t] == 0) continue;
                Int q = m.a[i][t] / m.a[t][t];
                add_row(m, u, i, t, q);
                if (m.a[i][t] != 0) { swap_rows(m, u, t, i); clean = false; }
            }
            for (std::size_t j = t + 1; j < m.cols; ++j) {
                if (m.a[t][j] == 0) continue;
                Int q = m.a[t][j] / m.a[t][t];
                add_col(m, v, j, t, q);
                if (m.a[t][j] != 0) { swap_cols(m, v, t, j); clean = false; }
            }
            if (!clean) continue;
            // divisibility: pivot must divide the whole trailing block
            for (std::size_t i = t + 1; i < m.rows && clean; ++i)
                for (std::size_t j = t + 1; j < m.cols && clean; ++j)
                    if (m.a[i][j] % m.a[t][t] != 0) {
                        add_col(m, v, t, j, Int(-1));  // col t += col j
                        clean = false;
                    }
        }
        if (m.a[t][t] < 0) negate_row(m, u, t);
    }
    return SmithDecomposition{u, m, v};
}

Int determinant(const IntMatrix& m0) {
    if (m0.rows != m0.cols) throw std::invalid_argument("determinant: not square");
    if (m0.rows == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMatrix m = m0;
    Int prev = 1;
    int sign = 1;
    const std::size_t n = m.rows;
    for (std::size_t t = 0; t + 1 < n; ++t) {
        if (m.a[t][t] == 0) {
            std::size_t s = t + 1;
            while (s < n && m.a[s][t] == 0) ++s;
            if (s == n) return 0;
            std::swap(m.a[t], m.a[s]);
            sign = -sign;
        }
        for (std::size_t i = t + 1; i < n; ++i)
            for (std::size_t j = t + 1; j < n; ++j)
                m.a[i][j] = (m.a[i][j] * m.a[t][t] - m.a[i][t] * m.a[t][j]) / prev;
        prev = m.a[t][t];
    }
    return sign > 0 ? m.a[n - 1][n - 1] : -m.a[n - 1][n - 1];
}

std::size_t rank(const IntMatrix& m) {
    return smith_normal_form(m).divisors().size();
}

std::vector<IntVec> integer_kernel(const IntMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    const std::size_t r = s.divisors().size();
    std::vector<IntVec> out;
    for (std::size_t j = r; j < m.cols; ++j) {
        IntVec col(m.cols);
        for (std::size_t i = 0; i < m.cols; ++i) col[i] = s.v.a[i][j];
        out.push_back(std::move(col));
    }
    return out;
}

bool extends_to_basis(const std::vector<IntVec>& vectors, std::size_t ambient, IntVec* divisors_out) {
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient) throw std::invalid_argument("extends_to_basis: bad vector size");
        for (std::size_t j = i + 1; j < vectors.size(); ++j)
            if (vectors[i] == vectors[j]) throw std::invalid_argument("extends_to_basis: duplicate vectors");
    }
    if (vectors.empty()) {
        if (divisors_out) divisors_out->clear();
        return true;
    }
    IntMatrix m(vectors);
    IntVec div = smith_normal_form(m).divisors();
    if (divisors_out) *divisors_out = div;
    if (div.size() != vectors.size()) return false;
    for (const auto& d : div)
        if (d != 1) return false;
    return true;
}

Sublattice hermite_basis(const std::vector<IntVec>& rows, std::size_t ambient) {
    std::vector<IntVec> work;
    for (const auto& r : rows) {
        if (r.size() != ambient) throw std::invalid_argument("hermite_basis: bad row size");
        if (!is_zero(r)) work.push_back(r);
    }
    std::vector<IntVec> basis;
    std::size_t top = 0;
    for (std::size_t col = 0; col < ambient && top < work.size(); ++col) {
        while (true) {
            std::size_t piv = work.size();
            for (std::size_t i = top; i < work.size(); ++i) {
                if (work[i][col] == 0) continue;
                if (piv == work.size() || abs(work[i][col]) < abs(work[piv][col])) piv = i;
            }
            if (piv == work.size()) break;
            std::swap(work[top], work[piv]);
            bool reduced = true;
            for (std::size_t i = top + 1; i < work.size(); ++i) {
                if (work[i][col] == 0) continue;
                Int q = work[i][col] / work[top][col];
                for (std::size_t k = 0; k < ambient; ++k) work[i][k] -= q * work[top][k];
                if (work[i][col] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (work[top][col] == 0) continue;
        if (work[top][col] < 0)
            for (auto& x : work[top]) x = -x;
        ++top;
    }
    work.resize(top);
    // reduce entries above each pivot into [0, pivot); ascending order keeps
    // earlier pivot columns untouched
    for (std::size_t i = 1; i < top; ++i) {
        std::size_t col = 0;
        while (work[i][col] == 0) ++col;
        for (std::size_t j = 0; j < i; ++j) {
            Int q = work[j][col] / work[i][col];
            if (work[j][col] % work[i][col] < 0) q -= 1;  // floor division
            if (q == 0) continue;
            for (std::size_t k = 0; k < ambient; ++k) work[j][k] -= q * work[i][k];
        }
    }
    Sublattice l;
    l.ambient = ambient;
    l.basis = std::move(work);
    return l;
}

std::optional<IntVec> Sublattice::coordinates(const IntVec& v) const {
    if (v.size() != ambient) throw std::invalid_argument("Sublattice: bad vector size");
    IntVec rest = v;
    IntVec coords(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::size_t col = 0;
        while (basis[i][col] == 0) ++col;
        if (rest[col] % basis[i][col] != 0) return std::nullopt;
        Int q = rest[col] / basis[i][col];
        coords[i] = q;
        if (q != 0)
            for (std::size_t k = 0; k < ambient; ++k) rest[k] -= q * basis[i][k];
    }
    if (!is_zero(rest)) return std::nullopt;
    return coords;
}

std::optional<RatVec> Sublattice::rational_coordinates(const IntVec& v) const {
    if (v.size() != ambient) throw std::invalid_argument("Sublattice: bad vector size");
    RatVec rest(ambient);
    for (std::size_t k = 0; k < ambient; ++k) rest[k] = v[k];
    RatVec coords(basis.size(), Rat(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::size_t col = 0;
        while (basis[i][col] == 0) ++col;
        Rat q = rest[col] / Rat(basis[i][col]);
        coords[i] = q;
        if (q != 0)
            for (std::size_t k = 0; k < ambient; ++k) rest[k] -= q * Rat(basis[i][k]);
    }
    for (const auto& x : rest)
        if (x != 0) return std::nullopt;
    return coords;
}

bool Sublattice::contains(const IntVec& v) const { return coordinates(v).has_value(); }

IntVec Sublattice::from_coordinates(const IntVec& coords) const {
    if (coords.size() != basis.size()) throw std::invalid_argument("from_coordinates: bad size");
    IntVec v(ambient, 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t k = 0; k < ambient; ++k) v[k] += coords[i] * basis[i][k];
    return v;
}

Sublattice saturate(const Sublattice& l) {
    if (l.basis.empty()) return l;
    std::vector<IntVec> ker = integer_kernel(IntMatrix(l.basis));
    if (ker.empty()) {
        // full rank: saturation is the whole ambient lattice
        std::vector<IntVec> id;
        for (std::size_t i = 0; i < l.ambient; ++i) {
            IntVec e(l.ambient, 0);
            e[i] = 1;
            id.push_back(std::move(e));
        }
        return hermite_basis(id, l.ambient);
    }
    std::vector<IntVec> sat = integer_kernel(IntMatrix(ker));
    return hermite_basis(sat, l.ambient);
}

}  // namespace spherical
