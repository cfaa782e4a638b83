#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "homcat/int_matrix.hpp"

namespace homcat {

/// U*A*V = S with U, V unimodular and S diagonal, divisors d1 | d2 | ... >= 0.
/// Uinv/Vinv are tracked alongside so that A = Uinv*S*Vinv.
struct SmithDecomposition {
    IntMatrix U, Uinv, S, V, Vinv;
    std::vector<Int> divisors;  // length min(rows, cols), trailing zeros kept

    std::size_t rank() const {
        std::size_t r = 0;
        for (const auto& d : divisors)
            if (d != 0) ++r;
        return r;
    }
};

namespace detail {

// row ops on A mirrored into U (same op) and Uinv (inverse op on columns)
inline void row_swap(IntMatrix& A, IntMatrix& U, IntMatrix& Uinv,
                     std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < A.cols(); ++k) std::swap(A(i, k), A(j, k));
    for (std::size_t k = 0; k < U.cols(); ++k) std::swap(U(i, k), U(j, k));
    for (std::size_t k = 0; k < Uinv.rows(); ++k) std::swap(Uinv(k, i), Uinv(k, j));
}

// row_i += q * row_j ; inverse: col_j -= q * col_i
inline void row_add(IntMatrix& A, IntMatrix& U, IntMatrix& Uinv,
                    std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < A.cols(); ++k) A(i, k) += q * A(j, k);
    for (std::size_t k = 0; k < U.cols(); ++k) U(i, k) += q * U(j, k);
    for (std::size_t k = 0; k < Uinv.rows(); ++k) Uinv(k, j) -= q * Uinv(k, i);
}

inline void row_negate(IntMatrix& A, IntMatrix& U, IntMatrix& Uinv, std::size_t i) {
    for (std::size_t k = 0; k < A.cols(); ++k) A(i, k) = -A(i, k);
    for (std::size_t k = 0; k < U.cols(); ++k) U(i, k) = -U(i, k);
    for (std::size_t k = 0; k < Uinv.rows(); ++k) Uinv(k, i) = -Uinv(k, i);
}

inline void col_swap(IntMatrix& A, IntMatrix& V, IntMatrix& Vinv,
                     std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < A.rows(); ++k) std::swap(A(k, i), A(k, j));
    for (std::size_t k = 0; k < V.rows(); ++k) std::swap(V(k, i), V(k, j));
    for (std::size_t k = 0; k < Vinv.cols(); ++k) std::swap(Vinv(i, k), Vinv(j, k));
}

// col_i += q * col_j ; inverse: row_j -= q * row_i
inline void col_add(IntMatrix& A, IntMatrix& V, IntMatrix& Vinv,
                    std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < A.rows(); ++k) A(k, i) += q * A(k, j);
    for (std::size_t k = 0; k < V.rows(); ++k) V(k, i) += q * V(k, j);
    for (std::size_t k = 0; k < Vinv.cols(); ++k) Vinv(j, k) -= q * Vinv(i, k);
}

inline void col_negate(IntMatrix& A, IntMatrix& V, IntMatrix& Vinv, std::size_t i) {
    for (std::size_t k = 0; k < A.rows(); ++k) A(k, i) = -A(k, i);
    for (std::size_t k = 0; k < V.rows(); ++k) V(k, i) = -V(k, i);
    for (std::size_t k = 0; k < Vinv.cols(); ++k) Vinv(i, k) = -Vinv(i, k);
}

// One row-echelon pass with immediate reduction against the pivot rows
// already found. Reducing eagerly keeps entries near the size of the
// pivots, which is what makes larger dense matrices tractable; the
// stage-wise elimination alone squares entry sizes at every stage.
inline void row_echelon_pass(IntMatrix& S, IntMatrix& U, IntMatrix& Uinv) {
    const std::size_t m = S.rows(), n = S.cols();
    std::vector<std::size_t> pivot_col;  // column of the pivot in row t
    std::size_t next = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (;;) {
            for (std::size_t t = 0; t < next; ++t) {
                const Int& p = S(t, pivot_col[t]);
                if (S(i, pivot_col[t]) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S(i, pivot_col[t]).get_mpz_t(),
                           p.get_mpz_t());
                row_add(S, U, Uinv, i, t, -q);
            }
            std::size_t c = n;
            for (std::size_t j = 0; j < n; ++j)
                if (S(i, j) != 0) { c = j; break; }
            if (c == n) break;  // row fully reduced away
            std::size_t owner = next;
            for (std::size_t t = 0; t < next; ++t)
                if (pivot_col[t] == c) { owner = t; break; }
            if (owner < next) {
                // smaller entry in an occupied pivot column: rotate it in
                row_swap(S, U, Uinv, owner, i);
                continue;
            }
            if (S(i, c) < 0) row_negate(S, U, Uinv, i);
            row_swap(S, U, Uinv, i, next);
            for (std::size_t t = 0; t < next; ++t) {
                if (S(t, c) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S(t, c).get_mpz_t(),
                           S(next, c).get_mpz_t());
                row_add(S, U, Uinv, t, next, -q);
            }
            pivot_col.push_back(c);
            ++next;
            break;
        }
    }
}

inline void col_echelon_pass(IntMatrix& S, IntMatrix& V, IntMatrix& Vinv) {
    const std::size_t m = S.rows(), n = S.cols();
    std::vector<std::size_t> pivot_row;
    std::size_t next = 0;
    for (std::size_t j = 0; j < n; ++j) {
        for (;;) {
            for (std::size_t t = 0; t < next; ++t) {
                const Int& p = S(pivot_row[t], t);
                if (S(pivot_row[t], j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S(pivot_row[t], j).get_mpz_t(),
                           p.get_mpz_t());
                col_add(S, V, Vinv, j, t, -q);
            }
            std::size_t r = m;
            for (std::size_t i = 0; i < m; ++i)
                if (S(i, j) != 0) { r = i; break; }
            if (r == m) break;
            std::size_t owner = next;
            for (std::size_t t = 0; t < next; ++t)
                if (pivot_row[t] == r) { owner = t; break; }
            if (owner < next) {
                col_swap(S, V, Vinv, owner, j);
                continue;
            }
            if (S(r, j) < 0) col_negate(S, V, Vinv, j);
            col_swap(S, V, Vinv, j, next);
            for (std::size_t t = 0; t < next; ++t) {
                if (S(r, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S(r, t).get_mpz_t(),
                           S(r, next).get_mpz_t());
                col_add(S, V, Vinv, t, next, -q);
            }
            pivot_row.push_back(r);
            ++next;
            break;
        }
    }
}

}  // namespace detail

/// Deterministic SNF. Alternating reduced echelon passes bring the matrix
/// close to diagonal while keeping entries small; a stage-wise elimination
/// with pivot = smallest nonzero absolute value then finishes the job and
/// guarantees termination on any input.
inline SmithDecomposition smith_normal_form(const IntMatrix& A0) {
    using namespace detail;
    const std::size_t m = A0.rows(), n = A0.cols();
    SmithDecomposition d;
    d.S = A0;
    d.U = IntMatrix::identity(m);
    d.Uinv = IntMatrix::identity(m);
    d.V = IntMatrix::identity(n);
    d.Vinv = IntMatrix::identity(n);
    IntMatrix& S = d.S;

    for (int pass = 0, quiet = 0; pass < 40 && quiet < 2; ++pass) {
        IntMatrix before = S;
        if (pass % 2 == 0)
            row_echelon_pass(S, d.U, d.Uinv);
        else
            col_echelon_pass(S, d.V, d.Vinv);
        quiet = (S == before) ? quiet + 1 : 0;
    }

    const std::size_t r = std::min(m, n);
    for (std::size_t k = 0; k < r; ++k) {
        // pivot search
        bool found = false;
        std::size_t pi = k, pj = k;
        Int best;
        for (std::size_t i = k; i < m; ++i)
            for (std::size_t j = k; j < n; ++j) {
                if (S(i, j) == 0) continue;
                Int a = abs(S(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        row_swap(S, d.U, d.Uinv, k, pi);
        col_swap(S, d.V, d.Vinv, k, pj);

        for (;;) {
            // clear column k with floor-divisions; a nonzero remainder
            // becomes the new (smaller) pivot
            bool again = false;
            for (std::size_t i = k + 1; i < m; ++i) {
                if (S(i, k) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S(i, k).get_mpz_t(), S(k, k).get_mpz_t());
                row_add(S, d.U, d.Uinv, i, k, -q);
                if (S(i, k) != 0) {
                    row_swap(S, d.U, d.Uinv, k, i);
                    again = true;
                }
            }
            if (again) continue;
            for (std::size_t j = k + 1; j < n; ++j) {
                if (S(k, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), S(k, j).get_mpz_t(), S(k, k).get_mpz_t());
                col_add(S, d.V, d.Vinv, j, k, -q);
                if (S(k, j) != 0) {
                    col_swap(S, d.V, d.Vinv, k, j);
                    again = true;
                }
            }
            if (again) continue;
            // pivot must divide the rest of the submatrix
            bool fixed = false;
            for (std::size_t i = k + 1; i < m && !fixed; ++i)
                for (std::size_t j = k + 1; j < n && !fixed; ++j)
                    if (S(i, j) % S(k, k) != 0) {
                        row_add(S, d.U, d.Uinv, k, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (S(k, k) < 0) row_negate(S, d.U, d.Uinv, k);
    }

    // the divide-out loop already yields a divisor chain; enforce it anyway
    // (zeros sort to the end via the gcd/lcm transform as well)
    for (bool dirty = true; dirty;) {
        dirty = false;
        for (std::size_t i = 0; i + 1 < r; ++i) {
            const Int &a = S(i, i), &b = S(i + 1, i + 1);
            if (b == 0 && a == 0) continue;
            if (a != 0 && (b % a == 0)) continue;
            dirty = true;
            // diag(a,b) -> diag(gcd, lcm) by a 2x2 unimodular transform
            col_add(S, d.V, d.Vinv, i, i + 1, 1);  // S(i+1,i) = b
            Int g, p, q;
            mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(),
                       S(i, i).get_mpz_t(), S(i + 1, i).get_mpz_t());
            Int ag = S(i, i) / g, bg = S(i + 1, i) / g;
            // rows: [p q; -bg ag], det = 1
            IntMatrix& M = S;
            Int r0k, r1k;
            for (std::size_t kk = 0; kk < M.cols(); ++kk) {
                r0k = M(i, kk);
                r1k = M(i + 1, kk);
                M(i, kk) = p * r0k + q * r1k;
                M(i + 1, kk) = -bg * r0k + ag * r1k;
            }
            for (std::size_t kk = 0; kk < d.U.cols(); ++kk) {
                r0k = d.U(i, kk);
                r1k = d.U(i + 1, kk);
                d.U(i, kk) = p * r0k + q * r1k;
                d.U(i + 1, kk) = -bg * r0k + ag * r1k;
            }
            // inverse rows op on Uinv columns: [ag -q; bg p]
            for (std::size_t kk = 0; kk < d.Uinv.rows(); ++kk) {
                r0k = d.Uinv(kk, i);
                r1k = d.Uinv(kk, i + 1);
                d.Uinv(kk, i) = ag * r0k + bg * r1k;
                d.Uinv(kk, i + 1) = -q * r0k + p * r1k;
            }
            // clear the off-diagonal fill-in
            if (g != 0) {
                Int qq = S(i, i + 1) / g;
                col_add(S, d.V, d.Vinv, i + 1, i, -qq);
            }
            if (S(i, i) < 0) row_negate(S, d.U, d.Uinv, i);
            if (S(i + 1, i + 1) < 0) row_negate(S, d.U, d.Uinv, i + 1);
        }
    }

    d.divisors.resize(r);
    for (std::size_t i = 0; i < r; ++i) d.divisors[i] = S(i, i);
    return d;
}

/// Basis of the integer right-kernel {x : A x = 0}, as matrix columns.
inline IntMatrix kernel_basis(const IntMatrix& A) {
    SmithDecomposition d = smith_normal_form(A);
    std::size_t rk = d.rank();
    IntMatrix K(A.cols(), A.cols() - rk);
    for (std::size_t j = rk; j < A.cols(); ++j)
        for (std::size_t i = 0; i < A.cols(); ++i) K(i, j - rk) = d.V(i, j);
    return K;
}

/// One solution of A x = b over Z, if any.
inline std::optional<std::vector<Int>> solve_integer(const IntMatrix& A,
                                                     const std::vector<Int>& b) {
    SmithDecomposition d = smith_normal_form(A);
    std::vector<Int> y = d.U.apply(b);
    std::vector<Int> z(A.cols());
    const std::size_t r = std::min(A.rows(), A.cols());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < r && d.divisors[i] != 0) {
            if (y[i] % d.divisors[i] != 0) return std::nullopt;
            z[i] = y[i] / d.divisors[i];
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return d.V.apply(z);
}

/// Columnwise solve A X = B over Z.
inline std::optional<IntMatrix> solve_integer(const IntMatrix& A,
                                              const IntMatrix& B) {
    assert(A.rows() == B.rows());
    SmithDecomposition d = smith_normal_form(A);
    const std::size_t r = std::min(A.rows(), A.cols());
    IntMatrix X(A.cols(), B.cols());
    for (std::size_t c = 0; c < B.cols(); ++c) {
        std::vector<Int> y = d.U.apply(B.col(c));
        std::vector<Int> z(A.cols());
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (i < r && d.divisors[i] != 0) {
                if (y[i] % d.divisors[i] != 0) return std::nullopt;
                z[i] = y[i] / d.divisors[i];
            } else if (y[i] != 0) {
                return std::nullopt;
            }
        }
        X.set_col(c, d.V.apply(z));
    }
    return X;
}

/// Column-style Hermite basis of the lattice spanned by the columns of A:
/// returns (H, pivot_rows) where H has one column per lattice basis vector,
/// pivot rows strictly increase and pivot entries are positive.
struct HermiteBasis {
    IntMatrix H;                     // g x s
    std::vector<std::size_t> pivots; // row of each column's pivot
};

inline HermiteBasis hermite_basis(const IntMatrix& A) {
    const std::size_t m = A.rows(), n = A.cols();
    // work on a copy of the columns
    std::vector<std::vector<Int>> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = A.col(j);

    HermiteBasis hb;
    std::vector<std::vector<Int>> basis;
    std::size_t next = 0;  // first unfixed column slot
    for (std::size_t row = 0; row < m && next < n; ++row) {
        // gcd-reduce entries of the active columns in this row
        for (;;) {
            std::size_t piv = n;
            for (std::size_t j = next; j < n; ++j) {
                if (cols[j][row] == 0) continue;
                if (piv == n || abs(cols[j][row]) < abs(cols[piv][row])) piv = j;
            }
            if (piv == n) break;
            std::swap(cols[next], cols[piv]);
            bool clean = true;
            for (std::size_t j = next + 1; j < n; ++j) {
                if (cols[j][row] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), cols[j][row].get_mpz_t(),
                           cols[next][row].get_mpz_t());
                for (std::size_t i = row; i < m; ++i)
                    cols[j][i] -= q * cols[next][i];
                if (cols[j][row] != 0) clean = false;
            }
            if (clean) {
                if (cols[next][row] < 0)
                    for (std::size_t i = row; i < m; ++i)
                        cols[next][i] = -cols[next][i];
                // canonical: reduce earlier basis columns at this pivot row
                for (auto& b : basis) {
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), b[row].get_mpz_t(),
                               cols[next][row].get_mpz_t());
                    if (q != 0)
                        for (std::size_t i = row; i < m; ++i)
                            b[i] -= q * cols[next][i];
                }
                basis.push_back(cols[next]);
                hb.pivots.push_back(row);
                ++next;
                break;
            }
        }
    }
    hb.H = IntMatrix(m, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) hb.H.set_col(j, basis[j]);
    return hb;
}

/// Canonical representative of v modulo the lattice with Hermite basis hb:
/// least nonnegative residues at pivot rows.
inline std::vector<Int> lattice_reduce(const HermiteBasis& hb, std::vector<Int> v) {
    for (std::size_t j = 0; j < hb.pivots.size(); ++j) {
        std::size_t r = hb.pivots[j];
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), v[r].get_mpz_t(), hb.H(r, j).get_mpz_t());
        if (q != 0)
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= q * hb.H(i, j);
    }
    return v;
}

inline bool lattice_contains(const HermiteBasis& hb, const std::vector<Int>& v) {
    return vec_is_zero(lattice_reduce(hb, v));
}

}  // namespace homcat
