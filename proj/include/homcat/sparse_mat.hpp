#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "homcat/int_matrix.hpp"
#include "homcat/smith.hpp"

namespace homcat {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sparse integer matrix stored as sorted (row, value) lists per column.
class SparseIntMatrix {
public:
    SparseIntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), col_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    /// entries must be set at most once per position; zeros are dropped
    void add(std::size_t r, std::size_t c, Int v) {
        if (v == 0) return;
        col_[c].emplace_back(r, std::move(v));
    }
    void finalize() {
        for (auto& c : col_) {
            std::sort(c.begin(), c.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            // merge duplicates
            std::vector<std::pair<std::size_t, Int>> merged;
            for (auto& e : c) {
                if (!merged.empty() && merged.back().first == e.first)
                    merged.back().second += e.second;
                else
                    merged.push_back(std::move(e));
            }
            merged.erase(std::remove_if(merged.begin(), merged.end(),
                                        [](const auto& e) { return e.second == 0; }),
                         merged.end());
            c = std::move(merged);
        }
    }
    const std::vector<std::pair<std::size_t, Int>>& column(std::size_t c) const {
        return col_[c];
    }
    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& c : col_) n += c.size();
        return n;
    }

    SparseIntMatrix transpose() const {
        SparseIntMatrix t(cols_, rows_);
        for (std::size_t c = 0; c < cols_; ++c)
            for (const auto& [r, v] : col_[c]) t.add(c, r, v);
        t.finalize();
        return t;
    }

    IntMatrix dense() const {
        IntMatrix m(rows_, cols_);
        for (std::size_t c = 0; c < cols_; ++c)
            for (const auto& [r, v] : col_[c]) m(r, c) = v;
        return m;
    }

    /// this * other, sparse-by-sparse
    SparseIntMatrix multiply(const SparseIntMatrix& other) const {
        if (cols_ != other.rows()) throw std::invalid_argument("sparse multiply: shape");
        SparseIntMatrix out(rows_, other.cols());
        for (std::size_t c = 0; c < other.cols(); ++c) {
            std::map<std::size_t, Int> acc;
            for (const auto& [k, v] : other.column(c))
                for (const auto& [r, w] : col_[k]) acc[r] += v * w;
            for (auto& [r, v] : acc) out.add(r, c, std::move(v));
        }
        out.finalize();
        return out;
    }

    bool is_zero() const {
        for (const auto& c : col_)
            if (!c.empty()) return false;
        return true;
    }

    std::vector<Int> apply(const std::vector<Int>& x) const {
        std::vector<Int> y(rows_, 0);
        for (std::size_t c = 0; c < cols_; ++c)
            for (const auto& [r, v] : col_[c]) y[r] += v * x[c];
        return y;
    }

private:
    std::size_t rows_, cols_;
    std::vector<std::vector<std::pair<std::size_t, Int>>> col_;
};

namespace detail {

inline long mod_pow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline long inv_mod(long a, long m) {  // a invertible mod m
    long t = 0, nt = 1, r = m, nr = a % m;
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return ((t % m) + m) % m;
}

}  // namespace detail

/// log_p of the cardinality of the kernel of (A mod p^k) acting on
/// (Z/p^k)^cols. Subgroup-intersection method: keep a generating set of the
/// current solution subgroup and intersect with each row constraint in turn;
/// each constraint with value ideal (p^v) cuts the order by p^(k-v).
inline long log_kernel_mod_pk(const SparseIntMatrix& A, long p, int k) {
    const long m = detail::mod_pow(p, k);
    const std::size_t nc = A.cols();
    std::vector<std::vector<std::uint8_t>> gens(
        nc, std::vector<std::uint8_t>(nc, 0));
    for (std::size_t i = 0; i < nc; ++i) gens[i][i] = 1;
    long logker = static_cast<long>(nc) * k;

    auto val_of = [&](long x) {
        int v = 0;
        while (v < k && x % p == 0) { x /= p; ++v; }
        return v;
    };

    SparseIntMatrix At = A.transpose();  // columns of At = rows of A
    std::vector<std::pair<std::size_t, long>> c;
    for (std::size_t r = 0; r < At.cols(); ++r) {
        c.clear();
        for (const auto& [j, v] : At.column(r)) {
            long w = static_cast<long>(mpz_fdiv_ui(
                v.get_mpz_t(), static_cast<unsigned long>(m)));
            if (w != 0) c.emplace_back(j, w);
        }
        if (c.empty()) continue;
        // dot products of the constraint with each generator
        std::size_t piv = SIZE_MAX;
        int piv_val = k;
        std::vector<std::pair<std::size_t, long>> hits;  // (gen index, dot)
        for (std::size_t b = 0; b < gens.size(); ++b) {
            long d = 0;
            for (const auto& [j, w] : c) d += w * gens[b][j];
            d %= m;
            if (d == 0) continue;
            hits.emplace_back(b, d);
            int v = val_of(d);
            if (v < piv_val) { piv_val = v; piv = b; }
        }
        if (piv == SIZE_MAX) continue;
        logker -= k - piv_val;
        long piv_dot = 0;
        for (const auto& [b, d] : hits)
            if (b == piv) piv_dot = d;
        long pc = detail::mod_pow(p, piv_val);
        long unit_inv = detail::inv_mod(piv_dot / pc, m);
        const auto& bp = gens[piv];
        for (const auto& [b, d] : hits) {
            if (b == piv) continue;
            long mult = (d / pc) % m * unit_inv % m;
            auto& g = gens[b];
            for (std::size_t j = 0; j < nc; ++j)
                g[j] = static_cast<std::uint8_t>(
                    ((g[j] - mult * bp[j]) % m + m) % m);
        }
        long scale = m / pc;  // p^(k - piv_val)
        if (scale % m == 0) {
            gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(piv));
        } else {
            auto& g = gens[piv];
            for (std::size_t j = 0; j < nc; ++j)
                g[j] = static_cast<std::uint8_t>(scale * g[j] % m);
        }
    }
    return logker;
}

/// log_p of the cardinality of the image of (A mod p^k), i.e. the sum of
/// (k - min(v_p(d_i), k)) over the Smith divisors d_i of A.
inline long log_image_mod_pk(const SparseIntMatrix& A, long p, int k) {
    if (A.cols() > A.rows()) return log_image_mod_pk(A.transpose(), p, k);
    return static_cast<long>(A.cols()) * k - log_kernel_mod_pk(A, p, k);
}

/// rank of A over the field with p elements
inline std::size_t rank_mod_p(const SparseIntMatrix& A, long p) {
    return static_cast<std::size_t>(log_image_mod_pk(A, p, 1));
}

struct SparseSnf {
    std::size_t rank = 0;
    std::vector<Int> divisors;  // all rank-many divisors, ascending-ish chain
};

/// Smith divisors of a sparse integer matrix: unit-pivot elimination first,
/// dense Smith normal form on the residual. max_dense bounds the residual
/// entry count before giving up.
inline SparseSnf sparse_snf_divisors(const SparseIntMatrix& A,
                                     std::size_t max_dense = 4'000'000) {
    if (A.cols() > A.rows()) return sparse_snf_divisors(A.transpose(), max_dense);
    const std::size_t nc = A.cols();
    std::vector<std::vector<std::pair<std::size_t, Int>>> col(nc);
    for (std::size_t c = 0; c < nc; ++c) col[c] = A.column(c);

    std::vector<std::vector<std::size_t>> row_cols(A.rows());
    for (std::size_t c = 0; c < nc; ++c)
        for (const auto& [r, x] : col[c]) row_cols[r].push_back(c);
    std::vector<char> col_dead(nc, 0), row_dead(A.rows(), 0);

    SparseSnf out;
    std::size_t units = 0;
    std::size_t fill = A.nnz();
    constexpr std::size_t kFillCap = 8'000'000;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t c = 0; c < nc; ++c) {
            if (col_dead[c]) continue;
            auto& cc = col[c];
            cc.erase(std::remove_if(cc.begin(), cc.end(),
                                    [&](const auto& e) {
                                        return row_dead[e.first] || e.second == 0;
                                    }),
                     cc.end());
            if (cc.empty()) { col_dead[c] = 1; continue; }
            // find a unit entry, preferring low row fan-out
            std::size_t prow = 0;
            bool found = false;
            std::size_t best_deg = 0;
            for (const auto& [r, x] : cc) {
                if (x != 1 && x != -1) continue;
                std::size_t deg = row_cols[r].size();
                if (!found || deg < best_deg) {
                    found = true;
                    prow = r;
                    best_deg = deg;
                }
            }
            if (!found) continue;
            Int pval;  // +1 or -1
            for (const auto& [r, x] : cc)
                if (r == prow) pval = x;
            ++units;
            for (std::size_t oc : row_cols[prow]) {
                if (oc == c || col_dead[oc]) continue;
                auto& occ = col[oc];
                auto it = std::lower_bound(
                    occ.begin(), occ.end(), prow,
                    [](const auto& e, std::size_t r) { return e.first < r; });
                if (it == occ.end() || it->first != prow || it->second == 0) continue;
                Int mult = it->second * pval;  // entry / pivot
                std::vector<std::pair<std::size_t, Int>> merged;
                merged.reserve(occ.size() + cc.size());
                std::size_t i = 0, j = 0;
                while (i < occ.size() || j < cc.size()) {
                    if (j == cc.size() ||
                        (i < occ.size() && occ[i].first < cc[j].first)) {
                        merged.push_back(std::move(occ[i++]));
                    } else if (i == occ.size() || cc[j].first < occ[i].first) {
                        Int w = -mult * cc[j].second;
                        if (w != 0) {
                            row_cols[cc[j].first].push_back(oc);
                            merged.emplace_back(cc[j].first, std::move(w));
                        }
                        ++j;
                    } else {
                        Int w = occ[i].second - mult * cc[j].second;
                        if (w != 0) merged.emplace_back(occ[i].first, std::move(w));
                        ++i; ++j;
                    }
                }
                fill += merged.size() - occ.size();
                occ = std::move(merged);
                if (fill > kFillCap)
                    throw BudgetError("sparse integral elimination: fill-in "
                                      "exceeds cap");
            }
            row_dead[prow] = 1;
            col_dead[c] = 1;
            progress = true;
        }
    }

    // residual: compact live rows/columns into a dense matrix
    std::vector<std::size_t> live_rows_map(A.rows(), SIZE_MAX);
    std::size_t live_rows = 0;
    std::vector<std::size_t> live_cols;
    for (std::size_t c = 0; c < nc; ++c) {
        if (col_dead[c]) continue;
        bool any = false;
        for (const auto& [r, x] : col[c]) {
            if (row_dead[r] || x == 0) continue;
            any = true;
            if (live_rows_map[r] == SIZE_MAX) live_rows_map[r] = live_rows++;
        }
        if (any) live_cols.push_back(c);
    }
    out.rank = units;
    for (std::size_t i = 0; i < units; ++i) out.divisors.emplace_back(1);
    if (!live_cols.empty()) {
        if (live_rows * live_cols.size() > max_dense)
            throw BudgetError("sparse elimination residual too large: " +
                              std::to_string(live_rows) + "x" +
                              std::to_string(live_cols.size()));
        IntMatrix resid(live_rows, live_cols.size());
        for (std::size_t j = 0; j < live_cols.size(); ++j)
            for (const auto& [r, x] : col[live_cols[j]])
                if (!row_dead[r] && x != 0) resid(live_rows_map[r], j) = x;
        SmithDecomposition s = smith_normal_form(resid);
        out.rank += s.rank();
        for (std::size_t i = 0; i < s.rank(); ++i)
            out.divisors.push_back(s.divisors[i]);
    }
    return out;
}

/// Basis of the right null space of A over F_2, as dense 0/1 vectors of
/// length A.cols(). Constraint-intersection method: start from the full
/// space, intersect with each row's orthogonal complement.
inline std::vector<std::vector<std::uint8_t>> nullspace_f2(
    const SparseIntMatrix& A) {
    const std::size_t nc = A.cols();
    const std::size_t words = (nc + 63) / 64;
    std::vector<std::vector<std::uint64_t>> basis(
        nc, std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < nc; ++i) basis[i][i / 64] |= 1ULL << (i % 64);

    SparseIntMatrix At = A.transpose();  // columns of At = rows of A
    for (std::size_t r = 0; r < At.cols(); ++r) {
        const auto& row = At.column(r);
        // dot products mod 2 with each basis vector
        std::size_t piv = SIZE_MAX;
        std::vector<std::size_t> odd;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            int d = 0;
            for (const auto& [c, v] : row)
                if (mpz_odd_p(v.get_mpz_t()) &&
                    (basis[b][c / 64] >> (c % 64)) & 1)
                    d ^= 1;
            if (d) {
                if (piv == SIZE_MAX) piv = b;
                else odd.push_back(b);
            }
        }
        if (piv == SIZE_MAX) continue;
        for (std::size_t b : odd)
            for (std::size_t w = 0; w < words; ++w) basis[b][w] ^= basis[piv][w];
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(piv));
    }

    std::vector<std::vector<std::uint8_t>> out;
    out.reserve(basis.size());
    for (const auto& b : basis) {
        std::vector<std::uint8_t> v(nc, 0);
        for (std::size_t i = 0; i < nc; ++i)
            v[i] = static_cast<std::uint8_t>((b[i / 64] >> (i % 64)) & 1);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace homcat
