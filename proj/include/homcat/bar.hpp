#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "homcat/group.hpp"
#include "homcat/sparse_mat.hpp"

namespace homcat {

/// Normalized bar complex of a finite group with trivial coefficients.
/// Degree-n basis: n-tuples of non-identity elements; any face that produces
/// an identity entry is dropped. d[n] maps degree n to degree n-1.
struct BarComplex {
    GroupPtr G;
    int max_degree = 0;
    std::vector<int> nonid;       // non-identity elements in index order
    std::vector<int> rank_of;     // element -> position in nonid (identity: -1)
    std::vector<SparseIntMatrix> d;  // d[0] unused; d[n]: C_n -> C_{n-1}

    std::size_t dim(int n) const {  // (|G|-1)^n
        std::size_t m = nonid.size(), r = 1;
        while (n-- > 0) r *= m;
        return r;
    }

    /// tuple (g_1..g_n) of non-identity elements -> basis index (big-endian)
    std::size_t index_of(const std::vector<int>& tuple) const {
        std::size_t m = nonid.size(), idx = 0;
        for (int g : tuple)
            idx = idx * m + static_cast<std::size_t>(rank_of[static_cast<std::size_t>(g)]);
        return idx;
    }
    std::vector<int> tuple_of(std::size_t idx, int n) const {
        std::size_t m = nonid.size();
        std::vector<int> t(static_cast<std::size_t>(n));
        for (int i = n - 1; i >= 0; --i) {
            t[static_cast<std::size_t>(i)] = nonid[idx % m];
            idx /= m;
        }
        return t;
    }
};

/// boundary of one bar tuple as (face tuple index, sign) pairs, normalized
inline void bar_boundary_of(const BarComplex& bc, const std::vector<int>& t,
                            std::map<std::size_t, Int>& acc) {
    const auto& G = *bc.G;
    const int n = static_cast<int>(t.size());
    const int e = G.identity();
    int sign = 1;
    // face 0: drop g_1
    {
        std::vector<int> f(t.begin() + 1, t.end());
        acc[bc.index_of(f)] += 1;
    }
    for (int i = 1; i < n; ++i) {
        sign = -sign;
        int prod = G.mul(t[static_cast<std::size_t>(i - 1)],
                         t[static_cast<std::size_t>(i)]);
        if (prod == e) continue;  // normalized: tuple with identity is zero
        std::vector<int> f;
        f.reserve(static_cast<std::size_t>(n - 1));
        for (int j = 0; j < i - 1; ++j) f.push_back(t[static_cast<std::size_t>(j)]);
        f.push_back(prod);
        for (int j = i + 1; j < n; ++j) f.push_back(t[static_cast<std::size_t>(j)]);
        acc[bc.index_of(f)] += sign;
    }
    sign = -sign;
    {  // face n: drop g_n
        std::vector<int> f(t.begin(), t.end() - 1);
        acc[bc.index_of(f)] += sign;
    }
}

inline BarComplex bar_complex(const GroupPtr& G, int max_degree,
                              std::size_t budget = 300'000) {
    BarComplex bc;
    bc.G = G;
    bc.max_degree = max_degree;
    bc.rank_of.assign(static_cast<std::size_t>(G->order()), -1);
    for (int g = 0; g < G->order(); ++g)
        if (g != G->identity()) {
            bc.rank_of[static_cast<std::size_t>(g)] =
                static_cast<int>(bc.nonid.size());
            bc.nonid.push_back(g);
        }
    // budget check on the largest degree
    {
        std::size_t m = bc.nonid.size(), dim = 1;
        for (int i = 0; i < max_degree; ++i) {
            if (m != 0 && dim > budget / m + 1) dim = budget + 1;
            else dim *= m;
        }
        if (dim > budget)
            throw BudgetError("bar complex: " + std::to_string(G->order() - 1) +
                              "^" + std::to_string(max_degree) +
                              " tuples exceed budget " + std::to_string(budget));
    }

    bc.d.emplace_back(0, 0);  // placeholder at degree 0
    for (int n = 1; n <= max_degree; ++n) {
        SparseIntMatrix dn(bc.dim(n - 1), bc.dim(n));
        if (n == 1) {
            // d_1 [g] = [] - [] = 0
            dn.finalize();
            bc.d.push_back(std::move(dn));
            continue;
        }
        const std::size_t cols = bc.dim(n);
        for (std::size_t c = 0; c < cols; ++c) {
            std::vector<int> t = bc.tuple_of(c, n);
            std::map<std::size_t, Int> acc;
            bar_boundary_of(bc, t, acc);
            for (auto& [r, v] : acc) dn.add(r, c, std::move(v));
        }
        dn.finalize();
        bc.d.push_back(std::move(dn));
    }
    return bc;
}

/// Unnormalized variant (tuples over all of G, no dropping) for cross-checks
/// on very small groups.
struct UnnormalizedBar {
    GroupPtr G;
    int max_degree = 0;
    std::vector<SparseIntMatrix> d;

    std::size_t dim(int n) const {
        std::size_t m = static_cast<std::size_t>(G->order()), r = 1;
        while (n-- > 0) r *= m;
        return r;
    }
};

inline UnnormalizedBar unnormalized_bar(const GroupPtr& G, int max_degree,
                                        std::size_t budget = 300'000) {
    UnnormalizedBar bc;
    bc.G = G;
    bc.max_degree = max_degree;
    const std::size_t m = static_cast<std::size_t>(G->order());
    {
        std::size_t dim = 1;
        for (int i = 0; i < max_degree; ++i) {
            if (dim > budget / m + 1) dim = budget + 1;
            else dim *= m;
        }
        if (dim > budget) throw BudgetError("unnormalized bar: over budget");
    }
    auto index_of = [&](const std::vector<int>& t) {
        std::size_t idx = 0;
        for (int g : t) idx = idx * m + static_cast<std::size_t>(g);
        return idx;
    };
    bc.d.emplace_back(0, 0);
    for (int n = 1; n <= max_degree; ++n) {
        SparseIntMatrix dn(bc.dim(n - 1), bc.dim(n));
        const std::size_t cols = bc.dim(n);
        for (std::size_t c = 0; c < cols; ++c) {
            std::vector<int> t(static_cast<std::size_t>(n));
            std::size_t idx = c;
            for (int i = n - 1; i >= 0; --i) {
                t[static_cast<std::size_t>(i)] = static_cast<int>(idx % m);
                idx /= m;
            }
            std::map<std::size_t, Int> acc;
            int sign = 1;
            acc[index_of({t.begin() + 1, t.end()})] += 1;
            for (int i = 1; i < n; ++i) {
                sign = -sign;
                std::vector<int> f;
                for (int j = 0; j < i - 1; ++j) f.push_back(t[static_cast<std::size_t>(j)]);
                f.push_back(G->mul(t[static_cast<std::size_t>(i - 1)],
                                   t[static_cast<std::size_t>(i)]));
                for (int j = i + 1; j < n; ++j) f.push_back(t[static_cast<std::size_t>(j)]);
                acc[index_of(f)] += sign;
            }
            sign = -sign;
            acc[index_of({t.begin(), t.end() - 1})] += sign;
            for (auto& [r, v] : acc)
                if (v != 0) dn.add(r, c, std::move(v));
        }
        dn.finalize();
        bc.d.push_back(std::move(dn));
    }
    return bc;
}

}  // namespace homcat
