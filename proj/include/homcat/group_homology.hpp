#pragma once

#include <string>
#include <vector>

#include "homcat/bar.hpp"
#include "homcat/chain.hpp"
#include "homcat/derived.hpp"
#include "homcat/extension.hpp"
#include "homcat/group.hpp"
#include "homcat/sparse_mat.hpp"

namespace homcat {

namespace detail {

/// H = Ker(out) / Im(in) for free integral chain groups, from ranks and
/// Smith divisors: free rank = dim - rank(out) - rank(in), torsion = the
/// nontrivial divisors of in.
inline AbGroupPtr homology_from_sparse(std::size_t dim,
                                       const SparseIntMatrix& out,
                                       const SparseIntMatrix& in) {
    std::size_t r_out = sparse_snf_divisors(out).rank;
    SparseSnf s_in = sparse_snf_divisors(in);
    std::size_t free_rank = dim - r_out - s_in.rank;
    std::vector<Int> ds;
    for (const Int& d : s_in.divisors)
        if (d > 1) ds.push_back(d);
    IntMatrix pres(free_rank + ds.size(), ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) pres(i, i) = ds[i];
    return FgAbGroup::make(std::move(pres));
}

/// the bar chain complex in degrees 0..top as a dense complex of free groups
inline ChainComplex bar_dense_complex(const BarComplex& bc, int top) {
    std::vector<AbGroupPtr> groups;
    std::vector<AbMorphism> diffs;
    for (int i = 0; i <= top; ++i) groups.push_back(FgAbGroup::free_group(bc.dim(i)));
    for (int i = 1; i <= top; ++i)
        diffs.emplace_back(groups[static_cast<std::size_t>(i)],
                           groups[static_cast<std::size_t>(i - 1)],
                           bc.d[static_cast<std::size_t>(i)].dense());
    return ChainComplex(0, std::move(groups), std::move(diffs));
}

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

constexpr std::size_t kDenseCap = 4000;  // dense-path cap on chain dimension

}  // namespace detail

/// H_n(G; Z) for k = 0, H_n(G; Z/k) for k >= 1, via the normalized bar
/// complex. Large instances fall back to mod-p dimension counts when k is
/// prime; otherwise a BudgetError is raised.
inline AbGroupPtr group_homology(const GroupPtr& G, int n, long k = 0,
                                 std::size_t budget = 300'000) {
    if (n < 0) return FgAbGroup::free_group(0);
    if (k == 1) return FgAbGroup::free_group(0);
    BarComplex bc = bar_complex(G, n + 1, budget);
    if (k == 0)
        return detail::homology_from_sparse(
            bc.dim(n), bc.d[static_cast<std::size_t>(n)],
            bc.d[static_cast<std::size_t>(n + 1)]);
    if (bc.dim(n + 1) <= detail::kDenseCap) {
        // structural path: chain complex of free (Z/k)-modules
        std::vector<AbGroupPtr> groups;
        std::vector<AbMorphism> diffs;
        for (int i = 0; i <= n + 1; ++i) {
            std::size_t d = bc.dim(i);
            groups.push_back(FgAbGroup::make(IntMatrix::identity(d).scaled(k)));
        }
        for (int i = 1; i <= n + 1; ++i)
            diffs.emplace_back(groups[static_cast<std::size_t>(i)],
                               groups[static_cast<std::size_t>(i - 1)],
                               bc.d[static_cast<std::size_t>(i)].dense());
        ChainComplex C(0, std::move(groups), std::move(diffs));
        return homology_via_cycles(C, n).group;
    }
    if (detail::is_prime(k)) {
        std::size_t r_out = rank_mod_p(bc.d[static_cast<std::size_t>(n)], k);
        std::size_t r_in = rank_mod_p(bc.d[static_cast<std::size_t>(n + 1)], k);
        std::size_t dim = bc.dim(n) - r_out - r_in;
        std::vector<Int> ds(dim, Int(k));
        return FgAbGroup::cyclic_sum(ds);
    }
    throw BudgetError("group homology: instance too large for the structural "
                      "path and k is not prime");
}

/// classical H^n(G; A) for a finite abelian coefficient group with trivial
/// action
inline AbGroupPtr group_cohomology(const GroupPtr& G, int n, const AbGroupPtr& A,
                                   std::size_t budget = 300'000) {
    if (n < 0) return FgAbGroup::free_group(0);
    BarComplex bc = bar_complex(G, n + 1, budget);
    if (bc.dim(n + 1) <= detail::kDenseCap) {
        ChainComplex C = detail::bar_dense_complex(bc, n + 1);
        HomCochain hc = hom_cochain(C, A);
        return cochain_cohomology(hc, C, n).group;
    }
    // large instance: A must be Z/p for a dimension count over F_p
    if (A->free_rank() == 0 && A->torsion().size() == 1 &&
        A->torsion()[0].fits_slong_p() &&
        detail::is_prime(A->torsion()[0].get_si())) {
        long p = A->torsion()[0].get_si();
        std::size_t r_out = rank_mod_p(bc.d[static_cast<std::size_t>(n + 1)], p);
        std::size_t r_in = rank_mod_p(bc.d[static_cast<std::size_t>(n)], p);
        std::size_t dim = bc.dim(n) - r_out - r_in;
        return FgAbGroup::cyclic_sum(std::vector<Int>(dim, Int(p)));
    }
    throw BudgetError("group cohomology: instance too large for the "
                      "structural path and A is not Z/p");
}

/// L_n of the exponent-k abelianisation reflector (k = 0: full
/// abelianisation): L_0 = ab(G) tensor Z/k, L_n = H_{n+1}(G; Z/k) for n >= 1.
inline AbGroupPtr derived_reflector(const GroupPtr& G, int n, long k,
                                    std::size_t budget = 300'000) {
    if (k == 1) return FgAbGroup::free_group(0);
    if (n == 0) {
        AbGroupPtr ab = abelianisation(G).group;
        if (k == 0) return ab;
        return tensor(ab, FgAbGroup::cyclic_sum({Int(k)})).group;
    }
    return group_homology(G, n + 1, k, budget);
}

struct BarSelfcheck {
    bool boundary_squares_zero = false;
    bool normalized_matches_unnormalized = false;  // only checked for |G|<=8
    bool unnormalized_checked = false;
    bool passed = false;
};

inline BarSelfcheck bar_selfcheck(const GroupPtr& G, int n,
                                  std::size_t budget = 300'000) {
    BarSelfcheck rep;
    BarComplex bc = bar_complex(G, n + 1, budget);
    rep.boundary_squares_zero = true;
    for (int i = 2; i <= n + 1; ++i)
        if (!bc.d[static_cast<std::size_t>(i - 1)]
                 .multiply(bc.d[static_cast<std::size_t>(i)])
                 .is_zero())
            rep.boundary_squares_zero = false;
    if (G->order() <= 8) {
        rep.unnormalized_checked = true;
        rep.normalized_matches_unnormalized = true;
        UnnormalizedBar ub = unnormalized_bar(G, n + 1, budget);
        for (int i = 2; i <= n + 1; ++i)
            if (!ub.d[static_cast<std::size_t>(i - 1)]
                     .multiply(ub.d[static_cast<std::size_t>(i)])
                     .is_zero())
                rep.boundary_squares_zero = false;
        for (int i = 0; i <= n; ++i) {
            AbGroupPtr hn = detail::homology_from_sparse(
                bc.dim(i), bc.d[static_cast<std::size_t>(i)],
                bc.d[static_cast<std::size_t>(i + 1)]);
            AbGroupPtr hu = detail::homology_from_sparse(
                ub.dim(i), ub.d[static_cast<std::size_t>(i)],
                ub.d[static_cast<std::size_t>(i + 1)]);
            if (!hn->same_invariants(*hu))
                rep.normalized_matches_unnormalized = false;
        }
    }
    rep.passed = rep.boundary_squares_zero &&
                 (!rep.unnormalized_checked || rep.normalized_matches_unnormalized);
    return rep;
}

/// Does a surjection A ->> B of f.g. abelian groups exist? Free generators
/// of A can cover anything; torsion factors are matched largest-to-largest
/// with divisibility.
inline bool surjection_exists(const AbGroupPtr& A, const AbGroupPtr& B) {
    if (A->free_rank() < B->free_rank()) return false;
    std::size_t wild = A->free_rank() - B->free_rank();
    const auto& ta = A->torsion();  // ascending
    const auto& tb = B->torsion();
    // match from the largest of B downward
    for (std::size_t i = 0; i < tb.size(); ++i) {
        const Int& need = tb[tb.size() - 1 - i];
        if (i < wild) continue;  // covered by a spare free generator
        std::size_t j = i - wild;
        if (j >= ta.size()) return false;
        if (ta[ta.size() - 1 - j] % need != 0) return false;
    }
    return true;
}

/// The abelianised tail of the long exact sequence attached to an extension
/// K >--> E -->> Q: builds L0 = K/[K,E], gamma: L0 -> ab(E),
/// fstar: ab(E) -> ab(Q), and checks exactness at ab(E), surjectivity of
/// fstar, and that H_2(Q; Z) can surject onto ker(gamma).
struct StallingsTail {
    AbGroupPtr L0;
    AbMorphism gamma = ab_zero_morphism(FgAbGroup::free_group(0),
                                        FgAbGroup::free_group(0));
    AbMorphism fstar = ab_zero_morphism(FgAbGroup::free_group(0),
                                        FgAbGroup::free_group(0));
    AbGroupPtr ker_gamma;
    AbGroupPtr h2_quotient;
    bool exact_at_middle = false;
    bool fstar_surjective = false;
    bool h2_surjection_exists = false;
    bool passed = false;
};

inline StallingsTail stallings_tail(const GroupExtension& e,
                                    std::size_t budget = 300'000) {
    if (!e.is_valid()) throw std::invalid_argument("stallings_tail: invalid extension");
    const GroupPtr& E = e.E;

    // K = image of A in E (as a group in its own right, reindexed)
    std::vector<int> kelems = e.incl.image_elements();  // sorted
    std::vector<int> kindex(static_cast<std::size_t>(E->order()), -1);
    for (std::size_t i = 0; i < kelems.size(); ++i)
        kindex[static_cast<std::size_t>(kelems[i])] = static_cast<int>(i);
    const int kn = static_cast<int>(kelems.size());
    std::vector<std::vector<int>> ktable(static_cast<std::size_t>(kn),
                                         std::vector<int>(static_cast<std::size_t>(kn)));
    for (int a = 0; a < kn; ++a)
        for (int b = 0; b < kn; ++b)
            ktable[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                kindex[static_cast<std::size_t>(E->mul(
                    kelems[static_cast<std::size_t>(a)],
                    kelems[static_cast<std::size_t>(b)]))];
    GroupPtr K = FiniteGroup::from_cayley(std::move(ktable),
                                          kindex[static_cast<std::size_t>(E->identity())]);

    // [K, E] as a subgroup of K (it lands in K since K is normal)
    Subgroup kSub{E, kelems};
    Subgroup whole{E, {}};
    whole.elements.resize(static_cast<std::size_t>(E->order()));
    std::iota(whole.elements.begin(), whole.elements.end(), 0);
    Subgroup commKE = higgins_commutator(E, kSub, whole);
    std::vector<int> nelems;
    for (int x : commKE.elements) nelems.push_back(kindex[static_cast<std::size_t>(x)]);
    std::sort(nelems.begin(), nelems.end());
    QuotientGroup q = quotient_group(K, Subgroup{K, nelems});

    StallingsTail rep;
    AbelianPresentation L0p = abelian_presentation(q.group);
    rep.L0 = L0p.group;

    Abelianisation abE = abelianisation(E);
    auto abQg = abelianisation(e.X);

    // gamma: generator = class of K/[K,E] -> unit of a preimage in ab(E)
    {
        IntMatrix M(abE.group->ngens(), rep.L0->ngens());
        for (std::size_t j = 0; j < L0p.gens.size(); ++j) {
            // preimage: any element of K in the generator's coset
            int rep_k = -1;
            for (int a = 0; a < kn; ++a)
                if (q.projection.at(a) == L0p.gens[j]) { rep_k = a; break; }
            M.set_col(j,
                      abE.unit(kelems[static_cast<std::size_t>(rep_k)]).coords);
        }
        rep.gamma = AbMorphism(rep.L0, abE.group, std::move(M));
    }
    // fstar: generator of ab(E) -> unit of proj(preimage) in ab(Q)
    {
        IntMatrix M(abQg.group->ngens(), abE.group->ngens());
        for (std::size_t j = 0; j < abE.gens.size(); ++j) {
            int rep_e = -1;
            for (int g = 0; g < E->order(); ++g)
                if (abE.unit_to_quotient.at(g) == abE.gens[j]) {
                    rep_e = g;
                    break;
                }
            M.set_col(j, abQg.unit(e.proj.at(rep_e)).coords);
        }
        rep.fstar = AbMorphism(abE.group, abQg.group, std::move(M));
    }

    rep.exact_at_middle = exact_at(rep.gamma, rep.fstar);
    rep.fstar_surjective = is_surjective(rep.fstar);
    rep.ker_gamma = kernel(rep.gamma).group;
    rep.h2_quotient = group_homology(e.X, 2, 0, budget);
    rep.h2_surjection_exists = surjection_exists(rep.h2_quotient, rep.ker_gamma);
    rep.passed = rep.exact_at_middle && rep.fstar_surjective &&
                 rep.h2_surjection_exists;
    return rep;
}

}  // namespace homcat
