#pragma once

#include "homcat/functor.hpp"
#include "homcat/resolution.hpp"

namespace homcat {

/// L_n T(X) = H_n(T(P)) for a free resolution P of X.
inline AbGroupPtr left_derived(const FunctorSpec& T, long n, const AbGroupPtr& X) {
    if (n < 0) return FgAbGroup::free_group(0);
    Resolution R = free_resolution(X, std::max<long>(n + 1, 1));
    ChainComplex TP = apply_functor(T, R.P);
    return homology_via_cycles(TP, n).group;
}

/// Hom-cochain data of a complex with coefficients in A:
/// groups Hom(C_i, A) and differentials (precompose with d_{i+1}).
struct HomCochain {
    std::vector<HomGroup> groups;   // index i = degree, from C.lo()
    std::vector<AbMorphism> delta;  // delta[i]: Hom(C_i,A) -> Hom(C_{i+1},A)
    long lo;

    const HomGroup& at(long i) const {
        return groups[static_cast<std::size_t>(i - lo)];
    }
};

inline HomCochain hom_cochain(const ChainComplex& C, const AbGroupPtr& A) {
    HomCochain hc;
    hc.lo = C.lo();
    for (long i = C.lo(); i <= C.hi(); ++i)
        hc.groups.push_back(hom_group(C.group(i), A));
    for (long i = C.lo(); i < C.hi(); ++i) {
        const HomGroup& src = hc.at(i);
        const HomGroup& dst = hc.at(i + 1);
        IntMatrix M(dst.group->ngens(), src.group->ngens());
        for (std::size_t j = 0; j < src.group->ngens(); ++j) {
            AbMorphism phi = src.to_morphism(ab_generator(src.group, j));
            M.set_col(j,
                      dst.from_morphism(compose(phi, C.diff(i + 1))).coords);
        }
        hc.delta.emplace_back(src.group, dst.group, std::move(M));
    }
    return hc;
}

/// H^n of a Hom-cochain: Ker(delta_n) / Im(delta_{n-1}), with the cocycle
/// subgroup kept so classes can be named by morphisms.
struct Cohomology {
    AbGroupPtr group;
    SubgroupArrow cocycles;   // K >-> Hom(C_n, A)
    AbMorphism to_classes;    // K ->> H^n
};

inline Cohomology cochain_cohomology(const HomCochain& hc,
                                     const ChainComplex& C, long n) {
    std::size_t i = static_cast<std::size_t>(n - hc.lo);
    AbMorphism out = (i < hc.delta.size())
                         ? hc.delta[i]
                         : ab_zero_morphism(hc.at(n).group,
                                            FgAbGroup::free_group(0));
    SubgroupArrow K = kernel(out);
    if (n == hc.lo || i == 0 || i - 1 >= hc.delta.size()) {
        QuotientArrow q = cokernel(ab_zero_morphism(
            FgAbGroup::free_group(0), K.group));
        AbGroupPtr grp = K.group;
        AbMorphism cls(grp, q.group, IntMatrix::identity(grp->ngens()));
        return {std::move(grp), std::move(K), std::move(cls)};
    }
    const AbMorphism& in = hc.delta[i - 1];
    IntMatrix sys = IntMatrix::hstack(K.inclusion.mat,
                                      hc.at(n).group->presentation());
    auto lift = solve_integer(sys, in.mat);
    assert(lift.has_value());
    AbMorphism lifted(in.dom, K.group,
                      lift->submatrix(0, 0, K.group->ngens(), in.mat.cols()));
    QuotientArrow q = cokernel(lifted);
    return {q.group, std::move(K), q.projection};
}

/// Ext^n(X, A) from a length-one free resolution: Ext^0 = Hom(X, A),
/// Ext^1 = Coker(Hom(P_0,A) -> Hom(P_1,A)), 0 above.
inline AbGroupPtr ext_group(const AbGroupPtr& X, const AbGroupPtr& A, long n) {
    if (n < 0 || n >= 2) return FgAbGroup::free_group(0);
    Resolution R = free_resolution(X);
    HomCochain hc = hom_cochain(R.P, A);
    return cochain_cohomology(hc, R.P, n).group;
}

/// A finitely presented natural transformation T(-) => values, carried by a
/// base object Q and an element z of T(Q); the component at A sends a
/// morphism (or cocycle) with source Q's covering object to T of its
/// factorization applied to z.
struct NatWitness {
    FunctorSpec T;
    AbGroupPtr Q;         // base object, a quotient of the covering group
    AbGroupPtr cover;     // C_n (generators of Q live here)
    IntMatrix dnext;      // d_{n+1}: coboundary test matrix (may be 0 x 0)
    AbElement z;          // element of T(Q)

    /// component at phi.cod for a cocycle representative phi: cover -> A
    /// with phi . d_{n+1} = 0; value T(phibar)(z)
    AbElement component(const AbMorphism& phi) const {
        AbMorphism dn(FgAbGroup::free_group(dnext.cols()), phi.dom, dnext);
        if (!compose(phi, dn).is_zero())
            throw std::invalid_argument(
                "NatWitness::component: representative is not a cocycle");
        AbMorphism phibar(Q, phi.cod, phi.mat);
        assert(phibar.is_well_defined());
        return T.on_morphism(phibar).apply(z);
    }
};

/// Degree-0 Yoneda expansion: t in T(X) becomes the transformation whose
/// component at A maps f: X -> A to T(f)(t).
inline NatWitness yoneda_expand(const FunctorSpec& T, const AbGroupPtr& X,
                                const AbElement& t) {
    return NatWitness{T, X, X, IntMatrix(X->ngens(), 0), t};
}

/// The homological Yoneda correspondence at (C, T, n): mutually inverse
/// group isomorphisms between H_n(T(C)) and the witness group
/// N = Ker(T(Q) -> T(C_{n-1})), Q = Coker d_{n+1}.
struct HomologicalYoneda {
    FunctorSpec T;
    long n;
    AbGroupPtr Q;
    QuotientArrow proj;        // C_n ->> Q
    IntMatrix dnext;           // d_{n+1}
    AbGroupPtr TQ;
    SubgroupArrow N;           // N >-> T(Q)
    AbMorphism u;              // Coker(T d_{n+1}) -> T(Q), right-exactness iso
    AbMorphism uinv;
    Homology hTC;              // H_n(T C)
    AbMorphism v;              // N.group -> hTC.group
    AbMorphism vinv;

    NatWitness forward(const AbElement& h) const {
        AbElement w = vinv.apply(h);
        return NatWitness{T, Q, proj.projection.dom, dnext,
                          N.inclusion.apply(w)};
    }

    /// evaluate the witness at Q on the class of the projection
    AbElement backward(const NatWitness& w) const {
        AbMorphism pi(proj.projection.dom, Q, proj.projection.mat);
        AbElement zq = w.component(pi);  // element of T(Q)
        // pull back through the kernel inclusion, then pass to homology
        IntMatrix sys = IntMatrix::hstack(N.inclusion.mat, TQ->presentation());
        auto x = solve_integer(sys, IntMatrix::from_col(zq.coords));
        if (!x)
            throw std::invalid_argument(
                "backward: witness element is not in the kernel");
        std::vector<Int> nc(N.group->ngens());
        for (std::size_t i = 0; i < nc.size(); ++i) nc[i] = (*x)(i, 0);
        return v.apply(AbElement(N.group, std::move(nc)));
    }
};

inline HomologicalYoneda homological_yoneda(const ChainComplex& C,
                                            const FunctorSpec& T, long n) {
    QuotientArrow proj = cokernel(C.diff(n + 1));
    AbGroupPtr Q = proj.group;
    IntMatrix dnext = C.diff(n + 1).mat;
    AbGroupPtr TQ = T.on_group(Q);
    AbMorphism dbar(Q, C.group(n - 1), C.diff(n).mat);
    SubgroupArrow N = kernel(T.on_morphism(dbar));

    // right exactness: T(C_n) ->> T(Q) descends to an isomorphism from
    // Coker(T d_{n+1})
    QuotientArrow cokT = cokernel(T.on_morphism(C.diff(n + 1)));
    AbMorphism u(cokT.group, TQ,
                 T.on_morphism(AbMorphism(C.group(n), Q,
                                          proj.projection.mat)).mat);
    assert(u.is_well_defined());
    AbMorphism uinv = inverse_of(u);

    ChainComplex TC = apply_functor(T, C);
    Homology hTC = homology_via_cycles(TC, n);

    // v: kernel generator -> element of Coker(T d_{n+1}) -> cycle class
    IntMatrix vmat(hTC.group->ngens(), N.group->ngens());
    IntMatrix toCok = uinv.mat * N.inclusion.mat;
    for (std::size_t j = 0; j < N.group->ngens(); ++j)
        vmat.set_col(j, hTC.class_of(toCok.col(j)).coords);
    AbMorphism v(N.group, hTC.group, std::move(vmat));
    // vinv: homology generator -> representing cycle -> class in the
    // cokernel -> through u -> pulled back into the kernel
    IntMatrix reps(TC.group(n)->ngens(), hTC.group->ngens());
    for (std::size_t j = 0; j < hTC.group->ngens(); ++j)
        reps.set_col(j, hTC.representative(ab_generator(hTC.group, j)));
    IntMatrix zq = u.mat * reps;
    IntMatrix sys = IntMatrix::hstack(N.inclusion.mat, TQ->presentation());
    auto pull = solve_integer(sys, zq);
    assert(pull.has_value());
    AbMorphism vinv(hTC.group, N.group,
                    pull->submatrix(0, 0, N.group->ngens(),
                                    hTC.group->ngens()));
    assert(v.is_well_defined() && vinv.is_well_defined());
    return HomologicalYoneda{T, n, Q, std::move(proj), std::move(dnext),
                             std::move(TQ), std::move(N), std::move(u),
                             std::move(uinv), std::move(hTC), std::move(v),
                             std::move(vinv)};
}

/// Universal-coefficient check for a positionwise free complex C bounded
/// below at 0 with vanishing homology below degree n:
/// H^i(C, A) = 0 for i < n and H^n(C, A) = Hom(H_n C, A).
struct UctReport {
    bool preconditions_ok = false;
    std::string precondition_failure;
    bool lower_vanishing = false;
    bool top_iso = false;
    AbGroupPtr cohomology_n, hom_side;

    bool passed() const {
        return preconditions_ok && lower_vanishing && top_iso;
    }
};

inline UctReport abelian_uct_check(const ChainComplex& C, const AbGroupPtr& A,
                                   long n) {
    UctReport r;
    if (C.lo() != 0) {
        r.precondition_failure = "complex must start in degree 0";
        return r;
    }
    for (long i = 0; i <= C.hi(); ++i)
        if (!C.group(i)->torsion().empty() ||
            C.group(i)->free_rank() != C.group(i)->ngens()) {
            r.precondition_failure = "complex is not positionwise free";
            return r;
        }
    for (long i = 0; i < n; ++i)
        if (!homology_via_cycles(C, i).group->is_trivial()) {
            r.precondition_failure =
                "H_" + std::to_string(i) + " does not vanish";
            return r;
        }
    r.preconditions_ok = true;

    HomCochain hc = hom_cochain(C, A);
    r.lower_vanishing = true;
    for (long i = 0; i < n && i <= C.hi(); ++i)
        if (!cochain_cohomology(hc, C, i).group->is_trivial())
            r.lower_vanishing = false;

    Cohomology top = cochain_cohomology(hc, C, n);
    r.cohomology_n = top.group;
    Homology hn = homology_via_cycles(C, n);
    HomGroup homhn = hom_group(hn.group, A);
    r.hom_side = homhn.group;
    // witness: a cocycle class restricts to cycles and descends to H_n
    IntMatrix W(homhn.group->ngens(), top.group->ngens());
    const HomGroup& hgn = hc.at(n);
    for (std::size_t j = 0; j < top.group->ngens(); ++j) {
        AbMorphism phi = hgn.to_morphism(
            AbElement(hgn.group, top.cocycles.inclusion.mat.col(j)));
        AbMorphism restricted(hn.group, A,
                              phi.mat * hn.cycles.inclusion.mat);
        assert(restricted.is_well_defined());
        W.set_col(j, homhn.from_morphism(restricted).coords);
    }
    AbMorphism witness(top.group, homhn.group, std::move(W));
    r.top_iso = witness.is_well_defined() && is_isomorphism(witness);
    return r;
}

}  // namespace homcat
