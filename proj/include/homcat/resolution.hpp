#pragma once

#include "homcat/chain.hpp"

namespace homcat {

/// Free resolution 0 -> P_1 -> P_0 -> X -> 0, padded with zeros above.
/// Over Z a length-one resolution always exists: take P_1 to be free on a
/// basis of the relation lattice so that d_1 is injective.
struct Resolution {
    AbGroupPtr X;
    ChainComplex P;       // degrees 0..length, free groups
    AbMorphism augment;   // P_0 ->> X

    bool is_valid() const {
        if (!P.is_valid()) return false;
        if (!is_surjective(augment)) return false;
        if (!compose(augment, P.diff(1)).is_zero()) return false;
        // H_0(P) = X via the augmentation, higher homology vanishes
        QuotientArrow h0 = cokernel(P.diff(1));
        AbMorphism bar(h0.group, X, augment.mat);
        if (!is_isomorphism(bar)) return false;
        for (long n = 1; n <= P.hi(); ++n)
            if (!homology_via_cycles(P, n).group->is_trivial()) return false;
        return true;
    }
};

inline Resolution free_resolution(const AbGroupPtr& X, long length = 1) {
    assert(length >= 1);
    const IntMatrix& H = X->relation_lattice().H;  // independent columns
    AbGroupPtr P0 = FgAbGroup::free_group(X->ngens());
    AbGroupPtr P1 = FgAbGroup::free_group(H.cols());
    std::vector<AbGroupPtr> groups{P0, P1};
    std::vector<AbMorphism> diffs{AbMorphism(P1, P0, H)};
    for (long n = 2; n <= length; ++n) {
        AbGroupPtr zero = FgAbGroup::free_group(0);
        diffs.emplace_back(zero, groups.back(), IntMatrix(groups.back()->ngens(), 0));
        groups.push_back(zero);
    }
    return {X, ChainComplex(0, std::move(groups), std::move(diffs)),
            AbMorphism(P0, X, IntMatrix::identity(X->ngens()))};
}

/// Short exact sequence of groups 0 -> A -f-> B -g-> C -> 0.
struct GroupSES {
    AbGroupPtr A, B, C;
    AbMorphism f, g;

    bool is_exact() const {
        if (!is_injective(f) || !is_surjective(g)) return false;
        if (!compose(g, f).is_zero()) return false;
        SubgroupArrow k = kernel(g);
        return image_factorization(f).image->same_invariants(*k.group);
    }
};

/// Resolutions of the three groups of a SES fitting into a termwise split
/// SES of complexes (horseshoe): P(B)_i = P(A)_i + P(C)_i.
struct Horseshoe {
    // heap-held so the pointers inside ses survive moves of the Horseshoe
    std::unique_ptr<Resolution> RA, RB, RC;
    std::unique_ptr<ComplexSES> ses;
};

inline Horseshoe horseshoe_resolution(const GroupSES& s) {
    Horseshoe h;
    h.RA = std::make_unique<Resolution>(free_resolution(s.A));
    h.RC = std::make_unique<Resolution>(free_resolution(s.C));
    AbGroupPtr P0A = h.RA->P.group(0), P1A = h.RA->P.group(1);
    AbGroupPtr P0C = h.RC->P.group(0), P1C = h.RC->P.group(1);
    DirectSum S0 = direct_sum({P0A, P0C});
    DirectSum S1 = direct_sum({P1A, P1C});

    // augmentation on the sum: f . epsA on the A part; on the C part a
    // generatorwise lift of epsC through g
    IntMatrix lift_sys = IntMatrix::hstack(s.g.mat, s.C->presentation());
    auto sC = solve_integer(lift_sys, h.RC->augment.mat);
    assert(sC.has_value());
    IntMatrix SC = sC->submatrix(0, 0, s.B->ngens(), P0C->ngens());
    IntMatrix eps = s.f.mat * h.RA->augment.mat * S0.project[0].mat +
                    SC * S0.project[1].mat;
    AbMorphism epsB(S0.group, s.B, eps);

    // differential [[dA, u], [0, dC]]: u corrects SC . dC back into the A part
    IntMatrix v = SC * h.RC->P.diff(1).mat;  // lands in ker(g) = im(f) in B
    IntMatrix pull_sys = IntMatrix::hstack(s.f.mat, s.B->presentation());
    auto a = solve_integer(pull_sys, v.scaled(-1));
    assert(a.has_value());
    IntMatrix aM = a->submatrix(0, 0, s.A->ngens(), P1C->ngens());
    // lift -a through epsA (free P0A surjects, generatorwise solve)
    IntMatrix ea_sys = IntMatrix::hstack(h.RA->augment.mat, s.A->presentation());
    auto u = solve_integer(ea_sys, aM);
    assert(u.has_value());
    IntMatrix uM = u->submatrix(0, 0, P0A->ngens(), P1C->ngens());

    IntMatrix d1 = S0.inject[0].mat * h.RA->P.diff(1).mat * S1.project[0].mat +
                   S0.inject[0].mat * uM * S1.project[1].mat +
                   S0.inject[1].mat * h.RC->P.diff(1).mat * S1.project[1].mat;
    ChainComplex PB(0, {S0.group, S1.group},
                    {AbMorphism(S1.group, S0.group, d1)});
    h.RB = std::make_unique<Resolution>(Resolution{s.B, PB, epsB});

    // the three resolutions form a termwise split complex SES
    std::map<long, AbMorphism> fparts, gparts, sec;
    fparts.emplace(0, compose(S0.inject[0], ab_identity(P0A)));
    fparts.emplace(1, compose(S1.inject[0], ab_identity(P1A)));
    gparts.emplace(0, S0.project[1]);
    gparts.emplace(1, S1.project[1]);
    sec.emplace(0, S0.inject[1]);
    sec.emplace(1, S1.inject[1]);
    h.ses = std::make_unique<ComplexSES>(ComplexSES{
        &h.RA->P, &h.RB->P, &h.RC->P,
        ChainMap(&h.RA->P, &h.RB->P, std::move(fparts)),
        ChainMap(&h.RB->P, &h.RC->P, std::move(gparts)), std::move(sec)});
    return h;
}

}  // namespace homcat
