#pragma once

#include <map>
#include <vector>

#include "homcat/fgab.hpp"

namespace homcat {

/// Bounded chain complex ... -> C_{n} -d_n-> C_{n-1} -> ...
/// Degrees run from lo() to hi(); outside that range everything is zero.
class ChainComplex {
public:
    ChainComplex(long lo, std::vector<AbGroupPtr> groups,
                 std::vector<AbMorphism> diffs)
        : lo_(lo), groups_(std::move(groups)), diffs_(std::move(diffs)) {
        assert(diffs_.size() + 1 == groups_.size() || groups_.size() <= 1);
    }

    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(groups_.size()) - 1; }

    AbGroupPtr group(long n) const {
        if (n < lo_ || n > hi()) return FgAbGroup::free_group(0);
        return groups_[static_cast<std::size_t>(n - lo_)];
    }

    /// d_n : C_n -> C_{n-1}; zero morphism outside the support
    AbMorphism diff(long n) const {
        if (n <= lo_ || n > hi()) return ab_zero_morphism(group(n), group(n - 1));
        return diffs_[static_cast<std::size_t>(n - lo_ - 1)];
    }

    bool is_valid() const {
        for (long n = lo_ + 1; n <= hi(); ++n) {
            if (!diff(n).is_well_defined()) return false;
            if (n > lo_ + 1 && !compose(diff(n - 1), diff(n)).is_zero())
                return false;
        }
        return true;
    }

private:
    long lo_;
    std::vector<AbGroupPtr> groups_;
    std::vector<AbMorphism> diffs_;
};

/// Degreewise morphisms commuting with the differentials.
class ChainMap {
public:
    ChainMap(const ChainComplex* src, const ChainComplex* dst,
             std::map<long, AbMorphism> parts)
        : src_(src), dst_(dst), parts_(std::move(parts)) {}

    const ChainComplex& src() const { return *src_; }
    const ChainComplex& dst() const { return *dst_; }

    AbMorphism at(long n) const {
        auto it = parts_.find(n);
        if (it != parts_.end()) return it->second;
        return ab_zero_morphism(src_->group(n), dst_->group(n));
    }

    bool is_chain_map() const {
        long a = std::min(src_->lo(), dst_->lo());
        long b = std::max(src_->hi(), dst_->hi());
        for (long n = a; n <= b; ++n) {
            if (!at(n).is_well_defined()) return false;
            if (!morphisms_equal(compose(dst_->diff(n), at(n)),
                                 compose(at(n - 1), src_->diff(n))))
                return false;
        }
        return true;
    }

private:
    const ChainComplex* src_;
    const ChainComplex* dst_;
    std::map<long, AbMorphism> parts_;
};

/// Homology at a fixed degree via the cycles-then-quotient route:
/// H = Coker(C_{n+1} -> Ker d_n). Keeps enough data to pass between
/// homology classes and cycle representatives in C_n.
struct Homology {
    AbGroupPtr group;
    SubgroupArrow cycles;     // Z_n >-> C_n
    AbMorphism boundary_in;   // C_{n+1} -> Z_n (the lift of d_{n+1})
    AbMorphism to_classes;    // Z_n ->> H_n

    /// class of a cycle given by its coordinates in C_n
    AbElement class_of(const std::vector<Int>& cycle) const {
        IntMatrix sys = IntMatrix::hstack(
            cycles.inclusion.mat, cycles.inclusion.cod->presentation());
        auto x = solve_integer(sys, IntMatrix::from_col(cycle));
        if (!x) throw std::logic_error("class_of: vector is not a cycle");
        std::vector<Int> zc(cycles.group->ngens());
        for (std::size_t i = 0; i < zc.size(); ++i) zc[i] = (*x)(i, 0);
        return to_classes.apply(AbElement(cycles.group, std::move(zc)));
    }

    /// a representing cycle in C_n for a homology class
    std::vector<Int> representative(const AbElement& h) const {
        return cycles.inclusion.mat.apply(h.coords);
    }
};

inline Homology homology_via_cycles(const ChainComplex& C, long n) {
    SubgroupArrow Z = kernel(C.diff(n));
    // d_{n+1} lands in the cycles; lift it through the inclusion
    AbMorphism dnext = C.diff(n + 1);
    IntMatrix sys = IntMatrix::hstack(Z.inclusion.mat,
                                      C.group(n)->presentation());
    auto lift = solve_integer(sys, dnext.mat);
    assert(lift.has_value());
    IntMatrix L = lift->submatrix(0, 0, Z.group->ngens(), dnext.mat.cols());
    AbMorphism bin(dnext.dom, Z.group, std::move(L));
    QuotientArrow q = cokernel(bin);
    return {q.group, std::move(Z), std::move(bin), q.projection};
}

/// The other route: H = Ker(Coker d_{n+1} -> C_{n-1}).
struct HomologyViaQuotient {
    AbGroupPtr group;
    QuotientArrow chains_mod_boundaries;  // C_n ->> Q
    SubgroupArrow kernel_in_quotient;     // H >-> Q
};

inline HomologyViaQuotient homology_via_quotient(const ChainComplex& C, long n) {
    QuotientArrow Q = cokernel(C.diff(n + 1));
    // d_n kills boundaries, so it descends to Q (same generator matrix)
    AbMorphism dbar(Q.group, C.group(n - 1), C.diff(n).mat);
    assert(dbar.is_well_defined());
    SubgroupArrow K = kernel(dbar);
    return {K.group, std::move(Q), std::move(K)};
}

/// Mutually inverse isomorphisms between the two homology constructions.
inline IsoWitness homology_interchange(const ChainComplex& C, long n) {
    Homology h = homology_via_cycles(C, n);
    HomologyViaQuotient hq = homology_via_quotient(C, n);
    // quotient-side generator -> its chain rep, a cycle -> cycle-side class
    IntMatrix fwd(h.group->ngens(), hq.group->ngens());
    for (std::size_t j = 0; j < hq.group->ngens(); ++j) {
        std::vector<Int> chain =
            hq.kernel_in_quotient.inclusion.mat.col(j);
        fwd.set_col(j, h.class_of(chain).coords);
    }
    // cycle-side generator -> its chain rep -> class in the quotient,
    // pulled back along the kernel inclusion
    IntMatrix chains(C.group(n)->ngens(), h.group->ngens());
    for (std::size_t j = 0; j < h.group->ngens(); ++j)
        chains.set_col(j, h.representative(ab_generator(h.group, j)));
    IntMatrix sys = IntMatrix::hstack(
        hq.kernel_in_quotient.inclusion.mat,
        hq.chains_mod_boundaries.group->presentation());
    auto pull = solve_integer(sys, chains);
    assert(pull.has_value());
    IntMatrix bwd =
        pull->submatrix(0, 0, hq.group->ngens(), h.group->ngens());
    return {AbMorphism(hq.group, h.group, std::move(fwd)),
            AbMorphism(h.group, hq.group, std::move(bwd))};
}

/// H_n(f) for a chain map f.
inline AbMorphism induced_map(const ChainMap& f, const Homology& hsrc,
                              const Homology& hdst, long n) {
    IntMatrix M(hdst.group->ngens(), hsrc.group->ngens());
    for (std::size_t j = 0; j < hsrc.group->ngens(); ++j) {
        std::vector<Int> z = hsrc.representative(ab_generator(hsrc.group, j));
        M.set_col(j, hdst.class_of(f.at(n).mat.apply(z)).coords);
    }
    AbMorphism out(hsrc.group, hdst.group, std::move(M));
    assert(out.is_well_defined());
    return out;
}

/// cone(f)_n = A_{n-1} + B_n with d(a, b) = (-d_A a, f(a) + d_B b).
inline ChainComplex mapping_cone(const ChainMap& f) {
    const ChainComplex& A = f.src();
    const ChainComplex& B = f.dst();
    long lo = std::min(A.lo(), B.lo());
    long hi = std::max(A.hi() + 1, B.hi());
    std::vector<AbGroupPtr> groups;
    std::vector<DirectSum> sums;
    for (long n = lo; n <= hi; ++n) {
        sums.push_back(direct_sum({A.group(n - 1), B.group(n)}));
        groups.push_back(sums.back().group);
    }
    std::vector<AbMorphism> diffs;
    for (long n = lo + 1; n <= hi; ++n) {
        const DirectSum& sn = sums[static_cast<std::size_t>(n - lo)];
        const DirectSum& sm = sums[static_cast<std::size_t>(n - 1 - lo)];
        IntMatrix dA = A.diff(n - 1).mat, fM = f.at(n - 1).mat,
                  dB = B.diff(n).mat;
        AbMorphism part =
            compose(sm.inject[0],
                    AbMorphism(A.group(n - 1), A.group(n - 2), dA.scaled(-1)));
        IntMatrix M = part.mat * sn.project[0].mat +
                      sm.inject[1].mat * fM * sn.project[0].mat +
                      sm.inject[1].mat * dB * sn.project[1].mat;
        diffs.emplace_back(sn.group, sm.group, std::move(M));
    }
    return ChainComplex(lo, std::move(groups), std::move(diffs));
}

/// Short exact sequence of complexes 0 -> A -f-> B -g-> C -> 0 (degreewise).
struct ComplexSES {
    const ChainComplex* A;
    const ChainComplex* B;
    const ChainComplex* C;
    ChainMap f, g;
    /// degreewise sections of g (not chain maps); present iff termwise split
    std::map<long, AbMorphism> sections;

    bool is_termwise_split() const { return !sections.empty(); }

    bool sections_valid() const {
        for (const auto& [n, s] : sections) {
            if (!s.is_well_defined()) return false;
            if (!morphisms_equal(compose(g.at(n), s), ab_identity(C->group(n))))
                return false;
        }
        return true;
    }

    bool is_exact() const {
        long lo = std::min({A->lo(), B->lo(), C->lo()});
        long hi = std::max({A->hi(), B->hi(), C->hi()});
        for (long n = lo; n <= hi; ++n) {
            if (!is_injective(f.at(n))) return false;
            if (!is_surjective(g.at(n))) return false;
            ImageFactorization im = image_factorization(f.at(n));
            SubgroupArrow k = kernel(g.at(n));
            if (!compose(g.at(n), f.at(n)).is_zero()) return false;
            if (!im.image->same_invariants(*k.group)) return false;
            // im f contains ker g: each kernel generator solves through f
            IntMatrix sys = IntMatrix::hstack(f.at(n).mat,
                                              B->group(n)->presentation());
            if (!solve_integer(sys, k.inclusion.mat)) return false;
        }
        return true;
    }
};

/// connecting morphism H_n(C) -> H_{n-1}(A) by the usual representative
/// chase: lift along g, push down, pull back along f.
inline AbMorphism connecting_morphism(const ComplexSES& s, long n,
                                      const Homology& hC,
                                      const Homology& hAprev) {
    const AbMorphism gn = s.g.at(n);
    const AbMorphism fn1 = s.f.at(n - 1);
    IntMatrix lift_sys = IntMatrix::hstack(
        gn.mat, s.C->group(n)->presentation());
    IntMatrix pull_sys = IntMatrix::hstack(
        fn1.mat, s.B->group(n - 1)->presentation());
    IntMatrix M(hAprev.group->ngens(), hC.group->ngens());
    for (std::size_t j = 0; j < hC.group->ngens(); ++j) {
        std::vector<Int> z = hC.representative(ab_generator(hC.group, j));
        auto bx = solve_integer(lift_sys, IntMatrix::from_col(z));
        assert(bx.has_value());
        std::vector<Int> b(s.B->group(n)->ngens());
        for (std::size_t i = 0; i < b.size(); ++i) b[i] = (*bx)(i, 0);
        std::vector<Int> db = s.B->diff(n).mat.apply(b);
        auto ax = solve_integer(pull_sys, IntMatrix::from_col(db));
        assert(ax.has_value());
        std::vector<Int> a(s.A->group(n - 1)->ngens());
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = (*ax)(i, 0);
        M.set_col(j, hAprev.class_of(a).coords);
    }
    AbMorphism out(hC.group, hAprev.group, std::move(M));
    assert(out.is_well_defined());
    return out;
}

/// exactness of X -u-> Y -v-> Z at Y, checked by factoring u through ker v
/// and asking that the factoring map be onto
inline bool exact_at(const AbMorphism& u, const AbMorphism& v) {
    if (!compose(v, u).is_zero()) return false;
    SubgroupArrow k = kernel(v);
    IntMatrix sys = IntMatrix::hstack(k.inclusion.mat,
                                      u.cod->presentation());
    auto lift = solve_integer(sys, u.mat);
    if (!lift) return false;
    IntMatrix L = lift->submatrix(0, 0, k.group->ngens(), u.mat.cols());
    return cokernel(AbMorphism(u.dom, k.group, std::move(L))).group->is_trivial();
}

/// The long exact homology sequence of a SES of complexes, listed from the
/// top degree down:  ... H_n(A) -> H_n(B) -> H_n(C) -> H_{n-1}(A) ...
struct LongExactSequence {
    std::vector<AbGroupPtr> groups;   // 3 per degree
    std::vector<AbMorphism> maps;     // maps[i] : groups[i] -> groups[i+1]
    std::vector<std::string> labels;

    bool is_exact() const {
        for (std::size_t i = 0; i + 1 < maps.size(); ++i)
            if (!exact_at(maps[i], maps[i + 1])) return false;
        return true;
    }
};

inline LongExactSequence long_exact_sequence(const ComplexSES& s) {
    long lo = std::min({s.A->lo(), s.B->lo(), s.C->lo()});
    long hi = std::max({s.A->hi(), s.B->hi(), s.C->hi()});
    LongExactSequence les;
    std::map<long, Homology> hA, hB, hC;
    for (long n = lo; n <= hi; ++n) {
        hA.emplace(n, homology_via_cycles(*s.A, n));
        hB.emplace(n, homology_via_cycles(*s.B, n));
        hC.emplace(n, homology_via_cycles(*s.C, n));
    }
    for (long n = hi; n >= lo; --n) {
        les.groups.push_back(hA.at(n).group);
        les.groups.push_back(hB.at(n).group);
        les.groups.push_back(hC.at(n).group);
        les.labels.push_back("H_" + std::to_string(n) + "(A)");
        les.labels.push_back("H_" + std::to_string(n) + "(B)");
        les.labels.push_back("H_" + std::to_string(n) + "(C)");
        les.maps.push_back(induced_map(s.f, hA.at(n), hB.at(n), n));
        les.maps.push_back(induced_map(s.g, hB.at(n), hC.at(n), n));
        if (n > lo)
            les.maps.push_back(connecting_morphism(s, n, hC.at(n), hA.at(n - 1)));
    }
    return les;
}

}  // namespace homcat
