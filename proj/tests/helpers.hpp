#pragma once

#include <memory>
#include <random>

#include "homcat/resolution.hpp"

namespace homcat::testgen {

inline AbGroupPtr random_group(std::mt19937& rng, int max_gens = 3,
                               int max_rels = 3, int bound = 5) {
    std::uniform_int_distribution<int> gd(1, max_gens), rd(0, max_rels),
        val(-bound, bound);
    IntMatrix P(gd(rng), rd(rng));
    for (std::size_t i = 0; i < P.rows(); ++i)
        for (std::size_t j = 0; j < P.cols(); ++j) P(i, j) = val(rng);
    return FgAbGroup::make(P);
}

/// random bounded complex: differentials are forced into the cycles of the
/// previous one, so d.d = 0 holds by construction
inline ChainComplex random_complex(std::mt19937& rng, long lo = 0,
                                   int len = 3, int max_gens = 3) {
    std::vector<AbGroupPtr> groups;
    for (int i = 0; i < len; ++i) groups.push_back(random_group(rng, max_gens));
    std::vector<AbMorphism> diffs;
    for (int i = 1; i < len; ++i) {
        if (i == 1) {
            diffs.push_back(random_morphism(groups[1], groups[0], rng));
        } else {
            SubgroupArrow Z = kernel(diffs.back());
            AbMorphism h = random_morphism(groups[static_cast<std::size_t>(i)],
                                           Z.group, rng);
            diffs.push_back(compose(Z.inclusion, h));
        }
    }
    return ChainComplex(lo, std::move(groups), std::move(diffs));
}

/// A short exact sequence of complexes, owning all three complexes.
struct OwnedSES {
    std::unique_ptr<ChainComplex> A, B, C;
    std::unique_ptr<ComplexSES> ses;
};

/// 0 -> A -> B -> B/A -> 0 for a random subcomplex A of a random B.
/// The subgroup at each degree is generated by the boundaries coming from
/// above plus a few random elements, so closure under d is automatic.
inline OwnedSES random_complex_ses(std::mt19937& rng, long lo = 0,
                                   int len = 3, int max_gens = 3) {
    OwnedSES out;
    out.B = std::make_unique<ChainComplex>(random_complex(rng, lo, len, max_gens));
    const ChainComplex& B = *out.B;
    std::uniform_int_distribution<int> nextra(0, 2);

    // subgroups top-down, as image factorizations of generator lists
    std::vector<ImageFactorization> sub;  // index n - lo
    sub.resize(static_cast<std::size_t>(len),
               image_factorization(ab_zero_morphism(FgAbGroup::free_group(0),
                                                    FgAbGroup::free_group(0))));
    for (long n = B.hi(); n >= lo; --n) {
        std::vector<std::vector<Int>> gens;
        if (n < B.hi()) {
            const ImageFactorization& up = sub[static_cast<std::size_t>(n + 1 - lo)];
            IntMatrix pushed = B.diff(n + 1).mat * up.include.mat;
            for (std::size_t j = 0; j < pushed.cols(); ++j)
                gens.push_back(pushed.col(j));
        }
        int extra = nextra(rng);
        for (int e = 0; e < extra; ++e)
            gens.push_back(random_element(B.group(n), rng).coords);
        IntMatrix G(B.group(n)->ngens(), gens.size());
        for (std::size_t j = 0; j < gens.size(); ++j) G.set_col(j, gens[j]);
        AbMorphism span(FgAbGroup::free_group(gens.size()), B.group(n), G);
        sub[static_cast<std::size_t>(n - lo)] = image_factorization(span);
    }

    std::vector<AbGroupPtr> agroups, cgroups;
    std::vector<QuotientArrow> quot;
    for (long n = lo; n <= B.hi(); ++n) {
        const ImageFactorization& s = sub[static_cast<std::size_t>(n - lo)];
        agroups.push_back(s.image);
        quot.push_back(cokernel(s.include));
        cgroups.push_back(quot.back().group);
    }
    std::vector<AbMorphism> adiffs, cdiffs;
    for (long n = lo + 1; n <= B.hi(); ++n) {
        const ImageFactorization& sn = sub[static_cast<std::size_t>(n - lo)];
        const ImageFactorization& sm = sub[static_cast<std::size_t>(n - 1 - lo)];
        IntMatrix sys = IntMatrix::hstack(sm.include.mat,
                                          B.group(n - 1)->presentation());
        auto lift = solve_integer(sys, B.diff(n).mat * sn.include.mat);
        assert(lift.has_value());
        adiffs.emplace_back(
            sn.image, sm.image,
            lift->submatrix(0, 0, sm.image->ngens(), sn.image->ngens()));
        cdiffs.emplace_back(
            cgroups[static_cast<std::size_t>(n - lo)],
            cgroups[static_cast<std::size_t>(n - 1 - lo)], B.diff(n).mat);
    }
    out.A = std::make_unique<ChainComplex>(lo, agroups, std::move(adiffs));
    out.C = std::make_unique<ChainComplex>(lo, cgroups, std::move(cdiffs));

    std::map<long, AbMorphism> fparts, gparts;
    for (long n = lo; n <= B.hi(); ++n) {
        fparts.emplace(n, sub[static_cast<std::size_t>(n - lo)].include);
        gparts.emplace(n, quot[static_cast<std::size_t>(n - lo)].projection);
    }
    out.ses = std::make_unique<ComplexSES>(ComplexSES{
        out.A.get(), out.B.get(), out.C.get(),
        ChainMap(out.A.get(), out.B.get(), std::move(fparts)),
        ChainMap(out.B.get(), out.C.get(), std::move(gparts))});
    return out;
}

/// random subgroup inclusion / quotient pair 0 -> A -> B -> B/A -> 0
inline GroupSES random_group_ses(std::mt19937& rng, int max_gens = 3) {
    AbGroupPtr B = random_group(rng, max_gens);
    AbGroupPtr S = random_group(rng, max_gens);
    ImageFactorization im = image_factorization(random_morphism(S, B, rng));
    QuotientArrow q = cokernel(im.include);
    return {im.image, B, q.group, im.include, q.projection};
}

}  // namespace homcat::testgen
