#pragma once

#include <functional>
#include <string>

#include "homcat/chain.hpp"

namespace homcat {

/// An additive endofunctor-style action on fgab, given by its effect on
/// groups and on morphisms. The exactness tag records what the functor is
/// entitled to: exact functors preserve all short exact sequences, right
/// exact ones only the cokernel end.
struct FunctorSpec {
    enum class Exactness { exact, right_exact };

    std::string name;
    Exactness exactness = Exactness::exact;
    std::function<AbGroupPtr(const AbGroupPtr&)> on_group;
    std::function<AbMorphism(const AbMorphism&)> on_morphism;
};

inline FunctorSpec identity_functor() {
    FunctorSpec T;
    T.name = "id";
    T.exactness = FunctorSpec::Exactness::exact;
    T.on_group = [](const AbGroupPtr& A) { return A; };
    T.on_morphism = [](const AbMorphism& f) { return f; };
    return T;
}

/// (-) tensor M. Exact exactly when M is free; tagged right exact otherwise.
inline FunctorSpec tensor_functor(const AbGroupPtr& M, std::string name = "") {
    FunctorSpec T;
    T.name = name.empty() ? "tensor" : std::move(name);
    T.exactness = M->torsion().empty() ? FunctorSpec::Exactness::exact
                                       : FunctorSpec::Exactness::right_exact;
    T.on_group = [M](const AbGroupPtr& A) { return tensor(A, M).group; };
    T.on_morphism = [M, T0 = T.on_group](const AbMorphism& f) {
        IntMatrix m = IntMatrix::kronecker(
            f.mat, IntMatrix::identity(M->ngens()));
        return AbMorphism(T0(f.dom), T0(f.cod), std::move(m));
    };
    return T;
}

inline FunctorSpec tensor_zmod(long k) {
    return tensor_functor(FgAbGroup::cyclic_sum({Int(k)}),
                          "tensor:" + std::to_string(k));
}

inline ChainComplex apply_functor(const FunctorSpec& T, const ChainComplex& C) {
    std::vector<AbGroupPtr> groups;
    std::vector<AbMorphism> diffs;
    for (long n = C.lo(); n <= C.hi(); ++n) {
        groups.push_back(T.on_group(C.group(n)));
        if (n > C.lo()) diffs.push_back(T.on_morphism(C.diff(n)));
    }
    ChainComplex out(C.lo(), std::move(groups), std::move(diffs));
    assert(out.is_valid());
    return out;
}

/// spot checks of the FunctorSpec contract on supplied sample data
inline bool functor_contract_check(const FunctorSpec& T, const AbGroupPtr& A,
                                   const AbGroupPtr& B, std::mt19937& rng) {
    // identities and composition
    if (!morphisms_equal(T.on_morphism(ab_identity(A)),
                         ab_identity(T.on_group(A))))
        return false;
    AbMorphism f = random_morphism(A, B, rng);
    AbMorphism g = random_morphism(B, A, rng);
    if (!morphisms_equal(T.on_morphism(compose(g, f)),
                         compose(T.on_morphism(g), T.on_morphism(f))))
        return false;
    // additivity on morphisms
    AbMorphism f2 = random_morphism(A, B, rng);
    if (!morphisms_equal(T.on_morphism(AbMorphism(A, B, f.mat + f2.mat)),
                         AbMorphism(T.on_group(A), T.on_group(B),
                                    T.on_morphism(f).mat + T.on_morphism(f2).mat)))
        return false;
    // finite direct sums are preserved
    DirectSum ds = direct_sum({A, B});
    DirectSum tds = direct_sum({T.on_group(A), T.on_group(B)});
    AbMorphism cmp(tds.group, T.on_group(ds.group),
                   T.on_morphism(ds.inject[0]).mat * tds.project[0].mat +
                       T.on_morphism(ds.inject[1]).mat * tds.project[1].mat);
    if (!is_isomorphism(cmp)) return false;
    // right exactness on a random cokernel: T(coker f) = coker T(f)
    QuotientArrow q = cokernel(f);
    QuotientArrow tq = cokernel(T.on_morphism(f));
    if (!T.on_group(q.group)->same_invariants(*tq.group)) return false;
    return true;
}

}  // namespace homcat
