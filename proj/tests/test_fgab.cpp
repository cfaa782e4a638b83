#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "homcat/fgab.hpp"

using namespace homcat;

namespace {

AbGroupPtr zmod(long n) { return FgAbGroup::cyclic_sum({Int(n)}); }

AbGroupPtr random_group(std::mt19937& rng, int max_gens = 3, int max_rels = 3,
                        int bound = 6) {
    std::uniform_int_distribution<int> gd(1, max_gens), rd(0, max_rels),
        val(-bound, bound);
    IntMatrix P(gd(rng), rd(rng));
    for (std::size_t i = 0; i < P.rows(); ++i)
        for (std::size_t j = 0; j < P.cols(); ++j) P(i, j) = val(rng);
    return FgAbGroup::make(P);
}

}  // namespace

TEST_CASE("invariants of pinned groups") {
    CHECK(FgAbGroup::free_group(2)->invariant_string() == "Z^2");
    CHECK(zmod(12)->invariant_string() == "Z/12");
    CHECK(FgAbGroup::cyclic_sum({2, 3})->invariant_string() == "Z/6");
    CHECK(FgAbGroup::cyclic_sum({4, 6})->invariant_string() == "Z/2 + Z/12");
    CHECK(FgAbGroup::cyclic_sum({0, 5})->invariant_string() == "Z + Z/5");
    CHECK(zmod(1)->invariant_string() == "0");
    // Z^2 / <(2, 4)> has a Z summand and a Z/2 summand
    IntMatrix P(2, 1);
    P(0, 0) = 2;
    P(1, 0) = 4;
    CHECK(FgAbGroup::make(P)->invariant_string() == "Z + Z/2");
}

TEST_CASE("element normal forms") {
    AbGroupPtr A = FgAbGroup::cyclic_sum({4, 6});
    AbElement x(A, {5, -1});
    CHECK(x.coords == std::vector<Int>({1, 5}));
    CHECK((x + x).coords == std::vector<Int>({2, 4}));
    CHECK(x.scaled(12).is_zero());
    CHECK(ab_zero(A).is_zero());
    AbElement g0 = ab_generator(A, 0);
    CHECK(g0.scaled(4).is_zero());
    CHECK_FALSE(g0.scaled(2).is_zero());
}

TEST_CASE("morphism well-definedness") {
    AbGroupPtr z4 = zmod(4), z2 = zmod(2), z8 = zmod(8);
    // Z/4 -> Z/2, 1 -> 1 is fine; Z/4 -> Z/8, 1 -> 1 is not
    CHECK(AbMorphism(z4, z2, IntMatrix{{1}}).is_well_defined());
    CHECK_FALSE(AbMorphism(z4, z8, IntMatrix{{1}}).is_well_defined());
    CHECK(AbMorphism(z4, z8, IntMatrix{{2}}).is_well_defined());
    CHECK(ab_identity(z4).is_well_defined());
    CHECK(ab_zero_morphism(z4, z8).is_well_defined());
}

TEST_CASE("kernel, cokernel, image on multiplication by 2 on Z/4") {
    AbGroupPtr z4 = zmod(4);
    AbMorphism f(z4, z4, IntMatrix{{2}});
    SubgroupArrow k = kernel(f);
    CHECK(k.group->invariant_string() == "Z/2");
    CHECK(k.inclusion.is_well_defined());
    CHECK(compose(f, k.inclusion).is_zero());
    QuotientArrow c = cokernel(f);
    CHECK(c.group->invariant_string() == "Z/2");
    CHECK(compose(c.projection, f).is_zero());
    ImageFactorization im = image_factorization(f);
    CHECK(im.image->invariant_string() == "Z/2");
    CHECK(morphisms_equal(compose(im.include, im.project), f));
    CHECK(is_surjective(im.project));
    CHECK(is_injective(im.include));
}

TEST_CASE("kernel and image factorization on random morphisms") {
    std::mt19937 rng(11);
    for (int t = 0; t < 120; ++t) {
        AbGroupPtr A = random_group(rng), B = random_group(rng);
        AbMorphism f = random_morphism(A, B, rng);
        REQUIRE(f.is_well_defined());
        SubgroupArrow k = kernel(f);
        REQUIRE(k.inclusion.is_well_defined());
        REQUIRE(is_injective(k.inclusion));
        REQUIRE(compose(f, k.inclusion).is_zero());
        QuotientArrow c = cokernel(f);
        REQUIRE(compose(c.projection, f).is_zero());
        REQUIRE(is_surjective(c.projection));
        ImageFactorization im = image_factorization(f);
        REQUIRE(im.project.is_well_defined());
        REQUIRE(im.include.is_well_defined());
        REQUIRE(morphisms_equal(compose(im.include, im.project), f));
        REQUIRE(is_surjective(im.project));
        REQUIRE(is_injective(im.include));
        // universality of the kernel: anything killed by f factors through it
        AbGroupPtr T = random_group(rng);
        AbMorphism g = random_morphism(T, A, rng);
        if (compose(f, g).is_zero()) {
            IntMatrix sys = IntMatrix::hstack(k.inclusion.mat, A->presentation());
            auto lift = solve_integer(sys, g.mat);
            REQUIRE(lift.has_value());
        }
    }
}

TEST_CASE("hom groups match the classical gcd formula") {
    // Hom(Z/m, Z/n) = Z/gcd(m, n)
    for (long m : {2, 3, 4, 6, 12})
        for (long n : {2, 3, 4, 6, 12}) {
            HomGroup hg = hom_group(zmod(m), zmod(n));
            long g = std::gcd(m, n);
            AbGroupPtr expect = zmod(g);
            CHECK(hg.group->same_invariants(*expect));
        }
    // Hom(Z, A) = A and Hom(Z/m, Z) = 0
    AbGroupPtr A = FgAbGroup::cyclic_sum({0, 4, 6});
    CHECK(hom_group(FgAbGroup::free_group(1), A).group->same_invariants(*A));
    CHECK(hom_group(zmod(5), FgAbGroup::free_group(2)).group->is_trivial());
}

TEST_CASE("hom group elements convert to and from morphisms") {
    std::mt19937 rng(23);
    for (int t = 0; t < 60; ++t) {
        AbGroupPtr A = random_group(rng), B = random_group(rng);
        HomGroup hg = hom_group(A, B);
        AbElement e = random_element(hg.group, rng);
        AbMorphism f = hg.to_morphism(e);
        REQUIRE(f.is_well_defined());
        AbElement back = hg.from_morphism(f);
        REQUIRE(back == e);
        // zero element <-> zero morphism
        REQUIRE(hg.to_morphism(ab_zero(hg.group)).is_zero());
        // additivity: (e + e) names f + f
        AbMorphism f2 = hg.to_morphism(e + e);
        REQUIRE(morphisms_equal(f2, AbMorphism(A, B, f.mat + f.mat)));
    }
}

TEST_CASE("tensor products match the classical gcd formula") {
    for (long m : {2, 3, 4, 6, 9})
        for (long n : {2, 3, 4, 6, 9}) {
            TensorProduct t = tensor(zmod(m), zmod(n));
            CHECK(t.group->same_invariants(*zmod(std::gcd(m, n))));
        }
    // A (x) Z = A
    AbGroupPtr A = FgAbGroup::cyclic_sum({0, 4, 6});
    CHECK(tensor(A, FgAbGroup::free_group(1)).group->same_invariants(*A));
    // bilinearity of pure tensors
    AbGroupPtr M = zmod(4);
    TensorProduct t = tensor(A, M);
    std::mt19937 rng(5);
    AbElement a = random_element(A, rng), b = random_element(A, rng),
              m = random_element(M, rng);
    CHECK(t.pure(a + b, m) == t.pure(a, m) + t.pure(b, m));
    CHECK(t.pure(a.scaled(3), m) == t.pure(a, m.scaled(3)));
}

TEST_CASE("tensoring is right exact") {
    // 0 -> Z -2-> Z -> Z/2 -> 0, tensored with Z/4: the tail
    // Z/4 -2-> Z/4 -> Z/2 -> 0 stays exact, injectivity is lost
    AbGroupPtr Z = FgAbGroup::free_group(1), M = zmod(4);
    AbMorphism mul2(Z, Z, IntMatrix{{2}});
    QuotientArrow q = cokernel(mul2);
    TensorProduct tZ = tensor(Z, M), tQ = tensor(q.group, M);
    AbMorphism tf = tensor_map(mul2, tZ, tZ);
    AbMorphism tp = tensor_map(q.projection, tZ, tQ);
    CHECK(is_surjective(tp));
    CHECK_FALSE(is_injective(tf));
    // im(tf) = ker(tp)
    ImageFactorization im = image_factorization(tf);
    SubgroupArrow k = kernel(tp);
    CHECK(im.image->same_invariants(*k.group));
    CHECK(compose(tp, tf).is_zero());
}

TEST_CASE("direct sums") {
    AbGroupPtr A = zmod(4), B = FgAbGroup::cyclic_sum({0, 3});
    DirectSum ds = direct_sum({A, B});
    CHECK(ds.group->invariant_string() == "Z + Z/12");
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(ds.inject[i].is_well_defined());
        CHECK(ds.project[i].is_well_defined());
    }
    CHECK(morphisms_equal(compose(ds.project[0], ds.inject[0]), ab_identity(A)));
    CHECK(morphisms_equal(compose(ds.project[1], ds.inject[1]), ab_identity(B)));
    CHECK(compose(ds.project[0], ds.inject[1]).is_zero());
}

TEST_CASE("isomorphism witnesses") {
    std::mt19937 rng(31);
    // Z/2 + Z/3 presented two ways
    AbGroupPtr A = FgAbGroup::cyclic_sum({2, 3}), B = zmod(6);
    auto w = iso_witness(A, B);
    REQUIRE(w.has_value());
    CHECK(morphisms_equal(compose(w->backward, w->forward), ab_identity(A)));
    CHECK(morphisms_equal(compose(w->forward, w->backward), ab_identity(B)));
    CHECK_FALSE(iso_witness(zmod(4), FgAbGroup::cyclic_sum({2, 2})).has_value());
    for (int t = 0; t < 60; ++t) {
        AbGroupPtr X = random_group(rng), Y = random_group(rng);
        auto v = iso_witness(X, Y);
        REQUIRE(v.has_value() == X->same_invariants(*Y));
        if (v) {
            REQUIRE(v->forward.is_well_defined());
            REQUIRE(v->backward.is_well_defined());
            REQUIRE(morphisms_equal(compose(v->backward, v->forward),
                                    ab_identity(X)));
            REQUIRE(morphisms_equal(compose(v->forward, v->backward),
                                    ab_identity(Y)));
        }
    }
}

TEST_CASE("element enumeration and inverses") {
    AbGroupPtr A = FgAbGroup::cyclic_sum({2, 6});
    std::vector<AbElement> els = all_elements(A);
    CHECK(els.size() == 12);
    for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t j = i + 1; j < els.size(); ++j)
            CHECK_FALSE(els[i] == els[j]);
    // inverse of an isomorphism
    auto w = iso_witness(A, FgAbGroup::cyclic_sum({2, 6}));
    REQUIRE(w);
    AbMorphism inv = inverse_of(w->forward);
    CHECK(morphisms_equal(inv, w->backward));
}
