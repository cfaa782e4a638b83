// Acceptance suite: one pass/fail line per criterion, with the wall-clock
// budget pinned next to each check. A criterion passes only if every check
// inside it holds AND it finishes within its budget. Checks that would
// exceed a pinned resource budget are reported as skipped, never faked.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "homcat/ladder.hpp"
#include "homcat/torsion.hpp"

using namespace homcat;

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

struct Criterion {
    int number;
    const char* title;
    double budget_seconds;
    Clock::time_point start = Clock::now();
    bool ok = true;
    std::string note;

    void check(bool c, const char* what) {
        if (!c) {
            ok = false;
            if (!note.empty()) note += "; ";
            note += what;
        }
    }

    void finish() {
        double t = std::chrono::duration<double>(Clock::now() - start).count();
        bool in_budget = t <= budget_seconds;
        bool pass = ok && in_budget;
        if (!pass) ++g_failures;
        std::printf("criterion %2d: %s  (%.1fs, budget %.0fs)  %s%s%s\n",
                    number, pass ? "PASS" : "FAIL", t, budget_seconds, title,
                    note.empty() ? "" : " -- ", note.c_str());
        std::fflush(stdout);
    }
};

AbGroupPtr zmod(long n) { return FgAbGroup::cyclic_sum({Int(n)}); }

// --------------------------------------------------------------- criterion 1

void criterion_smith() {
    Criterion c{1, "Smith normal form on 1000 random matrices", 10.0};
    std::mt19937 rng(101);
    std::uniform_int_distribution<std::size_t> dim(1, 30);
    std::uniform_int_distribution<int> val(-9, 9);
    for (int t = 0; t < 1000 && c.ok; ++t) {
        IntMatrix A(dim(rng), dim(rng));
        for (std::size_t i = 0; i < A.rows(); ++i)
            for (std::size_t j = 0; j < A.cols(); ++j) A(i, j) = val(rng);
        SmithDecomposition s = smith_normal_form(A);
        c.check(s.U * A * s.V == s.S, "U A V != S");
        c.check(s.U * s.Uinv == IntMatrix::identity(A.rows()),
                "U not unimodular");
        c.check(s.V * s.Vinv == IntMatrix::identity(A.cols()),
                "V not unimodular");
        for (std::size_t i = 0; i + 1 < s.divisors.size(); ++i)
            if (s.divisors[i] != 0 && s.divisors[i + 1] != 0)
                c.check(s.divisors[i + 1] % s.divisors[i] == 0,
                        "divisor chain broken");
    }
    c.finish();
}

// --------------------------------------------------------------- criterion 2

void criterion_homology_equivalence() {
    Criterion c{2, "kernel/cokernel homology agreement on 500 complexes",
                30.0};
    std::mt19937 rng(202);
    for (int t = 0; t < 500 && c.ok; ++t) {
        ChainComplex C = testgen::random_complex(rng);
        for (long n = C.lo(); n <= C.hi(); ++n) {
            Homology hz = homology_via_cycles(C, n);
            HomologyViaQuotient hq = homology_via_quotient(C, n);
            c.check(hz.group->same_invariants(*hq.group),
                    "homology differs between constructions");
            IsoWitness w = homology_interchange(C, n);
            c.check(morphisms_equal(compose(w.backward, w.forward),
                                    ab_identity(hz.group)) &&
                        morphisms_equal(compose(w.forward, w.backward),
                                        ab_identity(hq.group)),
                    "interchange iso is not two-sided");
        }
    }
    c.finish();
}

// --------------------------------------------------------------- criterion 3

ChainMap homotopy_built_chain_map(const ChainComplex& A, const ChainComplex& B,
                                  std::mt19937& rng) {
    std::map<long, AbMorphism> sparts;
    for (long n = A.lo(); n <= A.hi(); ++n)
        sparts.emplace(n, random_morphism(A.group(n), B.group(n + 1), rng));
    auto spart = [&](long n) -> AbMorphism {
        auto it = sparts.find(n);
        if (it != sparts.end()) return it->second;
        return ab_zero_morphism(A.group(n), B.group(n + 1));
    };
    std::map<long, AbMorphism> fparts;
    for (long n = A.lo(); n <= A.hi(); ++n) {
        IntMatrix M = B.diff(n + 1).mat * spart(n).mat +
                      spart(n - 1).mat * A.diff(n).mat;
        fparts.emplace(n, AbMorphism(A.group(n), B.group(n), std::move(M)));
    }
    return ChainMap(&A, &B, std::move(fparts));
}

void criterion_les() {
    Criterion c{3, "long exact sequences for 300 short exact sequences",
                60.0};
    std::mt19937 rng(303);

    // 100 random subcomplex sequences
    for (int t = 0; t < 100 && c.ok; ++t) {
        testgen::OwnedSES s = testgen::random_complex_ses(rng);
        c.check(s.ses->is_exact(), "subcomplex sequence not exact");
        c.check(long_exact_sequence(*s.ses).is_exact(),
                "LES of subcomplex sequence not exact");
    }
    // 100 horseshoe sequences
    for (int t = 0; t < 100 && c.ok; ++t) {
        GroupSES s = testgen::random_group_ses(rng);
        Horseshoe h = horseshoe_resolution(s);
        c.check(h.ses->is_exact(), "horseshoe sequence not exact");
        c.check(long_exact_sequence(*h.ses).is_exact(),
                "LES of horseshoe not exact");
    }
    // 100 mapping cones, with the connecting = H(f) regression
    for (int t = 0; t < 100 && c.ok; ++t) {
        ChainComplex A = testgen::random_complex(rng, 0, 2);
        ChainComplex B = testgen::random_complex(rng, 0, 2);
        ChainMap f = homotopy_built_chain_map(A, B, rng);
        ChainComplex cone = mapping_cone(f);
        std::map<long, AbMorphism> incl, proj;
        for (long n = cone.lo(); n <= cone.hi(); ++n) {
            DirectSum ds = direct_sum({A.group(n - 1), B.group(n)});
            incl.emplace(n, AbMorphism(B.group(n), cone.group(n),
                                       ds.inject[1].mat));
            proj.emplace(n, AbMorphism(cone.group(n), A.group(n - 1),
                                       ds.project[0].mat));
        }
        std::vector<AbGroupPtr> sg;
        std::vector<AbMorphism> sd;
        for (long n = A.lo(); n <= A.hi(); ++n) {
            sg.push_back(A.group(n));
            if (n > A.lo())
                sd.push_back(AbMorphism(A.group(n), A.group(n - 1),
                                        A.diff(n).mat.scaled(-1)));
        }
        ChainComplex Ashift(A.lo() + 1, sg, sd);
        ComplexSES ses{&B, &cone, &Ashift, ChainMap(&B, &cone, incl),
                       ChainMap(&cone, &Ashift, proj)};
        c.check(ses.is_exact(), "cone sequence not exact");
        c.check(long_exact_sequence(ses).is_exact(), "cone LES not exact");
        for (long n = Ashift.lo(); n <= Ashift.hi() && c.ok; ++n) {
            if (n - 1 < B.lo()) continue;
            Homology hAs = homology_via_cycles(Ashift, n);
            Homology hB = homology_via_cycles(B, n - 1);
            AbMorphism conn = connecting_morphism(ses, n, hAs, hB);
            IntMatrix M(hB.group->ngens(), hAs.group->ngens());
            for (std::size_t j = 0; j < hAs.group->ngens(); ++j) {
                std::vector<Int> z =
                    hAs.representative(ab_generator(hAs.group, j));
                M.set_col(j, hB.class_of(f.at(n - 1).mat.apply(z)).coords);
            }
            c.check(morphisms_equal(conn, AbMorphism(hAs.group, hB.group, M)),
                    "cone connecting map is not H(f)");
        }
    }
    c.finish();
}

// --------------------------------------------------------------- criterion 4

void criterion_yoneda() {
    Criterion c{4, "homology/witness correspondence on 200 random instances",
                120.0};
    std::mt19937 rng(404);
    std::uniform_int_distribution<int> kd(2, 12);
    for (int t = 0; t < 200 && c.ok; ++t) {
        ChainComplex C = testgen::random_complex(rng);
        long k = kd(rng);
        FunctorSpec T = tensor_zmod(k);
        std::uniform_int_distribution<long> nd(C.lo(), C.hi());
        long n = nd(rng);
        HomologicalYoneda y = homological_yoneda(C, T, n);
        c.check(morphisms_equal(compose(y.vinv, y.v),
                                ab_identity(y.N.group)) &&
                    morphisms_equal(compose(y.v, y.vinv),
                                    ab_identity(y.hTC.group)),
                "round trips are not identities");
        AbElement h1 = random_element(y.hTC.group, rng);
        AbElement h2 = random_element(y.hTC.group, rng);
        c.check(y.backward(y.forward(h1)) == h1, "element round trip failed");
        c.check(y.forward(h1 + h2).z == y.forward(h1).z + y.forward(h2).z,
                "bijection not additive");
        Int sc = 1 + (t % k);
        c.check(y.forward(h1.scaled(sc)).z == y.forward(h1).z.scaled(sc),
                "Z/k scalar action not preserved");
        AbGroupPtr A = testgen::random_group(rng);
        AbMorphism eta = random_morphism(C.group(n - 1), A, rng);
        c.check(y.forward(h1).component(compose(eta, C.diff(n))).is_zero(),
                "coboundary not killed");
        HomGroup cocycles = hom_group(y.Q, A);
        AbMorphism psi =
            cocycles.to_morphism(random_element(cocycles.group, rng));
        AbMorphism phi(C.group(n), A, psi.mat);
        AbMorphism m = random_morphism(A, testgen::random_group(rng), rng);
        NatWitness w = y.forward(h1);
        c.check(w.component(compose(m, phi)) ==
                    T.on_morphism(m).apply(w.component(phi)),
                "naturality probe failed");
    }
    c.finish();
}

// --------------------------------------------------------------- criterion 5

void criterion_ladders() {
    Criterion c{5, "derived ladders for 100 split sequences", 120.0};
    std::mt19937 rng(505);
    std::uniform_int_distribution<int> kd(2, 9);
    for (int t = 0; t < 100 && c.ok; ++t) {
        GroupSES s = testgen::random_group_ses(rng);
        DerivedLadderReport r = derived_ladder(s, tensor_zmod(kd(rng)));
        c.check(r.ladder.applicable && r.ladder.all_squares_commute,
                "a ladder square does not commute");
        c.check(r.tor_sequence_exact, "six-term sequence not exact");
    }
    c.finish();
}

// --------------------------------------------------------------- criterion 6

/// positionwise free complex with vanishing homology below degree n
ChainComplex uct_instance(std::mt19937& rng, long n) {
    AbGroupPtr X = testgen::random_group(rng);
    Resolution R = free_resolution(X);
    std::uniform_int_distribution<int> fr(1, 2);
    std::vector<AbGroupPtr> groups;
    std::vector<AbMorphism> diffs;
    long len = n + 2;
    std::vector<std::size_t> extra(static_cast<std::size_t>(len), 0);
    for (long i = 0; i + 1 < len; i += 2)
        extra[static_cast<std::size_t>(i)] =
            extra[static_cast<std::size_t>(i + 1)] =
                static_cast<std::size_t>(fr(rng));
    for (long i = 0; i < len; ++i) {
        std::size_t base = 0;
        if (i == n) base = R.P.group(0)->ngens();
        if (i == n + 1) base = R.P.group(1)->ngens();
        groups.push_back(
            FgAbGroup::free_group(base + extra[static_cast<std::size_t>(i)]));
    }
    for (long i = 1; i < len; ++i) {
        IntMatrix M(groups[static_cast<std::size_t>(i - 1)]->ngens(),
                    groups[static_cast<std::size_t>(i)]->ngens());
        if (i == n + 1) {
            const IntMatrix& d = R.P.diff(1).mat;
            for (std::size_t r = 0; r < d.rows(); ++r)
                for (std::size_t cc = 0; cc < d.cols(); ++cc)
                    M(r, cc) = d(r, cc);
        }
        if (i % 2 == 1 && extra[static_cast<std::size_t>(i)] ==
                              extra[static_cast<std::size_t>(i - 1)]) {
            std::size_t bi = groups[static_cast<std::size_t>(i)]->ngens() -
                             extra[static_cast<std::size_t>(i)];
            std::size_t bm = groups[static_cast<std::size_t>(i - 1)]->ngens() -
                             extra[static_cast<std::size_t>(i - 1)];
            for (std::size_t k = 0; k < extra[static_cast<std::size_t>(i)]; ++k)
                M(bm + k, bi + k) = 1;
        }
        diffs.emplace_back(groups[static_cast<std::size_t>(i)],
                           groups[static_cast<std::size_t>(i - 1)], M);
    }
    return ChainComplex(0, std::move(groups), std::move(diffs));
}

void criterion_abelian_uct() {
    Criterion c{6, "universal coefficients for 100 free complexes", 60.0};
    std::mt19937 rng(606);
    std::uniform_int_distribution<long> nd(1, 3);
    for (int t = 0; t < 100 && c.ok; ++t) {
        long n = nd(rng);
        ChainComplex C = uct_instance(rng, n);
        AbGroupPtr A = testgen::random_group(rng);
        UctReport r = abelian_uct_check(C, A, n);
        c.check(r.preconditions_ok, "instance violates hypotheses");
        c.check(r.passed(), "H^n does not match Hom(H_n, A)");
    }
    c.finish();
}

// --------------------------------------------------------------- criterion 7

std::vector<GroupPtr> small_group_pool() {
    std::vector<GroupPtr> pool;
    for (int n = 2; n <= 9; ++n) pool.push_back(cyclic_group(n));  // 8
    pool.push_back(klein_four());
    pool.push_back(quaternion_group());
    pool.push_back(symmetric_group(3));
    pool.push_back(symmetric_group(4));
    pool.push_back(alternating_group(4));
    for (int n = 4; n <= 8; ++n) pool.push_back(dihedral_group(n));  // 5
    pool.push_back(direct_product(cyclic_group(2), cyclic_group(4)));
    pool.push_back(direct_product(cyclic_group(3), cyclic_group(3)));
    pool.push_back(direct_product(cyclic_group(2), symmetric_group(3)));
    pool.push_back(direct_product(cyclic_group(3), klein_four()));
    return pool;  // 21 groups, orders <= 24
}

/// homology of Z/n from the hand-built periodic resolution:
/// Z <-0- Z <-n- Z <-0- Z <-n- Z
AbGroupPtr cyclic_homology_oracle(long n, long degree) {
    AbGroupPtr Z = FgAbGroup::free_group(1);
    std::vector<AbGroupPtr> groups(5, Z);
    std::vector<AbMorphism> diffs;
    for (int i = 1; i <= 4; ++i)
        diffs.push_back(AbMorphism(
            Z, Z,
            i % 2 == 0 ? IntMatrix::identity(1).scaled(n) : IntMatrix(1, 1)));
    return homology_via_cycles(ChainComplex(0, groups, diffs), degree).group;
}

void criterion_group_homology() {
    Criterion c{7, "group homology golden values, two independent routes",
                300.0};
    std::vector<GroupPtr> pool = small_group_pool();
    c.check(pool.size() >= 20, "pool too small");
    for (const GroupPtr& G : pool)
        c.check(group_homology(G, 1)->same_invariants(
                    *abelianisation(G).group),
                "H_1 differs from the abelianisation");
    for (long n = 2; n <= 8; ++n) {
        GroupPtr G = cyclic_group(static_cast<int>(n));
        c.check(group_homology(G, 2)->same_invariants(
                    *cyclic_homology_oracle(n, 2)) &&
                    group_homology(G, 2)->is_trivial(),
                "H_2(Z/n) != 0");
        c.check(group_homology(G, 3)->same_invariants(
                    *cyclic_homology_oracle(n, 3)) &&
                    group_homology(G, 3)->invariant_string() ==
                        "Z/" + std::to_string(n),
                "H_3(Z/n) != Z/n");
    }
    auto h2_both_ways = [&](const GroupPtr& G, const char* expect) {
        AbGroupPtr bar = group_homology(G, 2);
        AbGroupPtr counted = hom_counting_H2(G);
        c.check(bar->invariant_string() == expect &&
                    counted->same_invariants(*bar),
                "H_2 golden value mismatch");
    };
    h2_both_ways(klein_four(), "Z/2");
    h2_both_ways(quaternion_group(), "0");
    h2_both_ways(symmetric_group(3), "0");
    h2_both_ways(dihedral_group(4), "Z/2");
    h2_both_ways(alternating_group(4), "Z/2");
    c.finish();
}

// --------------------------------------------------------------- criterion 8

void criterion_centr_ext() {
    Criterion c{8, "cocycle class counts equal cohomology cardinalities",
                120.0};
    auto card = [](const AbGroupPtr& A) {
        Int n(1);
        for (const Int& d : A->torsion()) n *= d;
        return A->free_rank() == 0 ? n : Int(0);
    };
    struct Case {
        GroupPtr X, A;
        long coeff, expect;
    } cases[] = {{cyclic_group(2), cyclic_group(2), 2, 2},
                 {cyclic_group(3), cyclic_group(3), 3, 3},
                 {klein_four(), cyclic_group(2), 2, 8}};
    for (const Case& cs : cases) {
        CentralExtensionClasses e = enumerate_central_extensions(cs.X, cs.A);
        c.check(static_cast<long>(e.class_count) == cs.expect,
                "enumeration count wrong");
        AbGroupPtr H2 = group_cohomology(cs.X, 2, zmod(cs.coeff));
        c.check(card(H2) == cs.expect, "cohomology count wrong");
    }
    c.finish();
}

// --------------------------------------------------------------- criterion 9

GroupExtension extension_from_normal(const GroupPtr& E, const Subgroup& N) {
    std::vector<int> els = N.elements;
    std::map<int, int> idx;
    for (std::size_t i = 0; i < els.size(); ++i)
        idx[els[static_cast<std::size_t>(i)]] = static_cast<int>(i);
    std::vector<std::vector<int>> tab(els.size(),
                                      std::vector<int>(els.size()));
    for (std::size_t a = 0; a < els.size(); ++a)
        for (std::size_t b = 0; b < els.size(); ++b)
            tab[a][b] = idx.at(E->mul(els[a], els[b]));
    GroupPtr A = FiniteGroup::from_cayley(std::move(tab),
                                          idx.at(E->identity()));
    QuotientGroup q = quotient_group(E, N);
    return {A, E, q.group, GroupHom{A, E, els}, q.projection};
}

void criterion_five_term() {
    Criterion c{9, "five-term tails for named and random extensions", 120.0};
    {
        GroupPtr Q = quaternion_group();
        StallingsTail t = stallings_tail(
            extension_from_normal(Q, center(Q)));
        c.check(t.passed && t.L0->invariant_string() == "Z/2",
                "quaternion tail wrong");
    }
    {
        GroupPtr S = symmetric_group(3);
        int cyc = -1;
        for (int g = 0; g < 6; ++g)
            if (S->element_order(g) == 3) { cyc = g; break; }
        StallingsTail t = stallings_tail(
            extension_from_normal(S, subgroup_generated(S, {cyc})));
        c.check(t.passed, "symmetric-group tail wrong");
    }
    std::mt19937 rng(909);
    std::vector<GroupPtr> pool = small_group_pool();
    std::uniform_int_distribution<std::size_t> pd(0, pool.size() - 1);
    for (int t = 0; t < 30 && c.ok; ++t) {
        GroupPtr E = pool[pd(rng)];
        std::uniform_int_distribution<int> ed(0, E->order() - 1);
        Subgroup N = normal_closure(E, {ed(rng)});
        StallingsTail st = stallings_tail(extension_from_normal(E, N));
        c.check(st.passed, "random extension tail failed");
    }
    c.finish();
}

// -------------------------------------------------------------- criterion 10

void criterion_torsion_uct() {
    Criterion c{10, "torsion classes and the evaluation pairing at A_5",
                600.0};
    GroupPtr a5 = alternating_group(5);
    AcyclicityReport r = acyclicity_class(a5, 0, 1);
    c.check(r.in_class.size() == 2 && r.in_class[0] && !r.in_class[1],
            "A_5 class flags wrong");
    c.check(r.flags_monotone(), "flags not monotone");
    c.check(r.L.size() >= 2 && r.L[1]->invariant_string() == "Z/2",
            "L_1(A_5) != Z/2");
    c.check(hom_counting_H2(a5)->invariant_string() == "Z/2",
            "hom-counted H_2(A_5) != Z/2");

    UctPairingReport u = uct_pairing(a5, 1, zmod(2));
    c.check(u.precondition_ok, "A_5 should be 0-acyclic");
    c.check(u.ext_side && u.ext_side->invariant_string() == "Z/2" &&
                u.hom_side->invariant_string() == "Z/2",
            "pairing sides wrong");
    c.check(u.well_defined && u.bijective, "pairing not bijective");

    // SL(2,5) in degree 1 needs a degree-3 bar basis of 119^3 tuples,
    // beyond the pinned 300000-tuple budget: report as skipped
    try {
        uct_pairing(sl2(5), 1, zmod(2));
        c.check(false, "SL(2,5) pairing unexpectedly in budget");
    } catch (const BudgetError&) {
        std::printf("              SKIP  uct_pairing(SL(2,5), 1, Z/2): "
                    "bar basis over tuple budget\n");
    }
    c.finish();
}

// -------------------------------------------------------------- criterion 11

GroupExtension product_extension(const GroupPtr& A, const GroupPtr& X) {
    GroupPtr E = direct_product(A, X);
    int nx = X->order();
    std::vector<int> incl(static_cast<std::size_t>(A->order()));
    for (int a = 0; a < A->order(); ++a)
        incl[static_cast<std::size_t>(a)] = a * nx + X->identity();
    std::vector<int> proj(static_cast<std::size_t>(E->order()));
    for (int g = 0; g < E->order(); ++g)
        proj[static_cast<std::size_t>(g)] = g % nx;
    return {A, E, X, GroupHom{A, E, incl}, GroupHom{E, X, proj}};
}

void criterion_uce() {
    Criterion c{11, "universal central extension certificate for SL(2,5)",
                600.0};
    GroupPtr S = sl2(5);
    Subgroup Z = center(S);
    QuotientGroup q = quotient_group(S, Z);
    GroupPtr X = q.group;
    GroupPtr z2 = cyclic_group(2);
    std::vector<int> incl(2);
    incl[0] = S->identity();
    for (int g : Z.elements)
        if (g != S->identity()) incl[1] = g;
    GroupExtension e{z2, S, X, GroupHom{z2, S, incl}, q.projection};
    c.check(e.is_valid(), "double cover extension invalid");

    std::vector<GroupExtension> probes{e, product_extension(z2, X),
                                       product_extension(cyclic_group(3), X)};
    UCECertificate cert = verify_uce(e, probes);
    c.check(cert.base_perfect, "clause 1: base not perfect");
    c.check(cert.extension_central, "clause 2: not central");
    c.check(cert.middle_perfect, "clause 3: middle not perfect");
    c.check(cert.kernel_matches_h2, "clause 4: kernel != H_2(base)");
    c.check(cert.probes_unique, "clause 5: morphism counts != 1");
    c.check(cert.valid, "certificate invalid");

    // negative control: the trivial cover of A_5 fails the kernel clause
    // and admits no lift into the double cover
    GroupExtension triv = product_extension(cyclic_group(1), X);
    UCECertificate bad = verify_uce(triv, {e});
    c.check(!bad.valid && !bad.kernel_matches_h2,
            "trivial cover not rejected");
    c.check(bad.probe_morphism_counts.size() == 1 &&
                bad.probe_morphism_counts[0] == 0,
            "trivial cover has a lift to the double cover");

    // negative control: non-perfect base fails clause 1
    GroupPtr s3 = symmetric_group(3);
    UCECertificate bad2 = verify_uce(product_extension(cyclic_group(1), s3), {});
    c.check(!bad2.valid && !bad2.base_perfect &&
                bad2.failing_clause == "base not perfect",
            "non-perfect base not rejected with clause 1");
    c.finish();
}

// -------------------------------------------------------------- criterion 12

void criterion_functor_contracts() {
    Criterion c{12, "reflector contracts on 50 random group pairs", 60.0};
    std::mt19937 rng(1212);
    std::vector<GroupPtr> pool = small_group_pool();
    std::uniform_int_distribution<std::size_t> pd(0, pool.size() - 1);
    std::uniform_int_distribution<long> kd(2, 8);
    for (int t = 0; t < 50 && c.ok; ++t) {
        GroupPtr G = pool[pd(rng)];
        GroupPtr H = pool[pd(rng)];
        long k = kd(rng);
        auto reflect = [&](const GroupPtr& g) {
            return tensor(abelianisation(g).group, zmod(k)).group;
        };
        // finite products are preserved, with an explicit isomorphism
        AbGroupPtr lhs = reflect(direct_product(G, H));
        AbGroupPtr rhs = direct_sum({reflect(G), reflect(H)}).group;
        auto w = iso_witness(lhs, rhs);
        c.check(w.has_value(), "product not preserved");
        if (w)
            c.check(morphisms_equal(compose(w->backward, w->forward),
                                    ab_identity(lhs)),
                    "product witness not two-sided");
        // the exponent-k reflector factors through the abelianisation:
        // computing it as (ab G)/k(ab G) gives the same group
        AbGroupPtr ab = abelianisation(G).group;
        QuotientArrow modk = cokernel(
            AbMorphism(ab, ab, IntMatrix::identity(ab->ngens()).scaled(k)));
        c.check(reflect(G)->same_invariants(*modk.group),
                "reflector disagrees with ab-then-quotient");
        // and the underlying functor data obeys the functor laws
        c.check(functor_contract_check(tensor_zmod(k),
                                       testgen::random_group(rng),
                                       testgen::random_group(rng), rng),
                "functor law violated");
    }
    c.finish();
}

}  // namespace

int main() {
    criterion_smith();
    criterion_homology_equivalence();
    criterion_les();
    criterion_yoneda();
    criterion_ladders();
    criterion_abelian_uct();
    criterion_group_homology();
    criterion_centr_ext();
    criterion_five_term();
    criterion_torsion_uct();
    criterion_uce();
    criterion_functor_contracts();
    if (g_failures)
        std::printf("%d criterion(s) FAILED\n", g_failures);
    else
        std::printf("all 12 criteria passed\n");
    return g_failures ? 1 : 0;
}
