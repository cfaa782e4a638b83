// homcat: exact homological computations for finitely generated abelian
// groups and finite groups.
//
// Exit codes: 0 success, 2 parse error, 3 precondition failure, 4 resource
// budget exceeded, 5 verification failure.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homcat/derived.hpp"
#include "homcat/io.hpp"
#include "homcat/torsion.hpp"

namespace {

using namespace homcat;
using io::canonical;
using io::json;
using io::yes_no;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitBudget = 4;
constexpr int kExitVerification = 5;

/// re-point an extension parsed from its own file at the groups of `e` so
/// pointer-identity checks apply; the multiplication tables must agree
GroupExtension rebase_extension(const GroupExtension& f, const GroupPtr& A,
                                const GroupPtr& X) {
    auto same_table = [](const GroupPtr& a, const GroupPtr& b) {
        if (a->order() != b->order() || a->identity() != b->identity())
            return false;
        for (int x = 0; x < a->order(); ++x)
            for (int y = 0; y < a->order(); ++y)
                if (a->mul(x, y) != b->mul(x, y)) return false;
        return true;
    };
    GroupPtr newA = f.A, newX = f.X;
    if (A && same_table(f.A, A)) newA = A;
    if (X) {
        if (!same_table(f.X, X))
            throw std::invalid_argument(
                "extensions are over different base groups");
        newX = X;
    }
    return GroupExtension{newA, f.E, newX, GroupHom{newA, f.E, f.incl.map},
                          GroupHom{f.E, newX, f.proj.map}};
}

long require_coeff(const std::string& s) { return io::parse_coeff(s); }

FunctorSpec parse_functor(const std::string& s) {
    if (s.rfind("tensor:", 0) == 0) {
        try {
            long k = std::stol(s.substr(7));
            if (k >= 2) return tensor_zmod(k);
        } catch (...) {
        }
    }
    throw ParseError("functor must be \"tensor:k\" with k >= 2: " + s);
}

// ----------------------------------------------------------------- abelian

int run_abelian_snf(const std::string& file) {
    IntMatrix A = io::parse_matrix(io::load_json(file));
    SmithDecomposition s = smith_normal_form(A);
    std::cout << "divisors:";
    for (const Int& d : s.divisors)
        if (d != 0) std::cout << " " << d.get_str();
    std::cout << "\n";
    std::cout << "rank: " << s.rank() << "\n";
    return kExitOk;
}

int run_abelian_homology(const std::string& file, long degree) {
    ChainComplex C = io::parse_complex(io::load_json(file));
    Homology h = homology_via_cycles(C, degree);
    std::cout << "H_" << degree << " ≅ " << canonical(h.group) << "\n";
    return kExitOk;
}

int run_abelian_les(const std::string& file) {
    json doc = io::load_json(file);
    if (!doc.contains("ses")) throw ParseError("expected key \"ses\"");
    const json& j = doc["ses"];
    for (const char* key : {"sub", "total", "quotient", "incl", "proj"})
        if (!j.contains(key))
            throw ParseError(std::string("ses: missing key \"") + key + "\"");
    ChainComplex A = io::parse_complex(j["sub"]);
    ChainComplex B = io::parse_complex(j["total"]);
    ChainComplex C = io::parse_complex(j["quotient"]);
    auto chain_map = [](const ChainComplex& src, const ChainComplex& dst,
                        const json& mats, const char* name) {
        std::map<long, AbMorphism> parts;
        for (std::size_t i = 0; i < mats.size(); ++i) {
            long n = src.lo() + static_cast<long>(i);
            parts.emplace(n, AbMorphism(src.group(n), dst.group(n),
                                        io::matrix_from_json(mats[i])));
        }
        ChainMap f(&src, &dst, std::move(parts));
        if (!f.is_chain_map())
            throw std::invalid_argument(std::string(name) +
                                        " is not a chain map");
        return f;
    };
    ComplexSES s{&A, &B, &C, chain_map(A, B, j["incl"], "incl"),
                 chain_map(B, C, j["proj"], "proj"), {}};
    if (!s.is_exact())
        throw std::invalid_argument("the three complexes are not short exact");
    LongExactSequence les = long_exact_sequence(s);
    for (std::size_t i = 0; i < les.groups.size(); ++i)
        std::cout << les.labels[i] << " ≅ " << canonical(les.groups[i])
                  << "\n";
    bool ok = les.is_exact();
    std::cout << "exact: " << yes_no(ok) << "\n";
    return ok ? kExitOk : kExitVerification;
}

int run_abelian_derived(const std::string& file, const std::string& functor,
                        long degree) {
    AbGroupPtr X = io::parse_abgroup(io::load_json(file));
    FunctorSpec T = parse_functor(functor);
    AbGroupPtr L = left_derived(T, degree, X);
    std::cout << "L_" << degree << " ≅ " << canonical(L) << "\n";
    return kExitOk;
}

int run_abelian_ext(const std::string& xfile, const std::string& afile,
                    long degree) {
    AbGroupPtr X = io::parse_abgroup(io::load_json(xfile));
    AbGroupPtr A = io::parse_abgroup(io::load_json(afile));
    std::cout << "Ext^" << degree << " ≅ "
              << canonical(ext_group(X, A, degree)) << "\n";
    return kExitOk;
}

int run_abelian_yoneda(const std::string& file, const std::string& functor,
                       long degree) {
    ChainComplex C = io::parse_complex(io::load_json(file));
    FunctorSpec T = parse_functor(functor);
    HomologicalYoneda y = homological_yoneda(C, T, degree);
    std::vector<AbElement> classes = all_elements(y.hTC.group);
    bool ok = true;
    for (const AbElement& h : classes) {
        // element coordinates are kept in normal form, so direct comparison
        // decides equality
        if (y.backward(y.forward(h)).coords != h.coords) ok = false;
    }
    if (ok)
        std::cout << "round-trip OK, " << classes.size() << " classes\n";
    else
        std::cout << "round-trip FAILED\n";
    return ok ? kExitOk : kExitVerification;
}

int run_abelian_uct(const std::string& cfile, const std::string& afile,
                    long degree) {
    ChainComplex C = io::parse_complex(io::load_json(cfile));
    AbGroupPtr A = io::parse_abgroup(io::load_json(afile));
    UctReport r = abelian_uct_check(C, A, degree);
    if (!r.preconditions_ok)
        throw std::invalid_argument("uct preconditions: " +
                                    r.precondition_failure);
    std::cout << "H^" << degree << " ≅ " << canonical(r.cohomology_n)
              << "\n";
    std::cout << "Hom(H_" << degree << ", A) ≅ " << canonical(r.hom_side)
              << "\n";
    std::cout << "lower cohomology vanishes: " << yes_no(r.lower_vanishing)
              << "\n";
    std::cout << "isomorphic: " << yes_no(r.top_iso) << "\n";
    return r.passed() ? kExitOk : kExitVerification;
}

// ------------------------------------------------------------------- group

int run_group_ab(const std::string& file) {
    GroupPtr G = io::group_from_json(io::load_json(file));
    std::cout << canonical(abelianisation(G).group) << "\n";
    return kExitOk;
}

int run_group_commutator(const std::string& file) {
    GroupPtr G = io::group_from_json(io::load_json(file));
    std::cout << "|[G,G]| = " << commutator_subgroup(G).elements.size() << "\n";
    return kExitOk;
}

int run_group_center(const std::string& file) {
    GroupPtr G = io::group_from_json(io::load_json(file));
    std::cout << "|Z(G)| = " << center(G).elements.size() << "\n";
    return kExitOk;
}

int run_group_homology(const std::string& file, long degree,
                       const std::string& coeff) {
    GroupPtr G = io::group_from_json(io::load_json(file));
    long k = require_coeff(coeff);
    std::cout << canonical(group_homology(G, static_cast<int>(degree), k))
              << "\n";
    return kExitOk;
}

int run_group_cohomology(const std::string& file, long degree,
                         const std::string& coeff) {
    GroupPtr G = io::group_from_json(io::load_json(file));
    long k = require_coeff(coeff);
    if (k == 0)
        throw std::invalid_argument(
            "cohomology needs finite coefficients z/k");
    AbGroupPtr A = FgAbGroup::cyclic_sum({Int(k)});
    std::cout << canonical(group_cohomology(G, static_cast<int>(degree), A))
              << "\n";
    return kExitOk;
}

int run_group_stallings(const std::string& file) {
    GroupExtension e = io::extension_from_json(io::load_json(file));
    if (!e.is_valid())
        throw std::invalid_argument("input is not a group extension");
    StallingsTail t = stallings_tail(e);
    std::cout << "K/[K,E] ≅ " << canonical(t.L0) << "\n";
    std::cout << "ker(gamma) ≅ " << canonical(t.ker_gamma) << "\n";
    std::cout << "exact at ab(E): " << yes_no(t.exact_at_middle) << "\n";
    std::cout << "ab(E) -> ab(X) surjective: " << yes_no(t.fstar_surjective)
              << "\n";
    std::cout << "H_2(X) surjects onto ker(gamma): "
              << yes_no(t.h2_surjection_exists) << "\n";
    std::cout << "five-term tail: " << (t.passed ? "OK" : "FAILED") << "\n";
    return t.passed ? kExitOk : kExitVerification;
}

// --------------------------------------------------------------------- ext

int run_ext_check(const std::string& file) {
    GroupExtension e = io::extension_from_json(io::load_json(file));
    std::cout << "valid: " << yes_no(e.is_valid()) << "\n";
    return kExitOk;
}

int run_ext_central(const std::string& file) {
    GroupExtension e = io::extension_from_json(io::load_json(file));
    if (!e.is_valid())
        throw std::invalid_argument("input is not a group extension");
    std::cout << "central: " << yes_no(is_central_extension(e)) << "\n";
    return kExitOk;
}

int run_ext_central2(const std::string& file) {
    json doc = io::load_json(file);
    if (!doc.contains("double")) throw ParseError("expected key \"double\"");
    const json& j = doc["double"];
    for (const char* key : {"objects", "horizontal", "vertical"})
        if (!j.contains(key))
            throw ParseError(std::string("double: missing key \"") + key +
                             "\"");
    DoubleExtension d;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            d.obj[r][c] = io::group_from_json(j["objects"][r][c]);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 2; ++c)
            d.h[r][c] = GroupHom{d.obj[r][c], d.obj[r][c + 1],
                                 j["horizontal"][r][c].get<std::vector<int>>()};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 3; ++c)
            d.v[r][c] = GroupHom{d.obj[r][c], d.obj[r + 1][c],
                                 j["vertical"][r][c].get<std::vector<int>>()};
    std::cout << "valid: " << yes_no(d.is_valid()) << "\n";
    std::cout << "central: " << yes_no(double_is_central(d)) << "\n";
    return kExitOk;
}

int run_ext_congruent(const std::string& f1, const std::string& f2) {
    GroupExtension e = io::extension_from_json(io::load_json(f1));
    GroupExtension f = io::extension_from_json(io::load_json(f2));
    GroupExtension fr = rebase_extension(f, e.A, e.X);
    if (fr.A != e.A)
        throw std::invalid_argument("extensions are over different kernels");
    std::cout << "congruent: " << to_string(extensions_congruent(e, fr))
              << "\n";
    return kExitOk;
}

int run_ext_enumerate(const std::string& base, const std::string& kernel) {
    GroupPtr X = io::group_from_json(io::load_json(base));
    GroupPtr A = io::group_from_json(io::load_json(kernel));
    CentralExtensionClasses c = enumerate_central_extensions(X, A);
    std::cout << c.class_count << " congruence classes\n";
    return kExitOk;
}

int run_ext_uce_verify(const std::string& file, const std::string& probes) {
    GroupExtension e = io::extension_from_json(io::load_json(file));
    if (!e.is_valid())
        throw std::invalid_argument("input is not a group extension");
    std::vector<std::string> probe_files;
    for (const auto& entry : std::filesystem::directory_iterator(probes))
        if (entry.path().extension() == ".json")
            probe_files.push_back(entry.path().string());
    std::sort(probe_files.begin(), probe_files.end());
    std::vector<GroupExtension> lib;
    for (const std::string& p : probe_files)
        lib.push_back(rebase_extension(
            io::extension_from_json(io::load_json(p)), nullptr, e.X));
    UCECertificate c = verify_uce(e, lib);
    std::cout << "base perfect: " << yes_no(c.base_perfect) << "\n";
    std::cout << "extension central: " << yes_no(c.extension_central) << "\n";
    std::cout << "middle perfect: " << yes_no(c.middle_perfect) << "\n";
    std::cout << "kernel matches H_2(base): " << yes_no(c.kernel_matches_h2)
              << "\n";
    for (std::size_t i = 0; i < lib.size(); ++i)
        std::cout << "morphisms to probe " << i + 1 << " ("
                  << std::filesystem::path(probe_files[i]).filename().string()
                  << "): " << c.probe_morphism_counts[i] << "\n";
    std::cout << "certificate: " << (c.valid ? "valid" : "INVALID") << "\n";
    if (!c.valid) std::cout << "failing clause: " << c.failing_clause << "\n";
    return c.valid ? kExitOk : kExitVerification;
}

int run_ext_acyclicity(const std::string& file, long k, long n_max) {
    GroupPtr G = io::group_from_json(io::load_json(file));
    AcyclicityReport r = acyclicity_class(G, k, static_cast<int>(n_max));
    for (std::size_t i = 0; i < r.L.size(); ++i)
        std::cout << "L_" << i << " ≅ " << canonical(r.L[i]) << "\n";
    for (std::size_t i = 0; i < r.in_class.size(); ++i)
        std::cout << "T_" << i << ": " << yes_no(r.in_class[i]) << "\n";
    return kExitOk;
}

int run_ext_uct(const std::string& file, long degree,
                const std::string& coeff) {
    GroupPtr G = io::group_from_json(io::load_json(file));
    long k = require_coeff(coeff);
    if (k == 0)
        throw std::invalid_argument("uct needs finite coefficients z/k");
    AbGroupPtr M = FgAbGroup::cyclic_sum({Int(k)});
    UctPairingReport r = uct_pairing(G, static_cast<int>(degree), M);
    if (!r.precondition_ok)
        throw std::invalid_argument(
            "group is not acyclic enough for this degree");
    std::cout << "Ext side ≅ " << canonical(r.ext_side) << "\n";
    std::cout << "Hom side ≅ " << canonical(r.hom_side) << "\n";
    std::cout << "well defined: " << yes_no(r.well_defined) << "\n";
    std::cout << "pairing bijective: " << yes_no(r.bijective) << "\n";
    return r.passed ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    // HOMCAT_THREADS caps parallelism; all computations here run on one
    // thread, which respects any positive cap. Reject invalid values.
    if (const char* tv = std::getenv("HOMCAT_THREADS")) {
        char* end = nullptr;
        long n = std::strtol(tv, &end, 10);
        if (!end || *end != '\0' || n < 1) {
            std::cerr << "HOMCAT_THREADS must be a positive integer\n";
            return kExitParse;
        }
    }

    CLI::App app{"exact homological computations for abelian and finite groups"};
    app.require_subcommand(1);

    std::string file, file2, functor = "tensor:2", coeff = "z";
    long degree = 0, exponent = 0, n_max = 1;
    int rc = kExitOk;
    auto set = [&rc](auto fn) {
        return [&rc, fn]() { rc = fn(); };
    };

    CLI::App* ab = app.add_subcommand("abelian", "finitely generated abelian groups and complexes");
    ab->require_subcommand(1);
    {
        CLI::App* c = ab->add_subcommand("snf", "Smith normal form divisors");
        c->add_option("file", file, "matrix file")->required();
        c->callback(set([&] { return run_abelian_snf(file); }));
    }
    {
        CLI::App* c = ab->add_subcommand("homology", "homology of a complex");
        c->add_option("file", file)->required();
        c->add_option("--degree", degree, "homology degree")->required();
        c->callback(set([&] { return run_abelian_homology(file, degree); }));
    }
    {
        CLI::App* c = ab->add_subcommand("les", "long exact homology sequence");
        c->add_option("file", file, "short exact sequence of complexes")->required();
        c->callback(set([&] { return run_abelian_les(file); }));
    }
    {
        CLI::App* c = ab->add_subcommand("derived", "left derived functor values");
        c->add_option("file", file, "abelian group file")->required();
        c->add_option("--functor", functor, "tensor:k");
        c->add_option("--degree", degree)->required();
        c->callback(set([&] { return run_abelian_derived(file, functor, degree); }));
    }
    {
        CLI::App* c = ab->add_subcommand("ext", "Ext groups of abelian groups");
        c->add_option("file", file, "source group")->required();
        c->add_option("coefficients", file2, "coefficient group")->required();
        c->add_option("--degree", degree)->required();
        c->callback(set([&] { return run_abelian_ext(file, file2, degree); }));
    }
    {
        CLI::App* c = ab->add_subcommand("yoneda", "homology/witness round trip");
        c->add_option("file", file)->required();
        c->add_option("--functor", functor, "tensor:k");
        c->add_option("--degree", degree)->required();
        c->callback(set([&] { return run_abelian_yoneda(file, functor, degree); }));
    }
    {
        CLI::App* c = ab->add_subcommand("uct", "universal coefficients for free complexes");
        c->add_option("file", file, "complex")->required();
        c->add_option("coefficients", file2, "coefficient group")->required();
        c->add_option("--degree", degree)->required();
        c->callback(set([&] { return run_abelian_uct(file, file2, degree); }));
    }

    CLI::App* gp = app.add_subcommand("group", "finite groups");
    gp->require_subcommand(1);
    {
        CLI::App* c = gp->add_subcommand("ab", "abelianisation invariants");
        c->add_option("file", file)->required();
        c->callback(set([&] { return run_group_ab(file); }));
    }
    {
        CLI::App* c = gp->add_subcommand("commutator", "commutator subgroup order");
        c->add_option("file", file)->required();
        c->callback(set([&] { return run_group_commutator(file); }));
    }
    {
        CLI::App* c = gp->add_subcommand("center", "center order");
        c->add_option("file", file)->required();
        c->callback(set([&] { return run_group_center(file); }));
    }
    {
        CLI::App* c = gp->add_subcommand("homology", "group homology");
        c->add_option("file", file)->required();
        c->add_option("--degree", degree)->required();
        c->add_option("--coeff", coeff, "z or z/k");
        c->callback(set([&] { return run_group_homology(file, degree, coeff); }));
    }
    {
        CLI::App* c = gp->add_subcommand("cohomology", "group cohomology");
        c->add_option("file", file)->required();
        c->add_option("--degree", degree)->required();
        c->add_option("--coeff", coeff, "z/k")->required();
        c->callback(set([&] { return run_group_cohomology(file, degree, coeff); }));
    }
    {
        CLI::App* c = gp->add_subcommand("stallings", "five-term tail of an extension");
        c->add_option("file", file, "extension file")->required();
        c->callback(set([&] { return run_group_stallings(file); }));
    }

    CLI::App* ex = app.add_subcommand("ext", "extensions and torsion classes");
    ex->require_subcommand(1);
    {
        CLI::App* c = ex->add_subcommand("check", "validate an extension");
        c->add_option("file", file)->required();
        c->callback(set([&] { return run_ext_check(file); }));
    }
    {
        CLI::App* c = ex->add_subcommand("central", "centrality of an extension");
        c->add_option("file", file)->required();
        c->callback(set([&] { return run_ext_central(file); }));
    }
    {
        CLI::App* c = ex->add_subcommand("central2", "double-extension centrality");
        c->add_option("file", file, "3x3 grid file")->required();
        c->callback(set([&] { return run_ext_central2(file); }));
    }
    {
        CLI::App* c = ex->add_subcommand("congruent", "congruence of two extensions");
        c->add_option("file1", file)->required();
        c->add_option("file2", file2)->required();
        c->callback(set([&] { return run_ext_congruent(file, file2); }));
    }
    {
        CLI::App* c = ex->add_subcommand("enumerate", "central extensions by cocycles");
        c->add_option("--base", file)->required();
        c->add_option("--kernel", file2)->required();
        c->callback(set([&] { return run_ext_enumerate(file, file2); }));
    }
    {
        CLI::App* c = ex->add_subcommand("uce-verify", "universal central extension certificate");
        c->add_option("file", file, "extension file")->required();
        c->add_option("--probes", file2, "directory of probe extensions")->required();
        c->callback(set([&] { return run_ext_uce_verify(file, file2); }));
    }
    {
        CLI::App* c = ex->add_subcommand("acyclicity", "torsion-class membership");
        c->add_option("file", file)->required();
        c->add_option("--exponent", exponent, "reflector exponent k (0 = integral)");
        c->add_option("--max", n_max, "largest class index");
        c->callback(set([&] { return run_ext_acyclicity(file, exponent, n_max); }));
    }
    {
        CLI::App* c = ex->add_subcommand("uct", "evaluation pairing Ext vs Hom");
        c->add_option("file", file)->required();
        c->add_option("--degree", degree)->required();
        c->add_option("--coeff", coeff, "z/k")->required();
        c->callback(set([&] { return run_ext_uct(file, degree, coeff); }));
    }

    try {
        app.parse(argc, argv);
        return rc;
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? kExitOk : kExitParse;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
}
