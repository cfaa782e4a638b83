#pragma once

#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "homcat/smith.hpp"

namespace homcat {

class FgAbGroup;
using AbGroupPtr = std::shared_ptr<const FgAbGroup>;

/// Finitely generated abelian group Z^g / L where L is the column lattice of
/// a presentation matrix (g rows, one column per relation).
class FgAbGroup : public std::enable_shared_from_this<FgAbGroup> {
public:
    explicit FgAbGroup(IntMatrix presentation)
        : rel_(std::move(presentation)), lat_(hermite_basis(rel_)) {
        SmithDecomposition d = smith_normal_form(rel_);
        std::size_t rank = d.rank();
        free_rank_ = rel_.rows() - rank;
        for (std::size_t i = 0; i < rank; ++i)
            if (d.divisors[i] > 1) torsion_.push_back(d.divisors[i]);
        // coordinates y = U x diagonalize the relation lattice; coordinates
        // with divisor 1 are trivial, the rest form the canonical group
        std::vector<std::size_t> kept;
        for (std::size_t i = 0; i < rel_.rows(); ++i) {
            Int di = i < d.divisors.size() ? d.divisors[i] : Int(0);
            if (di != 1) kept.push_back(i);
        }
        to_canon_ = IntMatrix(kept.size(), rel_.rows());
        from_canon_ = IntMatrix(rel_.rows(), kept.size());
        for (std::size_t k = 0; k < kept.size(); ++k) {
            for (std::size_t j = 0; j < rel_.rows(); ++j) {
                to_canon_(k, j) = d.U(kept[k], j);
                from_canon_(j, k) = d.Uinv(j, kept[k]);
            }
        }
    }

    static AbGroupPtr make(IntMatrix presentation) {
        return std::make_shared<FgAbGroup>(std::move(presentation));
    }
    /// Z^n
    static AbGroupPtr free_group(std::size_t n) { return make(IntMatrix(n, 0)); }
    /// Z/d1 + Z/d2 + ... (d = 0 gives a Z summand)
    static AbGroupPtr cyclic_sum(const std::vector<Int>& ds) {
        IntMatrix P(ds.size(), ds.size());
        for (std::size_t i = 0; i < ds.size(); ++i) P(i, i) = ds[i];
        return make(P);
    }

    std::size_t ngens() const { return rel_.rows(); }
    const IntMatrix& presentation() const { return rel_; }
    const HermiteBasis& relation_lattice() const { return lat_; }

    std::size_t free_rank() const { return free_rank_; }
    /// ascending divisor chain, each > 1
    const std::vector<Int>& torsion() const { return torsion_; }
    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    Int order() const {  // only meaningful when finite
        Int o = 1;
        for (const auto& d : torsion_) o *= d;
        return o;
    }

    /// change of coordinates onto the canonical cyclic decomposition
    /// (torsion coordinates first, then free ones)
    const IntMatrix& to_canonical() const { return to_canon_; }
    const IntMatrix& from_canonical() const { return from_canon_; }

    /// least-residue normal form of an ambient vector
    std::vector<Int> normal_form(const std::vector<Int>& v) const {
        return lattice_reduce(lat_, v);
    }
    bool in_relation_lattice(const std::vector<Int>& v) const {
        return lattice_contains(lat_, v);
    }

    std::string invariant_string() const {
        std::ostringstream os;
        bool first = true;
        auto sep = [&] {
            if (!first) os << " + ";
            first = false;
        };
        if (free_rank_ == 1) {
            sep();
            os << "Z";
        } else if (free_rank_ > 1) {
            sep();
            os << "Z^" << free_rank_;
        }
        for (const auto& d : torsion_) {
            sep();
            os << "Z/" << d.get_str();
        }
        if (first) os << "0";
        return os.str();
    }

    bool same_invariants(const FgAbGroup& other) const {
        return free_rank_ == other.free_rank_ && torsion_ == other.torsion_;
    }

private:
    IntMatrix rel_;
    HermiteBasis lat_;
    std::size_t free_rank_ = 0;
    std::vector<Int> torsion_;
    IntMatrix to_canon_, from_canon_;
};

struct AbElement {
    AbGroupPtr group;
    std::vector<Int> coords;  // normal form

    AbElement(AbGroupPtr g, std::vector<Int> v)
        : group(std::move(g)), coords(group->normal_form(std::move(v))) {}

    bool is_zero() const { return vec_is_zero(coords); }
    friend bool operator==(const AbElement& a, const AbElement& b) {
        return a.coords == b.coords;
    }
    AbElement operator+(const AbElement& o) const {
        return AbElement(group, vec_add(coords, o.coords));
    }
    AbElement operator-(const AbElement& o) const {
        return AbElement(group, vec_sub(coords, o.coords));
    }
    AbElement scaled(const Int& s) const {
        std::vector<Int> v = coords;
        for (auto& x : v) x *= s;
        return AbElement(group, std::move(v));
    }
};

inline AbElement ab_zero(const AbGroupPtr& g) {
    return AbElement(g, std::vector<Int>(g->ngens(), 0));
}

inline AbElement ab_generator(const AbGroupPtr& g, std::size_t i) {
    std::vector<Int> v(g->ngens(), 0);
    v[i] = 1;
    return AbElement(g, std::move(v));
}

/// Homomorphism of f.g. abelian groups, as a matrix on generators.
struct AbMorphism {
    AbGroupPtr dom, cod;
    IntMatrix mat;  // cod.ngens() x dom.ngens()

    AbMorphism(AbGroupPtr d, AbGroupPtr c, IntMatrix m)
        : dom(std::move(d)), cod(std::move(c)), mat(std::move(m)) {
        assert(mat.rows() == cod->ngens() && mat.cols() == dom->ngens());
    }

    /// the matrix must carry the domain's relation lattice into the
    /// codomain's relation lattice
    bool is_well_defined() const {
        IntMatrix img = mat * dom->presentation();
        for (std::size_t j = 0; j < img.cols(); ++j)
            if (!cod->in_relation_lattice(img.col(j))) return false;
        return true;
    }

    AbElement apply(const AbElement& x) const {
        assert(x.group.get() == dom.get() || x.group->presentation() == dom->presentation());
        return AbElement(cod, mat.apply(x.coords));
    }

    bool is_zero() const {
        for (std::size_t j = 0; j < mat.cols(); ++j)
            if (!cod->in_relation_lattice(mat.col(j))) return false;
        return true;
    }
};

inline AbMorphism ab_identity(const AbGroupPtr& g) {
    return AbMorphism(g, g, IntMatrix::identity(g->ngens()));
}

inline AbMorphism ab_zero_morphism(const AbGroupPtr& a, const AbGroupPtr& b) {
    return AbMorphism(a, b, IntMatrix(b->ngens(), a->ngens()));
}

inline AbMorphism compose(const AbMorphism& g, const AbMorphism& f) {
    assert(g.dom->ngens() == f.cod->ngens());
    return AbMorphism(f.dom, g.cod, g.mat * f.mat);
}

inline bool morphisms_equal(const AbMorphism& f, const AbMorphism& g) {
    if (f.mat.rows() != g.mat.rows() || f.mat.cols() != g.mat.cols()) return false;
    IntMatrix d = f.mat - g.mat;
    for (std::size_t j = 0; j < d.cols(); ++j)
        if (!f.cod->in_relation_lattice(d.col(j))) return false;
    return true;
}

/// Presents the quotient P / L where the columns of `pbasis` are a lattice
/// basis inside Z^g and the columns of `lgens` generate a sublattice of it.
/// Returns the quotient group together with the inclusion pbasis into Z^g.
struct LatticeQuotient {
    AbGroupPtr group;
    IntMatrix basis;  // g x s, generator i of the quotient maps to column i
};

inline LatticeQuotient lattice_quotient(const IntMatrix& pbasis,
                                        const IntMatrix& lgens) {
    auto coords = solve_integer(pbasis, lgens);
    if (!coords)
        throw std::logic_error("lattice_quotient: sublattice not contained in basis span");
    return {FgAbGroup::make(*coords), pbasis};
}

/// Kernel of f as a subgroup: ker.group presents it, ker.inclusion embeds it
/// into the domain.
struct SubgroupArrow {
    AbGroupPtr group;
    AbMorphism inclusion;
};

inline SubgroupArrow kernel(const AbMorphism& f) {
    // x is in the kernel iff f.mat * x lies in cod's relation lattice;
    // solve [M | R_cod] (x; y) = 0 and project onto x
    IntMatrix sys = IntMatrix::hstack(f.mat, f.cod->presentation());
    IntMatrix K = kernel_basis(sys);
    IntMatrix pre(f.dom->ngens(), K.cols() + f.dom->presentation().cols());
    for (std::size_t j = 0; j < K.cols(); ++j)
        for (std::size_t i = 0; i < f.dom->ngens(); ++i) pre(i, j) = K(i, j);
    // the domain's relations are kernel vectors too (and must be divided out)
    for (std::size_t j = 0; j < f.dom->presentation().cols(); ++j)
        for (std::size_t i = 0; i < f.dom->ngens(); ++i)
            pre(i, K.cols() + j) = f.dom->presentation()(i, j);
    HermiteBasis hb = hermite_basis(pre);
    LatticeQuotient q = lattice_quotient(hb.H, f.dom->presentation());
    return {q.group, AbMorphism(q.group, f.dom, q.basis)};
}

/// Cokernel of f: same generators as the codomain, extra relations from the
/// image. The projection is the identity matrix on generators.
struct QuotientArrow {
    AbGroupPtr group;
    AbMorphism projection;
};

inline QuotientArrow cokernel(const AbMorphism& f) {
    AbGroupPtr q = FgAbGroup::make(IntMatrix::hstack(f.cod->presentation(), f.mat));
    return {q, AbMorphism(f.cod, q, IntMatrix::identity(f.cod->ngens()))};
}

/// f = include . project through its image subgroup of the codomain.
struct ImageFactorization {
    AbGroupPtr image;
    AbMorphism project;  // dom ->> image
    AbMorphism include;  // image >-> cod
};

inline ImageFactorization image_factorization(const AbMorphism& f) {
    IntMatrix span = IntMatrix::hstack(f.mat, f.cod->presentation());
    HermiteBasis hb = hermite_basis(span);
    LatticeQuotient q = lattice_quotient(hb.H, f.cod->presentation());
    auto proj = solve_integer(hb.H, f.mat);
    assert(proj.has_value());
    return {q.group, AbMorphism(f.dom, q.group, *proj),
            AbMorphism(q.group, f.cod, q.basis)};
}

inline bool is_injective(const AbMorphism& f) {
    return kernel(f).group->is_trivial();
}
inline bool is_surjective(const AbMorphism& f) {
    return cokernel(f).group->is_trivial();
}
inline bool is_isomorphism(const AbMorphism& f) {
    return is_injective(f) && is_surjective(f);
}

/// Inverse of an isomorphism: solve on generators modulo relations.
inline AbMorphism inverse_of(const AbMorphism& f) {
    // find X with f.mat * X = I modulo cod relations
    IntMatrix sys = IntMatrix::hstack(f.mat, f.cod->presentation());
    auto sol = solve_integer(sys, IntMatrix::identity(f.cod->ngens()));
    if (!sol) throw std::logic_error("inverse_of: morphism is not invertible");
    IntMatrix X = sol->submatrix(0, 0, f.dom->ngens(), sol->cols());
    AbMorphism inv(f.cod, f.dom, std::move(X));
    assert(inv.is_well_defined());
    return inv;
}

struct DirectSum {
    AbGroupPtr group;
    std::vector<AbMorphism> inject;
    std::vector<AbMorphism> project;
};

inline DirectSum direct_sum(const std::vector<AbGroupPtr>& parts) {
    std::size_t g = 0;
    for (const auto& p : parts) g += p->ngens();
    IntMatrix pres(0, 0);
    for (const auto& p : parts)
        pres = IntMatrix::block_diag(pres, p->presentation());
    AbGroupPtr sum = FgAbGroup::make(pres);
    DirectSum ds{sum, {}, {}};
    std::size_t off = 0;
    for (const auto& p : parts) {
        IntMatrix in(g, p->ngens()), pr(p->ngens(), g);
        for (std::size_t i = 0; i < p->ngens(); ++i) {
            in(off + i, i) = 1;
            pr(i, off + i) = 1;
        }
        ds.inject.emplace_back(p, sum, std::move(in));
        ds.project.emplace_back(sum, p, std::move(pr));
        off += p->ngens();
    }
    return ds;
}

/// Hom(A, B) as an f.g. abelian group, with conversions between its elements
/// and the morphisms they name.
struct HomGroup {
    AbGroupPtr group;
    AbGroupPtr dom, cod;
    IntMatrix basis;  // (gB*gA) x s, column i = vec of the i-th generator

    AbMorphism to_morphism(const AbElement& e) const {
        std::vector<Int> v = basis.apply(e.coords);
        IntMatrix M(cod->ngens(), dom->ngens());
        for (std::size_t j = 0; j < dom->ngens(); ++j)
            for (std::size_t i = 0; i < cod->ngens(); ++i)
                M(i, j) = v[j * cod->ngens() + i];
        return AbMorphism(dom, cod, std::move(M));
    }

    AbElement from_morphism(const AbMorphism& f) const {
        std::vector<Int> v(dom->ngens() * cod->ngens());
        for (std::size_t j = 0; j < dom->ngens(); ++j)
            for (std::size_t i = 0; i < cod->ngens(); ++i)
                v[j * cod->ngens() + i] = f.mat(i, j);
        auto x = solve_integer(
            IntMatrix::hstack(basis, group_ambient_kill_), IntMatrix::from_col(v));
        if (!x) throw std::logic_error("from_morphism: not a well-defined morphism");
        std::vector<Int> coords(basis.cols());
        for (std::size_t i = 0; i < basis.cols(); ++i) coords[i] = (*x)(i, 0);
        return AbElement(group, std::move(coords));
    }

    IntMatrix group_ambient_kill_;  // vecs of morphisms representing zero
};

inline HomGroup hom_group(const AbGroupPtr& A, const AbGroupPtr& B) {
    const std::size_t gA = A->ngens(), gB = B->ngens();
    const IntMatrix& RA = A->presentation();
    const IntMatrix& RB = B->presentation();
    const std::size_t rA = RA.cols(), rB = RB.cols();
    // unknowns: vec(M) (column-major, gB*gA) plus one y-block per A-relation;
    // constraints: M * RA(:,j) = RB * y_j for each j
    IntMatrix sys(gB * rA, gB * gA + rB * rA);
    for (std::size_t j = 0; j < rA; ++j)
        for (std::size_t c = 0; c < gA; ++c)
            for (std::size_t i = 0; i < gB; ++i)
                sys(j * gB + i, c * gB + i) = RA(c, j);
    for (std::size_t j = 0; j < rA; ++j)
        for (std::size_t k = 0; k < rB; ++k)
            for (std::size_t i = 0; i < gB; ++i)
                sys(j * gB + i, gB * gA + j * rB + k) = -RB(i, k);
    IntMatrix K = kernel_basis(sys);
    IntMatrix sol(gB * gA, K.cols());
    for (std::size_t j = 0; j < K.cols(); ++j)
        for (std::size_t i = 0; i < gB * gA; ++i) sol(i, j) = K(i, j);
    // morphisms representing zero: some relation column of B in one slot
    IntMatrix zero_mats(gB * gA, gA * rB);
    for (std::size_t c = 0; c < gA; ++c)
        for (std::size_t k = 0; k < rB; ++k)
            for (std::size_t i = 0; i < gB; ++i)
                zero_mats(c * gB + i, c * rB + k) = RB(i, k);
    // the zero morphisms satisfy the constraints, so they lie in the span
    HermiteBasis hb = hermite_basis(IntMatrix::hstack(sol, zero_mats));
    LatticeQuotient q = lattice_quotient(hb.H, zero_mats);
    HomGroup hg;
    hg.group = q.group;
    hg.dom = A;
    hg.cod = B;
    hg.basis = q.basis;
    hg.group_ambient_kill_ = zero_mats;
    return hg;
}

/// A tensor M: generator (i, j) -> index i*h + j, relations from both sides.
struct TensorProduct {
    AbGroupPtr group;
    AbGroupPtr left, right;

    /// class of a simple tensor a (x) m
    AbElement pure(const AbElement& a, const AbElement& m) const {
        std::vector<Int> v(left->ngens() * right->ngens(), 0);
        for (std::size_t i = 0; i < left->ngens(); ++i)
            for (std::size_t j = 0; j < right->ngens(); ++j)
                v[i * right->ngens() + j] = a.coords[i] * m.coords[j];
        return AbElement(group, std::move(v));
    }
};

inline TensorProduct tensor(const AbGroupPtr& A, const AbGroupPtr& M) {
    IntMatrix relA = IntMatrix::kronecker(
        A->presentation(), IntMatrix::identity(M->ngens()));
    IntMatrix relM = IntMatrix::kronecker(
        IntMatrix::identity(A->ngens()), M->presentation());
    return {FgAbGroup::make(IntMatrix::hstack(relA, relM)), A, M};
}

/// f (x) id_M between the matching tensor presentations.
inline AbMorphism tensor_map(const AbMorphism& f, const TensorProduct& src,
                             const TensorProduct& dst) {
    assert(src.right.get() == dst.right.get());
    IntMatrix M = IntMatrix::kronecker(
        f.mat, IntMatrix::identity(src.right->ngens()));
    return AbMorphism(src.group, dst.group, std::move(M));
}

/// Explicit isomorphism between groups with equal invariants, through the
/// shared canonical cyclic decomposition. Returns nothing when the
/// invariants differ.
struct IsoWitness {
    AbMorphism forward, backward;
};

inline std::optional<IsoWitness> iso_witness(const AbGroupPtr& A,
                                             const AbGroupPtr& B) {
    if (!A->same_invariants(*B)) return std::nullopt;
    AbMorphism fwd(A, B, B->from_canonical() * A->to_canonical());
    AbMorphism bwd(B, A, A->from_canonical() * B->to_canonical());
    assert(fwd.is_well_defined() && bwd.is_well_defined());
    return IsoWitness{std::move(fwd), std::move(bwd)};
}

/// All elements of a finite group, via its cyclic decomposition.
inline std::vector<AbElement> all_elements(const AbGroupPtr& A) {
    if (!A->is_finite()) throw std::logic_error("all_elements: infinite group");
    const std::vector<Int>& ds = A->torsion();
    std::vector<AbElement> out;
    std::vector<Int> idx(ds.size(), 0);
    for (;;) {
        std::vector<Int> canon(A->to_canonical().rows(), 0);
        for (std::size_t i = 0; i < ds.size(); ++i) canon[i] = idx[i];
        out.emplace_back(A->shared_from_this(), A->from_canonical().apply(canon));
        std::size_t k = 0;
        while (k < ds.size() && ++idx[k] == ds[k]) idx[k++] = 0;
        if (k == ds.size()) break;
        if (ds.empty()) break;
    }
    return out;
}

inline AbElement random_element(const AbGroupPtr& A, std::mt19937& rng,
                                int free_bound = 5) {
    std::vector<Int> v(A->ngens());
    std::uniform_int_distribution<int> val(-free_bound, free_bound);
    for (auto& x : v) x = val(rng);
    return AbElement(A, std::move(v));
}

inline AbMorphism random_morphism(const AbGroupPtr& A, const AbGroupPtr& B,
                                  std::mt19937& rng, int coeff_bound = 3) {
    HomGroup hg = hom_group(A, B);
    std::uniform_int_distribution<int> val(-coeff_bound, coeff_bound);
    std::vector<Int> coords(hg.group->ngens());
    for (auto& c : coords) c = val(rng);
    return hg.to_morphism(AbElement(hg.group, std::move(coords)));
}

}  // namespace homcat
