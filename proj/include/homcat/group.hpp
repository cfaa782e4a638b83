#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "homcat/fgab.hpp"

namespace homcat {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Finite group as a validated Cayley table. Elements are indices 0..n-1.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
public:
    static GroupPtr from_cayley(std::vector<std::vector<int>> table,
                                int identity) {
        auto g = std::shared_ptr<FiniteGroup>(
            new FiniteGroup(std::move(table), identity));
        g->validate();
        return g;
    }

    /// closure of permutations of {0..degree-1} under composition
    static GroupPtr from_permutations(
        int degree, const std::vector<std::vector<int>>& gens);

    int order() const { return static_cast<int>(t_.size()); }
    int identity() const { return id_; }
    int mul(int a, int b) const { return t_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    int comm(int a, int b) const {  // a b a^-1 b^-1
        return mul(mul(a, b), mul(inv(a), inv(b)));
    }
    int element_order(int a) const {
        int x = a, n = 1;
        while (x != id_) {
            x = mul(x, a);
            ++n;
        }
        return n;
    }
    const std::vector<std::vector<int>>& cayley() const { return t_; }

    /// a small generating set found greedily
    std::vector<int> generating_set() const {
        std::vector<int> gens;
        std::vector<char> have(t_.size(), 0);
        have[static_cast<std::size_t>(id_)] = 1;
        std::size_t count = 1;
        // prefer high-order elements so the set stays small
        std::vector<int> by_order(t_.size());
        std::iota(by_order.begin(), by_order.end(), 0);
        std::stable_sort(by_order.begin(), by_order.end(), [&](int a, int b) {
            return element_order(a) > element_order(b);
        });
        for (int cand : by_order) {
            if (have[static_cast<std::size_t>(cand)]) continue;
            gens.push_back(cand);
            // close up
            std::vector<int> frontier{cand};
            have[static_cast<std::size_t>(cand)] = 1;
            ++count;
            while (!frontier.empty()) {
                std::vector<int> next;
                for (int x : frontier)
                    for (std::size_t y = 0; y < t_.size(); ++y) {
                        if (!have[y]) continue;
                        for (int p : {mul(x, static_cast<int>(y)),
                                      mul(static_cast<int>(y), x)})
                            if (!have[static_cast<std::size_t>(p)]) {
                                have[static_cast<std::size_t>(p)] = 1;
                                ++count;
                                next.push_back(p);
                            }
                    }
                frontier = std::move(next);
            }
            if (count == t_.size()) break;
        }
        return gens;
    }

    /// each element as a word (list of generator indices) in the given set
    std::vector<std::vector<int>> words_in(const std::vector<int>& gens) const {
        std::vector<std::vector<int>> words(t_.size());
        std::vector<char> have(t_.size(), 0);
        have[static_cast<std::size_t>(id_)] = 1;
        std::vector<int> frontier{id_};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int x : frontier)
                for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                    int p = mul(x, gens[gi]);
                    if (!have[static_cast<std::size_t>(p)]) {
                        have[static_cast<std::size_t>(p)] = 1;
                        words[static_cast<std::size_t>(p)] =
                            words[static_cast<std::size_t>(x)];
                        words[static_cast<std::size_t>(p)].push_back(
                            static_cast<int>(gi));
                        next.push_back(p);
                    }
                }
            frontier = std::move(next);
        }
        for (char h : have)
            if (!h) throw std::logic_error("words_in: set does not generate");
        return words;
    }

private:
    FiniteGroup(std::vector<std::vector<int>> table, int identity)
        : t_(std::move(table)), id_(identity) {}

    void validate() {
        const int n = order();
        if (id_ < 0 || id_ >= n)
            throw std::invalid_argument("group: identity index out of range");
        for (const auto& row : t_) {
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument("group: table is not square");
            for (int v : row)
                if (v < 0 || v >= n)
                    throw std::invalid_argument("group: entry out of range");
        }
        for (int a = 0; a < n; ++a)
            if (mul(id_, a) != a || mul(a, id_) != a)
                throw std::invalid_argument(
                    "group: identity fails at element " + std::to_string(a));
        inv_.assign(static_cast<std::size_t>(n), -1);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b)
                if (mul(a, b) == id_ && mul(b, a) == id_) {
                    inv_[static_cast<std::size_t>(a)] = b;
                    break;
                }
            if (inv_[static_cast<std::size_t>(a)] < 0)
                throw std::invalid_argument(
                    "group: no inverse for element " + std::to_string(a));
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw std::invalid_argument(
                            "group: associativity fails at (" +
                            std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + ")");
    }

    std::vector<std::vector<int>> t_;
    int id_;
    std::vector<int> inv_;
};

inline GroupPtr FiniteGroup::from_permutations(
    int degree, const std::vector<std::vector<int>>& gens) {
    using Perm = std::vector<int>;
    Perm idp(static_cast<std::size_t>(degree));
    std::iota(idp.begin(), idp.end(), 0);
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != degree)
            throw std::invalid_argument("perm group: wrong degree");
        Perm s = g;
        std::sort(s.begin(), s.end());
        if (s != idp) throw std::invalid_argument("perm group: not a permutation");
    }
    auto compose = [&](const Perm& a, const Perm& b) {
        Perm c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            c[i] = a[static_cast<std::size_t>(b[i])];
        return c;
    };
    std::map<Perm, int> index;
    std::vector<Perm> elems{idp};
    index[idp] = 0;
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (const auto& g : gens) {
                Perm p = compose(elems[static_cast<std::size_t>(x)], g);
                if (!index.count(p)) {
                    index[p] = static_cast<int>(elems.size());
                    next.push_back(static_cast<int>(elems.size()));
                    elems.push_back(p);
                }
            }
        frontier = std::move(next);
    }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(
        static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                index.at(compose(elems[static_cast<std::size_t>(a)],
                                 elems[static_cast<std::size_t>(b)]));
    return from_cayley(std::move(table), 0);
}

struct GroupHom {
    GroupPtr src, dst;
    std::vector<int> map;

    bool is_hom() const {
        if (static_cast<int>(map.size()) != src->order()) return false;
        if (map[static_cast<std::size_t>(src->identity())] != dst->identity())
            return false;
        for (int a = 0; a < src->order(); ++a)
            for (int b = 0; b < src->order(); ++b)
                if (map[static_cast<std::size_t>(src->mul(a, b))] !=
                    dst->mul(map[static_cast<std::size_t>(a)],
                             map[static_cast<std::size_t>(b)]))
                    return false;
        return true;
    }
    int at(int x) const { return map[static_cast<std::size_t>(x)]; }
    bool is_injective() const {
        std::set<int> s(map.begin(), map.end());
        return static_cast<int>(s.size()) == src->order();
    }
    bool is_surjective() const {
        std::set<int> s(map.begin(), map.end());
        return static_cast<int>(s.size()) == dst->order();
    }
    std::vector<int> kernel_elements() const {
        std::vector<int> k;
        for (int a = 0; a < src->order(); ++a)
            if (at(a) == dst->identity()) k.push_back(a);
        return k;
    }
    std::vector<int> image_elements() const {
        std::set<int> s(map.begin(), map.end());
        return {s.begin(), s.end()};
    }
};

inline GroupHom compose(const GroupHom& g, const GroupHom& f) {
    std::vector<int> m(f.map.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        m[i] = g.at(f.map[i]);
    return {f.src, g.dst, std::move(m)};
}

inline GroupHom group_identity_hom(const GroupPtr& G) {
    std::vector<int> m(static_cast<std::size_t>(G->order()));
    std::iota(m.begin(), m.end(), 0);
    return {G, G, std::move(m)};
}

struct Subgroup {
    GroupPtr parent;
    std::vector<int> elements;  // sorted

    bool contains(int x) const {
        return std::binary_search(elements.begin(), elements.end(), x);
    }
    int order() const { return static_cast<int>(elements.size()); }
    bool is_trivial() const { return elements.size() == 1; }
    bool is_normal() const {
        for (int g = 0; g < parent->order(); ++g)
            for (int x : elements)
                if (!contains(parent->conj(g, x))) return false;
        return true;
    }
};

inline Subgroup subgroup_generated(const GroupPtr& G,
                                   const std::vector<int>& gens) {
    std::set<int> s{G->identity()};
    std::vector<int> frontier{G->identity()};
    std::vector<int> all = gens;
    for (int g : gens) all.push_back(G->inv(g));
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int g : all) {
                int p = G->mul(x, g);
                if (s.insert(p).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    return {G, {s.begin(), s.end()}};
}

inline Subgroup normal_closure(const GroupPtr& G, const std::vector<int>& gens) {
    std::vector<int> conj_gens;
    for (int g = 0; g < G->order(); ++g)
        for (int x : gens) conj_gens.push_back(G->conj(g, x));
    return subgroup_generated(G, conj_gens);
}

inline Subgroup center(const GroupPtr& G) {
    std::vector<int> z;
    for (int a = 0; a < G->order(); ++a) {
        bool central = true;
        for (int b = 0; b < G->order() && central; ++b)
            if (G->mul(a, b) != G->mul(b, a)) central = false;
        if (central) z.push_back(a);
    }
    return {G, std::move(z)};
}

inline Subgroup higgins_commutator(const GroupPtr& G, const Subgroup& K,
                                   const Subgroup& L) {
    std::vector<int> gens;
    for (int k : K.elements)
        for (int l : L.elements) gens.push_back(G->comm(k, l));
    return subgroup_generated(G, gens);
}

inline Subgroup commutator_subgroup(const GroupPtr& G) {
    Subgroup whole{G, {}};
    whole.elements.resize(static_cast<std::size_t>(G->order()));
    std::iota(whole.elements.begin(), whole.elements.end(), 0);
    return higgins_commutator(G, whole, whole);
}

inline bool is_perfect(const GroupPtr& G) {
    return commutator_subgroup(G).order() == G->order();
}

struct QuotientGroup {
    GroupPtr group;
    GroupHom projection;
};

inline QuotientGroup quotient_group(const GroupPtr& G, const Subgroup& N) {
    if (!N.is_normal())
        throw std::invalid_argument("quotient_group: subgroup is not normal");
    std::vector<int> coset(static_cast<std::size_t>(G->order()), -1);
    std::vector<int> reps;
    for (int a = 0; a < G->order(); ++a) {
        if (coset[static_cast<std::size_t>(a)] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(a);
        for (int h : N.elements)
            coset[static_cast<std::size_t>(G->mul(a, h))] = c;
    }
    const int q = static_cast<int>(reps.size());
    std::vector<std::vector<int>> table(
        static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(q)));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                coset[static_cast<std::size_t>(G->mul(reps[static_cast<std::size_t>(a)],
                                                      reps[static_cast<std::size_t>(b)]))];
    GroupPtr Q = FiniteGroup::from_cayley(std::move(table),
                                          coset[static_cast<std::size_t>(G->identity())]);
    return {Q, GroupHom{G, Q, std::move(coset)}};
}

/// An abelian FiniteGroup presented on a generating set. `words[x]` are
/// coordinates of element x in terms of the generators.
struct AbelianPresentation {
    AbGroupPtr group;
    std::vector<int> gens;                // element behind each generator
    std::vector<std::vector<Int>> words;
};

/// Presents an abelian FiniteGroup on a small generating set. The kernel of
/// Z^k -> Q is generated by the Schreier vectors w(x) + e_i - w(x g_i) of
/// the non-tree edges of a breadth-first spanning tree of the Cayley graph;
/// presenting on all elements instead makes relation matrices of size
/// |Q| x |Q|^2, which is prohibitive already at order ~100.
inline AbelianPresentation abelian_presentation(const GroupPtr& Q) {
    std::vector<int> gens = Q->generating_set();
    const std::size_t k = gens.size();
    const int n = Q->order();
    std::vector<std::vector<Int>> w(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> queue{Q->identity()};
    seen[static_cast<std::size_t>(Q->identity())] = true;
    w[static_cast<std::size_t>(Q->identity())].assign(k, 0);
    std::vector<std::vector<Int>> rels;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (std::size_t i = 0; i < k; ++i) {
            int y = Q->mul(x, gens[i]);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                w[static_cast<std::size_t>(y)] = w[static_cast<std::size_t>(x)];
                w[static_cast<std::size_t>(y)][i] += 1;
                queue.push_back(y);
            } else {
                std::vector<Int> r = w[static_cast<std::size_t>(x)];
                r[i] += 1;
                bool zero = true;
                for (std::size_t j = 0; j < k; ++j) {
                    r[j] -= w[static_cast<std::size_t>(y)][j];
                    if (r[j] != 0) zero = false;
                }
                if (!zero) rels.push_back(std::move(r));
            }
        }
    }
    IntMatrix R(k, rels.size());
    for (std::size_t c = 0; c < rels.size(); ++c) R.set_col(c, rels[c]);
    // reduce to a lattice basis first so the presentation stays k x (<= k)
    return {FgAbGroup::make(hermite_basis(R).H), std::move(gens),
            std::move(w)};
}

inline AbGroupPtr abelian_group_to_fgab(const GroupPtr& Q) {
    return abelian_presentation(Q).group;
}

/// G/[G,G] as an f.g. abelian group plus the element assignment of the unit.
struct Abelianisation {
    AbGroupPtr group;            // presented on generators of the quotient
    GroupPtr quotient;           // G/[G,G] as a group
    GroupHom unit_to_quotient;   // G -> quotient
    std::vector<int> gens;       // quotient element behind each generator
    std::vector<std::vector<Int>> words;  // quotient element -> coordinates
    /// unit G -> group: element index -> generator coordinates
    AbElement unit(int g) const {
        return AbElement(
            group, words[static_cast<std::size_t>(unit_to_quotient.at(g))]);
    }
};

inline Abelianisation abelianisation(const GroupPtr& G) {
    QuotientGroup q = quotient_group(G, commutator_subgroup(G));
    AbelianPresentation p = abelian_presentation(q.group);
    return {std::move(p.group), q.group, q.projection, std::move(p.gens),
            std::move(p.words)};
}

/// All homomorphisms G -> H by backtracking over generator images.
/// `allow` may restrict candidate images per generator element; `keep`
/// filters complete homomorphisms. Results sorted by image vector.
inline std::vector<GroupHom> hom_enumerate(
    const GroupPtr& G, const GroupPtr& H,
    const std::function<bool(int, int)>& allow = nullptr,
    const std::function<bool(const GroupHom&)>& keep = nullptr) {
    std::vector<int> gens = G->generating_set();
    std::vector<std::vector<int>> words = G->words_in(gens);
    std::vector<GroupHom> out;
    std::vector<int> img(gens.size(), -1);

    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == gens.size()) {
            std::vector<int> m(static_cast<std::size_t>(G->order()));
            for (int x = 0; x < G->order(); ++x) {
                int v = H->identity();
                for (int gi : words[static_cast<std::size_t>(x)])
                    v = H->mul(v, img[static_cast<std::size_t>(gi)]);
                m[static_cast<std::size_t>(x)] = v;
            }
            GroupHom h{G, H, std::move(m)};
            if (h.is_hom() && (!keep || keep(h))) out.push_back(std::move(h));
            return;
        }
        int go = G->element_order(gens[k]);
        for (int c = 0; c < H->order(); ++c) {
            if (go % H->element_order(c) != 0) continue;
            if (allow && !allow(gens[k], c)) continue;
            img[k] = c;
            rec(k + 1);
        }
        img[k] = -1;
    };
    rec(0);
    std::sort(out.begin(), out.end(),
              [](const GroupHom& a, const GroupHom& b) { return a.map < b.map; });
    return out;
}

// ---- builders ----

inline GroupPtr cyclic_group(int n) {
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    return FiniteGroup::from_cayley(std::move(t), 0);
}

inline GroupPtr direct_product(const GroupPtr& G, const GroupPtr& H) {
    const int n = G->order(), m = H->order();
    auto idx = [m](int a, int b) { return a * m + b; };
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n * m),
                                    std::vector<int>(static_cast<std::size_t>(n * m)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < m; ++d)
                    t[static_cast<std::size_t>(idx(a, b))]
                     [static_cast<std::size_t>(idx(c, d))] =
                         idx(G->mul(a, c), H->mul(b, d));
    return FiniteGroup::from_cayley(std::move(t),
                                    idx(G->identity(), H->identity()));
}

inline GroupPtr klein_four() {
    return direct_product(cyclic_group(2), cyclic_group(2));
}

inline GroupPtr symmetric_group(int n) {
    std::vector<std::vector<int>> gens;
    std::vector<int> cyc(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % n;
    std::vector<int> tr(static_cast<std::size_t>(n));
    std::iota(tr.begin(), tr.end(), 0);
    if (n >= 2) std::swap(tr[0], tr[1]);
    gens.push_back(cyc);
    gens.push_back(tr);
    return FiniteGroup::from_permutations(n, gens);
}

inline GroupPtr alternating_group(int n) {
    // generated by 3-cycles (0 1 2) and, for n > 3, the long rotation
    std::vector<std::vector<int>> gens;
    std::vector<int> c3(static_cast<std::size_t>(n));
    std::iota(c3.begin(), c3.end(), 0);
    c3[0] = 1; c3[1] = 2; c3[2] = 0;
    gens.push_back(c3);
    if (n > 3) {
        std::vector<int> r(static_cast<std::size_t>(n));
        if (n % 2 == 1) {
            for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = (i + 1) % n;
        } else {
            r[0] = 0;
            for (int i = 1; i < n; ++i)
                r[static_cast<std::size_t>(i)] = 1 + (i % (n - 1));
        }
        gens.push_back(r);
    }
    return FiniteGroup::from_permutations(n, gens);
}

inline GroupPtr dihedral_group(int n) {  // order 2n
    std::vector<int> rot(static_cast<std::size_t>(n)), ref(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rot[static_cast<std::size_t>(i)] = (i + 1) % n;
        ref[static_cast<std::size_t>(i)] = (n - i) % n;
    }
    return FiniteGroup::from_permutations(n, {rot, ref});
}

inline GroupPtr quaternion_group() {
    // indices: 1, -1, i, -i, j, -j, k, -k
    auto mulq = [](int a, int b) {
        // encode sign s in {0,1}, axis x in {0:1, 1:i, 2:j, 3:k}
        auto dec = [](int v) { return std::pair<int, int>{v % 2, v / 2}; };
        auto enc = [](int s, int x) { return x * 2 + s; };
        auto [sa, xa] = dec(a);
        auto [sb, xb] = dec(b);
        static const int axis[4][4] = {  // quaternion axis products
            {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign[4][4] = {  // extra sign from the product
            {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
        return enc((sa + sb + sign[xa][xb]) % 2, axis[xa][xb]);
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = mulq(a, b);
    return FiniteGroup::from_cayley(std::move(t), 0);
}

/// a finite FgAbGroup as a FiniteGroup (elements = enumerated elements)
inline GroupPtr abelian_cayley(const AbGroupPtr& A) {
    std::vector<AbElement> els = all_elements(A);
    std::map<std::vector<Int>, int> index;
    for (std::size_t i = 0; i < els.size(); ++i)
        index[els[i].coords] = static_cast<int>(i);
    const int n = static_cast<int>(els.size());
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                index.at((els[static_cast<std::size_t>(a)] +
                          els[static_cast<std::size_t>(b)]).coords);
    return FiniteGroup::from_cayley(std::move(t),
                                    index.at(ab_zero(A).coords));
}

}  // namespace homcat
