#include "qbx/rewriting.hpp"

#include <queue>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qbx {

RewriteSystem RewriteSystem::orient(const Presentation& p, const Enumeration& e,
                                    bool squares_to_zero) {
    if (e.size() != p.n) throw input_error("enumeration size does not match presentation");
    Presentation q = normalize(p, e);
    RewriteSystem rs;
    rs.n_ = p.n;
    rs.squares_to_zero_ = squares_to_zero;
    rs.e_ = e;
    rs.names_ = p.names;
    rs.index_.assign(p.n * p.n, -1);
    for (const auto& r : q.relations) {
        if (compare_deglex(r.lhs, r.rhs, e) == 0)
            throw input_error("relation with equal sides cannot be oriented");
        int i = r.lhs.at(0) * p.n + r.lhs.at(1);
        if (rs.index_[i] != -1)
            throw input_error("two relations orient to the same lhs " + r.lhs.str(p.names));
        rs.index_[i] = (int)rs.rules_.size();
        rs.rules_.push_back({r.lhs, r.rhs, r.coeff});
    }
    return rs;
}

NormalForm normal_form(const RewriteSystem& rs, const Word& w) {
    NormalForm nf{w, Scalar(1), false};
    int i = 0;
    while (i + 1 < nf.word.size()) {
        int a = nf.word.at(i), b = nf.word.at(i + 1);
        if (rs.squares_to_zero() && a == b) {
            nf.zero = true;
            nf.word = Word();
            return nf;
        }
        if (const auto* rule = rs.rule_for(a, b)) {
            nf.word = nf.word.replace_pair(i, rule->rhs.at(0), rule->rhs.at(1));
            nf.coeff *= rule->coeff;
            if (i > 0) --i; // a new redex can only appear one step left
        } else {
            ++i;
        }
    }
    return nf;
}

long count_normal_words(const RewriteSystem& rs, int d) {
    if (d == 0) return 1;
    int n = rs.n();
    std::vector<long> cur(n, 1), next(n);
    for (int k = 2; k <= d; ++k) {
        for (int b = 0; b < n; ++b) {
            long s = 0;
            for (int a = 0; a < n; ++a)
                if (!rs.reducible(a, b)) s += cur[a];
            next[b] = s;
        }
        cur = next;
    }
    long total = 0;
    for (int a = 0; a < n; ++a) total += cur[a];
    return total;
}

std::vector<Word> normal_words(const RewriteSystem& rs, int d) {
    std::vector<Word> out;
    int n = rs.n();
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= n;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Word w = Word::from_index(idx, n, d);
        bool normal = true;
        for (int i = 0; i + 1 < d && normal; ++i)
            if (rs.reducible(w.at(i), w.at(i + 1))) normal = false;
        if (normal) out.push_back(w);
    }
    return out;
}

namespace {

// pair word -> replacements (other side, coefficient factor on the member)
struct EdgeMap {
    int n;
    std::vector<std::vector<std::pair<Word, Scalar>>> edges;

    EdgeMap(const std::vector<BinomialRelation>& rels, int n_) : n(n_), edges(n_ * n_) {
        for (const auto& r : rels) {
            // lhs = c * rhs: replacing lhs by rhs divides the member
            // coefficient by c; the reverse multiplies.
            edges[r.lhs.at(0) * n + r.lhs.at(1)].emplace_back(r.rhs, r.coeff.inverse());
            edges[r.rhs.at(0) * n + r.rhs.at(1)].emplace_back(r.lhs, r.coeff);
        }
    }
    const std::vector<std::pair<Word, Scalar>>& at(int a, int b) const {
        return edges[a * n + b];
    }
};

bool has_square(const Word& w) {
    for (int i = 0; i + 1 < w.size(); ++i)
        if (w.at(i) == w.at(i + 1)) return true;
    return false;
}

EquivalenceClass closure_from(const EdgeMap& em, const Word& w, bool squares_mode) {
    EquivalenceClass cls;
    cls.base = w;
    cls.coeffs[w] = Scalar(1);
    if (squares_mode && has_square(w)) cls.hit_square = true;
    std::queue<Word> q;
    q.push(w);
    while (!q.empty()) {
        Word m = q.front();
        q.pop();
        Scalar gamma = cls.coeffs.at(m);
        for (int i = 0; i + 1 < m.size(); ++i) {
            for (const auto& [np, f] : em.at(m.at(i), m.at(i + 1))) {
                Word m2 = m.replace_pair(i, np.at(0), np.at(1));
                Scalar g2 = gamma * f;
                auto it = cls.coeffs.find(m2);
                if (it == cls.coeffs.end()) {
                    cls.coeffs.emplace(m2, g2);
                    if (squares_mode && has_square(m2)) cls.hit_square = true;
                    q.push(m2);
                } else if (!(it->second == g2)) {
                    cls.conflict = true;
                }
            }
        }
    }
    return cls;
}

} // namespace

EquivalenceClass class_closure_rel(const std::vector<BinomialRelation>& rels, int n,
                                   const Word& w, bool squares_mode) {
    return closure_from(EdgeMap(rels, n), w, squares_mode);
}

EquivalenceClass class_closure(const Presentation& p, const Word& w) {
    return class_closure_rel(p.relations, p.n, w, false);
}

ClassPartition partition_classes(const std::vector<BinomialRelation>& rels, int n, int degree,
                                 bool squares_mode) {
    ClassPartition part;
    part.n = n;
    part.degree = degree;
    std::uint64_t total = 1;
    for (int i = 0; i < degree; ++i) total *= n;
    part.class_of.assign(total, -1);
    EdgeMap em(rels, n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (part.class_of[idx] != -1) continue;
        // seed is the least unassigned word, hence the least of its class
        EquivalenceClass cls = closure_from(em, Word::from_index(idx, n, degree), squares_mode);
        int id = (int)part.classes.size();
        for (const auto& [m, c] : cls.coeffs) part.class_of[m.index(n)] = id;
        part.classes.push_back(std::move(cls));
    }
    return part;
}

namespace {

// One reduction of the length-3 word starting with the pair at position
// pos, then leftmost to normal form.
NormalForm resolve_from(const RewriteSystem& rs, const Word& w, int pos) {
    int a = w.at(pos), b = w.at(pos + 1);
    if (rs.squares_to_zero() && a == b) return {Word(), Scalar(1), true};
    const auto* rule = rs.rule_for(a, b);
    Word w2 = w.replace_pair(pos, rule->rhs.at(0), rule->rhs.at(1));
    NormalForm nf = normal_form(rs, w2);
    nf.coeff *= rule->coeff;
    if (nf.zero) nf.coeff = Scalar(1);
    return nf;
}

} // namespace

GroebnerReport check_groebner(const RewriteSystem& rs) {
    GroebnerReport rep;
    if (!rs.squares_to_zero()) {
        std::vector<BinomialRelation> rels;
        for (const auto& r : rs.rules()) rels.push_back({r.lhs, r.rhs, r.coeff});
        Presentation q = Presentation::make(rs.n(), rels, rs.names());
        SkewShapeReport shape = check_skew_shape(q, rs.enumeration());
        if (!shape.ok) {
            rep.reason = "not skew-shaped: " + shape.witness;
            return rep;
        }
    }
    rep.skew_shaped = true;
    int n = rs.n();
    for (std::uint64_t idx = 0; idx < (std::uint64_t)n * n * n; ++idx) {
        Word w = Word::from_index(idx, n, 3);
        if (!rs.reducible(w.at(0), w.at(1)) || !rs.reducible(w.at(1), w.at(2))) continue;
        NormalForm left = resolve_from(rs, w, 0);
        NormalForm right = resolve_from(rs, w, 1);
        if (!(left == right)) {
            if (rep.failing.empty()) {
                rep.witness_left = left;
                rep.witness_right = right;
                rep.reason = "overlap ambiguity " + w.str(rs.names()) + " is not resolvable";
            }
            rep.failing.push_back(w);
        }
    }
    rep.ok = rep.failing.empty();
    if (rep.ok) rep.reason.clear();
    return rep;
}

namespace {

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// k-th permutation of 0..n-1 in lexicographic order
std::vector<int> unrank_permutation(std::uint64_t k, int n) {
    std::vector<int> pool(n), out;
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::uint64_t f = factorial(n);
    for (int i = n; i >= 1; --i) {
        f /= i;
        int d = (int)(k / f);
        k %= f;
        out.push_back(pool[d]);
        pool.erase(pool.begin() + d);
    }
    return out;
}

bool certifies(const Presentation& p, const Enumeration& e) {
    if (!check_skew_shape(p, e).ok) return false;
    try {
        return check_groebner(RewriteSystem::orient(p, e)).ok;
    } catch (const input_error&) {
        return false; // orientation collision: no rewriting system exists
    }
}

} // namespace

std::vector<Enumeration> find_skew_order_serial(const Presentation& p) {
    if (p.n > 9) throw cap_error("order search supports at most 9 generators");
    std::vector<Enumeration> out;
    std::uint64_t total = factorial(p.n);
    for (std::uint64_t k = 0; k < total; ++k) {
        Enumeration e = Enumeration::from_order(unrank_permutation(k, p.n));
        if (certifies(p, e)) out.push_back(e);
    }
    return out;
}

std::vector<Enumeration> find_skew_order(const Presentation& p) {
    if (p.n > 9) throw cap_error("order search supports at most 9 generators");
    std::uint64_t total = factorial(p.n);
    std::vector<char> hit(total, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (std::int64_t k = 0; k < (std::int64_t)total; ++k) {
        Enumeration e = Enumeration::from_order(unrank_permutation(k, p.n));
        if (certifies(p, e)) hit[k] = 1;
    }
    // assembly in index order keeps the output lexicographic
    std::vector<Enumeration> out;
    for (std::uint64_t k = 0; k < total; ++k)
        if (hit[k]) out.push_back(Enumeration::from_order(unrank_permutation(k, p.n)));
    return out;
}

DihedralOrbit dihedral_orbit(const Presentation& p, const Word& w) {
    if (w.size() != 3) throw input_error("orbit is defined for degree-3 words");
    CanonicalMap m = canonical_map(p);
    // BFS over r12 (exchange on letters 0,1) and r23 (letters 1,2); the
    // recorded sequence reads left to right in application order.
    std::map<Word, std::string> ops;
    ops[w] = "";
    std::queue<Word> q;
    q.push(w);
    while (!q.empty()) {
        Word u = q.front();
        q.pop();
        for (int pos = 0; pos < 2; ++pos) {
            Word im = m.apply(u.at(pos), u.at(pos + 1));
            Word v = u.replace_pair(pos, im.at(0), im.at(1));
            if (ops.count(v)) continue;
            std::string step = pos == 0 ? "r12" : "r23";
            ops[v] = ops[u].empty() ? step : ops[u] + " " + step;
            q.push(v);
        }
    }
    DihedralOrbit orb;
    orb.base = w;
    for (auto& [u, s] : ops) {
        orb.members.push_back(u);
        orb.ops.push_back(s);
    }
    return orb;
}

} // namespace qbx
