#include "qbx/presentation.hpp"

#include <map>
#include <set>

namespace qbx {

Presentation Presentation::make(int n, std::vector<BinomialRelation> rels,
                                std::vector<std::string> names) {
    if (n < 1 || n > Word::kMaxGen) throw input_error("generator count out of range");
    if (names.empty())
        for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    if ((int)names.size() != n) throw input_error("name list does not match generator count");
    for (const auto& r : rels) {
        if (r.lhs.size() != 2 || r.rhs.size() != 2)
            throw input_error("relation sides must have length two");
        for (int i = 0; i < 2; ++i)
            if (r.lhs.at(i) >= n || r.rhs.at(i) >= n)
                throw input_error("relation references unknown generator");
        if (r.coeff.is_zero()) throw input_error("zero coefficient in relation");
    }
    std::set<std::uint64_t> lhs_seen;
    for (const auto& r : rels)
        if (!lhs_seen.insert(r.lhs.bits()).second)
            throw input_error("two relations share the lhs " + r.lhs.str());
    Presentation p;
    p.n = n;
    p.names = std::move(names);
    p.relations = std::move(rels);
    return p;
}

CanonicalMap canonical_map(const Presentation& p) {
    CanonicalMap m;
    m.n_ = p.n;
    m.table_.resize(p.n * p.n);
    m.coeff_.assign(p.n * p.n, Scalar(1));
    for (int x = 0; x < p.n; ++x)
        for (int y = 0; y < p.n; ++y) m.table_[x * p.n + y] = Word::pair(x, y);
    std::set<Word> used;
    for (const auto& r : p.relations) {
        if (r.lhs == r.rhs)
            throw input_error("exchange map undefined: relation with equal sides " +
                              r.lhs.str(p.names));
        if (!used.insert(r.lhs).second || !used.insert(r.rhs).second)
            throw input_error("exchange map undefined: a word occurs in two relations");
        int li = r.lhs.at(0) * p.n + r.lhs.at(1);
        int ri = r.rhs.at(0) * p.n + r.rhs.at(1);
        m.table_[li] = r.rhs;
        m.coeff_[li] = r.coeff;
        m.table_[ri] = r.lhs;
        m.coeff_[ri] = r.coeff.inverse();
    }
    return m;
}

namespace {

// nullopt when well defined, else the reason string
std::optional<std::string> map_defect(const Presentation& p) {
    try {
        canonical_map(p);
        return std::nullopt;
    } catch (const input_error& e) {
        return std::string(e.what());
    }
}

bool is_bijection(const std::vector<int>& image) {
    std::vector<bool> seen(image.size(), false);
    for (int v : image) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

} // namespace

AxiomReport check_axioms(const Presentation& p) {
    AxiomReport rep;
    // a: residual check after structural validation is side distinctness
    for (size_t k = 0; k < p.relations.size(); ++k) {
        const auto& r = p.relations[k];
        if (r.lhs == r.rhs) {
            rep.a = {false, "relation " + std::to_string(k + 1) + " has equal sides " +
                                r.lhs.str(p.names)};
            break;
        }
    }
    // b: off-diagonal words may appear in at most one relation side
    std::map<Word, int> occ;
    for (const auto& r : p.relations) {
        ++occ[r.lhs];
        ++occ[r.rhs];
    }
    for (const auto& [w, c] : occ) {
        if (c > 1 && w.at(0) != w.at(1)) {
            rep.b = {false, w.str(p.names) + " occurs in more than one relation side"};
            break;
        }
    }
    // c: no square sides
    for (size_t k = 0; k < p.relations.size() && rep.c.ok; ++k) {
        const auto& r = p.relations[k];
        for (const Word* s : {&r.lhs, &r.rhs}) {
            if (s->at(0) == s->at(1)) {
                rep.c = {false, "relation " + std::to_string(k + 1) + " has square side " +
                                    s->str(p.names)};
                break;
            }
        }
    }
    // d: all left maps bijective, then all right maps
    if (auto defect = map_defect(p)) {
        rep.d = {false, "canonical map undefined: " + *defect};
        return rep;
    }
    CanonicalMap m = canonical_map(p);
    for (int x = 0; x < p.n && rep.d.ok; ++x) {
        std::vector<int> img(p.n);
        for (int y = 0; y < p.n; ++y) img[y] = m.left(x, y);
        if (!is_bijection(img))
            rep.d = {false, "left exchange map of " + p.name(x) + " is not bijective"};
    }
    for (int y = 0; y < p.n && rep.d.ok; ++y) {
        std::vector<int> img(p.n);
        for (int x = 0; x < p.n; ++x) img[x] = m.right(y, x);
        if (!is_bijection(img))
            rep.d = {false, "right exchange map of " + p.name(y) + " is not bijective"};
    }
    return rep;
}

OreReport check_ore(const Presentation& p) {
    OreReport rep;
    if (auto defect = map_defect(p)) {
        rep.left_witness = rep.right_witness = "canonical map undefined: " + *defect;
        return rep;
    }
    CanonicalMap m = canonical_map(p);
    rep.left = rep.right = true;
    // right: unique (x, y) with ax = by, i.e. r(a x) has first letter b
    for (int a = 0; a < p.n && rep.right; ++a) {
        for (int b = 0; b < p.n && rep.right; ++b) {
            if (a == b) continue;
            int count = 0;
            for (int x = 0; x < p.n; ++x)
                if (m.left(a, x) == b) ++count;
            if (count != 1) {
                rep.right = false;
                rep.right_witness = "ax = by has " + std::to_string(count) +
                                    " solutions for a=" + p.name(a) + ", b=" + p.name(b);
            }
        }
    }
    // left: unique (z, t) with za = tb, i.e. r(z a) has second letter b
    for (int a = 0; a < p.n && rep.left; ++a) {
        for (int b = 0; b < p.n && rep.left; ++b) {
            if (a == b) continue;
            int count = 0;
            for (int z = 0; z < p.n; ++z)
                if (m.right(a, z) == b) ++count;
            if (count != 1) {
                rep.left = false;
                rep.left_witness = "za = tb has " + std::to_string(count) +
                                   " solutions for a=" + p.name(a) + ", b=" + p.name(b);
            }
        }
    }
    return rep;
}

WeakCyclicReport check_weak_cyclic(const Presentation& p) {
    WeakCyclicReport rep;
    if (auto defect = map_defect(p)) {
        rep.witness = "canonical map undefined: " + *defect;
        return rep;
    }
    CanonicalMap m = canonical_map(p);
    // In subscript form: R_u(v) = second letter of r(v u), L_u(v) = first
    // letter of r(u v).  Both identities are quantified over ordered pairs.
    for (int x = 0; x < p.n; ++x) {
        for (int y = 0; y < p.n; ++y) {
            if (x == y) continue;
            int Lyx = m.left(y, x);   // L_y(x)
            int Rxy = m.right(x, y);  // R_x(y)
            if (m.right(Lyx, y) != Rxy) {
                rep.witness = "right identity fails at x=" + p.name(x) + ", y=" + p.name(y);
                return rep;
            }
            if (m.left(Rxy, x) != Lyx) {
                rep.witness = "left identity fails at x=" + p.name(x) + ", y=" + p.name(y);
                return rep;
            }
        }
    }
    rep.holds = true;
    return rep;
}

Presentation normalize(const Presentation& p, const Enumeration& e) {
    Presentation q = p;
    for (auto& r : q.relations) {
        if (compare_deglex(r.lhs, r.rhs, e) < 0) {
            std::swap(r.lhs, r.rhs);
            r.coeff = r.coeff.inverse();
        }
    }
    return q;
}

SkewShapeReport check_skew_shape(const Presentation& p, const Enumeration& e) {
    Presentation q = normalize(p, e);
    SkewShapeReport rep;
    for (const auto& r : q.relations) {
        int j = e.rank(r.lhs.at(0)), i = e.rank(r.lhs.at(1));
        int ip = e.rank(r.rhs.at(0)), jp = e.rank(r.rhs.at(1));
        if (j <= i) {
            rep.witness = "lhs " + r.lhs.str(p.names) + " is not rank-descending";
            return rep;
        }
        if (ip >= jp) {
            rep.witness = "rhs " + r.rhs.str(p.names) + " is not rank-ascending";
            return rep;
        }
        if (j <= ip) {
            rep.witness = "lhs " + r.lhs.str(p.names) + " does not dominate rhs " +
                          r.rhs.str(p.names);
            return rep;
        }
    }
    // coverage: every rank-ascending pair must occur as the rhs of exactly
    // one oriented relation
    std::map<Word, int> rhs_count;
    for (const auto& r : q.relations) ++rhs_count[r.rhs];
    for (int ri = 0; ri < p.n; ++ri) {
        for (int rj = ri + 1; rj < p.n; ++rj) {
            Word w = Word::pair(e.gen_at_rank(ri), e.gen_at_rank(rj));
            auto it = rhs_count.find(w);
            int c = it == rhs_count.end() ? 0 : it->second;
            if (c != 1) {
                rep.witness = "ascending word " + w.str(p.names) + " occurs as rhs of " +
                              std::to_string(c) + " relations";
                return rep;
            }
        }
    }
    rep.ok = true;
    return rep;
}

} // namespace qbx
