#include "qbx/koszul.hpp"

#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qbx {

namespace {

std::string dual_name(const std::string& base) {
    // x7 -> xi7; anything else gets the prefix whole
    std::size_t i = 0;
    while (i < base.size() && !(base[i] >= '0' && base[i] <= '9')) ++i;
    if (i > 0 && i < base.size()) return "\xce\xbe" + base.substr(i); // ξ
    return "\xce\xbe" + base;
}

} // namespace

DualPresentation koszul_dual(const Presentation& p) {
    canonical_map(p); // throws unless axioms a, b hold
    std::set<Word> covered;
    for (const auto& r : p.relations) {
        covered.insert(r.lhs);
        covered.insert(r.rhs);
    }
    for (int x = 0; x < p.n; ++x)
        for (int y = 0; y < p.n; ++y)
            if (x != y && !covered.count(Word::pair(x, y)))
                throw input_error("koszul dual requires every off-diagonal word to occur "
                                  "in a relation; " +
                                  Word::pair(x, y).str(p.names) + " does not");
    DualPresentation dp;
    dp.base = p;
    for (const auto& nm : p.names) dp.names.push_back(dual_name(nm));
    // base lhs = c * rhs dualizes to lhs = -(1/c) * rhs on the xi side
    for (const auto& r : p.relations)
        dp.binomials.push_back({r.lhs, r.rhs, -r.coeff.inverse()});
    return dp;
}

RewriteSystem dual_rewrite_system(const DualPresentation& dp, const Enumeration& e) {
    Presentation q = Presentation::make(dp.n(), dp.binomials, dp.names);
    return RewriteSystem::orient(q, e, /*squares_to_zero=*/true);
}

namespace {

// spanning tensors of the degree-2 slice: the binomial elements and the
// squares
std::vector<Tensor> ideal_generators(const DualPresentation& dp) {
    std::vector<Tensor> gens;
    for (const auto& r : dp.binomials) {
        Tensor t(2);
        t.add(r.lhs, Scalar(1));
        t.add(r.rhs, -r.coeff);
        gens.push_back(std::move(t));
    }
    for (int i = 0; i < dp.n(); ++i)
        gens.push_back(Tensor::monomial(Word::pair(i, i), Scalar(1)));
    return gens;
}

Tensor padded(const Tensor& g, const Word& a, const Word& b, int k) {
    Tensor t(k);
    for (const auto& [w, c] : g) t.add(a + w + b, c);
    return t;
}

long graded_dimension_impl(const DualPresentation& dp, int k, bool parallel) {
    int n = dp.n();
    if (k < 0 || k > n + 1) throw cap_error("dual degree cap exceeded");
    if (k == 0) return 1;
    if (k == 1) return n;
    std::uint64_t nk = 1;
    for (int i = 0; i < k; ++i) nk *= n;
    std::vector<Tensor> gens = ideal_generators(dp);
    RowReducer red(/*rank_only=*/true);
    // one bucket per (generator, position): built independently, absorbed
    // in a fixed order so the elimination sees a deterministic stream
    for (const auto& g : gens) {
        for (int pos = 0; pos + 2 <= k; ++pos) {
            std::uint64_t na = 1, nb = 1;
            for (int i = 0; i < pos; ++i) na *= n;
            for (int i = 0; i < k - 2 - pos; ++i) nb *= n;
            std::vector<Tensor> bucket((std::size_t)(na * nb));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
            for (std::int64_t ia = 0; ia < (std::int64_t)na; ++ia) {
                Word a = Word::from_index((std::uint64_t)ia, n, pos);
                for (std::uint64_t ib = 0; ib < nb; ++ib) {
                    Word b = Word::from_index(ib, n, k - 2 - pos);
                    bucket[(std::size_t)ia * nb + ib] = padded(g, a, b, k);
                }
            }
            for (auto& row : bucket) red.add(std::move(row));
        }
    }
    return (long)nk - red.rank();
}

} // namespace

long graded_dimension(const DualPresentation& dp, int k) {
    return graded_dimension_impl(dp, k, true);
}

long graded_dimension_serial(const DualPresentation& dp, int k) {
    return graded_dimension_impl(dp, k, false);
}

long graded_dimension_classes(const DualPresentation& dp, int k) {
    int n = dp.n();
    if (k < 0 || k > n + 1) throw cap_error("dual degree cap exceeded");
    if (k == 0) return 1;
    ClassPartition part = partition_classes(dp.binomials, n, k, /*squares_mode=*/true);
    long alive = 0;
    for (const auto& c : part.classes)
        if (!c.hit_square && !c.conflict) ++alive;
    return alive;
}

FrobeniusReport check_frobenius(const DualPresentation& dp) {
    FrobeniusReport rep;
    int n = dp.n();
    for (int k = 0; k <= n + 1; ++k) rep.dims.push_back(graded_dimension(dp, k));
    if (rep.dims[n] != 1) {
        rep.failure = "dimension in degree " + std::to_string(n) + " is " +
                      std::to_string(rep.dims[n]) + ", expected 1";
        return rep;
    }
    if (rep.dims[n + 1] != 0) {
        rep.failure = "dimension in degree " + std::to_string(n + 1) + " is " +
                      std::to_string(rep.dims[n + 1]) + ", expected 0";
        return rep;
    }
    // socle representative: least degree-n word alive in the dual
    ClassPartition part = partition_classes(dp.binomials, n, n, /*squares_mode=*/true);
    const EquivalenceClass* socle_cls = nullptr;
    for (const auto& c : part.classes) {
        if (!c.hit_square && !c.conflict) {
            socle_cls = &c;
            break; // classes are seeded in word order
        }
    }
    if (!socle_cls) {
        rep.failure = "socle representative degenerates";
        return rep;
    }
    rep.socle = socle_cls->base;
    // split pairing into the socle: M[u][v] = coefficient of the socle
    // representative in u v; one class member contributes one entry
    bool ok = true;
    for (int j = 0; j <= n; ++j) {
        std::map<Word, Tensor> rows;
        for (const auto& [w, c] : socle_cls->coeffs) {
            Word u = w.subword(0, j), v = w.subword(j, n - j);
            auto [it, fresh] = rows.try_emplace(u, Tensor(n - j));
            it->second.add(v, c);
        }
        RowReducer red(/*rank_only=*/true);
        for (auto& [u, row] : rows) red.add(std::move(row));
        long rank = red.rank();
        rep.pair_ranks.push_back(rank);
        if (rank != rep.dims[j] || rank != rep.dims[n - j]) {
            if (ok) {
                rep.failure = "pairing degenerate at split " + std::to_string(j) + ": rank " +
                              std::to_string(rank) + ", dimensions " +
                              std::to_string(rep.dims[j]) + " and " +
                              std::to_string(rep.dims[n - j]);
                ok = false;
            }
        }
    }
    rep.holds = ok;
    return rep;
}

PrincipalReport principal_monomial(const DualPresentation& dp) {
    FrobeniusReport fr = check_frobenius(dp);
    if (!fr.holds) throw input_error("dual is not Frobenius: " + fr.failure);
    PrincipalReport rep;
    rep.socle = fr.socle;
    rep.cls = class_closure(dp.base, fr.socle);
    std::set<int> heads, tails;
    for (const auto& [w, c] : rep.cls.coeffs) {
        heads.insert(w.front());
        tails.insert(w.back());
        std::set<int> letters;
        for (int i = 0; i < w.size(); ++i) letters.insert(w.at(i));
        if ((int)letters.size() == dp.n()) rep.multilinear.push_back(w);
    }
    rep.heads.assign(heads.begin(), heads.end());
    rep.tails.assign(tails.begin(), tails.end());
    return rep;
}

RegularSocleReport check_regular_socle(const DualPresentation& dp) {
    PrincipalReport pm = principal_monomial(dp);
    RegularSocleReport rep;
    for (const Word& w : pm.multilinear) {
        Enumeration ew = Enumeration::from_order(w.letters());
        bool least = true;
        for (const auto& [m, c] : pm.cls.coeffs) {
            if (m != w && compare_deglex(m, w, ew) <= 0) {
                least = false;
                break;
            }
        }
        if (least) rep.regular.push_back(w);
    }
    rep.holds = !rep.regular.empty();
    return rep;
}

namespace {

Word rank_word(const Enumeration& e, int from, int to) { // ranks [from, to)
    Word w;
    for (int r = from; r < to; ++r) w = w.append(e.gen_at_rank(r));
    return w;
}

} // namespace

EtaThetaChains eta_chains(const Presentation& p, const Enumeration& e) {
    RewriteSystem rs = RewriteSystem::orient(p, e);
    GroebnerReport gr = check_groebner(rs);
    if (!gr.ok) throw input_error("enumeration does not certify the presentation: " + gr.reason);
    int n = p.n;
    EtaThetaChains ch;
    for (int j = 1; j <= n - 1; ++j) {
        // x_{j+1}...x_n t = x_j...x_n
        Word head = rank_word(e, j, n), target = normal_form(rs, rank_word(e, j - 1, n)).word;
        int found = -1, count = 0;
        for (int t = 0; t < n; ++t) {
            if (normal_form(rs, head.append(t)).word == target) {
                found = t;
                ++count;
            }
        }
        if (count != 1)
            throw internal_error("eta chain at " + std::to_string(j) + " has " +
                                 std::to_string(count) + " solutions");
        ch.eta.push_back(found);
    }
    for (int j = 2; j <= n; ++j) {
        // t x_1...x_{j-1} = x_1...x_j
        Word tail = rank_word(e, 0, j - 1), target = normal_form(rs, rank_word(e, 0, j)).word;
        int found = -1, count = 0;
        for (int t = 0; t < n; ++t) {
            if (normal_form(rs, Word{t} + tail).word == target) {
                found = t;
                ++count;
            }
        }
        if (count != 1)
            throw internal_error("theta chain at " + std::to_string(j) + " has " +
                                 std::to_string(count) + " solutions");
        ch.theta.push_back(found);
    }
    return ch;
}

std::pair<Word, Word> dual_complement(const DualPresentation& dp, const Enumeration& e,
                                      const Word& u) {
    int n = dp.n();
    for (int i = 0; i + 1 < u.size(); ++i)
        if (e.rank(u.at(i)) >= e.rank(u.at(i + 1)))
            throw input_error("dual word must be strictly rank-ascending");
    RewriteSystem drs = dual_rewrite_system(dp, e);
    GroebnerReport gr = check_groebner(drs);
    if (!gr.ok) throw input_error("enumeration does not certify the dual: " + gr.reason);
    EtaThetaChains ch = eta_chains(dp.base, e);
    std::vector<bool> eps(n, false); // eps[r]: rank r occurs in u
    for (int i = 0; i < u.size(); ++i) eps[e.rank(u.at(i))] = true;
    // u' = x_n^(1-eps_n) eta_{n-1}^(1-eps_{n-1}) ... eta_1^(1-eps_1)
    Word wp;
    if (!eps[n - 1]) wp = wp.append(e.gen_at_rank(n - 1));
    for (int j = n - 1; j >= 1; --j)
        if (!eps[j - 1]) wp = wp.append(ch.eta[j - 1]);
    // u'' = theta_n^(1-eps_n) ... theta_2^(1-eps_2) x_1^(1-eps_1)
    Word ws;
    for (int j = n; j >= 2; --j)
        if (!eps[j - 1]) ws = ws.append(ch.theta[j - 2]);
    if (!eps[0]) ws = ws.append(e.gen_at_rank(0));
    NormalForm np = normal_form(drs, wp), ns = normal_form(drs, ws);
    if (np.zero || ns.zero) throw internal_error("dual complement vanishes");
    Word full = rank_word(e, 0, n);
    if (normal_form(drs, u + np.word).word != full)
        throw internal_error("right complement identity fails for " + u.str(dp.names));
    if (normal_form(drs, ns.word + u).word != full)
        throw internal_error("left complement identity fails for " + u.str(dp.names));
    return {np.word, ns.word};
}

} // namespace qbx
