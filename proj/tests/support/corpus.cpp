#include "corpus.hpp"

namespace corpus {

namespace {

BinomialRelation rel(int a, int b, const Scalar& c, int x, int y) {
    return {Word::pair(a, b), Word::pair(x, y), c};
}

} // namespace

Presentation flip(int n) {
    std::vector<BinomialRelation> rels;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) rels.push_back(rel(j, i, Scalar(1), i, j));
    return Presentation::make(n, rels);
}

Presentation a1() {
    return Presentation::make(3, {
                                     rel(2, 1, Scalar(1), 0, 2),
                                     rel(2, 0, Scalar(1), 0, 2),
                                     rel(1, 0, Scalar(1), 0, 1),
                                 });
}

Presentation a2(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
                const Scalar& e, const Scalar& f) {
    return Presentation::make(4, {
                                     rel(3, 2, a, 2, 3),
                                     rel(3, 1, b, 0, 2),
                                     rel(3, 0, c, 1, 2),
                                     rel(2, 1, d, 0, 3),
                                     rel(2, 0, e, 1, 3),
                                     rel(1, 0, f, 0, 1),
                                 });
}

Presentation a2_ones() {
    return a2(Scalar(1), Scalar(1), Scalar(1), Scalar(1), Scalar(1), Scalar(1));
}

Presentation a2_general() {
    return a2(Scalar(-1), Scalar(2), Scalar(1), Scalar(6), Scalar(3), Scalar(1));
}

Presentation a2_bad() {
    return a2(Scalar(1), Scalar(1), Scalar(1), Scalar(1), Scalar(2), Scalar(1));
}

Presentation example_c() {
    return Presentation::make(4, {
                                     rel(3, 2, Scalar(1), 1, 3),
                                     rel(3, 1, Scalar(1), 0, 2),
                                     rel(3, 0, Scalar(1), 2, 3),
                                     rel(2, 1, Scalar(1), 1, 2),
                                     rel(2, 0, Scalar(1), 0, 3),
                                     rel(1, 0, Scalar(1), 0, 1),
                                 });
}

Presentation set_theoretic() {
    return Presentation::make(4, {
                                     rel(2, 3, Scalar(1), 0, 1),
                                     rel(1, 3, Scalar(1), 0, 2),
                                     rel(3, 1, Scalar(1), 2, 0),
                                     rel(3, 2, Scalar(1), 1, 0),
                                     rel(3, 0, Scalar(1), 0, 3),
                                     rel(2, 1, Scalar(1), 1, 2),
                                 });
}

Presentation random_presentation(int n, std::mt19937& rng, bool nondegenerate_only) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 5);
    for (;;) {
        std::vector<Word> offdiag;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y) offdiag.push_back(Word::pair(x, y));
        std::shuffle(offdiag.begin(), offdiag.end(), rng);
        std::vector<BinomialRelation> rels;
        for (std::size_t i = 0; i + 1 < offdiag.size(); i += 2) {
            int nu = 0;
            while (nu == 0) nu = num(rng);
            Scalar c(mpq_class(nu, den(rng)));
            Word lhs = offdiag[i], rhs = offdiag[i + 1];
            if (lhs < rhs) {
                std::swap(lhs, rhs);
                c = c.inverse();
            }
            rels.push_back({lhs, rhs, c});
        }
        Presentation p = Presentation::make(n, std::move(rels));
        if (!nondegenerate_only || qbx::check_axioms(p).all()) return p;
    }
}

} // namespace corpus
