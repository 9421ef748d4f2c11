#include "qbx/yangbaxter.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qbx {

namespace {

Word apply_set_r(const CanonicalMap& m, const Word& w, int pos) {
    Word im = m.apply(w.at(pos), w.at(pos + 1));
    return w.replace_pair(pos, im.at(0), im.at(1));
}

Word set_chain(const CanonicalMap& m, Word w, std::initializer_list<int> positions) {
    for (int pos : positions) w = apply_set_r(m, w, pos);
    return w;
}

bool set_mismatch(const CanonicalMap& m, const Word& w, Word& l, Word& r) {
    l = set_chain(m, w, {0, 1, 0});
    r = set_chain(m, w, {1, 0, 1});
    return l != r;
}

Tensor linear_chain(const CanonicalMap& m, const Word& w, std::initializer_list<int> positions) {
    Tensor t = Tensor::monomial(w, Scalar(1));
    for (int pos : positions) t = apply_linear_r(m, t, pos);
    return t;
}

bool linear_mismatch(const CanonicalMap& m, const Word& w, Tensor& l, Tensor& r) {
    l = linear_chain(m, w, {0, 1, 0});
    r = linear_chain(m, w, {1, 0, 1});
    return l != r;
}

// Scans basis words in order; mismatch(w) fills the report results.
template <typename Report, typename Mismatch>
Report scan_serial(const CanonicalMap& m, Mismatch mismatch) {
    Report rep;
    std::uint64_t n = m.n(), total = n * n * n;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Word w = Word::from_index(idx, (int)n, 3);
        typename Report::SideType l, r;
        if (mismatch(m, w, l, r)) {
            rep.witness = w;
            rep.left_result = l;
            rep.right_result = r;
            return rep;
        }
    }
    rep.holds = true;
    return rep;
}

// Parallel over basis words, reduced to the least failing index so the
// witness matches the serial scan.
template <typename Report, typename Mismatch>
Report scan_parallel(const CanonicalMap& m, Mismatch mismatch) {
    std::uint64_t n = m.n(), total = n * n * n;
    std::int64_t least = -1;
#ifdef _OPENMP
#pragma omp parallel
    {
        std::int64_t local = -1;
#pragma omp for schedule(static)
        for (std::int64_t idx = 0; idx < (std::int64_t)total; ++idx) {
            if (local != -1) continue;
            Word w = Word::from_index(idx, (int)n, 3);
            typename Report::SideType l, r;
            if (mismatch(m, w, l, r)) local = idx;
        }
#pragma omp critical
        if (local != -1 && (least == -1 || local < least)) least = local;
    }
#else
    for (std::uint64_t idx = 0; idx < total && least == -1; ++idx) {
        typename Report::SideType l, r;
        Word w = Word::from_index(idx, (int)n, 3);
        if (mismatch(m, w, l, r)) least = (std::int64_t)idx;
    }
#endif
    Report rep;
    if (least == -1) {
        rep.holds = true;
        return rep;
    }
    rep.witness = Word::from_index((std::uint64_t)least, (int)n, 3);
    mismatch(m, rep.witness, rep.left_result, rep.right_result);
    return rep;
}

} // namespace

Tensor apply_linear_r(const CanonicalMap& m, const Tensor& t, int pos) {
    Tensor out(t.degree());
    for (const auto& [w, s] : t) {
        int a = w.at(pos), b = w.at(pos + 1);
        Word im = m.apply(a, b);
        out.add(w.replace_pair(pos, im.at(0), im.at(1)), s * m.coefficient(a, b));
    }
    return out;
}

SetYbeReport check_set_ybe_serial(const Presentation& p) {
    CanonicalMap m = canonical_map(p);
    return scan_serial<SetYbeReport>(m, [](const CanonicalMap& mm, const Word& w, Word& l, Word& r) {
        return set_mismatch(mm, w, l, r);
    });
}

SetYbeReport check_set_ybe(const Presentation& p) {
    CanonicalMap m = canonical_map(p);
    return scan_parallel<SetYbeReport>(m, [](const CanonicalMap& mm, const Word& w, Word& l, Word& r) {
        return set_mismatch(mm, w, l, r);
    });
}

LinearYbeReport check_linear_ybe_serial(const Presentation& p) {
    CanonicalMap m = canonical_map(p);
    return scan_serial<LinearYbeReport>(
        m, [](const CanonicalMap& mm, const Word& w, Tensor& l, Tensor& r) {
            return linear_mismatch(mm, w, l, r);
        });
}

LinearYbeReport check_linear_ybe(const Presentation& p) {
    CanonicalMap m = canonical_map(p);
    return scan_parallel<LinearYbeReport>(
        m, [](const CanonicalMap& mm, const Word& w, Tensor& l, Tensor& r) {
            return linear_mismatch(mm, w, l, r);
        });
}

} // namespace qbx
