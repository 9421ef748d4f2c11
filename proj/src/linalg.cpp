#include "qbx/linalg.hpp"

namespace qbx {

void RowReducer::add(Tensor row) {
    if (row.is_zero()) return;
    if (rank() > 0 && row.degree() != pivots_.begin()->second.degree())
        throw input_error("rows of mixed degree");
    // Forward elimination: only the leading word decides whether the row is
    // new; pivot rows are normalized so the update is a single axpy.
    while (!row.is_zero()) {
        auto it = pivots_.find(row.leading_word());
        if (it == pivots_.end()) break;
        row.axpy(-row.leading_coeff(), it->second);
    }
    if (row.is_zero()) return;
    row.scale(row.leading_coeff().inverse());
    pivots_.emplace(row.leading_word(), std::move(row));
}

std::vector<Tensor> RowReducer::reduced_basis() {
    if (rank_only_) throw internal_error("reduced_basis in rank-only mode");
    // Back-substitution in one pass over pivots in descending order: every
    // non-leading pivot word in a row is greater than the row's own pivot,
    // and its row is already fully reduced (so contains no pivot words
    // itself).  Snapshot coefficients therefore stay valid.
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        Tensor& row = it->second;
        std::vector<std::pair<Word, Scalar>> hits;
        for (const auto& [w, c] : row)
            if (w != it->first && pivots_.count(w)) hits.emplace_back(w, c);
        for (const auto& [w, c] : hits) row.axpy(-c, pivots_.at(w));
    }
    std::vector<Tensor> out;
    out.reserve(pivots_.size());
    for (const auto& [w, t] : pivots_) out.push_back(t);
    return out;
}

RowReduceResult row_reduce(const std::vector<Tensor>& rows) {
    RowReducer r;
    for (const auto& t : rows) r.add(t);
    RowReduceResult res;
    res.rank = r.rank();
    res.basis = r.reduced_basis();
    return res;
}

} // namespace qbx
