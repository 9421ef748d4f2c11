#pragma once

#include <map>
#include <vector>

#include "qbx/tensor.hpp"

namespace qbx {

// Incremental exact Gaussian elimination over tensors of one degree.
// Pivots are chosen as the least word of each row, so the result is
// independent of insertion order once fully reduced.  Rows may be streamed
// in; only the pivot rows are retained.  rank_only skips the bookkeeping
// needed to emit a reduced basis (forward elimination alone determines
// rank), which matters for the largest spans.
class RowReducer {
  public:
    explicit RowReducer(bool rank_only = false) : rank_only_(rank_only) {}

    // Reduce row against current pivots and absorb it if nonzero.
    void add(Tensor row);

    int rank() const { return (int)pivots_.size(); }

    // Fully reduced basis: each row normalized to leading coefficient 1,
    // containing no other row's pivot word, ordered by pivot word.
    // Invalid in rank_only mode.
    std::vector<Tensor> reduced_basis();

  private:
    bool rank_only_;
    std::map<Word, Tensor> pivots_;
};

struct RowReduceResult {
    int rank = 0;
    std::vector<Tensor> basis;
};

// Reduced row echelon form of the span of rows.  Deterministic: the basis
// depends only on the span.
RowReduceResult row_reduce(const std::vector<Tensor>& rows);

} // namespace qbx
