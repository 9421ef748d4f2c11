#pragma once

#include "qbx/presentation.hpp"
#include "qbx/tensor.hpp"

namespace qbx {

// Braid relation checks for the exchange map of a presentation, at the
// level of words (set-theoretic) and of linear combinations (the map
// scaled by relation coefficients).  Both compare
//   r12 r23 r12  against  r23 r12 r23
// applied in that order to every degree-3 basis word; the witness is the
// least word where the two sides disagree.

struct SetYbeReport {
    using SideType = Word;
    bool holds = false;
    Word witness;
    Word left_result, right_result;
};

struct LinearYbeReport {
    using SideType = Tensor;
    bool holds = false;
    Word witness;
    Tensor left_result, right_result;
};

// Throws input_error when the exchange map is undefined (axioms a/b).
SetYbeReport check_set_ybe(const Presentation& p);
SetYbeReport check_set_ybe_serial(const Presentation& p);

LinearYbeReport check_linear_ybe(const Presentation& p);
LinearYbeReport check_linear_ybe_serial(const Presentation& p);

// r at tensor positions (pos, pos+1) on a basis word, with coefficient:
// the building block of the linear check, exposed for property tests.
Tensor apply_linear_r(const CanonicalMap& m, const Tensor& t, int pos);

} // namespace qbx
