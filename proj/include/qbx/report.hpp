#pragma once

#include "qbx/io.hpp"
#include "qbx/koszul.hpp"
#include "qbx/yangbaxter.hpp"

namespace qbx {

// Report builders behind the command-line subcommands.  Each returns the
// JSON document for stdout; the text rendering is derived from it.

Json run_check(const PresentationFile& pf);
Json run_order_search(const PresentationFile& pf);
Json run_groebner(const PresentationFile& pf, const Enumeration& e);
Json run_ybe(const PresentationFile& pf, bool set_mode, bool linear_mode);
Json run_dual(const PresentationFile& pf);
Json run_frobenius(const PresentationFile& pf);
Json run_socle(const PresentationFile& pf);
Json run_hilbert(const PresentationFile& pf, int max_degree);

struct TheoremBOutcome {
    Json doc;
    bool quantum_binomial = false;
    bool consistent = false;
};

// The three-way equivalence report: cyclicity with Frobenius dual and
// regular socle; existence of a certifying order; the linear braid
// relation.  consistent records whether the three agree.
TheoremBOutcome run_theorem_b(const PresentationFile& pf);

// Human rendering of a report document: indented "key: value" lines.
std::string render_text(const Json& doc);

} // namespace qbx
