#pragma once

#include "qbx/linalg.hpp"
#include "qbx/rewriting.hpp"

namespace qbx {

// The quadratic dual of a presentation whose relations cover every
// off-diagonal two-letter word: one binomial relation per base relation
// (with inverted, negated coefficient) plus a vanishing square for every
// generator.  Dual generators are written over the same indices; names get
// the xi prefix.
struct DualPresentation {
    Presentation base;
    std::vector<std::string> names;             // dual generator names
    std::vector<BinomialRelation> binomials;    // lhs = coeff * rhs, off-diagonal
    int n() const { return base.n; }
    // binomials plus the n squares
    std::size_t relation_count() const { return binomials.size() + base.n; }
};

// Requires the exchange map to be well defined (axioms a, b) and full
// coverage: every off-diagonal word occurs in some relation side.
DualPresentation koszul_dual(const Presentation& p);

// Rewriting system of the dual under e: the oriented binomials plus
// squares-to-zero.
RewriteSystem dual_rewrite_system(const DualPresentation& dp, const Enumeration& e);

// Dimension of the dual in degree k, as n^k minus the rank of the spanning
// rows a * g * b of the degree-k slice of the relation ideal.
// 0 <= k <= n+1 enforced by cap.
long graded_dimension(const DualPresentation& dp, int k);
long graded_dimension_serial(const DualPresentation& dp, int k);

// Same dimension by a different route: the number of closure classes of
// degree-k words that neither cross a square nor carry a coefficient
// conflict.  Used as a consistency check against the rank route.
long graded_dimension_classes(const DualPresentation& dp, int k);

struct FrobeniusReport {
    bool holds = false;
    std::vector<long> dims;       // degrees 0..n+1
    std::vector<long> pair_ranks; // splits j=0..n, set when the socle exists
    Word socle;                   // least degree-n word alive in the dual
    std::string failure;          // set when !holds
};

// Frobenius check: top dimension 1, nothing above, and the split pairing
// into the socle nondegenerate at every degree.
FrobeniusReport check_frobenius(const DualPresentation& dp);

struct PrincipalReport {
    Word socle;
    EquivalenceClass cls; // closure of the socle word in the base algebra
    std::vector<int> heads, tails; // distinct first/last letters across the class
    std::vector<Word> multilinear; // members using every generator once
};

// Structure of the socle monomial's class in the base algebra.
// Precondition: the dual is Frobenius.
PrincipalReport principal_monomial(const DualPresentation& dp);

struct RegularSocleReport {
    bool holds = false;
    std::vector<Word> regular; // multilinear members least in their class
                               // under their own letter order
};

// A multilinear class member y1...yn is regular when every other member of
// the class is strictly greater under the enumeration y1 < ... < yn.
// Precondition: the dual is Frobenius.
RegularSocleReport check_regular_socle(const DualPresentation& dp);

// The connecting generators of the base algebra under a certifying
// enumeration, writing x_i for the generator of rank i-1:
//   eta[j-1]  = the unique t with x_{j+1}...x_n t = x_j...x_n   (j = 1..n-1)
//   theta[j-2] = the unique t with t x_1...x_{j-1} = x_1...x_j  (j = 2..n)
// (equalities of normal-form words).  Throws input_error when e does not
// certify p, internal_error when a chain fails to exist uniquely.
struct EtaThetaChains {
    std::vector<int> eta;
    std::vector<int> theta;
};

EtaThetaChains eta_chains(const Presentation& p, const Enumeration& e);

// For a strictly rank-ascending square-free dual word u, the words u', u''
// with u u' = u'' u = x_1...x_n in the dual (up to scalar), built from the
// eta/theta chains and reduced to dual normal form.
std::pair<Word, Word> dual_complement(const DualPresentation& dp, const Enumeration& e,
                                      const Word& u);

} // namespace qbx
