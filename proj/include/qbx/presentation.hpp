#pragma once

#include <optional>
#include <vector>

#include "qbx/scalar.hpp"
#include "qbx/word.hpp"

namespace qbx {

// One quadratic binomial relation: lhs = coeff * rhs in the algebra, both
// sides words of length two, coeff nonzero.
struct BinomialRelation {
    Word lhs;
    Word rhs;
    Scalar coeff;
};

// A finitely presented quadratic algebra over n generators with binomial
// relations.  Structural validity (index ranges, side lengths, nonzero
// coefficients, no repeated lhs) is enforced at construction; the axioms of
// interest are a separate, reported check.
struct Presentation {
    int n = 0;
    std::vector<std::string> names; // size n
    std::vector<BinomialRelation> relations;

    static Presentation make(int n, std::vector<BinomialRelation> rels,
                             std::vector<std::string> names = {});
    const std::string& name(int g) const { return names[g]; }
};

struct AxiomVerdict {
    bool ok = true;
    std::string witness; // empty when ok
};

// The four defining conditions, checked independently so a failure of one
// still reports the others:
//   a: every relation has exactly one word on each side, a nonzero
//      coefficient, and distinct sides (enforced structurally; here the
//      residual check is lhs != rhs)
//   b: every two-letter word with distinct letters appears at most once
//      across all relation sides
//   c: no relation side is a square xx
//   d: the left and right letter-exchange maps are all bijective
struct AxiomReport {
    AxiomVerdict a, b, c, d;
    bool all() const { return a.ok && b.ok && c.ok && d.ok; }
};

AxiomReport check_axioms(const Presentation& p);

// The exchange map r on two-letter words: relation sides map to each other,
// every other word is fixed.  Well defined whenever axioms a and b hold.
// left(x, y) is the first letter of r(xy); right(y, x) the second.
class CanonicalMap {
  public:
    int n() const { return n_; }
    Word apply(const Word& xy) const { return table_[idx(xy.at(0), xy.at(1))]; }
    Word apply(int x, int y) const { return table_[idx(x, y)]; }
    int left(int x, int y) const { return table_[idx(x, y)].at(0); }
    int right(int y, int x) const { return table_[idx(x, y)].at(1); }
    // coefficient map: relation lhs -> coeff, rhs -> 1/coeff, fixed -> 1
    const Scalar& coefficient(int x, int y) const { return coeff_[idx(x, y)]; }

    friend CanonicalMap canonical_map(const Presentation& p);

  private:
    int idx(int x, int y) const { return x * n_ + y; }
    int n_ = 0;
    std::vector<Word> table_;
    std::vector<Scalar> coeff_;
};

// Throws input_error unless axioms a and b hold (the map is not well
// defined otherwise).  Axioms c and d are deliberately not required: the
// map itself, and everything built from it, stays meaningful for
// degenerate presentations, and the reports say so instead of refusing.
CanonicalMap canonical_map(const Presentation& p);

struct OreReport {
    bool left = false;
    bool right = false;
    std::string left_witness;  // empty when left holds
    std::string right_witness;
};

// Unique-solubility of ax = by (right) and za = tb (left) within the span
// of the relations, quantified over pairs a != b.  Equivalent to axiom d.
OreReport check_ore(const Presentation& p);

struct WeakCyclicReport {
    bool holds = false;
    std::string witness;
};

// The letter-exchange maps commute with themselves in the cyclic sense:
// right(left_y(x) applied to y) = right_x(y) and the mirrored identity,
// for all ordered pairs x != y.
WeakCyclicReport check_weak_cyclic(const Presentation& p);

struct SkewShapeReport {
    bool ok = false;
    std::string witness;
};

// After orienting every relation so its greater side (degree-lex under e)
// is the lhs: each lhs must be strictly descending in rank, each rhs
// strictly ascending, the lhs must dominate the rhs letterwise as required
// for a skew polynomial shape, and every ascending two-letter word with
// distinct letters must occur as some rhs.
SkewShapeReport check_skew_shape(const Presentation& p, const Enumeration& e);

// Copy of p with every relation oriented so the degree-lex greater side
// under e is the lhs (coefficient inverted when sides swap).
Presentation normalize(const Presentation& p, const Enumeration& e);

} // namespace qbx
