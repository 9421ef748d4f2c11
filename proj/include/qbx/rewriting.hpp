#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qbx/presentation.hpp"
#include "qbx/tensor.hpp"

namespace qbx {

// A quadratic rewriting system: rules lhs -> coeff * rhs on two-letter
// words with lhs degree-lex greater under the enumeration, plus optionally
// the rule xx -> 0 for every generator (used for quotients by squares).
// Rules are indexed by the lhs pair for O(1) lookup during reduction.
class RewriteSystem {
  public:
    struct Rule {
        Word lhs, rhs;
        Scalar coeff;
    };

    // Orients the relations of p under e.  Relations whose sides compare
    // equal are rejected.
    static RewriteSystem orient(const Presentation& p, const Enumeration& e,
                                bool squares_to_zero = false);

    int n() const { return n_; }
    const Enumeration& enumeration() const { return e_; }
    bool squares_to_zero() const { return squares_to_zero_; }
    const std::vector<Rule>& rules() const { return rules_; }
    const std::vector<std::string>& names() const { return names_; }

    // rule whose lhs is ab, if any
    const Rule* rule_for(int a, int b) const {
        int i = index_[a * n_ + b];
        return i < 0 ? nullptr : &rules_[i];
    }
    // ab is the top of a reduction step: a rule lhs, or a square when
    // squares vanish
    bool reducible(int a, int b) const {
        return rule_for(a, b) != nullptr || (squares_to_zero_ && a == b);
    }

  private:
    int n_ = 0;
    bool squares_to_zero_ = false;
    Enumeration e_;
    std::vector<std::string> names_;
    std::vector<Rule> rules_;
    std::vector<int> index_;
};

// Result of rewriting a word to normal form: w reduces to coeff * word, or
// to zero (squares mode only).
struct NormalForm {
    Word word;
    Scalar coeff;
    bool zero = false;

    friend bool operator==(const NormalForm& a, const NormalForm& b) {
        if (a.zero || b.zero) return a.zero == b.zero;
        return a.word == b.word && a.coeff == b.coeff;
    }
};

// Leftmost reduction until no position is reducible.  Terminates for any
// rule set oriented by a degree-lex order.
NormalForm normal_form(const RewriteSystem& rs, const Word& w);

// Number of words of degree d in normal form (no reducible adjacent pair),
// by dynamic programming over the last letter.
long count_normal_words(const RewriteSystem& rs, int d);

// The normal words themselves, in word order.  Enumerates all n^d words;
// meant for small degrees.
std::vector<Word> normal_words(const RewriteSystem& rs, int d);

// The equivalence class of w under applying relations at any position, in
// either direction, with the induced coefficient relative to w:
// member = coeffs[member] * w holds in the algebra for every member, unless
// conflict is set (two paths to one word disagreed, so the class collapses
// linearly).  In squares mode, crossing a square marks the class dead.
struct EquivalenceClass {
    Word base;
    std::map<Word, Scalar> coeffs;
    bool conflict = false;
    bool hit_square = false; // squares mode only

    std::vector<Word> members() const {
        std::vector<Word> v;
        for (const auto& [w, c] : coeffs) v.push_back(w);
        return v;
    }
};

EquivalenceClass class_closure(const Presentation& p, const Word& w);

// Same closure against an explicit relation list, optionally tracking
// square segments (for quotients by squares).
EquivalenceClass class_closure_rel(const std::vector<BinomialRelation>& rels, int n,
                                   const Word& w, bool squares_mode);

// Partition of all degree-d words into closure classes; class_of[index(w)]
// identifies the class.  This is the batch form used by the graded
// computations, one shared traversal instead of one closure per word.
struct ClassPartition {
    int n = 0, degree = 0;
    std::vector<int> class_of;           // word index -> class id
    std::vector<EquivalenceClass> classes;
};

ClassPartition partition_classes(const std::vector<BinomialRelation>& rels, int n, int degree,
                                 bool squares_mode);

struct GroebnerReport {
    bool ok = false;
    bool skew_shaped = false;
    std::string reason; // set when !ok
    // overlap ambiguities whose two reductions disagree, in word order;
    // witness details are for the least one
    std::vector<Word> failing;
    NormalForm witness_left, witness_right;

    const Word* witness() const { return failing.empty() ? nullptr : &failing[0]; }
};

// Degree-3 confluence of the oriented system.  For plain systems the
// presentation must be skew-shaped under the enumeration first; every
// overlap ambiguity (both adjacent pairs reducible) is reduced starting
// from the left pair and from the right pair, and the two normal forms must
// agree as scaled words.
GroebnerReport check_groebner(const RewriteSystem& rs);

// All enumerations e for which the presentation is skew-shaped and
// degree-3 confluent, in lexicographic order of the generator listing.
// Refuses n > 9.
std::vector<Enumeration> find_skew_order(const Presentation& p);
std::vector<Enumeration> find_skew_order_serial(const Presentation& p);

// Orbit of a degree-3 word under the two position maps r12 = r x id and
// r23 = id x r.  Members in word order; ops[i] is one generating sequence
// like "r12 r23" (applied left to right) taking base to members[i].
struct DihedralOrbit {
    Word base;
    std::vector<Word> members;
    std::vector<std::string> ops;
};

DihedralOrbit dihedral_orbit(const Presentation& p, const Word& w);

} // namespace qbx
