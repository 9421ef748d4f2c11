#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "qbx/error.hpp"
#include "qbx/rewriting.hpp"
#include "support/corpus.hpp"

using namespace qbx;

static long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

static bool contains(const std::string& s, const std::string& sub) {
  return s.find(sub) != std::string::npos;
}

static bool is_irreducible(const RewriteSystem& rs, const Word& w) {
  for (int i = 0; i + 1 < w.size(); ++i)
    if (rs.reducible(w.at(i), w.at(i + 1))) return false;
  return true;
}

TEST_CASE("orientation picks the greater side") {
  RewriteSystem rs = RewriteSystem::orient(corpus::a2_general(), Enumeration::identity(4));
  CHECK(rs.rules().size() == 6);
  const RewriteSystem::Rule* r = rs.rule_for(3, 1);
  REQUIRE(r != nullptr);
  CHECK(r->rhs == Word::pair(0, 2));
  CHECK(r->coeff == Scalar(2));
  CHECK(rs.rule_for(0, 2) == nullptr);
  CHECK(rs.reducible(3, 1));
  CHECK_FALSE(rs.reducible(0, 2));
  CHECK_FALSE(rs.reducible(1, 1));

  // under the reversed listing the same relation orients the other way
  RewriteSystem rev =
      RewriteSystem::orient(corpus::a2_general(), Enumeration::from_order({3, 2, 1, 0}));
  CHECK(rev.rule_for(3, 1) == nullptr);
  const RewriteSystem::Rule* rr = rev.rule_for(0, 2);
  REQUIRE(rr != nullptr);
  CHECK(rr->coeff == Scalar(mpq_class(1, 2)));
}

TEST_CASE("orientation rejects unusable relations") {
  Presentation loop = Presentation::make(2, {{Word::pair(0, 1), Word::pair(0, 1), Scalar(2)}});
  CHECK_THROWS_AS(RewriteSystem::orient(loop, Enumeration::identity(2)), input_error);

  // two relations collapsing onto one lhs after orientation
  Presentation dup = Presentation::make(3, {{Word::pair(1, 0), Word::pair(0, 1), Scalar(1)},
                                            {Word::pair(0, 1), Word::pair(1, 0), Scalar(1)}});
  CHECK_THROWS_AS(RewriteSystem::orient(dup, Enumeration::identity(3)), input_error);
}

TEST_CASE("normal forms of the fixtures") {
  RewriteSystem flip3 = RewriteSystem::orient(corpus::flip(3), Enumeration::identity(3));
  CHECK(normal_form(flip3, Word::pair(2, 0)) == NormalForm{Word::pair(0, 2), Scalar(1)});
  CHECK(normal_form(flip3, Word::pair(0, 2)) == NormalForm{Word::pair(0, 2), Scalar(1)});
  CHECK(normal_form(flip3, Word{2, 1, 0}) == NormalForm{Word{0, 1, 2}, Scalar(1)});

  RewriteSystem ones = RewriteSystem::orient(corpus::a2_ones(), Enumeration::identity(4));
  CHECK(normal_form(ones, Word::pair(3, 1)) == NormalForm{Word::pair(0, 2), Scalar(1)});

  RewriteSystem gen = RewriteSystem::orient(corpus::a2_general(), Enumeration::identity(4));
  CHECK(normal_form(gen, Word::pair(3, 1)) == NormalForm{Word::pair(0, 2), Scalar(2)});
}

TEST_CASE("rewriting a commuting monoid sorts the word") {
  RewriteSystem rs = RewriteSystem::orient(corpus::flip(4), Enumeration::identity(4));
  std::mt19937 rng(71);
  std::uniform_int_distribution<int> letter(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    Word w;
    for (int i = 0; i < 6; ++i) w = w.append(letter(rng));
    std::vector<int> sorted = w.letters();
    std::sort(sorted.begin(), sorted.end());
    Word expect;
    for (int g : sorted) expect = expect.append(g);
    NormalForm nf = normal_form(rs, w);
    CHECK(nf.word == expect);
    CHECK(nf.coeff.is_one());
  }
}

TEST_CASE("normal forms are idempotent and never increase") {
  std::mt19937 rng(73);
  std::uniform_int_distribution<int> letter(0, 3);
  for (const Presentation& p : {corpus::a2_general(), corpus::set_theoretic()}) {
    Enumeration e = p.n == 4 && p.relations[0].lhs == Word::pair(2, 3)
                        ? Enumeration::from_order({0, 3, 1, 2})
                        : Enumeration::identity(p.n);
    RewriteSystem rs = RewriteSystem::orient(normalize(p, e), e);
    for (int trial = 0; trial < 60; ++trial) {
      Word w;
      for (int i = 0; i < 5; ++i) w = w.append(letter(rng));
      NormalForm nf = normal_form(rs, w);
      CHECK_FALSE(nf.zero);
      CHECK(is_irreducible(rs, nf.word));
      CHECK(compare_deglex(nf.word, w, rs.enumeration()) <= 0);
      NormalForm again = normal_form(rs, nf.word);
      CHECK(again.word == nf.word);
      CHECK(again.coeff.is_one());
    }
  }
}

TEST_CASE("squares-to-zero mode kills squares") {
  RewriteSystem rs =
      RewriteSystem::orient(corpus::flip(3), Enumeration::identity(3), true);
  CHECK(rs.squares_to_zero());
  CHECK(rs.reducible(1, 1));
  CHECK(normal_form(rs, Word::pair(1, 1)).zero);
  CHECK(normal_form(rs, Word{0, 2, 0}).zero);  // sorts to x1x1x3 first
  CHECK(normal_form(rs, Word{0, 1, 2}) == NormalForm{Word{0, 1, 2}, Scalar(1)});
}

TEST_CASE("normal word counts follow the one-per-degree pattern") {
  // every skew-shaped system over n generators has the same reducible
  // pairs, so the count is the weak-composition count C(n+d-1, d)
  struct Case {
    Presentation p;
    Enumeration e;
  };
  std::vector<Case> cases;
  cases.push_back({corpus::flip(3), Enumeration::identity(3)});
  cases.push_back({corpus::flip(5), Enumeration::identity(5)});
  cases.push_back({corpus::a2_ones(), Enumeration::identity(4)});
  cases.push_back({corpus::example_c(), Enumeration::identity(4)});
  cases.push_back({corpus::set_theoretic(), Enumeration::from_order({0, 3, 1, 2})});
  for (const Case& c : cases) {
    RewriteSystem rs = RewriteSystem::orient(normalize(c.p, c.e), c.e);
    for (int d = 0; d <= 5; ++d) {
      CHECK(count_normal_words(rs, d) == binom(c.p.n + d - 1, d));
      if (d <= 4) {
        std::vector<Word> words = normal_words(rs, d);
        CHECK((long)words.size() == count_normal_words(rs, d));
        for (const Word& w : words) CHECK(is_irreducible(rs, w));
      }
    }
  }
}

TEST_CASE("class closure of a commuting triple") {
  EquivalenceClass cls = class_closure(corpus::flip(3), Word{0, 1, 2});
  CHECK(cls.base == Word{0, 1, 2});
  CHECK(cls.coeffs.size() == 6);
  CHECK_FALSE(cls.conflict);
  for (const auto& [w, c] : cls.coeffs) CHECK(c.is_one());
  std::vector<int> sorted;
  for (const Word& w : cls.members()) {
    sorted = w.letters();
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 2});
  }
}

TEST_CASE("class coefficients are relative to the base") {
  EquivalenceClass cls = class_closure(corpus::a2_general(), Word::pair(3, 1));
  CHECK(cls.coeffs.size() == 2);
  CHECK(cls.coeffs.at(Word::pair(3, 1)).is_one());
  CHECK(cls.coeffs.at(Word::pair(0, 2)) == Scalar(mpq_class(1, 2)));

  EquivalenceClass rev = class_closure(corpus::a2_general(), Word::pair(0, 2));
  CHECK(rev.coeffs.at(Word::pair(3, 1)) == Scalar(2));

  EquivalenceClass diag = class_closure(corpus::set_theoretic(), Word::pair(0, 0));
  CHECK(diag.coeffs.size() == 1);
}

TEST_CASE("frozen degree-4 class of the set-theoretic fixture") {
  EquivalenceClass cls = class_closure(corpus::set_theoretic(), Word{1, 2, 0, 3});
  CHECK_FALSE(cls.conflict);
  std::vector<Word> expect = {
      {0, 1, 0, 1}, {0, 1, 2, 3}, {0, 2, 0, 2}, {0, 2, 1, 3}, {0, 3, 1, 2}, {0, 3, 2, 1},
      {1, 0, 1, 0}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0}, {1, 3, 0, 2}, {1, 3, 1, 3},
      {2, 0, 2, 0}, {2, 0, 3, 1}, {2, 1, 0, 3}, {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 2, 3},
      {3, 0, 1, 2}, {3, 0, 2, 1}, {3, 1, 2, 0}, {3, 1, 3, 1}, {3, 2, 1, 0}, {3, 2, 3, 2}};
  CHECK(cls.members() == expect);
  for (const auto& [w, c] : cls.coeffs) CHECK(c.is_one());
}

TEST_CASE("scalar disagreement around a cycle is a conflict") {
  EquivalenceClass cls = class_closure(corpus::a2_bad(), Word{0, 1, 2});
  CHECK(cls.conflict);
  // with consistent coefficients the same cycle closes cleanly
  EquivalenceClass ok = class_closure(corpus::a2_general(), Word{0, 1, 2});
  CHECK_FALSE(ok.conflict);
}

TEST_CASE("class partition tiles all words of the degree") {
  ClassPartition part = partition_classes(corpus::flip(3).relations, 3, 2, false);
  CHECK(part.class_of.size() == 9);
  CHECK(part.classes.size() == 6);  // three diagonal singletons, three swap pairs
  for (int i = 0; i < 9; ++i) {
    Word w = Word::from_index(i, 3, 2);
    const EquivalenceClass& cls = part.classes[part.class_of[i]];
    CHECK(cls.coeffs.count(w) == 1);
    // the recorded base is the least member
    CHECK(cls.base == cls.members().front());
  }
  long total = 0;
  for (const auto& cls : part.classes) total += (long)cls.coeffs.size();
  CHECK(total == 9);
}

TEST_CASE("confluence of the certified fixtures") {
  for (const auto& [p, order] :
       std::vector<std::pair<Presentation, std::vector<int>>>{
           {corpus::flip(3), {0, 1, 2}},
           {corpus::a2_ones(), {0, 1, 2, 3}},
           {corpus::a2_general(), {0, 1, 2, 3}},
           {corpus::set_theoretic(), {0, 3, 1, 2}}}) {
    Enumeration e = Enumeration::from_order(order);
    GroebnerReport g = check_groebner(RewriteSystem::orient(normalize(p, e), e));
    CHECK(g.ok);
    CHECK(g.skew_shaped);
    CHECK(g.failing.empty());
    CHECK(g.reason.empty());
  }
}

TEST_CASE("confluence failure reports the least ambiguity") {
  RewriteSystem rs = RewriteSystem::orient(corpus::example_c(), Enumeration::identity(4));
  GroebnerReport g = check_groebner(rs);
  CHECK_FALSE(g.ok);
  CHECK(g.skew_shaped);
  CHECK(contains(g.reason, "overlap ambiguity"));
  std::vector<Word> expect = {{2, 1, 0}, {3, 1, 0}, {3, 2, 0}, {3, 2, 1}};
  CHECK(g.failing == expect);
  REQUIRE(g.witness() != nullptr);
  CHECK(*g.witness() == Word{2, 1, 0});
  CHECK(g.witness_left == NormalForm{Word{0, 1, 3}, Scalar(1)});
  CHECK(g.witness_right == NormalForm{Word{0, 0, 2}, Scalar(1)});
  // both disagreeing normal forms really appear in the closure class
  EquivalenceClass cls = class_closure(corpus::example_c(), Word{2, 1, 0});
  CHECK(cls.coeffs.count(Word{0, 1, 3}) == 1);
  CHECK(cls.coeffs.count(Word{0, 0, 2}) == 1);
}

TEST_CASE("confluence is blocked without skew shape") {
  GroebnerReport g =
      check_groebner(RewriteSystem::orient(corpus::set_theoretic(), Enumeration::identity(4)));
  CHECK_FALSE(g.ok);
  CHECK_FALSE(g.skew_shaped);
  CHECK(contains(g.reason, "not skew-shaped"));
}

TEST_CASE("certifying enumerations of the fixtures") {
  CHECK(find_skew_order(corpus::example_c()).empty());
  CHECK(find_skew_order(corpus::a1()).empty());
  CHECK(find_skew_order(corpus::a2_bad()).empty());

  std::vector<Enumeration> flip_orders = find_skew_order(corpus::flip(3));
  CHECK(flip_orders.size() == 6);

  std::vector<std::vector<int>> setth_expect = {{0, 3, 1, 2}, {0, 3, 2, 1}, {1, 2, 0, 3},
                                                {1, 2, 3, 0}, {2, 1, 0, 3}, {2, 1, 3, 0},
                                                {3, 0, 1, 2}, {3, 0, 2, 1}};
  std::vector<Enumeration> setth_orders = find_skew_order(corpus::set_theoretic());
  REQUIRE(setth_orders.size() == 8);
  for (int i = 0; i < 8; ++i) CHECK(setth_orders[i].order() == setth_expect[i]);

  std::vector<std::vector<int>> a2_expect = {{0, 1, 2, 3}, {0, 1, 3, 2}, {1, 0, 2, 3},
                                             {1, 0, 3, 2}, {2, 3, 0, 1}, {2, 3, 1, 0},
                                             {3, 2, 0, 1}, {3, 2, 1, 0}};
  for (const Presentation& p : {corpus::a2_ones(), corpus::a2_general()}) {
    std::vector<Enumeration> orders = find_skew_order(p);
    REQUIRE(orders.size() == 8);
    for (int i = 0; i < 8; ++i) CHECK(orders[i].order() == a2_expect[i]);
  }
}

TEST_CASE("order search results are sorted and match the serial scan") {
  std::mt19937 rng(79);
  std::vector<Presentation> ps = {corpus::set_theoretic(), corpus::a2_general(),
                                  corpus::example_c()};
  for (int i = 0; i < 5; ++i) ps.push_back(corpus::random_presentation(4, rng, true));
  for (const Presentation& p : ps) {
    std::vector<Enumeration> par = find_skew_order(p);
    std::vector<Enumeration> ser = find_skew_order_serial(p);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) CHECK(par[i] == ser[i]);
    for (std::size_t i = 1; i < par.size(); ++i) CHECK(par[i - 1] < par[i]);
    // each reported enumeration really certifies
    for (const Enumeration& e : par)
      CHECK(check_groebner(RewriteSystem::orient(normalize(p, e), e)).ok);
  }
}

TEST_CASE("order search is capped") {
  CHECK_THROWS_AS(find_skew_order(corpus::flip(10)), cap_error);
}

TEST_CASE("position-map orbits") {
  DihedralOrbit orb = dihedral_orbit(corpus::set_theoretic(), Word{0, 0, 1});
  std::vector<Word> expect = {{0, 0, 1}, {0, 2, 3}, {1, 3, 3}};
  CHECK(orb.members == expect);

  DihedralOrbit all = dihedral_orbit(corpus::flip(3), Word{2, 1, 0});
  CHECK(all.members.size() == 6);
  DihedralOrbit one = dihedral_orbit(corpus::flip(3), Word{1, 1, 1});
  CHECK(one.members.size() == 1);
  CHECK(one.ops == std::vector<std::string>{""});
}

TEST_CASE("orbit generator sequences replay correctly") {
  for (const Presentation& p : {corpus::set_theoretic(), corpus::a2_ones(), corpus::flip(4)}) {
    CanonicalMap r = canonical_map(p);
    auto apply_op = [&](Word w, const std::string& op) {
      if (op == "r12") return r.apply(w.at(0), w.at(1)) + Word{w.at(2)};
      REQUIRE(op == "r23");
      return Word{w.at(0)} + r.apply(w.at(1), w.at(2));
    };
    std::mt19937 rng(83);
    std::uniform_int_distribution<int> letter(0, p.n - 1);
    for (int trial = 0; trial < 10; ++trial) {
      Word base{letter(rng), letter(rng), letter(rng)};
      DihedralOrbit orb = dihedral_orbit(p, base);
      REQUIRE(orb.members.size() == orb.ops.size());
      CHECK(orb.base == base);
      std::set<std::uint64_t> seen;
      for (std::size_t i = 0; i < orb.members.size(); ++i) {
        Word w = base;
        std::istringstream ops(orb.ops[i]);
        std::string op;
        while (ops >> op) w = apply_op(w, op);
        CHECK(w == orb.members[i]);
        CHECK(seen.insert(orb.members[i].bits()).second);
        if (i > 0) CHECK(orb.members[i - 1] < orb.members[i]);
      }
      // orbit sizes under an involutive pair of position maps
      CHECK((orb.members.size() == 1 || orb.members.size() == 2 || orb.members.size() == 3 ||
             orb.members.size() == 6));
    }
  }
}

TEST_CASE("confluence matches one irreducible representative per class") {
  // for a skew-shaped system: degree-3 confluence holds exactly when every
  // degree-3 closure class is conflict-free with a unique irreducible word
  auto invariant = [](const Presentation& p, const Enumeration& e) {
    RewriteSystem rs = RewriteSystem::orient(normalize(p, e), e);
    ClassPartition part = partition_classes(normalize(p, e).relations, p.n, 3, false);
    for (const EquivalenceClass& cls : part.classes) {
      if (cls.conflict) return false;
      int irr = 0;
      for (const Word& w : cls.members())
        if (is_irreducible(rs, w)) ++irr;
      if (irr != 1) return false;
    }
    return true;
  };
  struct Case {
    Presentation p;
    std::vector<int> order;
  };
  std::vector<Case> cases = {{corpus::flip(3), {0, 1, 2}},
                             {corpus::a2_ones(), {0, 1, 2, 3}},
                             {corpus::a2_general(), {0, 1, 2, 3}},
                             {corpus::a2_bad(), {0, 1, 2, 3}},
                             {corpus::example_c(), {0, 1, 2, 3}},
                             {corpus::set_theoretic(), {0, 3, 1, 2}}};
  std::mt19937 rng(89);
  for (int i = 0; i < 8; ++i) {
    Presentation p = corpus::random_presentation(3, rng, false);
    for (const Enumeration& e : find_skew_order(p)) cases.push_back({p, e.order()});
  }
  for (const Case& c : cases) {
    Enumeration e = Enumeration::from_order(c.order);
    GroebnerReport g = check_groebner(RewriteSystem::orient(normalize(c.p, e), e));
    REQUIRE(g.skew_shaped);
    CHECK(g.ok == invariant(c.p, e));
  }
}

TEST_CASE("frozen degree counts of the set-theoretic fixture") {
  Enumeration e = Enumeration::from_order({0, 3, 1, 2});
  RewriteSystem rs = RewriteSystem::orient(normalize(corpus::set_theoretic(), e), e);
  std::vector<long> expect = {1, 4, 10, 20, 35, 56, 84, 120, 165};
  for (int d = 0; d <= 8; ++d) CHECK(count_normal_words(rs, d) == expect[d]);
}
