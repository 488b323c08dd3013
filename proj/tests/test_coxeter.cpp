#include <doctest.h>

#include <map>
#include <random>
#include <thread>

#include "oracles.hpp"
#include "wg/coxeter.hpp"
#include "wg/error.hpp"

using namespace wg;

namespace {

CoxeterSystem a2() { return CoxeterSystem(CoxeterMatrix::type_a(2)); }

} // namespace

TEST_CASE("matrix validation") {
  CHECK(CoxeterSystem(CoxeterMatrix({{1, 3}, {3, 1}})).all_elements().size() == 6);
  CHECK_NOTHROW(CoxeterMatrix({{1, 0}, {0, 1}}));
  CHECK_FALSE(CoxeterSystem(CoxeterMatrix::dihedral(0)).is_finite());

  try {
    CoxeterMatrix({{1, 3}, {2, 1}});
    FAIL("asymmetric matrix accepted");
  } catch (const ValidationError &e) {
    CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
  }
  CHECK_THROWS_AS(CoxeterMatrix({{2, 3}, {3, 1}}), ValidationError);
  CHECK_THROWS_AS(CoxeterMatrix({{1, 1}, {1, 1}}), ValidationError);
  CHECK_THROWS_AS(CoxeterMatrix({{1, 3}}), ValidationError);
  CHECK_THROWS_AS(CoxeterMatrix(std::vector<std::vector<int>>{}), ValidationError);
}

TEST_CASE("basic arithmetic in A2") {
  const auto w = a2();
  const auto s = w.generator(0), t = w.generator(1);
  CHECK(w.mult(s, s) == w.identity());
  CHECK(w.mult(w.mult(s, t), s) == w.mult(w.mult(t, s), t));
  CHECK(w.length(w.canonicalize({0, 1, 0})) == 3);
  CHECK(w.inverse(w.canonicalize({0, 1})) == w.canonicalize({1, 0}));
  CHECK(w.canonicalize({1, 0, 1}).word() == Word{0, 1, 0});
}

TEST_CASE("reducedness and canonical forms") {
  const auto w = a2();
  CHECK_FALSE(w.is_reduced({0, 0}));
  CHECK(w.canonicalize({0, 0}).is_identity());
  CHECK(w.is_reduced({0, 1, 0}));
  CHECK_FALSE(w.is_reduced({0, 1, 0, 1}));
  const CoxeterSystem b2(CoxeterMatrix::dihedral(4));
  CHECK(b2.is_reduced({0, 1, 0, 1}));
  CHECK(b2.canonicalize({1, 0, 1, 0}) == b2.canonicalize({0, 1, 0, 1}));
}

TEST_CASE("reduced words of the longest element of A2 match the dihedral model") {
  const auto w = a2();
  const auto model = oracle::dihedral_model(3);
  const auto w0 = model.of({0, 1, 0});
  std::vector<Word> expected;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        if (model.of({a, b, c}) == w0)
          expected.push_back({a, b, c});
  CHECK(w.reduced_words(w.canonicalize({0, 1, 0})) == expected);
  CHECK(w.reduced_words(w.identity()) == std::vector<Word>{Word{}});
  CHECK(w.reduced_words(w.generator(1)) == std::vector<Word>{Word{1}});
}

TEST_CASE("Bruhat order examples") {
  const auto w = a2();
  const auto st = w.canonicalize({0, 1}), ts = w.canonicalize({1, 0}), w0 = w.canonicalize({0, 1, 0});
  for (const auto &x : w.all_elements())
    CHECK(w.bruhat_leq(w.identity(), x));
  CHECK(w.bruhat_leq(w.generator(0), w0));
  CHECK_FALSE(w.bruhat_leq(st, ts));
  CHECK_FALSE(w.bruhat_leq(ts, st));
  CHECK(w.lower_interval(w0).size() == 6);
  CHECK(w.lower_interval(st).size() == 4);
}

TEST_CASE("descents and enumeration") {
  const auto w = a2();
  CHECK(w.right_descents(w.identity()).empty());
  CHECK(w.right_descents(w.canonicalize({0, 1})) == std::vector<Generator>{1});
  CHECK(w.left_descents(w.canonicalize({0, 1})) == std::vector<Generator>{0});
  CHECK(w.enumerate_elements(3).size() == 6);
  CHECK(w.enumerate_elements(1).size() == 3);
  const CoxeterSystem inf(CoxeterMatrix::dihedral(0));
  CHECK(inf.enumerate_elements(4).size() == 9);
}

TEST_CASE("capacity and ownership errors") {
  const CoxeterSystem inf(CoxeterMatrix::dihedral(0));
  Word long_word;
  for (int i = 0; i < 17; ++i)
    long_word.push_back(i % 2);
  CHECK_THROWS_AS(inf.canonicalize(long_word), CapacityError);
  CHECK_THROWS_AS(inf.all_elements(), CapacityError);
  const auto x = a2(), y = a2();
  CHECK_THROWS_AS(x.mult(x.generator(0), y.generator(0)), ValidationError);
  CHECK(x.import(y.generator(1)) == x.generator(1));
  CHECK_THROWS_AS(x.generator(2), ValidationError);
  CHECK_THROWS_AS(x.canonicalize({0, 5}), ValidationError);
}

TEST_CASE("word text round trip") {
  CHECK(to_string(Word{}) == "[]");
  CHECK(to_string(Word{0, 1, 0}) == "[0,1,0]");
  CHECK(parse_word("[0,1,0]") == Word{0, 1, 0});
  CHECK(parse_word("e").empty());
  CHECK(parse_word("[]").empty());
  CHECK(parse_word("1") == Word{1});
  CHECK_THROWS_AS(parse_word("s t"), ValidationError);
}

TEST_CASE("length properties hold exhaustively") {
  for (const auto &m : {CoxeterMatrix::type_a(2), CoxeterMatrix::dihedral(4), CoxeterMatrix::dihedral(6),
                        CoxeterMatrix::type_a(3)}) {
    const CoxeterSystem w(m);
    const auto all = w.all_elements();
    for (const auto &u : all) {
      CHECK(w.canonicalize(u.word()) == u);
      for (const auto &word : w.reduced_words(u))
        CHECK(static_cast<int>(word.size()) == u.length());
      for (Generator s = 0; s < w.rank(); ++s)
        CHECK(std::abs(w.length(w.mult_generator(u, s)) - u.length()) == 1);
      for (const auto &v : all)
        CHECK(w.length(w.mult(u, v)) <= u.length() + v.length());
    }
  }
}

TEST_CASE("Bruhat order is a partial order") {
  for (const auto &m : {CoxeterMatrix::type_a(2), CoxeterMatrix::dihedral(4), CoxeterMatrix::type_a(3)}) {
    const CoxeterSystem w(m);
    const auto all = w.all_elements();
    std::map<std::pair<std::size_t, std::size_t>, bool> leq;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j)
        leq[{i, j}] = w.bruhat_leq(all[i], all[j]);
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(leq[{i, i}]);
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (i != j)
          CHECK_FALSE((leq[{i, j}] && leq[{j, i}]));
        for (std::size_t k = 0; k < all.size(); ++k)
          if (leq[{i, j}] && leq[{j, k}])
            CHECK(leq[{i, k}]);
      }
    }
  }
}

TEST_CASE("random words in A3 agree with permutations") {
  const CoxeterSystem w(CoxeterMatrix::type_a(3));
  const auto model = oracle::symmetric_model(4);
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> letter(0, 2), size(0, 14);
  for (int trial = 0; trial < 300; ++trial) {
    Word word(size(rng));
    for (auto &x : word)
      x = letter(rng);
    const auto e = w.canonicalize(word);
    const auto p = model.of(word);
    CHECK(model.of(e.word()) == p);
    CHECK(e.length() == oracle::inversions(p));
    CHECK(w.is_reduced(word) == (static_cast<int>(word.size()) == oracle::inversions(p)));
  }
}

TEST_CASE("concurrent use of one system") {
  const CoxeterSystem w(CoxeterMatrix::type_a(3));
  std::vector<std::thread> pool;
  std::vector<std::size_t> counts(4);
  for (int k = 0; k < 4; ++k)
    pool.emplace_back([&, k] {
      std::size_t n = 0;
      for (const auto &u : w.enumerate_elements(6))
        for (Generator s = 0; s < 3; ++s)
          n += w.is_right_descent(u, s);
      counts[k] = n;
    });
  for (auto &t : pool)
    t.join();
  CHECK(counts[0] == counts[1]);
  CHECK(counts[0] == counts[2]);
  CHECK(counts[0] == counts[3]);
  // each of the 24 permutations has as many right descents as descents in one-line notation: 36 in total
  CHECK(counts[0] == 36);
}
