#include <doctest.h>

#include <deque>
#include <map>
#include <random>

#include "oracles.hpp"
#include "triplet/weyl.hpp"

using namespace triplet;

namespace {

oracle::Matrix cartan_of(const RootSystem& rs) {
  oracle::Matrix c(static_cast<std::size_t>(rs.rank()), std::vector<std::int64_t>(static_cast<std::size_t>(rs.rank())));
  for (int i = 0; i < rs.rank(); ++i)
    for (int j = 0; j < rs.rank(); ++j) c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = to_i64(rs.cartan(i, j));
  return c;
}

oracle::Matrix as_matrix(const WeylElement& w) {
  oracle::Matrix m(static_cast<std::size_t>(w.rank()), std::vector<std::int64_t>(static_cast<std::size_t>(w.rank())));
  for (int i = 0; i < w.rank(); ++i)
    for (int j = 0; j < w.rank(); ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = to_i64(w.entry(i, j));
  return m;
}

// Shortlex BFS over words: extending a word on the right visits words in length then
// lexicographic order, so the first word reaching a matrix is its lex-least reduced word.
std::map<oracle::Matrix, std::vector<int>> bfs_words(const RootSystem& rs) {
  const auto cartan = cartan_of(rs);
  std::vector<oracle::Matrix> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(oracle::reflection(cartan, i));
  std::map<oracle::Matrix, std::vector<int>> seen;
  std::vector<std::pair<oracle::Matrix, std::vector<int>>> layer{{oracle::identity(rs.rank()), {}}};
  seen[layer.front().first] = {};
  while (!layer.empty()) {
    std::vector<std::pair<oracle::Matrix, std::vector<int>>> next;
    for (const auto& [m, word] : layer)
      for (int i = 0; i < rs.rank(); ++i) {
        auto nm = oracle::multiply(m, gens[static_cast<std::size_t>(i)]);
        if (seen.count(nm)) continue;
        auto nw = word;
        nw.push_back(i);
        seen[nm] = nw;
        next.emplace_back(std::move(nm), std::move(nw));
      }
    layer = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("small groups") {
  const RootSystem a1(CartanType::parse("A1"));
  const auto w1 = weyl_enumerate(a1);
  REQUIRE(w1.size() == 2);
  CHECK(w1[0].word().empty());
  CHECK(w1[1].word() == std::vector<int>{0});
  CHECK(w1[0].word_string() == "e");

  const RootSystem a2(CartanType::parse("A2"));
  const WeylGroup g2(a2);
  CHECK(g2.size() == 6);
  CHECK(g2.longest().length() == 3);
  CHECK(g2.longest().word() == std::vector<int>{0, 1, 0});
  CHECK(g2.longest().word_string() == "1 2 1");

  const RootSystem a3(CartanType::parse("A3"));
  const WeylGroup g3(a3);
  CHECK(g3.size() == 24);
  CHECK(g3.longest().length() == 6);
}

TEST_CASE("enumeration matches an independent shortlex BFS") {
  for (const char* name : {"A1", "A2", "A3", "A4", "D4"}) {
    CAPTURE(name);
    const RootSystem rs(CartanType::parse(name));
    const auto oracle_words = bfs_words(rs);
    const auto elements = weyl_enumerate(rs);
    CHECK(elements.size() == oracle_words.size());
    CHECK(static_cast<std::int64_t>(elements.size()) == to_i64(rs.weyl_order()));
    for (const auto& w : elements) {
      const auto it = oracle_words.find(as_matrix(w));
      REQUIRE(it != oracle_words.end());
      CHECK(w.word() == it->second);
    }
    for (std::size_t i = 1; i < elements.size(); ++i) {
      const auto& a = elements[i - 1].word();
      const auto& b = elements[i].word();
      CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
    }
  }
}

TEST_CASE("order counts for larger types") {
  const RootSystem d5(CartanType::parse("D5"));
  CHECK(weyl_enumerate(d5).size() == 1920);
  const RootSystem e6(CartanType::parse("E6"));
  CHECK(weyl_enumerate(e6).size() == 51840);
}

TEST_CASE("length equals the inversion count and the form is invariant") {
  const RootSystem rs(CartanType::parse("A3"));
  const IntWeight mu = make_weight({2, -1, 3});
  const IntWeight nu = make_weight({0, 4, -2});
  for (const auto& w : weyl_enumerate(rs)) {
    CHECK(inversion_count(rs, w) == w.length());
    CHECK(rs.pairing(w.act(mu), w.act(nu)) == rs.pairing(mu, nu));
  }
}

TEST_CASE("longest element without enumeration") {
  for (const char* name : {"A2", "A3", "D4", "D5", "E6", "E7", "E8"}) {
    CAPTURE(name);
    const RootSystem rs(CartanType::parse(name));
    const auto w0 = longest_element(rs);
    CHECK(w0.length() == static_cast<int>(rs.positive_roots().size()));
    CHECK(inversion_count(rs, w0) == w0.length());
    // w0 sends rho to -rho, so w0 o 0 = -2 rho
    CHECK(circ_act(rs, w0, rs.zero()) == scale(Int(-2), rs.rho()));
  }
}

TEST_CASE("circ_act examples and group action") {
  const RootSystem a1(CartanType::parse("A1"));
  const auto s1 = WeylElement::simple_reflection(a1, 0);
  CHECK(circ_act(a1, s1, a1.zero()) == -a1.simple_root(0));
  const IntWeight mu = make_weight({5});
  CHECK(circ_act(a1, WeylElement::identity(a1), mu) == mu);
  CHECK_THROWS_AS(circ_act(a1, s1, make_weight({1, 2})), std::invalid_argument);

  const RootSystem a3(CartanType::parse("A3"));
  const auto all = weyl_enumerate(a3);
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  const IntWeight nu = make_weight({1, -3, 2});
  for (int t = 0; t < 60; ++t) {
    const auto& a = all[pick(rng)];
    const auto& b = all[pick(rng)];
    const auto ab = multiply(a3, a, b);
    CHECK(circ_act(a3, ab, nu) == circ_act(a3, a, circ_act(a3, b, nu)));
    CHECK(multiply(a3, a, inverse(a3, a)) == WeylElement::identity(a3));
    CHECK(as_matrix(ab) == oracle::multiply(as_matrix(a), as_matrix(b)));
  }
}

TEST_CASE("from_word reduces to the canonical word") {
  const RootSystem a2(CartanType::parse("A2"));
  CHECK(WeylElement::from_word(a2, {1, 0, 1}).word() == std::vector<int>{0, 1, 0});
  CHECK(WeylElement::from_word(a2, {0, 0}).word().empty());
  CHECK(WeylElement::from_word(a2, {1, 0, 0, 1, 1}).word() == std::vector<int>{1});
  CHECK_THROWS_AS(WeylElement::from_word(a2, {2}), std::invalid_argument);
}

TEST_CASE("reduced words of the longest element") {
  const RootSystem a2(CartanType::parse("A2"));
  const auto words = reduced_words(a2, longest_element(a2), 10);
  CHECK(words == std::vector<std::vector<int>>{{0, 1, 0}, {1, 0, 1}});
  const RootSystem a3(CartanType::parse("A3"));
  // A3 has 16 reduced words for w0
  CHECK(reduced_words(a3, longest_element(a3), 100).size() == 16);
  CHECK(reduced_words(a3, longest_element(a3), 5).size() == 5);
}

TEST_CASE("cap refusal reports the required size") {
  const RootSystem e8(CartanType::parse("E8"));
  try {
    weyl_enumerate(e8, 1000);
    FAIL("expected WeylCapExceeded");
  } catch (const WeylCapExceeded& e) {
    CHECK(e.required() == 696729600u);
  }
  const RootSystem a3(CartanType::parse("A3"));
  CHECK_THROWS_AS(WeylGroup(a3, 23), WeylCapExceeded);
  CHECK(WeylGroup(a3, 24).size() == 24);
}

TEST_CASE("group lookup by element") {
  const RootSystem a3(CartanType::parse("A3"));
  const WeylGroup g(a3);
  for (const auto& w : g.elements()) {
    const auto& found = g.find(WeylElement::from_matrix(a3, w.matrix()));
    CHECK(found.word() == w.word());
  }
}
