#include "oubraid/braid.hpp"
#include "oubraid/families.hpp"
#include "oubraid/linalg.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace oubraid;

namespace {

std::vector<int> letters_of(const BraidWord& w) { return {w.letters().begin(), w.letters().end()}; }

IntMatrix weaving77_identity() {
  return {{0, 0, 2, 0, 2, 0, 2}, {2, 0, 0, 2, 0, 2, 0}, {0, 2, 0, 0, 2, 0, 2}, {2, 0, 2, 0, 0, 2, 0},
          {0, 2, 0, 2, 0, 0, 2}, {2, 0, 2, 0, 2, 0, 0}, {0, 2, 0, 2, 0, 2, 0}};
}

IntMatrix weaving77_odd_even() {
  return {{0, 2, 2, 2, 0, 0, 0}, {0, 0, 2, 2, 2, 0, 0}, {0, 0, 0, 2, 2, 2, 0}, {0, 0, 0, 0, 2, 2, 2},
          {2, 0, 0, 0, 0, 2, 2}, {2, 2, 0, 0, 0, 0, 2}, {2, 2, 2, 0, 0, 0, 0}};
}

}  // namespace

TEST_CASE("parse_word") {
  SUBCASE("infers the strand count") {
    const BraidWord w = parse_word("1 -2 3^2");
    CHECK(w.strands() == 4);
    CHECK(letters_of(w) == std::vector<int>{1, -2, 3, 3});
  }
  SUBCASE("empty word") {
    const BraidWord w = parse_word("", 3);
    CHECK(w.strands() == 3);
    CHECK(w.empty());
    CHECK(parse_word("  \n ").strands() == 1);
  }
  SUBCASE("exponents") {
    CHECK(letters_of(parse_word("2^-4", 3)) == std::vector<int>{-2, -2, -2, -2});
    CHECK(letters_of(parse_word("-1^-2 1^0", 2)) == std::vector<int>{1, 1});
    CHECK(letters_of(parse_word("+1\t2\n", 3)) == std::vector<int>{1, 2});
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_word("1 0 2"), ParseError);
    CHECK_THROWS_AS(parse_word("3", 3), ParseError);
    CHECK_THROWS_AS(parse_word("1", 0), ParseError);
    CHECK_THROWS_AS(parse_word("1x"), ParseError);
    CHECK_THROWS_AS(parse_word("^2"), ParseError);
    CHECK_THROWS_AS(parse_word("2^"), ParseError);
    CHECK_THROWS_AS(parse_word("1^2^3"), ParseError);
    CHECK_THROWS_AS(parse_word("0^3"), ParseError);
  }
}

TEST_CASE("format_word round-trips through parse_word") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 7);
    const BraidWord w = random_braid(n, seed % 30, seed);
    CHECK(parse_word(format_word(w), n) == w);
  }
  CHECK(format_word(BraidWord(3)) == "");
}

TEST_CASE("BraidWord rejects out-of-range letters") {
  CHECK_THROWS_AS(BraidWord(3, {3}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(0), std::invalid_argument);
  CHECK_THROWS_AS(BraidWord(1, {1}), std::invalid_argument);
}

TEST_CASE("simulate uses the position i+1 over convention") {
  const auto pos = simulate(BraidWord(2, {1}));
  REQUIRE(pos.size() == 1);
  CHECK(pos[0] == CrossingEvent{0, 2, 1, +1});
  const auto neg = simulate(BraidWord(2, {-1}));
  REQUIRE(neg.size() == 1);
  CHECK(neg[0] == CrossingEvent{0, 1, 2, -1});
  CHECK(simulate(BraidWord(3)).empty());
}

TEST_CASE("convention reproduces det(s1 s2^{2n} s1 s2) = n and M_Delta = D") {
  for (int n = 0; n <= 6; ++n) {
    std::vector<int> letters{1};
    letters.insert(letters.end(), static_cast<std::size_t>(2 * n), 2);
    letters.insert(letters.end(), {1, 2});
    const IntMatrix m = ou_matrix(BraidWord(3, letters));
    CHECK(m == IntMatrix{{0, 1, n}, {1, 0, 0}, {n, 1, 0}});
    CHECK(det(m) == n);
  }
  CHECK(ou_matrix(fundamental(5)) == lower_ones(5));
}

TEST_CASE("braid_permutation") {
  CHECK(braid_permutation(parse_word("1 -2 3^2")) == Permutation({3, 1, 2, 4}));
  CHECK(braid_permutation(BraidWord(5)).is_identity());
  CHECK(braid_permutation(fundamental(4)) == Permutation({4, 3, 2, 1}));
}

TEST_CASE("ou_matrix worked examples") {
  CHECK(ou_matrix(parse_word("1 2^4 1 2")) == IntMatrix{{0, 1, 2}, {1, 0, 0}, {2, 1, 0}});
  const BraidWord w77 = weaving(7, 7);
  CHECK(ou_matrix(w77) == weaving77_identity());
  CHECK(ou_matrix(w77, Permutation({1, 3, 5, 7, 2, 4, 6})) == weaving77_odd_even());
  CHECK(ou_matrix(BraidWord(1)) == IntMatrix(1));
  CHECK_THROWS_AS(ou_matrix(w77, Permutation::identity(6)), std::invalid_argument);
}

TEST_CASE("wd_pair") {
  const BraidWord b = parse_word("1 2^4 1 2");
  CHECK(wd_pair(b, 1, 3) == 2);
  CHECK(wd_pair(BraidWord(2, {1}), 1, 2) == 1);
  CHECK(wd_pair(BraidWord(2, {1}), 2, 1) == 0);
  CHECK_THROWS_AS(wd_pair(b, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(wd_pair(b, 0, 2), std::out_of_range);
  CHECK_THROWS_AS(wd_pair(b, 1, 4), std::out_of_range);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const BraidWord w = random_braid(5, 25, seed);
    const IntMatrix m = ou_matrix(w);
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j) {
        if (i == j) continue;
        CHECK(mpz_class(static_cast<unsigned long>(wd_pair(w, i, j))) == m(j - 1, i - 1));
        std::uint64_t mutual = 0;
        for (const auto& e : simulate(w))
          if ((e.over_strand == i && e.under_strand == j) || (e.over_strand == j && e.under_strand == i)) ++mutual;
        CHECK(wd_pair(w, i, j) + wd_pair(w, j, i) == mutual);
      }
  }
}

TEST_CASE("product") {
  const BraidWord c = parse_word("1 -2", 3);
  CHECK(product(BraidWord(3), c) == c);
  CHECK(letters_of(product(BraidWord(3, {1}), BraidWord(3, {2}))) == std::vector<int>{1, 2});
  CHECK_THROWS(product(BraidWord(3), BraidWord(4)));
  const BraidWord d3 = fundamental(3);
  const IntMatrix d = lower_ones(3);
  CHECK(ou_matrix(product(d3, d3)) == d + d.transposed());
}

TEST_CASE("apply_braid_move") {
  CHECK(letters_of(apply_braid_move(BraidWord(4, {1, 3}), BraidMove::FarCommutation, 0)) == std::vector<int>{3, 1});
  CHECK(letters_of(apply_braid_move(BraidWord(3, {1, 2, 1}), BraidMove::TypeIII, 0)) == std::vector<int>{2, 1, 2});
  CHECK(letters_of(apply_braid_move(BraidWord(4, {3, 2, 3, 1}), BraidMove::TypeIII, 0)) ==
        std::vector<int>{2, 3, 2, 1});
  CHECK_THROWS_AS(apply_braid_move(BraidWord(3, {1, 2}), BraidMove::FarCommutation, 0), std::invalid_argument);
  CHECK_THROWS_AS(apply_braid_move(BraidWord(4, {1, -3}), BraidMove::FarCommutation, 0), std::invalid_argument);
  CHECK_THROWS_AS(apply_braid_move(BraidWord(3, {1, 2, 2}), BraidMove::TypeIII, 0), std::invalid_argument);
  CHECK_THROWS_AS(apply_braid_move(BraidWord(3, {1, 2, 1}), BraidMove::TypeIII, 1), std::invalid_argument);
}

TEST_CASE("OU matrix properties on random diagrams") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 6);
    const BraidWord b = random_braid(n, seed % 40, seed);
    const BraidWord c = random_braid(n, (seed * 7) % 25, seed + 1000);
    const Permutation pi = random_permutation(n, seed);
    const IntMatrix m = ou_matrix(b, pi);

    mpz_class sum = 0;
    bool nonnegative = true;
    for (int i = 0; i < n; ++i) {
      CHECK(sgn(m(i, i)) == 0);
      for (int j = 0; j < n; ++j) {
        sum += m(i, j);
        nonnegative = nonnegative && sgn(m(i, j)) >= 0;
      }
    }
    CHECK(nonnegative);
    CHECK(sum == static_cast<unsigned long>(b.length()));

    for (int k = 1; k <= n; ++k)
      for (int l = k + 1; l <= n; ++l) CHECK(ou_matrix(b, transpose(pi, k, l)) == conjugate_swap(m, k, l));
    CHECK(ou_matrix(b, reverse(pi)) == rotate180(m));

    const Permutation rho_b = braid_permutation(b);
    CHECK(ou_matrix(product(b, c), pi) == m + ou_matrix(c, compose(pi, rho_b)));
    CHECK(braid_permutation(product(b, c)) == compose(rho_b, braid_permutation(c)));
  }
}

TEST_CASE("braid moves preserve the OU matrix for every order") {
  const BraidWord words[] = {BraidWord(4, {1, 3}), BraidWord(3, {1, 2, 1}), BraidWord(5, {2, 3, 2, 4, 1})};
  for (const auto& w : words)
    for (std::size_t p = 0; p < w.length(); ++p)
      for (auto kind : {BraidMove::FarCommutation, BraidMove::TypeIII}) {
        if (!move_applies(w, kind, p)) continue;
        const BraidWord moved = apply_braid_move(w, kind, p);
        std::vector<int> order(static_cast<std::size_t>(w.strands()));
        std::iota(order.begin(), order.end(), 1);
        do {
          CHECK(ou_matrix(moved, Permutation(order)) == ou_matrix(w, Permutation(order)));
        } while (std::next_permutation(order.begin(), order.end()));
      }
}
