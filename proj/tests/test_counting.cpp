#include "qmf/counting.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace qmf;

TEST_CASE("square counts match hand enumeration") {
  const auto r2 = lattice_counts(TupleKind::squares, 1, 10);
  CHECK(r2[0] == 1);
  CHECK(r2[1] == 4);
  CHECK(r2[2] == 4);
  CHECK(r2[3] == 0);
  CHECK(r2[4] == 4);
  CHECK(r2[5] == 8);
  CHECK(r2[10] == 8);

  const auto r4 = lattice_counts(TupleKind::squares, 2, 4);
  CHECK(r4[1] == 8);
  CHECK(r4[2] == 24);
  CHECK(r4[3] == 32);
  CHECK(r4[4] == 24);

  const auto r6 = lattice_counts(TupleKind::squares, 3, 2);
  CHECK(r6[1] == 12);
  CHECK(r6[2] == 60);

  const auto r8 = lattice_counts(TupleKind::squares, 4, 2);
  CHECK(r8[1] == 16);
  CHECK(r8[2] == 112);
}

TEST_CASE("triangle counts match hand enumeration") {
  const auto t2 = lattice_counts(TupleKind::triangles, 1, 6);
  CHECK(t2[0] == 1);
  CHECK(t2[1] == 2);
  CHECK(t2[2] == 1);
  CHECK(t2[3] == 2);
  CHECK(t2[4] == 2);
  CHECK(t2[5] == 0);
  CHECK(t2[6] == 3);

  const auto t4 = lattice_counts(TupleKind::triangles, 2, 3);
  CHECK(t4[0] == 1);
  CHECK(t4[1] == 4);   // one entry 1, rest 0
  CHECK(t4[2] == 6);   // two entries 1
  CHECK(t4[3] == 8);   // 3+0+0+0 or 1+1+1+0

  const auto t8 = lattice_counts(TupleKind::triangles, 4, 1);
  CHECK(t8[0] == 1);
  CHECK(t8[1] == 8);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(lattice_counts(TupleKind::squares, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(lattice_counts(TupleKind::squares, 5, 5), std::invalid_argument);
  CHECK_THROWS_AS(lattice_counts(TupleKind::triangles, 1, -1), std::invalid_argument);
  CHECK_THROWS_AS(theta_counts(TupleKind::squares, 9, 5), std::invalid_argument);
}

// Lattice enumeration, theta-coefficient extraction, and every printed
// divisor-sum variant must agree pointwise.  The square formulas are stated
// for n >= 1 only; the constant count is 1 from the other two routes.
TEST_CASE("three-way agreement through n = 200") {
  const long kMax = 200;
  for (TupleKind kind : {TupleKind::squares, TupleKind::triangles}) {
    const bool squares = kind == TupleKind::squares;
    for (int s = 1; s <= 4; ++s) {
      CAPTURE(squares);
      CAPTURE(s);
      const auto lattice = lattice_counts(kind, s, kMax);
      const auto theta = theta_counts(kind, s, kMax);
      const auto& formulas = count_formulas(kind, s);
      CHECK(!formulas.empty());
      for (long n = 0; n <= kMax; ++n) {
        CAPTURE(n);
        const Rational count(lattice[static_cast<std::size_t>(n)]);
        REQUIRE(theta[static_cast<std::size_t>(n)] == count);
        if (squares && n == 0) continue;
        for (const auto& f : formulas) {
          CAPTURE(f.label);
          REQUIRE(f.value(n) == count);
        }
      }
    }
  }
}
