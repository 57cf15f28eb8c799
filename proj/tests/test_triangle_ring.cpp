#include <doctest.h>

#include <stdexcept>

#include "newtonian/triangle_ring.hpp"
#include "oracles.hpp"

using namespace newtonian;

TEST_CASE("index operations are definitional") {
  CHECK(add(RingRow{Rat(2), 3}, RingRow{Rat(3), 3}) == RingRow{Rat(5), 3});
  CHECK(add(RingRow{Rat(7), 4}, ring_zero(4)) == RingRow{Rat(7), 4});
  CHECK(add(RingRow{Rat(4), 2}, RingRow{Rat(-4), 2}) == ring_zero(2));
  CHECK(mul(RingRow{Rat(2), 4}, RingRow{Rat(3), 4}) == RingRow{Rat(6), 4});
  CHECK(mul(RingRow{Rat(2), 3}, ring_identity(3)) == RingRow{Rat(2), 3});
  CHECK(mul(RingRow{Rat(7), 5}, ring_zero(5)) == ring_zero(5));
  CHECK(scalar_mul(Int(3), RingRow{Rat(2), 6}) == RingRow{Rat(6), 6});
  CHECK(scalar_mul(Int(0), RingRow{Rat(7), 5}) == ring_zero(5));
}

TEST_CASE("rows of different rank do not combine") {
  CHECK_THROWS_AS(add(RingRow{Rat(1), 2}, RingRow{Rat(1), 3}), std::invalid_argument);
  CHECK_THROWS_AS(mul(RingRow{Rat(1), 2}, RingRow{Rat(1), 3}), std::invalid_argument);
}

TEST_CASE("ring axioms hold on sampled integer indices") {
  oracle::Sampler sampler(301);
  for (unsigned n = 0; n <= 8; ++n) {
    for (int i = 0; i < 25; ++i) {
      RingRow u{Rat(sampler.integer(-60, 60)), n};
      RingRow v{Rat(sampler.integer(-60, 60)), n};
      RingRow w{Rat(sampler.integer(-60, 60)), n};
      CHECK(add(add(u, v), w) == add(u, add(v, w)));
      CHECK(add(u, v) == add(v, u));
      CHECK(add(u, ring_zero(n)) == u);
      CHECK(add(u, scalar_mul(Int(-1), u)) == ring_zero(n));
      CHECK(mul(mul(u, v), w) == mul(u, mul(v, w)));
      CHECK(mul(u, v) == mul(v, u));
      CHECK(mul(u, ring_identity(n)) == u);
      CHECK(mul(u, add(v, w)) == add(mul(u, v), mul(u, w)));
    }
  }
}

TEST_CASE("module axioms hold on sampled scalars") {
  oracle::Sampler sampler(302);
  for (int i = 0; i < 100; ++i) {
    unsigned n = static_cast<unsigned>(sampler.integer(0, 8));
    RingRow u{Rat(sampler.integer(-60, 60)), n};
    Int alpha(sampler.integer(-20, 20));
    Int beta(sampler.integer(-20, 20));
    CHECK(scalar_mul(alpha + beta, u) == add(scalar_mul(alpha, u), scalar_mul(beta, u)));
    CHECK(scalar_mul(alpha * beta, u) == scalar_mul(alpha, scalar_mul(beta, u)));
    CHECK(scalar_mul(Int(1), u) == u);
  }
}

TEST_CASE("fraction-field variant has inverses") {
  oracle::Sampler sampler(303);
  for (int i = 0; i < 50; ++i) {
    unsigned n = static_cast<unsigned>(sampler.integer(0, 8));
    RingRow u{sampler.nonzero_rational(), n};
    CHECK(mul(u, inverse(u)) == ring_identity(n));
  }
  CHECK_THROWS_AS(inverse(ring_zero(3)), std::domain_error);
}

TEST_CASE("identity row materializes as the familiar coefficients") {
  Row pascal = ring_identity(4).materialize();
  CHECK(pascal.entries == std::vector<Rat>{Rat(1), Rat(4), Rat(6), Rat(4), Rat(1)});
  Row acted = mul(RingRow{Rat(2), 3}, ring_identity(3)).materialize();
  CHECK(acted.entries == row(Rat(2), 3).entries);
}

TEST_CASE("triangle operations act on the index and normalize depth") {
  RingTriangle t1{Rat(2), 4};
  RingTriangle t2{Rat(3), 6};
  CHECK(add(t1, t2) == RingTriangle{Rat(5), 6});
  CHECK(mul(t1, t2) == RingTriangle{Rat(6), 6});
  CHECK(scalar_mul(Int(3), RingTriangle{Rat(2), 5}) == RingTriangle{Rat(6), 5});
  CHECK(mul(RingTriangle{Rat(9), 3}, RingTriangle{Rat(1), 3}) == RingTriangle{Rat(9), 3});
}

TEST_CASE("index map is a bijection on a sampled range") {
  // y -> N(y, n) is injective: distinct indices give distinct second entries.
  for (long y1 = -20; y1 <= 20; ++y1)
    for (long y2 = y1 + 1; y2 <= 20; ++y2)
      CHECK(RingRow{Rat(y1), 5}.materialize().entries[1] !=
            RingRow{Rat(y2), 5}.materialize().entries[1]);
}
