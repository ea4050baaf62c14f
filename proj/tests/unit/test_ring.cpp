#include "helpers.hpp"
#include "oracle.hpp"

#include "ringlab/config.hpp"
#include "ringlab/error.hpp"

#include <doctest.h>

using namespace ringlab;
using testing_support::elems;
using testing_support::ideal;
using testing_support::isomorphic;
using testing_support::mcs;
using V = std::vector<Elem>;

TEST_CASE("cyclic rings") {
  auto z4 = ring_cyclic(4);
  CHECK(z4->size() == 4);
  CHECK(z4->mul(2, 2) == 0);
  CHECK(is_field(ring_cyclic(2)));
  auto z6 = ring_cyclic(6);
  CHECK(z6->mul(2, 3) == 0);
  CHECK_FALSE(is_domain(z6));
  CHECK_THROWS_AS(ring_cyclic(1), Error);
  try {
    ring_cyclic(0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidConstruction);
  }
}

TEST_CASE("products") {
  auto z2 = ring_cyclic(2);
  auto z3 = ring_cyclic(3);
  CHECK(isomorphic(*ring_product(z2, z3), *ring_cyclic(6)));

  auto z2z2 = ring_product(z2, z2);
  CHECK(z2z2->size() == 4);
  CHECK(z2z2->mul(z2z2->parse("(1,0)"), z2z2->parse("(0,1)")) == z2z2->parse("(0,0)"));

  auto z2z4 = ring_product(z2, ring_cyclic(4));
  CHECK(z2z4->size() == 8);
  CHECK(z2z4->one() == z2z4->parse("(1,1)"));
  CHECK(z2z4->provenance().kind == RingProvenance::Kind::Product);
}

TEST_CASE("quotients") {
  auto z4 = ring_cyclic(4);
  auto q = ring_quotient(z4, ideal(z4, {2}));
  CHECK(q.ring->size() == 2);
  CHECK(is_field(q.ring));

  auto z6 = ring_cyclic(6);
  auto q6 = ring_quotient(z6, ideal(z6, {2}));
  CHECK(q6.ring->size() == 2);
  CHECK(is_field(q6.ring));
  CHECK(q6.projection(3) == q6.ring->one());
  CHECK(q6.projection(4) == 0);

  auto id = ring_quotient(z6, zero_ideal(z6));
  CHECK(isomorphic(*id.ring, *z6));

  try {
    ring_quotient(z6, unit_ideal(z6));
    FAIL("expected InvalidConstruction");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidConstruction);
  }
}

TEST_CASE("idealization") {
  auto z2 = ring_cyclic(2);
  auto idz = ring_idealization(z2, module_regular(z2));
  CHECK(idz.ring->size() == 4);
  const Elem e01 = idz.index(0, 1);
  CHECK(idz.ring->mul(e01, e01) == 0);

  auto z4 = ring_cyclic(4);
  auto m = module_cyclic(z4, 2);
  auto idz4 = ring_idealization(z4, m);
  CHECK(idz4.ring->size() == 8);
  const Ideal embedded = idz4.embed(ideal(z4, {2}));
  CHECK(elems(embedded) == V{idz4.index(0, 0), idz4.index(2, 0)});
  CHECK(oracle::to_mask(ideal_span(idz4.ring, embedded.members).members) == oracle::to_mask(embedded.members));

  try {
    ring_idealization(z2, module_regular(z4));
    FAIL("expected TypeMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TypeMismatch);
  }
}

TEST_CASE("ideal span and radical") {
  auto z4 = ring_cyclic(4);
  auto z6 = ring_cyclic(6);
  auto z12 = ring_cyclic(12);
  CHECK(elems(ideal(z4, {2})) == V{0, 2});
  CHECK(ideal(z6, {2, 3}).members.is_full());
  CHECK(elems(ideal(z6, {})) == V{0});
  CHECK(elems(ideal_radical(zero_ideal(z4))) == V{0, 2});
  CHECK(elems(ideal_radical(zero_ideal(z12))) == V{0, 6});
  CHECK(ideal_radical(unit_ideal(z12)).members.is_full());
}

TEST_CASE("spectrum") {
  auto z4 = ring_cyclic(4);
  Spectrum sp = spectrum(z4);
  REQUIRE(sp.all_ideals.size() == 3);
  REQUIRE(sp.primes.size() == 1);
  CHECK(elems(sp.primes[0]) == V{0, 2});
  REQUIRE(sp.maximals.size() == 1);
  CHECK(elems(sp.maximals[0]) == V{0, 2});
  CHECK(elems(sp.jacobson) == V{0, 2});
  CHECK(is_quasilocal(z4));

  Spectrum s12 = spectrum(ring_cyclic(12));
  REQUIRE(s12.maximals.size() == 2);
  CHECK(elems(s12.maximals[0]) == V{0, 3, 6, 9});
  CHECK(elems(s12.maximals[1]) == V{0, 2, 4, 6, 8, 10});
  CHECK(elems(s12.jacobson) == V{0, 6});

  Spectrum f = spectrum(ring_cyclic(5));
  REQUIRE(f.primes.size() == 1);
  CHECK(elems(f.primes[0]) == V{0});
  CHECK(elems(f.jacobson) == V{0});
}

TEST_CASE("ideal lattice matches brute-force enumeration") {
  for (std::size_t n = 2; n <= 16; ++n) {
    auto r = ring_cyclic(n);
    std::vector<oracle::Mask> got;
    for (const auto& i : r->ideal_lattice()) got.push_back(oracle::to_mask(i));
    auto want = oracle::ideals(*r);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK_MESSAGE(got == want, "Z" << n);
  }
  auto p = ring_product(ring_cyclic(2), ring_cyclic(4));
  CHECK(p->ideal_lattice().size() == oracle::ideals(*p).size());
}

TEST_CASE("radicals match explicit powers") {
  for (std::size_t n = 2; n <= 16; ++n) {
    auto r = ring_cyclic(n);
    for (const auto& i : r->ideal_lattice()) {
      Subset want(n);
      for (Elem x = 0; x < n; ++x) {
        for (std::size_t t = 1; t <= n; ++t) {
          if (i.contains(oracle::power(*r, x, t))) {
            want.insert(x);
            break;
          }
        }
      }
      CHECK(ideal_radical(Ideal{r, i}).members == want);
    }
  }
}

TEST_CASE("multiplicative closure") {
  auto z6 = ring_cyclic(6);
  CHECK(elems(mcs(z6, {5})) == V{1, 5});
  CHECK(elems(mcs(z6, {2})) == V{1, 2, 4});
  try {
    mcs(ring_cyclic(4), {2});
    FAIL("expected NotMultClosed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMultClosed);
  }
  CHECK_THROWS_AS(MultClosedSet::make(z6, Subset::of(6, {1, 2})), Error);
  CHECK_THROWS_AS(mcs_complement(zero_ideal(z6)), Error);
  CHECK(elems(mcs_complement(ideal(z6, {2}))) == V{1, 3, 5});
}

TEST_CASE("saturation") {
  auto z6 = ring_cyclic(6);
  CHECK(elems(mcs_saturation(mcs(z6, {3}))) == V{1, 3, 5});
  auto z4 = ring_cyclic(4);
  CHECK(elems(mcs_saturation(mcs(z4, {3}))) == V{1, 3});

  for (std::size_t n = 2; n <= 12; ++n) {
    auto r = ring_cyclic(n);
    for (oracle::Mask s : oracle::mult_closed_sets(*r)) {
      auto set = MultClosedSet::make(r, oracle::to_subset(s, n));
      CHECK(oracle::to_mask(mcs_saturation(set).members()) == oracle::saturation(*r, s));
    }
  }
}

TEST_CASE("S-prime ideals") {
  auto z4 = ring_cyclic(4);
  auto z6 = ring_cyclic(6);
  auto r1 = is_s_prime_ideal(ideal(z4, {2}), mcs_trivial(z4));
  CHECK(r1.verdict);
  CHECK(r1.witness == Elem{1});

  auto r2 = is_s_prime_ideal(zero_ideal(z6), mcs_trivial(z6));
  CHECK_FALSE(r2.verdict);
  REQUIRE(r2.refutations.size() == 1);
  V pair;
  for (const auto& it : r2.refutations[0].items) pair.push_back(it.value);
  CHECK(pair == V{2, 3});

  auto r3 = is_s_prime_ideal(zero_ideal(z6), mcs(z6, {2}));
  CHECK(r3.verdict);
  CHECK(r3.witness == Elem{2});

  for (std::size_t n = 2; n <= 12; ++n) {
    auto r = ring_cyclic(n);
    for (oracle::Mask s : oracle::mult_closed_sets(*r)) {
      auto set = MultClosedSet::make(r, oracle::to_subset(s, n));
      for (const auto& i : r->ideal_lattice()) {
        CHECK(is_s_prime_ideal(Ideal{r, i}, set).verdict == oracle::s_prime_ideal(*r, oracle::to_mask(i), s));
      }
    }
  }
}

TEST_CASE("ring homomorphisms are validated") {
  auto z4 = ring_cyclic(4);
  auto z2 = ring_cyclic(2);
  CHECK_NOTHROW(ring_hom_make(z4, z2, {0, 1, 0, 1}));
  CHECK_THROWS_AS(ring_hom_make(z4, z2, {0, 1, 1, 1}), Error);
}

TEST_CASE("carrier cap") {
  const std::size_t old = carrier_cap();
  set_carrier_cap(10);
  try {
    ring_cyclic(12);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
  set_carrier_cap(old);
  CHECK(ring_cyclic(12)->size() == 12);
}

TEST_CASE("table validation names the failing axiom") {
  FiniteRing::Tables t;
  t.size = 2;
  t.add = {0, 1, 1, 0};
  t.mul = {0, 0, 0, 0};
  t.one = 1;
  try {
    FiniteRing::make(t, {});
    FAIL("expected AxiomViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AxiomViolation);
  }
}
