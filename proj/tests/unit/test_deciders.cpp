#include "helpers.hpp"

#include "ringlab/error.hpp"

#include <doctest.h>

using namespace ringlab;
using testing_support::elems;
using testing_support::ideal;
using testing_support::mcs;
using testing_support::sub;
using V = std::vector<Elem>;

namespace {

const SecondaryForm kForms[] = {SecondaryForm::A, SecondaryForm::B, SecondaryForm::C, SecondaryForm::D};

Elem item(const Refutation& r, const std::string& role) {
  for (const auto& it : r.items) {
    if (it.role == role) return it.value;
  }
  FAIL("missing role " << role);
  return 0;
}

}  // namespace

TEST_CASE("secondary") {
  auto z4 = module_regular(ring_cyclic(4));
  auto r4 = is_secondary(full_submodule(z4));
  CHECK(r4.verdict);
  CHECK(r4.certificates.size() == 4);
  CHECK(recheck(r4, full_submodule(z4)));

  auto z6 = module_regular(ring_cyclic(6));
  auto r6 = is_secondary(full_submodule(z6));
  CHECK_FALSE(r6.verdict);
  REQUIRE_FALSE(r6.refutations.empty());
  CHECK(item(r6.refutations[0], "r") == 2);
  CHECK(recheck(r6, full_submodule(z6)));

  auto r0 = is_secondary(zero_submodule(z4));
  CHECK_FALSE(r0.verdict);
  CHECK(r0.disqualified == Disqualification::ZeroSubmodule);
  CHECK(r0.refutations.empty());
}

TEST_CASE("second and S-second") {
  auto z4r = ring_cyclic(4);
  auto z4 = module_regular(z4r);
  auto s = mcs(z4r, {3});
  auto r = is_s_second(full_submodule(z4), s);
  CHECK_FALSE(r.verdict);
  CHECK(r.applicable());
  // one refutation per element of S
  REQUIRE(r.refutations.size() == 2);
  CHECK(r.refutations[0].s == Elem{1});
  CHECK(r.refutations[1].s == Elem{3});
  CHECK(recheck(r, full_submodule(z4), s));

  CHECK(is_second(full_submodule(module_cyclic(z4r, 2))).verdict);
  auto r2 = is_second(full_submodule(z4));
  CHECK_FALSE(r2.verdict);
  CHECK(item(r2.refutations[0], "r") == 2);
}

TEST_CASE("S-secondary on Z4 with S={1,3}") {
  auto z4r = ring_cyclic(4);
  auto z4 = module_regular(z4r);
  auto s = mcs(z4r, {3});
  for (SecondaryForm f : kForms) {
    auto r = is_s_secondary(full_submodule(z4), s, f);
    CHECK(r.verdict);
    CHECK(r.witness == Elem{1});
    CHECK(recheck(r, full_submodule(z4), s));
  }
  CHECK(elems(s_secondary_witnesses(full_submodule(z4), s)) == V{1, 3});
}

TEST_CASE("S-secondary separates from secondary on Z6") {
  auto z6r = ring_cyclic(6);
  auto z6 = module_regular(z6r);
  auto s = mcs(z6r, {3});
  auto r = is_s_secondary(full_submodule(z6), s);
  CHECK(r.verdict);
  CHECK(r.witness == Elem{3});
  CHECK(r.certificates.size() == 6);
  CHECK(recheck(r, full_submodule(z6), s));
  CHECK_FALSE(is_secondary(full_submodule(z6)).verdict);
  CHECK(elems(s_secondary_witnesses(full_submodule(z6), s)) == V{3});
}

TEST_CASE("S-secondary disqualifications") {
  auto z6r = ring_cyclic(6);
  auto z6 = module_regular(z6r);
  auto r = is_s_secondary(zero_submodule(z6), mcs(z6r, {5}));
  CHECK_FALSE(r.verdict);
  CHECK(r.disqualified == Disqualification::RadicalMeetsS);
  CHECK(s_secondary_witnesses(zero_submodule(z6), mcs(z6r, {5})).empty());

  // sqrt Ann({0,3}) = {0,2,4} meets {1,2,4}
  auto r2 = is_s_secondary(sub(z6, {3}), mcs(z6r, {2}));
  CHECK_FALSE(r2.verdict);
  CHECK(r2.disqualified == Disqualification::RadicalMeetsS);
  CHECK(recheck(r2, sub(z6, {3}), mcs(z6r, {2})));
}

TEST_CASE("failing S-secondary reports carry one refutation per s") {
  auto z12r = ring_cyclic(12);
  auto z12 = module_regular(z12r);
  auto s = mcs(z12r, {5});
  for (SecondaryForm f : kForms) {
    auto r = is_s_secondary(full_submodule(z12), s, f);
    CHECK_FALSE(r.verdict);
    CHECK(r.applicable());
    REQUIRE(r.refutations.size() == 2);
    CHECK(recheck(r, full_submodule(z12), s));
  }
}

TEST_CASE("S-prime submodules") {
  auto z4r = ring_cyclic(4);
  auto z6r = ring_cyclic(6);
  auto z4 = module_regular(z4r);
  auto z6 = module_regular(z6r);

  auto r1 = is_s_prime_submodule(sub(z4, {2}), mcs_trivial(z4r));
  CHECK(r1.verdict);
  CHECK(recheck(r1, sub(z4, {2}), mcs_trivial(z4r)));

  auto r2 = is_s_prime_submodule(zero_submodule(z6), mcs_trivial(z6r));
  CHECK_FALSE(r2.verdict);
  REQUIRE(r2.refutations.size() == 1);
  CHECK(item(r2.refutations[0], "a") == 2);
  CHECK(item(r2.refutations[0], "m") == 3);
  CHECK(recheck(r2, zero_submodule(z6), mcs_trivial(z6r)));

  auto r3 = is_s_prime_submodule(zero_submodule(z6), mcs(z6r, {2}));
  CHECK(r3.verdict);
  CHECK(r3.witness == Elem{2});

  auto whole = is_s_prime_submodule(full_submodule(z6), mcs_trivial(z6r));
  CHECK(whole.disqualified == Disqualification::Improper);
}

TEST_CASE("S-primary submodules") {
  auto z4r = ring_cyclic(4);
  auto z6r = ring_cyclic(6);
  auto r1 = is_s_primary(zero_submodule(module_regular(z4r)), mcs_trivial(z4r));
  CHECK(r1.verdict);
  auto r2 = is_s_primary(zero_submodule(module_regular(z6r)), mcs_trivial(z6r));
  CHECK_FALSE(r2.verdict);
  CHECK(item(r2.refutations[0], "a") == 2);
  CHECK(item(r2.refutations[0], "m") == 3);

  // sqrt(({0,2,4} : Z6)) = {0,2,4} meets {1,2,4}
  auto z6 = module_regular(z6r);
  auto r3 = is_s_primary(sub(z6, {2}), mcs(z6r, {2}));
  CHECK_FALSE(r3.verdict);
  CHECK(r3.disqualified == Disqualification::RadicalColonMeetsS);
}

TEST_CASE("quasi S-cotorsion-free") {
  auto z2 = ring_cyclic(2);
  auto m = module_product(module_regular(z2), module_regular(z2), ProductMode::SameRing);
  auto r1 = is_quasi_s_cotorsion_free(m, mcs_trivial(z2));
  CHECK(r1.verdict);
  CHECK(recheck(r1, full_submodule(m), mcs_trivial(z2)));

  auto z4r = ring_cyclic(4);
  auto z4 = module_regular(z4r);
  CHECK(is_quasi_s_cotorsion_free(z4, mcs_trivial(z4r)).verdict);

  auto z6r = ring_cyclic(6);
  auto r3 = is_quasi_s_cotorsion_free(module_cyclic(z6r, 3), mcs(z6r, {3}));
  CHECK_FALSE(r3.verdict);
  CHECK(r3.disqualified == Disqualification::RadicalMeetsS);
  CHECK(is_quasi_s_cotorsion_free(module_cyclic(z4r, 2), mcs(z4r, {3})).applicable());
}

TEST_CASE("cotorsion over fields") {
  auto f = ring_cyclic(5);
  CHECK(is_cotorsion_free(module_regular(f)).verdict);
  CHECK(is_cotorsion(module_cyclic(f, 1)).verdict);
  try {
    is_cotorsion_free(module_regular(ring_cyclic(6)));
    FAIL("expected NotADomain");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotADomain);
  }
}

TEST_CASE("nilpotency index") {
  auto z8 = module_regular(ring_cyclic(8));
  CHECK(nilpotency_index(*z8, 2, z8->all()) == std::size_t{3});
  CHECK(nilpotency_index(*z8, 4, z8->all()) == std::size_t{2});
  CHECK_FALSE(nilpotency_index(*z8, 3, z8->all()).has_value());
  CHECK(nilpotency_index(*z8, 2, Subset::of(8, {0, 4})) == std::size_t{1});
}

TEST_CASE("recheck catches tampered reports") {
  auto z4r = ring_cyclic(4);
  auto z4 = module_regular(z4r);
  auto s = mcs(z4r, {3});

  auto r = is_s_secondary(full_submodule(z4), s);
  auto wrong = r;
  wrong.witness = 2;
  CHECK_FALSE(recheck(wrong, full_submodule(z4), s));

  auto neg = is_s_second(full_submodule(z4), s);
  auto dropped = neg;
  dropped.refutations.pop_back();
  CHECK_FALSE(recheck(dropped, full_submodule(z4), s));

  auto flipped = is_secondary(full_submodule(z4));
  flipped.certificates[2].t = 1;
  CHECK_FALSE(recheck(flipped, full_submodule(z4)));

  CHECK_THROWS_AS(recheck(r, full_submodule(z4)), Error);
}
