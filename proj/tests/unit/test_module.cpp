#include "helpers.hpp"
#include "oracle.hpp"

#include "ringlab/error.hpp"

#include <algorithm>
#include <doctest.h>

using namespace ringlab;
using testing_support::elems;
using testing_support::ideal;
using testing_support::sub;
using V = std::vector<Elem>;

namespace {

std::vector<oracle::Mask> masks(const std::vector<Subset>& v) {
  std::vector<oracle::Mask> out;
  for (const auto& s : v) out.push_back(oracle::to_mask(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<oracle::Mask> sorted(std::vector<oracle::Mask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

ModulePtr z2_plus_z2() {
  auto z2 = ring_cyclic(2);
  return module_product(module_regular(z2), module_regular(z2), ProductMode::SameRing);
}

/// Modules used for the lattice comparisons below.
std::vector<ModulePtr> sample_modules() {
  std::vector<ModulePtr> out;
  for (std::size_t n = 2; n <= 12; ++n) out.push_back(module_regular(ring_cyclic(n)));
  auto z12 = ring_cyclic(12);
  out.push_back(module_cyclic(z12, 4));
  out.push_back(module_cyclic(z12, 6));
  out.push_back(z2_plus_z2());
  auto z4 = ring_cyclic(4);
  out.push_back(module_product(module_regular(z4), module_cyclic(z4, 2), ProductMode::SameRing));
  out.push_back(module_product(module_regular(ring_cyclic(2)), module_regular(z4), ProductMode::ProductRing));
  auto z6 = ring_cyclic(6);
  out.push_back(module_product(module_cyclic(z6, 2), module_cyclic(z6, 3), ProductMode::SameRing));
  out.push_back(module_regular(ring_idealization(z4, module_cyclic(z4, 2)).ring));
  return out;
}

}  // namespace

TEST_CASE("regular modules") {
  auto z4 = ring_cyclic(4);
  auto m = module_regular(z4);
  REQUIRE(m->lattice().size() == 3);
  CHECK(elems(m->lattice()[0]) == V{0});
  CHECK(elems(m->lattice()[1]) == V{0, 2});
  CHECK(m->lattice()[2].is_full());
  CHECK(module_regular(ring_cyclic(7))->lattice().size() == 2);
}

TEST_CASE("modules from tables") {
  auto z4 = ring_cyclic(4);
  FiniteModule::Tables t;
  t.size = 2;
  t.add = {0, 1, 1, 0};
  t.act = {0, 0, 0, 1, 0, 0, 0, 1};
  auto z2 = module_from_tables(z4, t);
  CHECK(elems(annihilator(full_submodule(z2))) == V{0, 2});

  FiniteModule::Tables bad;
  bad.size = 3;
  bad.add = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  bad.act = {0, 0, 0, 0, 1, 2, 0, 2, 1, 0, 0, 0};
  try {
    module_from_tables(z4, bad);
    FAIL("expected AxiomViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AxiomViolation);
  }

  auto zero = module_cyclic(z4, 1);
  CHECK(zero->size() == 1);
  CHECK(annihilator(full_submodule(zero)).members.is_full());
}

TEST_CASE("module products") {
  auto z2 = ring_cyclic(2);
  auto z4 = ring_cyclic(4);
  auto p = module_product(module_regular(z2), module_regular(z4), ProductMode::ProductRing);
  CHECK(p->lattice().size() == 6);
  CHECK(p->ring()->size() == 8);
  // every submodule is a product N1 x N2
  for (const auto& n : p->lattice()) {
    Subset left(2), right(4);
    for (Elem e : n.elements()) {
      left.insert(e / 4);
      right.insert(e % 4);
    }
    CHECK(n.size() == left.size() * right.size());
  }

  CHECK(z2_plus_z2()->lattice().size() == 5);
  auto zero = module_cyclic(z4, 1);
  CHECK(module_product(zero, zero, ProductMode::SameRing)->size() == 1);
  CHECK_THROWS_AS(module_product(module_regular(z2), module_regular(z4), ProductMode::SameRing), Error);
}

TEST_CASE("spans") {
  auto z4 = module_regular(ring_cyclic(4));
  CHECK(elems(sub(z4, {2})) == V{0, 2});
  CHECK(elems(sub(z4, {})) == V{0});
  auto m = z2_plus_z2();
  auto line = sub(m, {m->parse("(1,0)")});
  CHECK(line.members == Subset::of(4, {m->parse("(0,0)"), m->parse("(1,0)")}));
}

TEST_CASE("submodule counts") {
  CHECK(submodules_of(module_regular(ring_cyclic(4))).size() == 3);
  CHECK(submodules_of(z2_plus_z2()).size() == 5);
  CHECK(submodules_of(module_cyclic(ring_cyclic(3), 1)).size() == 1);
  CHECK(submodules_of(module_regular(ring_cyclic(12))).size() == 6);
}

TEST_CASE("annihilators and colons") {
  auto z4r = ring_cyclic(4);
  auto z4 = module_regular(z4r);
  CHECK(elems(annihilator(sub(z4, {2}))) == V{0, 2});
  CHECK(annihilator(zero_submodule(z4)).members.is_full());
  CHECK(elems(annihilator(full_submodule(module_cyclic(z4r, 2)))) == V{0, 2});

  CHECK(elems(colon_ideal(sub(z4, {2}))) == V{0, 2});
  CHECK(colon_ideal(full_submodule(z4)).members.is_full());
  auto z2 = module_cyclic(z4r, 2);
  CHECK(colon_ideal(zero_submodule(z2)) == annihilator(full_submodule(z2)));

  CHECK(elems(colon_into(zero_submodule(z4), ideal(z4r, {2}))) == V{0, 2});
  CHECK(elems(colon_into(zero_submodule(z4), unit_ideal(z4r))) == V{0});
  CHECK(colon_into(zero_submodule(z4), zero_ideal(z4r)).members.is_full());
}

TEST_CASE("completely irreducible submodules") {
  auto z4 = module_regular(ring_cyclic(4));
  auto ci = completely_irreducibles(z4);
  // 0 is the meet of the strictly larger {0,2} and Z4, which is {0,2}, so 0 qualifies too.
  REQUIRE(ci.size() == 2);
  CHECK(elems(ci[0]) == V{0});
  CHECK(elems(ci[1]) == V{0, 2});

  auto m = z2_plus_z2();
  auto lines = completely_irreducibles(m);
  CHECK(lines.size() == 3);
  for (const auto& l : lines) CHECK(l.members.size() == 2);

  auto simple = module_regular(ring_cyclic(5));
  auto sci = completely_irreducibles(simple);
  REQUIRE(sci.size() == 1);
  CHECK(sci[0].is_zero());
}

TEST_CASE("lattices and completely irreducibles match brute force") {
  for (const auto& m : sample_modules()) {
    CHECK(masks(m->lattice()) == sorted(oracle::submodules(*m)));
    CHECK(masks(m->completely_irreducible()) == sorted(oracle::completely_irreducible(*m)));
    CHECK(std::is_sorted(m->lattice().begin(), m->lattice().end(), canonical_less));
  }
}

TEST_CASE("every submodule is the meet of the completely irreducibles above it") {
  for (const auto& m : sample_modules()) {
    for (const auto& n : m->lattice()) {
      Subset meet = m->all();
      for (const auto& l : m->completely_irreducible()) {
        if (n.is_subset_of(l)) meet &= l;
      }
      CHECK(meet == n);
    }
  }
}

TEST_CASE("interior") {
  auto z4r = ring_cyclic(4);
  auto z4 = module_regular(z4r);
  const Ideal p = ideal(z4r, {2});
  CHECK(elems(interior(zero_submodule(z4), p)) == V{0});
  CHECK(interior(full_submodule(z4), p).members.is_full());
  for (const auto& n : submodules_of(z4)) {
    CHECK(interior(n, p).members.is_subset_of(z4->all()));
  }
}

TEST_CASE("W and Z sets") {
  auto z4 = module_regular(ring_cyclic(4));
  CHECK(elems(z_set(z4).members) == V{0, 2});
  CHECK(elems(w_set(z4).members) == V{0, 2});
  auto f = module_regular(ring_cyclic(5));
  CHECK(elems(z_set(f).members) == V{0});
  CHECK(elems(w_set(f).members) == V{0});
  auto zero = module_cyclic(ring_cyclic(3), 1);
  CHECK(z_set(zero).members.empty());
  CHECK(w_set(zero).members.empty());

  for (const auto& m : sample_modules()) {
    CHECK(oracle::to_mask(z_set(m).members) == oracle::z_set(*m));
    CHECK(oracle::to_mask(w_set(m).members) == oracle::w_set(*m));
  }
}

TEST_CASE("multiplication and comultiplication") {
  auto z4 = module_regular(ring_cyclic(4));
  CHECK(is_multiplication(z4).verdict);
  CHECK(is_comultiplication(z4).verdict);
  CHECK_FALSE(is_multiplication(z2_plus_z2()).verdict);
  auto f = module_regular(ring_cyclic(3));
  CHECK(is_multiplication(f).verdict);
  CHECK(is_comultiplication(f).verdict);

  for (const auto& m : sample_modules()) {
    CHECK(is_multiplication(m).verdict == oracle::multiplication(*m));
    CHECK(is_comultiplication(m).verdict == oracle::comultiplication(*m));
  }
}

TEST_CASE("homomorphisms") {
  auto z4r = ring_cyclic(4);
  auto z2 = module_cyclic(z4r, 2);
  auto z4 = module_regular(z4r);
  auto inc = hom_make(z2, z4, {0, 2});
  CHECK(is_mono(inc));
  CHECK(elems(hom_image(inc, full_submodule(z2))) == V{0, 2});
  CHECK(elems(hom_preimage(inc, sub(z4, {2}))).size() == 2);

  auto id = hom_make(z4, z4, {0, 1, 2, 3});
  for (const auto& n : submodules_of(z4)) CHECK(hom_image(id, n) == n);

  auto zero = hom_make(z4, z4, {0, 0, 0, 0});
  CHECK_FALSE(is_mono(zero));
  auto z0 = module_cyclic(z4r, 1);
  CHECK(is_mono(hom_make(z0, z4, {0})));

  CHECK_THROWS_AS(hom_make(z2, z4, {0, 1}), Error);

  // Z4 -> Z4 homs are multiplication by a, Z2 -> Z4 homs send 1 to 0 or 2.
  CHECK(enumerate_homs(z4, z4).size() == 4);
  CHECK(enumerate_homs(z2, z4).size() == 2);
}
