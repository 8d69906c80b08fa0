#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "poscones/poscones.hpp"

using namespace poscones;

static NumericalRing::Data p1_data() {
  NumericalRing::Data d;
  d.dimension = 1;
  d.description = "P1";
  d.basis = {{"1"}, {"h"}};
  d.point_index = 0;
  return d;
}

TEST_CASE("ring creation validates its presentation") {
  REQUIRE_NOTHROW(NumericalRing::create(p1_data()));

  auto bad_dim = p1_data();
  bad_dim.dimension = 0;
  bad_dim.basis = {{"1"}};
  REQUIRE_THROWS_AS(NumericalRing::create(bad_dim), ModelError);

  auto bad_unit = p1_data();
  bad_unit.basis[0] = {"x"};
  REQUIRE_THROWS_AS(NumericalRing::create(bad_unit), ModelError);

  auto dup = p1_data();
  dup.basis[1] = {"1"};
  REQUIRE_THROWS_AS(NumericalRing::create(dup), ModelError);

  auto bad_point = p1_data();
  bad_point.point_index = 3;
  REQUIRE_THROWS_AS(NumericalRing::create(bad_point), ModelError);

  auto stray_table = p1_data();
  stray_table.products[{1, 1}] = {SparseClass{}};
  REQUIRE_THROWS_AS(NumericalRing::create(stray_table), ModelError);

  // missing table: a surface needs the (1,1) products
  NumericalRing::Data surf;
  surf.dimension = 2;
  surf.basis = {{"1"}, {"h"}, {"h^2"}};
  REQUIRE_THROWS_AS(NumericalRing::create(surf), ModelError);
  surf.products[{1, 1}] = {SparseClass{{0, Rational(1)}}};
  REQUIRE_NOTHROW(NumericalRing::create(surf));
}

TEST_CASE("class arithmetic basics on P1") {
  RingPtr r = NumericalRing::create(p1_data());
  RingClass h = RingClass::monomial(r, "h");
  REQUIRE(h.codim() == 1);
  REQUIRE(h.degree() == 1);
  REQUIRE((h + h).coeff(0) == 2);
  REQUIRE((h - h).is_zero());
  REQUIRE((h * h).is_zero());     // codim 2 > dimension
  REQUIRE(h.pow(0) == RingClass::one(r));
  REQUIRE_THROWS_AS(RingClass::one(r).degree(), CodimMismatch);  // degree wants top codim
  REQUIRE_THROWS_AS(RingClass::monomial(r, "nope"), UnboundSymbol);
  REQUIRE_THROWS_AS(RingClass(r, -1), CodimMismatch);
}

TEST_CASE("G(2,4) multiplication table") {
  auto g = make_grassmannian(2, 4);
  const RingPtr& r = g.ring;
  REQUIRE(r->dimension() == 4);
  std::vector<int> sizes;
  for (int k = 0; k <= 4; ++k) sizes.push_back(r->basis_size(k));
  REQUIRE(sizes == std::vector<int>{1, 1, 2, 1, 1});
  REQUIRE(r->basis(2) == std::vector<std::string>{"s[2]", "s[1,1]"});
  REQUIRE(r->monomial_name(4, r->point_index()) == "s[2,2]");

  RingClass s1 = schubert_class(g, Partition({1}));
  RingClass s2 = schubert_class(g, Partition({2}));
  RingClass s11 = schubert_class(g, Partition({1, 1}));
  RingClass s21 = schubert_class(g, Partition({2, 1}));

  REQUIRE(s1 * s1 == s2 + s11);
  REQUIRE(s1 * s2 == s21);
  REQUIRE(s1 * s11 == s21);
  REQUIRE((s2 * s11).is_zero());
  REQUIRE(s2 * s2 == schubert_class(g, Partition({2, 2})));
  REQUIRE(s1.pow(4).degree() == 2);
  REQUIRE((s2 * s21).is_zero());  // codim 5 vanishes

  REQUIRE_THROWS_AS(schubert_class(g, Partition({3})), BoxViolation);
  REQUIRE_THROWS_AS(make_grassmannian(0, 3), ModelError);
  REQUIRE_THROWS_AS(make_grassmannian(3, 3), ModelError);
}

TEST_CASE("degrees of Grassmannians") {
  auto g25 = make_grassmannian(2, 5);
  REQUIRE(schubert_class(g25, Partition({1})).pow(6).degree() == 5);
  auto g36 = make_grassmannian(3, 6);
  REQUIRE(schubert_class(g36, Partition({1})).pow(9).degree() == 42);
}

TEST_CASE("G(2,5) products are commutative and associative") {
  auto g = make_grassmannian(2, 5);
  const RingPtr& r = g.ring;
  const int dim = r->dimension();
  std::vector<RingClass> monos;
  for (int k = 1; k <= dim; ++k)
    for (int i = 0; i < r->basis_size(k); ++i)
      monos.push_back(RingClass::monomial(r, k, i));
  for (const auto& a : monos)
    for (const auto& b : monos) {
      if (a.codim() + b.codim() > dim) continue;
      REQUIRE(a * b == b * a);
    }
  for (const auto& a : monos)
    for (const auto& b : monos)
      for (const auto& c : monos) {
        if (a.codim() + b.codim() + c.codim() > dim) continue;
        REQUIRE((a * b) * c == a * (b * c));
      }
}

TEST_CASE("LR products match the coefficient search") {
  auto g = make_grassmannian(2, 5);
  for (int wa = 1; wa <= 3; ++wa)
    for (const auto& la : partitions_in_box(2, 3, wa))
      for (int wb = 1; wa + wb <= 6; ++wb)
        for (const auto& mu : partitions_in_box(2, 3, wb)) {
          RingClass prod = lr_multiply(g, la, mu);
          for (const auto& nu : partitions_in_box(2, 3, wa + wb)) {
            auto pos = g.ring->find_monomial(schubert_name(nu));
            REQUIRE(pos.has_value());
            REQUIRE(prod.coeff(pos->second) ==
                    Rational(lr_coefficient(nu, la, mu)));
          }
        }
}

TEST_CASE("Poincare pairing is a permutation on Schubert bases") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}}) {
    auto g = make_grassmannian(k, n);
    const int dim = g.ring->dimension();
    for (int c = 0; c <= dim; ++c) {
      QMatrix p = pairing_matrix(g.ring, c);
      REQUIRE(p.size() == static_cast<std::size_t>(g.ring->basis_size(c)));
      for (std::size_t i = 0; i < p.size(); ++i) {
        int ones = 0;
        for (const auto& x : p[i]) {
          REQUIRE((x == 0 || x == 1));
          if (x == 1) ++ones;
        }
        REQUIRE(ones == 1);
      }
      // columns too: permutation, not just row-stochastic
      REQUIRE(det(p) != 0);
      // duality sends sigma_lambda to the box complement
      for (int i = 0; i < g.ring->basis_size(c); ++i) {
        auto [cc, j] = *g.ring->find_monomial(schubert_name(complement_in_box(
            partitions_in_box(k, n - k, c)[static_cast<std::size_t>(i)], k,
            n - k)));
        REQUIRE(cc == dim - c);
        REQUIRE(p[i][j] == 1);
      }
    }
  }
}

TEST_CASE("pairing matrix range checks") {
  auto g = make_grassmannian(2, 4);
  REQUIRE_THROWS_AS(pairing_matrix(g.ring, -1), RangeError);
  REQUIRE_THROWS_AS(pairing_matrix(g.ring, 5), RangeError);
  REQUIRE_THROWS_AS(pairing_matrix(nullptr, 0), RingMismatch);
}

TEST_CASE("mixed classes and series arithmetic") {
  auto g = make_grassmannian(2, 4);
  const RingPtr& r = g.ring;
  RingClass s1 = schubert_class(g, Partition({1}));
  RingClass s2 = schubert_class(g, Partition({2}));

  MixedClass c = MixedClass::one(r);
  c.set_component(s1);
  c.set_component(s2);
  MixedClass inv = series_inverse(c);
  REQUIRE(inv * c == MixedClass::one(r));
  REQUIRE(inv.component(0) == RingClass::one(r));
  REQUIRE(inv.component(1) == -s1);
  // 1/(1+s1+s2) at codim 2: s1^2 - s2 = s11
  REQUIRE(inv.component(2) == schubert_class(g, Partition({1, 1})));

  MixedClass f = MixedClass::from_class(s1);
  REQUIRE(series_quotient(f * c, c) == f);

  MixedClass no_unit(r);
  no_unit.set_component(s1);
  REQUIRE_THROWS_AS(series_inverse(no_unit), RangeError);

  // truncation: from_class above the dimension is the zero mixed class
  RingClass high(r, 7);
  REQUIRE(MixedClass::from_class(high).is_zero());
}

TEST_CASE("ring mismatch is detected") {
  auto a = make_grassmannian(2, 4);
  auto b = make_grassmannian(2, 5);
  RingClass s1a = schubert_class(a, Partition({1}));
  RingClass s1b = schubert_class(b, Partition({1}));
  REQUIRE_THROWS_AS(s1a * s1b, RingMismatch);
  REQUIRE_THROWS_AS(s1a + s1b, RingMismatch);
}

TEST_CASE("product rings") {
  auto g1 = make_grassmannian(1, 2);
  auto g2 = make_grassmannian(1, 2);
  RingPtr pr = product_ring({g1.ring, g2.ring});
  REQUIRE(pr->dimension() == 2);
  REQUIRE(pr->basis_size(1) == 2);
  REQUIRE(pr->basis(1) ==
          std::vector<std::string>{"s[1]\xE2\x8A\x97"
                                   "1",
                                   "1\xE2\x8A\x97"
                                   "s[1]"});
  RingClass h1 = pullback_to_product(pr, {g1.ring, g2.ring}, 0,
                                     schubert_class(g1, Partition({1})));
  RingClass h2 = pullback_to_product(pr, {g1.ring, g2.ring}, 1,
                                     schubert_class(g2, Partition({1})));
  REQUIRE((h1 * h1).is_zero());
  REQUIRE((h1 * h2).degree() == 1);

  // single factor: the product construction reproduces the factor
  RingPtr single = product_ring({g1.ring});
  REQUIRE(single->dimension() == g1.ring->dimension());
  for (int k = 0; k <= 1; ++k) REQUIRE(single->basis(k) == g1.ring->basis(k));

  REQUIRE_THROWS_AS(product_ring({}), ModelError);
  REQUIRE_THROWS_AS(pullback_to_product(pr, {g1.ring, g2.ring}, 2,
                                        schubert_class(g1, Partition({1}))),
                    RangeError);
  REQUIRE_THROWS_AS(pullback_to_product(pr, {g1.ring, g2.ring}, 0,
                                        schubert_class(g2, Partition({1}))),
                    RingMismatch);
}

TEST_CASE("quadruple product of lines") {
  std::vector<Grassmannian> gs;
  std::vector<RingPtr> factors;
  for (int i = 0; i < 4; ++i) {
    gs.push_back(make_grassmannian(1, 2));
    factors.push_back(gs.back().ring);
  }
  RingPtr pr = product_ring(factors);
  REQUIRE(pr->dimension() == 4);
  RingClass prod = RingClass::one(pr);
  for (int i = 0; i < 4; ++i)
    prod = prod * pullback_to_product(
                      pr, factors, static_cast<std::size_t>(i),
                      schubert_class(gs[static_cast<std::size_t>(i)],
                                     Partition({1})));
  REQUIRE(prod.degree() == 1);

  // Poincare symmetry of basis sizes: 1, 4, 6, 4, 1
  std::vector<int> sizes;
  for (int k = 0; k <= 4; ++k) sizes.push_back(pr->basis_size(k));
  REQUIRE(sizes == std::vector<int>{1, 4, 6, 4, 1});
  for (int k = 0; k <= 4; ++k) REQUIRE(det(pairing_matrix(pr, k)) != 0);
}

TEST_CASE("mixed product pairing stays invertible") {
  auto g24 = make_grassmannian(2, 4);
  auto g12 = make_grassmannian(1, 2);
  RingPtr pr = product_ring({g24.ring, g12.ring});
  REQUIRE(pr->dimension() == 5);
  for (int k = 0; k <= 5; ++k) {
    QMatrix p = pairing_matrix(pr, k);
    REQUIRE(det(p) != 0);
  }
}
