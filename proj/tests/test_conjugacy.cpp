#include <vector>

#include "doctest.h"
#include "hallkit/conjugacy.hpp"
#include "hallkit/errors.hpp"
#include "test_util.hpp"

using namespace hallkit;

namespace {

Index pow3(Index e) {
  Index r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

Index nu3(Index n) {
  Index v = 0;
  while (n != 0 && n % 3 == 0) {
    n /= 3;
    ++v;
  }
  return v;
}

// The definition: the commutator of the series product with a_j collects one
// c_{k n0 - j} per series letter.
Int brute_series_commutator(Index n0, Index i, Index j, const DFunction& d) {
  Int acc = 0;
  for (Index k = 0; k < pow3(i); ++k) acc += d.eval(k * n0 - j);
  return acc;
}

GroupElement series_product(const SpecHandle& spec, Index n0, Index i) {
  std::vector<SupportMap::Entry> letters;
  for (Index k = 0; k < pow3(i); ++k) letters.emplace_back(k * n0, Int(1));
  return GroupElement(spec, 0, SupportMap::from_entries(std::move(letters)), SupportMap());
}

}  // namespace

TEST_CASE("series commutator: the telescoped closed form is the sum") {
  std::vector<DFunction> ds = {
      DFunction::hall(HallDParams{}),
      DFunction::hall({PrimeFunction::kth_prime(), HallDParams::Exponent::kIPlus1}),
      DFunction::hall({PrimeFunction::scripted({2, 7, 11, 13, 3}, 5),
                       HallDParams::Exponent::kIPlus1}),
  };
  std::vector<Index> js = {0, 1, -1, 2, -2, 3, -3, 4, 6, -6, 9, -9, 12, 18, 27, -27, 54};
  for (const DFunction& d : ds)
    for (Index n0 : {Index(1), Index(2), Index(3), Index(6), Index(9)})
      for (Index i : {Index(0), Index(1), Index(2)})
        for (Index j : js) {
          if (j != 0 && nu3(j) < nu3(n0)) continue;
          Int closed = commutator_with_series(n0, i, j, d);
          CHECK(closed == brute_series_commutator(n0, i, j, d));
        }
}

TEST_CASE("series commutator: group arithmetic agrees") {
  DFunction d = DFunction::hall(HallDParams{});
  SpecHandle spec = make_cyclic_center(d);
  for (Index n0 : {Index(1), Index(3)})
    for (Index i : {Index(0), Index(1), Index(2)})
      for (Index j : {Index(0), Index(3), Index(-3), Index(6), Index(9), Index(12), Index(27)}) {
        GroupElement g = series_product(spec, n0, i);
        GroupElement com = commutator(g, gen_a(spec, j));
        REQUIRE(com.is_central());
        CHECK(com.c_part().get(1) == commutator_with_series(n0, i, j, d));
      }
}

TEST_CASE("series commutator: the depth-1 instance evaluates to -d(3)") {
  // Sum d(-3) + d(-2) + d(-1) = -4 + 1 - 1; adjacent non-congruent terms
  // cancel and the survivor is d(0 - 3).
  for (const DFunction& d : {DFunction::hall(HallDParams{}),
                             DFunction::hall({PrimeFunction::kth_prime(),
                                              HallDParams::Exponent::kIPlus1})}) {
    CHECK(d.eval(3) == 4);
    CHECK(commutator_with_series(1, 1, 3, d) == -4);
    CHECK(brute_series_commutator(1, 1, 3, d) == -4);
  }
}

TEST_CASE("series commutator rejects bad inputs") {
  DFunction d = DFunction::hall(HallDParams{});
  CHECK_THROWS_AS(commutator_with_series(0, 1, 3, d), DomainError);
  CHECK_THROWS_AS(commutator_with_series(3, 1, 1, d), DomainError);  // v3(j) < v3(n0)
  CHECK_THROWS_AS(commutator_with_series(1, 17, 3, d), DomainError);
}

TEST_CASE("bounded conjugacy search walks the ball in norm order") {
  SpecHandle free = make_free_center();
  GroupElement a0 = gen_a(free, 0), a1 = gen_a(free, 1);

  auto shift = bounded_conjugacy_search(a0, a1, 2);
  REQUIRE(shift.has_value());
  CHECK(*shift == gen_t(free));  // the shortest conjugator comes out first
  CHECK(conjugate(*shift, a0) == a1);

  auto self = bounded_conjugacy_search(a0, a0, 2);
  REQUIRE(self.has_value());
  CHECK(self->is_identity());

  // a_0 and a_0 c_1 are genuinely conjugate: a_1 does it.
  GroupElement a0c1 = multiply(a0, gen_c(free, 1));
  auto found = bounded_conjugacy_search(a0, a0c1, 4);
  REQUIRE(found.has_value());
  CHECK(conjugate(*found, a0) == a0c1);

  // a_0^2 and a_0^2 c_1 are not: conjugation moves the central part of a
  // square by even exponents only.
  GroupElement sq = gen_a(free, 0, 2);
  GroupElement sqc = multiply(sq, gen_c(free, 1));
  CHECK(!bounded_conjugacy_search(sq, sqc, 6).has_value());

  CHECK_THROWS_AS(bounded_conjugacy_search(a0, gen_a(make_trivial_center(), 0), 3), DomainError);
  CHECK_THROWS_AS(bounded_conjugacy_search(a0, a1, -1), DomainError);
  CHECK_THROWS_AS(bounded_conjugacy_search(a0, a1, 11), DomainError);
}

TEST_CASE("conjugacy-to-membership: a reduced-prime hit builds the conjugator") {
  HallDParams params{PrimeFunction::scripted({2, 7, 11, 13, 3}, 5),
                     HallDParams::Exponent::kIPlus1};
  ConjugacyCertificate cert = conj_membership_test(2, 3, params, 10);
  CHECK(cert.status == ConjStatus::kConjugate);
  REQUIRE(cert.hit.has_value());
  CHECK(*cert.hit == 4);
  CHECK(cert.g1.a_part().size() == 9);           // a_0 ... a_8
  CHECK(cert.g2.c_part().get(1) == 24);          // n(2)/3^2 = 216/9
  REQUIRE(cert.conjugator.has_value());
  CHECK(conjugate(*cert.conjugator, cert.g1) == cert.g2);
  // The witness is a product of a-generators at the two 3-power indices.
  for (const auto& [idx, exp] : cert.conjugator->a_part())
    CHECK((idx == 9 || idx == 81));
  CHECK(cert.conjugator->t_exp() == 0);
  CHECK(cert.note.find("index 4") != std::string::npos);
}

TEST_CASE("conjugacy-to-membership: a silent prime map is a definitive no") {
  ConjugacyCertificate cert =
      conj_membership_test(1, 2, {PrimeFunction::scripted({7}, 5), HallDParams::Exponent::kIPlus1}, 10);
  CHECK(cert.status == ConjStatus::kNotConjugate);
  CHECK(!cert.conjugator.has_value());
  // Cross-check at desk scale: no conjugator in the radius-5 ball either.
  CHECK(!bounded_conjugacy_search(cert.g1, cert.g2, 5).has_value());
  CHECK(cert.g2.c_part().get(1) == 2);  // n(1)/2 = 4/2

  // The built-in enumerations never reduce to anything but 1.
  CHECK(conj_membership_test(1, 2, {PrimeFunction::kth_prime(), HallDParams::Exponent::kIPlus1}, 8)
            .status == ConjStatus::kNotConjugate);
  CHECK(conj_membership_test(2, 3, HallDParams{}, 8).status == ConjStatus::kNotConjugate);
}

TEST_CASE("conjugacy-to-membership: a short scan is honest about not knowing") {
  HallDParams params{PrimeFunction::scripted({7, 7, 7, 7, 2}, 5),
                     HallDParams::Exponent::kIPlus1};
  ConjugacyCertificate shallow = conj_membership_test(1, 2, params, 3);
  CHECK(shallow.status == ConjStatus::kUnknown);
  CHECK(shallow.note.find("horizon") != std::string::npos);

  ConjugacyCertificate deep = conj_membership_test(1, 2, params, 10);
  CHECK(deep.status == ConjStatus::kConjugate);
  REQUIRE(deep.hit.has_value());
  CHECK(*deep.hit == 4);
  CHECK(conjugate(*deep.conjugator, deep.g1) == deep.g2);
}

TEST_CASE("conjugacy-to-membership rejects bad inputs") {
  HallDParams triv{};
  CHECK_THROWS_AS(conj_membership_test(1, 4, triv, 10), DomainError);   // not prime
  CHECK_THROWS_AS(conj_membership_test(1, 5, triv, 10), DomainError);   // 5 does not divide n0(1)
  CHECK_THROWS_AS(conj_membership_test(0, 2, triv, 10), DomainError);   // depth too small
  CHECK_THROWS_AS(conj_membership_test(2, 3, triv, 2), DomainError);    // bound below i
  // P'(1) consumed the prime: n(1) = 1 is not divisible by 2.
  CHECK_THROWS_AS(
      conj_membership_test(1, 2, {PrimeFunction::scripted({7, 2}, 11), HallDParams::Exponent::kIPlus1}, 10),
      DomainError);
}
