#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "spintor/error.hpp"
#include "spintor/generators.hpp"
#include "spintor/monomial.hpp"
#include "spintor/perm.hpp"

using namespace spintor;

TEST_CASE("vector generators at level one are the base matrices") {
  CHECK(vector_generator_rep(1, 1) == mat_e1());
  CHECK(vector_generator_rep(1, 2) == mat_e2());
}

TEST_CASE("vector generators assemble by the kronecker recipe") {
  // Pair j contributes E1/E2 padded by B's below and identities above.
  CHECK(vector_generator_rep(2, 1) == mono_kron(mat_i2(), mat_e1()));
  CHECK(vector_generator_rep(2, 2) == mono_kron(mat_i2(), mat_e2()));
  CHECK(vector_generator_rep(2, 3) == mono_kron(mat_e1(), mat_b()));
  CHECK(vector_generator_rep(2, 4) == mono_kron(mat_e2(), mat_b()));
  CHECK(vector_generator_rep(3, 5) ==
        mono_kron(mat_e1(), mono_kron(mat_b(), mat_b())));
}

TEST_CASE("level recursion: old generators gain an identity factor") {
  for (int k = 2; k <= 4; ++k)
    for (int i = 1; i <= 2 * (k - 1); ++i)
      CHECK(vector_generator_rep(k, i) ==
            mono_kron(mat_i2(), vector_generator_rep(k - 1, i)));
}

TEST_CASE("vector generator domain errors") {
  CHECK_THROWS_AS(vector_generator_rep(0, 1), Error);
  CHECK_THROWS_AS(vector_generator_rep(2, 0), Error);
  CHECK_THROWS_AS(vector_generator_rep(2, 5), Error);
}

TEST_CASE("word representations multiply in increasing index order") {
  CHECK(generator_rep(GeneratorIndex{1, 0, false}) ==
        MonomialMatrix::identity(2));
  CHECK(generator_rep(GeneratorIndex{1, 0b11, false}) ==
        mono_matmul(mat_e1(), mat_e2()));
  CHECK(generator_rep(GeneratorIndex{1, 0b11, false}) == mat_e12());
  CHECK(generator_rep(GeneratorIndex{1, 0b01, true}) ==
        scalar_mul(unit_minus_one, mat_e1()));
  CHECK(generator_rep(GeneratorIndex{2, 0b1010, false}) ==
        mono_matmul(vector_generator_rep(2, 2), vector_generator_rep(2, 4)));
}

TEST_CASE("every word representation is monomial with a pure type") {
  for (int k = 1; k <= 4; ++k) {
    for (std::uint32_t mask = 0; mask < (1u << (2 * k)); ++mask) {
      const MonomialMatrix rep = generator_rep(GeneratorIndex{k, mask, false});
      CHECK(rep.well_formed());
      CHECK_NOTHROW(type_of(rep)); // never mixes {1,-1} with {i,-i}
    }
  }
}

TEST_CASE("clifford relations hold through level five") {
  for (int k = 1; k <= 5; ++k) {
    const CheckReport r = clifford_relations_check(k);
    CHECK(r.ok());
    // 2k square relations plus one anticommutation pair per i < j.
    CHECK(r.checks == static_cast<std::uint64_t>(2 * k) +
                          static_cast<std::uint64_t>(2 * k) * (2 * k - 1) / 2);
  }
  CHECK_THROWS_AS(clifford_relations_check(0), Error);
  CHECK_THROWS_AS(clifford_relations_check(max_level + 1), Error);
}

TEST_CASE("labels render and parse") {
  CHECK(generator_label(GeneratorIndex{2, 0, false}) == "e0");
  CHECK(generator_label(GeneratorIndex{2, 0b1001, false}) == "e14");
  CHECK(generator_label(GeneratorIndex{2, 0b0001, true}) == "-e1");
  CHECK(generator_label(GeneratorIndex{5, (1u << 2) | (1u << 9), false}) ==
        "e3_10");
  for (int k = 1; k <= 3; ++k) {
    for (std::uint32_t mask = 0; mask < (1u << (2 * k)); ++mask) {
      for (bool neg : {false, true}) {
        const GeneratorIndex g{k, mask, neg};
        CHECK(parse_generator_label(generator_label(g), k) == g);
      }
    }
  }
  CHECK(parse_generator_label("e", 2) == GeneratorIndex{2, 0, false});
  CHECK(parse_generator_label("e3_10", 5) ==
        GeneratorIndex{5, (1u << 2) | (1u << 9), false});
  CHECK_THROWS_AS(parse_generator_label("x1", 2), Error);
  CHECK_THROWS_AS(parse_generator_label("e13", 1), Error);
  CHECK_THROWS_AS(parse_generator_label("e21", 2), Error);
  CHECK_THROWS_AS(parse_generator_label("e11", 2), Error);
  CHECK_THROWS_AS(parse_generator_label("e01", 2), Error);
}

TEST_CASE("weights and index lists") {
  const GeneratorIndex g{3, 0b101001, false};
  CHECK(g.weight() == 3);
  CHECK(g.indices() == std::vector<int>{1, 4, 6});
  CHECK(GeneratorIndex{3, 0, false}.weight() == 0);
}

TEST_CASE("signed word enumeration") {
  for (int k = 1; k <= 3; ++k) {
    const auto words = enumerate_gamma_hat(k);
    CHECK(words.size() == (std::size_t{2} << (2 * k)));
    CHECK(words.front() == GeneratorIndex{k, 0, false});
    // Masks ascend within each sign block; positives come first.
    const std::size_t half = words.size() / 2;
    for (std::size_t t = 0; t < words.size(); ++t) {
      CHECK(words[t].negative == (t >= half));
      CHECK(words[t].mask == (t % half));
    }
  }
  CHECK_THROWS_AS(enumerate_gamma_hat(0), Error);
}

TEST_CASE("lifting shifts indices by two and pads the representation") {
  for (int k = 1; k <= 4; ++k) {
    for (std::uint32_t mask = 0; mask < (1u << (2 * k)); ++mask) {
      const GeneratorIndex g{k, mask, false};
      const auto lifts = lift_generator(g); // throws if the pad identity fails
      for (std::uint32_t prefix = 0; prefix < 4; ++prefix) {
        CHECK(lifts[prefix].k == k + 1);
        CHECK(lifts[prefix].mask == ((mask << 2) | prefix));
        CHECK_FALSE(lifts[prefix].negative);
      }
    }
  }
  CHECK_THROWS_AS(lift_generator(GeneratorIndex{1, 1, true}), Error);
}

TEST_CASE("squares of words follow the weight rule") {
  // (e_mu)^2 = (-1)^(w(w+1)/2) I for |mu| = w: the sign pattern +,-,-,+
  // repeating with period four in w.
  for (int k = 1; k <= 3; ++k) {
    const MonomialMatrix id = MonomialMatrix::identity(1 << k);
    const MonomialMatrix minus_id = scalar_mul(unit_minus_one, id);
    for (std::uint32_t mask = 0; mask < (1u << (2 * k)); ++mask) {
      const MonomialMatrix rep = generator_rep(GeneratorIndex{k, mask, false});
      const int w = GeneratorIndex{k, mask, false}.weight();
      const bool plus = (w * (w + 1) / 2) % 2 == 0;
      CHECK(mono_matmul(rep, rep) == (plus ? id : minus_id));
    }
  }
}
