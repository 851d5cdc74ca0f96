#include "conglift/io/json.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace conglift;
using namespace testing_support;

namespace {

const IntegerRing Z;

Matrix<Int> zm(std::vector<std::vector<Int>> rows) { return Matrix<Int>::from_rows(rows); }

std::vector<Int> iv(std::initializer_list<std::int64_t> xs) {
  std::vector<Int> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

bool congruent(const std::vector<Int> &a, const std::vector<Int> &b, const Int &n) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!divides(Z, n, Int(a[i] - b[i]))) return false;
  return a.size() == b.size();
}

} // namespace

TEST(ResidueLift, Examples) {
  EXPECT_EQ(lift_unital_residue(int_mod(6), iv({1, 0})), iv({1, 0}));
  const auto a = lift_unital_residue(int_mod(35), iv({2, 3}));
  EXPECT_TRUE(congruent(a, iv({2, 3}), 35));
  EXPECT_EQ(gcd_all<IntegerRing>(Z, a), 1);
  const auto b = lift_unital_residue(int_mod(3), iv({2, 2}));
  EXPECT_TRUE(congruent(b, iv({2, 2}), 3));
  EXPECT_EQ(gcd_all<IntegerRing>(Z, b), 1);
}

TEST(ResidueLift, RejectsNonUnital) {
  try {
    lift_unital_residue(int_mod(6), iv({2, 4}));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::not_unital);
  }
}

TEST(ResidueLift, ExhaustiveSmallModuli) {
  for (std::int64_t n = 2; n <= 30; ++n) {
    const auto q = int_mod(n);
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b = 0; b < n; ++b)
        for (std::int64_t c : std::vector<std::int64_t>{0, 1, n - 1}) {
          if (std::gcd(std::gcd(std::gcd(a, b), c), n) != 1) continue;
          const auto x = lift_unital_residue(q, iv({a, b, c}));
          ASSERT_TRUE(congruent(x, iv({a, b, c}), n));
          ASSERT_EQ(gcd_all<IntegerRing>(Z, x), 1);
        }
  }
}

TEST(ResidueLift, Polynomials) {
  const PolyRing f(3);
  const PolyMod q(f, f.make({0, 0, 1}));
  const std::vector<Poly> row{f.x(), f.x()}; // (x, x) with x^2: unital? no
  EXPECT_THROW(lift_unital_residue(q, row), Error);
  const std::vector<Poly> ok{f.x(), f.make({1, 1})};
  const auto l = lift_unital_residue(q, ok);
  EXPECT_TRUE(f.is_unit(gcd_all<PolyRing>(f, l)));
  EXPECT_EQ(q.reduce(l[0]), ok[0]);
  EXPECT_EQ(q.reduce(l[1]), ok[1]);
}

TEST(CompleteSl, Examples) {
  EXPECT_EQ(complete_row_sl(Z, iv({1, 0, 0}), 0), identity(Z, 3));
  EXPECT_EQ(complete_row_sl(Z, iv({0, 0, 1}), 2), identity(Z, 3));
  const auto m = complete_row_sl(Z, iv({2, 3}), 0);
  EXPECT_EQ(det(Z, m), 1);
  EXPECT_EQ(m.row_vector(0), iv({2, 3}));
  const auto m3 = complete_row_sl(Z, iv({6, 10, 15}), 0);
  EXPECT_EQ(det(Z, m3), 1);
  EXPECT_EQ(m3.row_vector(0), iv({6, 10, 15}));
  EXPECT_THROW(complete_row_sl(Z, iv({4, 6}), 0), Error);
}

TEST(CompleteSl, RandomRowsAllPositions) {
  Sampler rng(41);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng.below(6);
    auto row = random_unimodular(rng, n, 1000);
    if (n == 1) row = {Int(rng.below(2) ? 1 : -1)};
    const std::size_t pos = rng.below(n);
    if (n == 1 && row[0] == -1) {
      EXPECT_THROW(complete_row_sl(Z, row, pos), Error);
      continue;
    }
    const auto m = complete_row_sl(Z, row, pos);
    ASSERT_EQ(det(Z, m), 1);
    ASSERT_EQ(m.row_vector(pos), row);
  }
}

TEST(CompleteSp, Examples) {
  EXPECT_EQ(complete_row_sp(Z, iv({1, 0}), 0), identity(Z, 2));
  const auto m = complete_row_sp(Z, iv({2, 3}), 0);
  EXPECT_TRUE(is_symplectic(Z, m));
  EXPECT_EQ(m.row_vector(0), iv({2, 3}));
  EXPECT_EQ(complete_row_sp(Z, iv({1, 0, 0, 0}), 0), identity(Z, 4));
  EXPECT_THROW(complete_row_sp(Z, iv({2, 4}), 0), Error);
  EXPECT_THROW(complete_row_sp(Z, iv({1, 0, 0}), 0), Error);
}

TEST(CompleteSp, RandomRowsAllPositions) {
  Sampler rng(42);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t k = 1 + rng.below(3);
    const auto row = random_unimodular(rng, 2 * k, 1000);
    const std::size_t pos = rng.below(2 * k);
    const auto m = complete_row_sp(Z, row, pos);
    ASSERT_TRUE(is_symplectic(Z, m));
    ASSERT_EQ(m.row_vector(pos), row);
  }
}

TEST(SapLiftSl, Examples) {
  const auto q = int_mod(7);
  EXPECT_EQ(sap_lift_sl(q, identity(q, 3)), identity(Z, 3));
  const auto q5 = int_mod(5);
  const auto t = sap_lift_sl(q5, reduce(q5, zm({{0, -1}, {1, 0}})));
  EXPECT_EQ(det(Z, t), 1);
  EXPECT_EQ(reduce(q5, t), reduce(q5, zm({{0, -1}, {1, 0}})));
  EXPECT_THROW(sap_lift_sl(q5, reduce(q5, zm({{2, 0}, {0, 2}}))), Error);
}

TEST(SapLiftSl, ExhaustiveSl2) {
  for (std::int64_t n : {2, 3}) {
    const auto q = int_mod(n);
    const auto group = enumerate_group(q, GroupKind::SL, 1, 1'000'000);
    ASSERT_EQ(group.size(), oracle::count_sl(2, n));
    for (const auto &a : group) {
      const auto b = sap_lift_sl(q, a);
      ASSERT_EQ(det(Z, b), 1);
      ASSERT_EQ(reduce(q, b), a);
    }
  }
}

TEST(SapLiftSl, RandomSl3Mod10) {
  Sampler rng(310);
  const auto q = int_mod(10);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_sl_mod(rng, 3, 10);
    const auto b = sap_lift_sl(q, a);
    ASSERT_EQ(det(Z, b), 1);
    ASSERT_EQ(reduce(q, b), a);
  }
}

TEST(SapLiftSp, Examples) {
  const auto q = int_mod(3);
  EXPECT_EQ(sap_lift_sp(q, identity(q, 4)), identity(Z, 4));
  const auto om = reduce(q, symplectic_form(Z, 1));
  const auto b = sap_lift_sp(q, om);
  EXPECT_TRUE(is_symplectic(Z, b));
  EXPECT_EQ(reduce(q, b), om);
  EXPECT_THROW(sap_lift_sp(q, reduce(q, zm({{2, 0}, {0, 1}}))), Error);
}

TEST(SapLiftSp, RandomSp4Mod2) {
  const auto q = int_mod(2);
  const auto group = enumerate_group(q, GroupKind::SP, 2, 1'000'000);
  ASSERT_EQ(group.size(), oracle::count_sp(2, 2));
  Sampler rng(4);
  for (int t = 0; t < 50; ++t) {
    const auto &a = group[rng.below(group.size())];
    const auto b = sap_lift_sp(q, a);
    ASSERT_TRUE(is_symplectic(Z, b));
    ASSERT_EQ(reduce(q, b), a);
  }
}

TEST(SapLiftSp, Sp4Mod6AndSp6Mod3) {
  // random symplectic matrices from products of integral generators
  Sampler rng(46);
  for (auto [k, n] : std::vector<std::pair<std::size_t, std::int64_t>>{{2, 6}, {3, 3}, {2, 9}}) {
    const auto q = int_mod(n);
    for (int t = 0; t < 30; ++t) {
      auto m = identity(Z, 2 * k);
      for (int f = 0; f < 10; ++f) {
        const auto row = random_unimodular(rng, 2 * k, 20);
        m = multiply(Z, m, complete_row_sp(Z, row, rng.below(2 * k)));
      }
      const auto a = reduce(q, m);
      const auto b = sap_lift_sp(q, a);
      ASSERT_TRUE(is_symplectic(Z, b));
      ASSERT_EQ(reduce(q, b), a);
    }
  }
}

TEST(CrtMatrix, Examples) {
  const auto q2 = int_mod(2), q3 = int_mod(3);
  {
    std::vector<Matrix<Int>> ts{zm({{1, 1}, {0, 1}})};
    std::vector<IntMod> ms{q2};
    auto [q, c] = crt_matrix<IntegerRing>(ts, ms);
    EXPECT_EQ(q.modulus(), 2);
    EXPECT_EQ(c, ts[0]);
  }
  {
    std::vector<Matrix<Int>> ts{identity(q2, 2), identity(q3, 2)};
    std::vector<IntMod> ms{q2, q3};
    auto [q, c] = crt_matrix<IntegerRing>(ts, ms);
    EXPECT_EQ(q.modulus(), 6);
    EXPECT_EQ(c, identity(q, 2));
  }
  {
    std::vector<Matrix<Int>> ts{zm({{1, 1}, {0, 1}}), identity(q3, 2)};
    std::vector<IntMod> ms{q2, q3};
    auto [q, c] = crt_matrix<IntegerRing>(ts, ms);
    EXPECT_EQ(reduce(q2, c), ts[0]);
    EXPECT_EQ(reduce(q3, c), ts[1]);
  }
}

TEST(CrtMatrix, Errors) {
  std::vector<Matrix<Int>> ts{identity(Z, 2), identity(Z, 3)};
  std::vector<IntMod> ms{int_mod(2), int_mod(3)};
  EXPECT_THROW(crt_matrix<IntegerRing>(ts, ms), Error);
  std::vector<Matrix<Int>> ts2{identity(Z, 2), identity(Z, 2)};
  std::vector<IntMod> ms2{int_mod(4), int_mod(6)};
  EXPECT_THROW(crt_matrix<IntegerRing>(ts2, ms2), Error);
}

TEST(OmegaLift, StandardRowsGiveIdentity) {
  const auto c = omega_lift({iv({1, 0}), iv({0, 1})}, iv({2, 3}), 5);
  EXPECT_TRUE(verify_certificate(c));
  EXPECT_EQ(c.b, identity(Z, 2));
}

TEST(OmegaLift, ExampleRows) {
  const auto c = omega_lift({iv({1, 2}), iv({3, 1})}, iv({2, 3}), 5);
  EXPECT_TRUE(c.verdicts.all());
  EXPECT_TRUE(verify_certificate(c));
  EXPECT_TRUE(congruent(c.b.row_vector(0), iv({1, 2}), 2));
  EXPECT_TRUE(congruent(c.b.row_vector(1), iv({3, 1}), 3));
  EXPECT_TRUE(is_identity(int_mod(5), reduce(int_mod(5), c.b)));
}

TEST(OmegaLift, Errors) {
  auto code = [](auto &&f) {
    try {
      f();
    } catch (const Error &e) {
      return e.code();
    }
    return Errc::parse_error;
  };
  EXPECT_EQ(code([] { omega_lift({iv({1, 2}), iv({3, 1})}, iv({2, 4}), 5); }),
            Errc::not_comaximal);
  EXPECT_EQ(code([] { omega_lift({iv({1, 2}), iv({3, 1})}, iv({2, 3}), 9); }),
            Errc::not_comaximal);
  EXPECT_EQ(code([] { omega_lift({iv({2, 4}), iv({3, 1})}, iv({2, 3}), 5); }),
            Errc::not_unital);
  EXPECT_EQ(code([] { omega_lift({iv({1, 2}), iv({3, 1})}, iv({0, 3}), 5); }),
            Errc::usc_hypothesis);
  EXPECT_EQ(code([] { omega_lift({iv({1, 2})}, iv({2, 3}), 5); }), Errc::shape_mismatch);
}

TEST(OmegaLift, UnitIdealIsNoConstraint) {
  const auto c = omega_lift({iv({5, 7}), iv({3, 1})}, iv({1, 2}), 3);
  EXPECT_TRUE(verify_certificate(c));
  const auto d = omega_lift({iv({5, 7}), iv({3, 1})}, iv({1, 1}), 1);
  EXPECT_EQ(d.b, identity(Z, 2));
  EXPECT_TRUE(verify_certificate(d));
}

TEST(OmegaLift, ExhaustivePfProducts) {
  // every target of small PF products, |product| <= 200
  struct Case {
    std::vector<Int> ideals;
    Int level;
  };
  const std::vector<Case> cases{{iv({2, 3}), 5}, {iv({4, 5}), 3}, {iv({7, 9}), 2},
                                {iv({2, 3, 1}), 5}};
  for (const auto &c : cases) {
    const std::size_t n = c.ideals.size();
    const auto r = surjectivity_run(GroupKind::SL, n - 1, c.ideals, c.level,
                                    {WeightVector::ones(n)});
    ASSERT_LE(r.product_size, 200u);
    ASSERT_EQ(r.attempted, r.product_size);
    ASSERT_EQ(r.verified, r.attempted);
  }
}

TEST(SigmaLift, Examples) {
  const auto c = sigma_lift({iv({1, 0}), iv({0, 1})}, iv({2, 3}), 5);
  EXPECT_EQ(c.b, identity(Z, 2));
  EXPECT_TRUE(verify_certificate(c));
  const auto d = sigma_lift({iv({1, 2}), iv({1, 3})}, iv({5, 7}), 2);
  EXPECT_TRUE(verify_certificate(d));
  ASSERT_TRUE(d.verdicts.form.has_value());
  EXPECT_TRUE(*d.verdicts.form);
}

TEST(SigmaLift, RandomK2) {
  Sampler rng(25);
  for (int t = 0; t < 25; ++t) {
    std::vector<std::vector<Int>> rows;
    for (int i = 0; i < 4; ++i) rows.push_back(random_unimodular(rng, 4, 50));
    const auto c = sigma_lift(rows, iv({2, 3, 5, 7}), 11);
    ASSERT_TRUE(verify_certificate(c));
    ASSERT_TRUE(is_symplectic(Z, c.b));
    for (std::size_t i = 0; i < 4; ++i)
      ASSERT_TRUE(congruent(c.b.row_vector(i), rows[i], c.ideals[i]));
  }
}

TEST(Certificate, TamperingIsDetected) {
  const auto c = omega_lift({iv({1, 2}), iv({3, 1})}, iv({2, 3}), 5);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      auto bad = c;
      bad.b(i, j) += 1;
      ASSERT_FALSE(verify_certificate(bad));
    }
  auto wrong_row = c;
  wrong_row.rows[1][0] += 1;
  EXPECT_FALSE(verify_certificate(wrong_row));
  auto wrong_shape = c;
  wrong_shape.k = 2;
  EXPECT_FALSE(verify_certificate(wrong_shape));
}

TEST(Certificate, EmptyConstraints) {
  LiftCertificate c;
  c.group = GroupKind::SL;
  c.k = 1;
  c.b = identity(Z, 2);
  c.rows = {iv({1, 0}), iv({0, 1})};
  c.ideals = iv({1, 1});
  c.level = 1;
  EXPECT_TRUE(verify_certificate(c));
}

TEST(Certificate, JsonRoundTrip) {
  const auto c = sigma_lift({iv({1, 2}), iv({1, 3})}, iv({5, 7}), 2);
  const auto j = io::certificate_json(c);
  const auto back = io::certificate_from_json(io::Json::parse(j.dump()));
  EXPECT_EQ(back.b, c.b);
  EXPECT_EQ(back.rows, c.rows);
  EXPECT_EQ(back.verdicts, c.verdicts);
  EXPECT_EQ(io::certificate_json(back).dump(), j.dump());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"group", "k", "B", "rows", "ideals", "level",
                                            "verdicts"}));
}

TEST(CongruenceSubgroups, IntersectionOnRandomWords) {
  Sampler rng(1000);
  const auto q2 = int_mod(2), q3 = int_mod(3), q6 = int_mod(6);
  int in_both = 0;
  for (int t = 0; t < 1000; ++t) {
    auto b = random_sl_z(rng, 2, 6, 4);
    if (t % 3 == 0) {
      // a product of E_ij(6 s) lies in Gamma(6)
      b = identity(Z, 2);
      for (int f = 0; f < 4; ++f)
        apply_right(Z, b, f % 2, 1 - f % 2, Int(6 * rng.between(-3, 3)));
    } else if (t % 3 == 1) {
      // Gamma(2) but usually not Gamma(3)
      b = identity(Z, 2);
      for (int f = 0; f < 4; ++f)
        apply_right(Z, b, f % 2, 1 - f % 2, Int(2 * rng.between(-3, 3)));
    }
    ASSERT_EQ(det(Z, b), 1);
    const bool lhs = is_identity(q2, reduce(q2, b)) && is_identity(q3, reduce(q3, b));
    const bool rhs = is_identity(q6, reduce(q6, b));
    in_both += lhs;
    ASSERT_EQ(lhs, rhs);
  }
  EXPECT_GT(in_both, 0);
}

TEST(CongruenceSubgroups, ComplementFactorization) {
  Sampler rng(50);
  const auto q2 = int_mod(2), q3 = int_mod(3);
  for (int t = 0; t < 50; ++t) {
    const auto b = random_sl_z(rng, 2, 8, 5);
    const auto f = complement_factor(GroupKind::SL, b, 2, 3);
    ASSERT_EQ(multiply(Z, f.y, f.g), b);
    ASSERT_EQ(det(Z, f.y), 1);
    ASSERT_EQ(det(Z, f.g), 1);
    ASSERT_TRUE(is_identity(q2, reduce(q2, f.y)));
    ASSERT_TRUE(is_identity(q3, reduce(q3, f.g)));
  }
}

TEST(CongruenceSubgroups, ComplementFactorizationSymplectic) {
  Sampler rng(51);
  const auto q5 = int_mod(5), q7 = int_mod(7);
  for (int t = 0; t < 20; ++t) {
    auto b = identity(Z, 4);
    for (int f = 0; f < 4; ++f)
      b = multiply(Z, b, complete_row_sp(Z, random_unimodular(rng, 4, 9), rng.below(4)));
    const auto f = complement_factor(GroupKind::SP, b, 5, 7);
    ASSERT_EQ(multiply(Z, f.y, f.g), b);
    ASSERT_TRUE(is_symplectic(Z, f.y) && is_symplectic(Z, f.g));
    ASSERT_TRUE(is_identity(q5, reduce(q5, f.y)));
    ASSERT_TRUE(is_identity(q7, reduce(q7, f.g)));
  }
}
