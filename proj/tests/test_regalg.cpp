#include <gtest/gtest.h>

#include "support.hpp"

using namespace rctest;

namespace {

RatVec rv(std::initializer_list<long long> xs) { return RatVec(xs.begin(), xs.end()); }

/// diag(a1, a2, a3, -a1-a2-a3) in sl4 over the simple coroots.
RatVec a3_from_diag(const RatVec& a) { return {a[0], a[0] + a[1], a[0] + a[1] + a[2]}; }

/// h with e-coordinates (a1, a2, a3) in so7 over the simple coroots of B3.
RatVec b3_from_e(const RatVec& a) { return {a[0], a[0] + a[1], (a[0] + a[1] + a[2]) / Rational(2)}; }

ToralSubspace sub(int rank, std::initializer_list<RatVec> rows) { return ToralSubspace(rank, RatMatrix(rows)); }

RootSet pm(const RootSystem& rs, int i) {
  RootSet s;
  s.insert(i);
  s.insert(rs.neg(i));
  return s;
}

}  // namespace

TEST(LinearAlgebra, RrefAndSpans) {
  const RatMatrix m{rv({2, 4, 6}), rv({1, 2, 3}), rv({0, 1, 1})};
  EXPECT_EQ(matrix_rank(m), 2);
  const RatMatrix r = rref(m);
  EXPECT_EQ(r, (RatMatrix{rv({1, 0, 1}), rv({0, 1, 1})}));
  EXPECT_TRUE(span_equal({rv({1, 1, 0})}, {rv({-3, -3, 0})}));
  EXPECT_FALSE(span_equal({rv({1, 1, 0})}, {rv({1, 0, 0})}));
  EXPECT_TRUE(in_span(m, rv({1, 3, 4})));
  EXPECT_FALSE(in_span(m, rv({0, 0, 1})));
  EXPECT_THROW(ToralSubspace(3, {rv({1, 0, 0}), rv({2, 0, 0})}), Error);
  EXPECT_THROW(ToralSubspace(3, {rv({1, 0})}), Error);
}

TEST(RegularSubalgebra, RequiredCoroots) {
  const auto rs = RootSystem::build(ty("A3"));
  EXPECT_TRUE(required_coroots(rs, rs.positive()).empty());
  const auto req = required_coroots(rs, pm(rs, 0));
  ASSERT_EQ(req.size(), 1u);
  EXPECT_EQ(req[0], rv({1, 0, 0}));
  EXPECT_EQ(matrix_rank(required_coroots(rs, rs.all())), 3);
  EXPECT_TRUE(span_equal(required_coroots(rs, rs.all()), identity_matrix(3)));
}

TEST(RegularSubalgebra, ValidToral) {
  const auto rs = RootSystem::build(ty("A3"));
  EXPECT_TRUE(is_valid_toral(rs, rs.positive(), ToralSubspace(3, {})));
  EXPECT_FALSE(is_valid_toral(rs, pm(rs, 0), sub(3, {rv({0, 1, 0})})));
  EXPECT_TRUE(is_valid_toral(rs, pm(rs, 0), sub(3, {rv({1, 0, 0})})));
}

TEST(RegularSubalgebra, CorootCountMatchesSubsystemRank) {
  for (const char* name : {"A3", "B3", "C3"}) {
    const auto wa = weyl_group(ty(name));
    for (const auto& r : enumerate_symmetric(wa)) {
      const int rank = static_cast<int>(simple_system(wa.roots(), r.rep).size());
      EXPECT_EQ(matrix_rank(required_coroots(wa.roots(), r.rep)), rank) << name;
    }
    // Each A1 class forces one dimension.
    for (const auto& r : enumerate_symmetric(wa))
      if (r.rep.size() == 2) {
        EXPECT_EQ(matrix_rank(required_coroots(wa.roots(), r.rep)), 1);
      }
  }
}

TEST(WeylCartanMatrix, IdentityAndDiagFormulas) {
  const auto a3 = weyl_group(ty("A3"));
  EXPECT_EQ(weyl_cartan_matrix(a3, Perm::identity(a3.roots().size())), identity_matrix(3));
  // s1 swaps the first two diagonal entries.
  const RatMatrix s1 = weyl_cartan_matrix(a3, a3.simple_reflection(0));
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    RatVec a{Rational(static_cast<long long>(rng() % 11) - 5), Rational(static_cast<long long>(rng() % 11) - 5),
             Rational(static_cast<long long>(rng() % 11) - 5)};
    EXPECT_EQ(s1 * a3_from_diag(a), a3_from_diag({a[1], a[0], a[2]}));
  }
  // B3: s3 flips the sign of the third coordinate.
  const auto b3 = weyl_group(ty("B3"));
  const RatMatrix s3 = weyl_cartan_matrix(b3, b3.simple_reflection(2));
  for (int trial = 0; trial < 20; ++trial) {
    RatVec a{Rational(static_cast<long long>(rng() % 11) - 5), Rational(static_cast<long long>(rng() % 11) - 5),
             Rational(static_cast<long long>(rng() % 11) - 5)};
    EXPECT_EQ(s3 * b3_from_e(a), b3_from_e({a[0], a[1], -a[2]}));
  }
}

TEST(WeylCartanMatrix, Homomorphism) {
  std::mt19937_64 rng(99);
  for (const char* name : {"A3", "B3", "C3", "A4", "B4", "C4", "D4", "F4", "G2"}) {
    const auto wa = weyl_group(ty(name));
    for (int trial = 0; trial < 200; ++trial) {
      const Perm u = random_element(wa, rng, 15);
      const Perm v = random_element(wa, rng, 15);
      ASSERT_EQ(weyl_cartan_matrix(wa, u * v), weyl_cartan_matrix(wa, u) * weyl_cartan_matrix(wa, v)) << name;
    }
  }
}

TEST(ToralConjugate, IdentityWitness) {
  const auto wa = weyl_group(ty("A3"));
  const auto t = sub(3, {rv({1, 0, 0}), rv({0, 1, 2})});
  const auto w = toral_conjugate(wa, pm(wa.roots(), 0), t, t);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->is_identity());
}

TEST(ToralConjugate, A3SpecialRowTwo) {
  const auto wa = weyl_group(ty("A3"));
  const auto rows = load_table("a3_table.txt");
  const RootSet t = parse_set(wa.roots(), rows[1].roots);
  const auto t1 = ToralSubspace(3, {a3_from_diag(rv({1, 2, 3}))});
  const auto t2 = ToralSubspace(3, {a3_from_diag(rv({2, 1, 3}))});
  const auto t2b = ToralSubspace(3, {a3_from_diag(rv({1, 3, 2}))});
  const auto w = toral_conjugate(wa, t, t1, t2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, wa.simple_reflection(0));
  EXPECT_TRUE(t1.transformed(weyl_cartan_matrix(wa, *w)) == t2);
  EXPECT_FALSE(toral_conjugate(wa, t, t1, t2b).has_value());
  // Scalar multiples are the same line.
  const auto t3 = ToralSubspace(3, {a3_from_diag(rv({-4, -2, -6}))});
  EXPECT_TRUE(toral_conjugate(wa, t, t1, t3).has_value());
}

TEST(ToralConjugate, B3LongA1) {
  const auto wa = weyl_group(ty("B3"));
  const RootSet t = pm(wa.roots(), 0);
  const auto t1 = ToralSubspace(3, {b3_from_e(rv({1, -1, 0})), b3_from_e(rv({2, 0, -1}))});
  const auto t2 = ToralSubspace(3, {b3_from_e(rv({1, -1, 0})), b3_from_e(rv({2, 0, 1}))});
  ASSERT_TRUE(is_valid_toral(wa.roots(), t, t1));
  const auto w = toral_conjugate(wa, t, t1, t2);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->fixes_set(t));
  EXPECT_TRUE(t1.transformed(weyl_cartan_matrix(wa, *w)) == t2);
  // s3 is one such witness.
  EXPECT_TRUE(t1.transformed(weyl_cartan_matrix(wa, wa.simple_reflection(2))) == t2);
  // Missing the coroot of a1 is rejected.
  EXPECT_THROW(toral_conjugate(wa, t, sub(3, {rv({0, 0, 1})}), t2), Error);
}

TEST(ToralConjugate, AgreesWithElementScan) {
  std::mt19937_64 rng(31);
  const auto wa = weyl_group(ty("B3"));
  const auto& rs = wa.roots();
  for (const auto& r : classify_all(wa).mixed) {
    const RatMatrix req = required_coroots(rs, r.rep);
    const auto base = rref(req);
    // Extend by a random extra vector to a valid toral subspace.
    RatMatrix rows = base;
    RatVec extra{Rational(static_cast<long long>(rng() % 5)), Rational(static_cast<long long>(rng() % 5)), Rational(1)};
    if (!in_span(rows, extra)) rows.push_back(extra);
    const ToralSubspace t1(3, rows);
    const Perm g = random_element(wa, rng);
    const ToralSubspace t2 = t1.transformed(weyl_cartan_matrix(wa, g));
    const auto stab = stabilizer_of_closed_set(wa, r.rep);
    bool brute = false;
    for (const auto& e : stab.elements())
      brute = brute || t1.transformed(weyl_cartan_matrix(wa, e)) == t2;
    const bool valid2 = is_valid_toral(rs, r.rep, t2);
    if (!valid2) continue;
    const auto w = toral_conjugate(wa, r.rep, t1, t2);
    EXPECT_EQ(w.has_value(), brute);
    if (w) {
      EXPECT_TRUE(w->fixes_set(r.rep));
      EXPECT_TRUE(t1.transformed(weyl_cartan_matrix(wa, *w)) == t2);
    }
  }
}

TEST(ToralConjugate, CapExceeded) {
  const auto wa = weyl_group(ty("F4"));
  ::setenv("ROOTCLOSED_ELEMENT_CAP", "100", 1);
  EXPECT_THROW(toral_conjugate(wa, wa.roots().all(), ToralSubspace(4, identity_matrix(4)),
                               ToralSubspace(4, identity_matrix(4))),
               Error);
  ::unsetenv("ROOTCLOSED_ELEMENT_CAP");
}
