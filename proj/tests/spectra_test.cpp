#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "drg/spectra.hpp"
#include "oracles.hpp"

using namespace drg;

namespace {

std::vector<double> approx(const Spectrum& s) {
  std::vector<double> out;
  for (auto& e : s.eigs) out.push_back(e.approx());
  return out;
}

Rational mult_exact(const Spectrum& s, int i) {
  EXPECT_TRUE(s.mults[i].exact());
  return s.mults[i].value.lo();
}

// Small feasible arrays drawn from known families plus a few sporadic ones.
std::vector<IntersectionArray> sample_arrays() {
  return {
      parse_array("{3,2;1,1}"),           // Petersen
      parse_array("{2,1;1,2}"),           // C4
      parse_array("{2,1;1,1}"),           // C5
      parse_array("{2,1,1;1,1,2}"),       // C6
      parse_array("{2,1,1;1,1,1}"),       // C7
      parse_array("{6,4,2;1,2,3}"),       // H(3,3)
      parse_array("{9,6,3;1,2,3}"),       // H(3,4)
      parse_array("{3,2,1;1,2,3}"),       // cube
      parse_array("{6,2;1,4}"),           // J(5,2)
      parse_array("{6,3;1,2}"),           // Shrikhande / H(2,4)
      parse_array("{12,6,2;1,4,9}"),      // J(7,3)
      parse_array("{18,8;1,9}"),          // J_2(4,2)
      parse_array("{34,16;1,4}"),         // J(19,2)
      parse_array("{36,25,16;1,4,18}"),   // folded J(12,6)
      parse_array("{4,3,3;1,1,2}"),       // odd graph O_4
      parse_array("{3,2,2;1,1,3}"),       // Heawood graph
      parse_array("{4,3,3;1,1,4}"),       // incidence graph of PG(2,3)
      parse_array("{5,4,1,1;1,1,4,5}"),   // Wells graph
      parse_array("{3,2,1,1,1;1,1,1,2,3}"),  // dodecahedron
      parse_array("{3,2,2,2,1,1,1;1,1,1,1,1,1,3}"),  // Biggs-Smith graph
      parse_array("{3,2,2,2,2,1,1,1;1,1,1,1,2,2,2,3}"),  // Foster graph
  };
}

}  // namespace

TEST(CharPoly, PetersenExpansion) {
  auto p = char_poly(parse_array("{3,2;1,1}"));
  // (x-3)(x-1)(x+2) = x^3 - 2x^2 - 5x + 6
  EXPECT_EQ(p, Polynomial({Rational(6), Rational(-5), Rational(-2), Rational(1)}));
  for (int r : {3, 1, -2}) EXPECT_EQ(p(Rational(r)), 0);
}

TEST(CharPoly, RootsMatchNumericOracle) {
  for (const auto& ia : sample_arrays()) {
    if (!is_feasible(ia)) continue;
    auto p = char_poly(ia);
    EXPECT_EQ(p.degree(), ia.diameter() + 1);
    EXPECT_TRUE(p.has_integer_coeffs());
    EXPECT_EQ(p.leading(), 1);
    EXPECT_EQ(p(Rational(ia.valency())), 0) << format_array(ia);
    auto roots = oracle::intersection_matrix_eigenvalues(ia);
    auto spec = eigenvalues(ia);
    auto got = approx(spec);
    ASSERT_EQ(got.size(), roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) EXPECT_NEAR(got[i], roots[i], 1e-9) << format_array(ia);
  }
}

TEST(EigenvaluesBelow, CountsMatchNumericOracle) {
  for (const auto& ia : sample_arrays()) {
    if (!is_feasible(ia)) continue;
    auto roots = oracle::intersection_matrix_eigenvalues(ia);
    for (int x = -static_cast<int>(ia.valency()) - 2; x <= ia.valency() + 1; ++x) {
      // strict count; integer roots sit exactly on x and must not be counted
      int want = 0;
      for (double r : roots) want += r < x - 1e-9;
      EXPECT_EQ(eigenvalues_below(ia, Rational(x)), want) << format_array(ia) << " x=" << x;
    }
  }
  EXPECT_EQ(eigenvalues_below(parse_array("{3,2;1,1}"), Rational(-2)), 0);
  EXPECT_EQ(eigenvalues_below(parse_array("{3,2,1;1,2,3}"), Rational(-2)), 1);
}

TEST(Eigenvalues, Petersen) {
  auto s = eigenvalues(parse_array("{3,2;1,1}"));
  ASSERT_EQ(s.eigs.size(), 3u);
  EXPECT_TRUE(s.all_integer());
  EXPECT_EQ(s.eigs[0].integer_value(), 3);
  EXPECT_EQ(s.eigs[1].integer_value(), 1);
  EXPECT_EQ(s.eigs[2].integer_value(), -2);
  EXPECT_EQ(mult_exact(s, 0), 1);
  EXPECT_EQ(mult_exact(s, 1), 5);
  EXPECT_EQ(mult_exact(s, 2), 4);
}

TEST(Eigenvalues, C4AndH33) {
  auto c4 = eigenvalues(parse_array("{2,1;1,2}"));
  EXPECT_EQ(c4.eigs[0].integer_value(), 2);
  EXPECT_EQ(c4.eigs[1].integer_value(), 0);
  EXPECT_EQ(c4.eigs[2].integer_value(), -2);

  auto h = eigenvalues(parse_array("{6,4,2;1,2,3}"));
  std::vector<int> want{6, 3, 0, -3}, mult{1, 6, 12, 8};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(h.eigs[i].integer_value(), want[i]);
    EXPECT_EQ(mult_exact(h, i), mult[i]);
  }
}

TEST(Eigenvalues, H34) {
  auto h = eigenvalues(parse_array("{9,6,3;1,2,3}"));
  std::vector<int> want{9, 5, 1, -3}, mult{1, 9, 27, 27};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(h.eigs[i].integer_value(), want[i]);
    EXPECT_EQ(mult_exact(h, i), mult[i]);
  }
}

TEST(Eigenvalues, PentagonIrrational) {
  auto ia = parse_array("{2,1;1,1}");
  auto s = eigenvalues(ia);
  ASSERT_EQ(s.eigs.size(), 3u);
  EXPECT_EQ(s.eigs[0].integer_value(), 2);
  EXPECT_FALSE(s.eigs[1].is_exact());
  EXPECT_FALSE(s.eigs[2].is_exact());
  const double phi = (std::sqrt(5.0) - 1) / 2;
  EXPECT_NEAR(s.eigs[1].approx(), phi, 1e-12);
  EXPECT_NEAR(s.eigs[2].approx(), -1 - phi, 1e-12);
  // isolating intervals: width <= tol, disjoint
  EXPECT_LE(s.eigs[1].interval().width(), default_tolerance());
  EXPECT_LT(s.eigs[2].interval().hi(), s.eigs[1].interval().lo());
  EXPECT_EQ(s.theta_min().compare(Rational(-2)), 1);
  // multiplicities are 2 and 2 (enclosures)
  EXPECT_EQ(*s.mults[1].integer(), 2);
  EXPECT_EQ(*s.mults[2].integer(), 2);
  EXPECT_TRUE(trace_identities(ia, s).holds);
}

TEST(Eigenvalues, CustomToleranceAndPrecondition) {
  auto s = eigenvalues(parse_array("{2,1;1,1}"), decimal_tolerance(25));
  EXPECT_LE(s.eigs[1].interval().width(), decimal_tolerance(25));
  EXPECT_THROW(eigenvalues(parse_array("{3,3;1,1}")), PreconditionError);
  EXPECT_THROW(eigenvalues(parse_array("{2,1;1,1}"), Rational(0)), PreconditionError);
}

TEST(StandardSequence, HandRecurrence) {
  auto ia = parse_array("{3,2;1,1}");
  auto s = standard_sequence(ia, Rational(-2));
  EXPECT_EQ(s.u[0], RationalInterval(Rational(1)));
  EXPECT_EQ(s.u[1], RationalInterval(Rational(-2, 3)));
  EXPECT_EQ(s.u[2], RationalInterval(Rational(1, 6)));

  auto ones = standard_sequence(ia, Rational(3));
  for (auto& u : ones.u) EXPECT_EQ(u, RationalInterval(Rational(1)));

  auto s1 = standard_sequence(ia, Rational(1));
  EXPECT_EQ(s1.u[1], RationalInterval(Rational(1, 3)));
  EXPECT_EQ(s1.u[2], RationalInterval(Rational(-1, 3)));
}

TEST(StandardSequence, RecurrenceHoldsOnRandomRationals) {
  std::mt19937 rng(7);
  for (const auto& ia : sample_arrays()) {
    for (int t = 0; t < 5; ++t) {
      Rational theta(int(rng() % 41) - 20, 1 + int(rng() % 7));
      auto s = standard_sequence(ia, theta);
      EXPECT_EQ(s.u[0].lo(), 1);
      EXPECT_EQ(s.u[1].lo(), theta / ia.valency());
      for (int i = 1; i < ia.diameter(); ++i) {
        Rational lhs = Rational(ia.c(i)) * s.u[i - 1].lo() + Rational(ia.a(i)) * s.u[i].lo() +
                       Rational(ia.b(i)) * s.u[i + 1].lo();
        EXPECT_EQ(lhs, theta * s.u[i].lo());
      }
    }
  }
}

TEST(Multiplicity, HandComputation) {
  auto ia = parse_array("{3,2;1,1}");
  EXPECT_EQ(multiplicity(ia, Eigenvalue::integer(1)).value.lo(), 5);
  EXPECT_EQ(multiplicity(ia, Eigenvalue::integer(3)).value.lo(), 1);
  EXPECT_EQ(multiplicity(ia, Eigenvalue::integer(-2)).value.lo(), 4);
}

TEST(Multiplicity, ConsistencyTripwire) {
  for (const auto& ia : sample_arrays()) {
    auto s = eigenvalues(ia);
    auto d = derive(ia);
    for (std::size_t i = 0; i < s.eigs.size(); ++i) {
      if (!s.eigs[i].is_exact()) continue;
      auto seq = standard_sequence(ia, s.eigs[i]);
      Rational w = 0;
      for (std::size_t j = 0; j < seq.u.size(); ++j) w += Rational(d.kseq[j]) * seq.u[j].lo() * seq.u[j].lo();
      EXPECT_EQ(w * s.mults[i].value.lo(), Rational(d.n));
    }
  }
}

TEST(Multiplicity, MatchesDoubleOracle) {
  for (const auto& ia : sample_arrays()) {
    auto s = eigenvalues(ia);
    for (std::size_t i = 0; i < s.eigs.size(); ++i)
      EXPECT_NEAR(to_double(s.mults[i].value.midpoint()),
                  oracle::multiplicity_double(ia, s.eigs[i].approx()), 1e-6)
          << format_array(ia) << " theta_" << i;
  }
}

TEST(SignChanges, Examples) {
  auto p = parse_array("{3,2;1,1}");
  EXPECT_EQ(sign_changes(standard_sequence(p, Rational(-2))), 2);
  EXPECT_EQ(sign_changes(standard_sequence(p, Rational(3))), 0);
  // H(3,3), theta = 0: u = (1, 0, -1/4, 1/4); zero skipped, two changes (theta_2)
  auto h = parse_array("{6,4,2;1,2,3}");
  auto seq = standard_sequence(h, Rational(0));
  EXPECT_EQ(seq.u[1].lo(), 0);
  EXPECT_EQ(seq.u[2].lo(), Rational(-1, 4));
  EXPECT_EQ(seq.u[3].lo(), Rational(1, 4));
  EXPECT_EQ(sign_changes(seq), 2);
}

TEST(SignChanges, IthEigenvalueHasIChanges) {
  for (const auto& ia : sample_arrays()) {
    auto s = eigenvalues(ia);
    for (std::size_t i = 0; i < s.eigs.size(); ++i)
      EXPECT_EQ(sign_changes(standard_sequence(ia, s.eigs[i])), int(i)) << format_array(ia) << " i=" << i;
  }
}

TEST(SignChanges, ExactZeroAtIrrationalEigenvalue) {
  // C8 has eigenvalue sqrt(2) whose standard sequence passes through zero
  // (u_i = cos(i*pi/4)): 1, 0.707, 0, -0.707, -1 -> only nonzero neighbours count.
  auto c8 = parse_array("{2,1,1,1;1,1,1,2}");
  auto s = eigenvalues(c8);
  ASSERT_FALSE(s.eigs[1].is_exact());
  auto seq = standard_sequence(c8, s.eigs[1]);
  EXPECT_EQ(seq.theta.sign_of(seq.polys[2]), 0);
  EXPECT_EQ(sign_changes(seq), 1);
  EXPECT_EQ(sign_changes(standard_sequence(c8, s.eigs[3])), 3);
}

TEST(TraceIdentities, HoldOnSamples) {
  for (const auto& ia : sample_arrays()) {
    auto s = eigenvalues(ia);
    EXPECT_TRUE(trace_identities(ia, s).holds) << format_array(ia);
    EXPECT_TRUE(s.integral_multiplicities()) << format_array(ia);
    EXPECT_EQ(s.eigs[0].integer_value(), ia.valency());
  }
}

TEST(EigenvalueSign, ExactEqualityAtIrrational) {
  // theta^2 = 2 exactly at theta = sqrt(2): the gcd test must report zero.
  auto s = eigenvalues(parse_array("{2,1,1,1;1,1,1,2}"));
  const Polynomial f({Rational(-2), Rational(0), Rational(1)});
  EXPECT_EQ(s.eigs[1].sign_of(f), 0);
  EXPECT_EQ(s.eigs[1].compare(Rational(1)), 1);
  EXPECT_EQ(s.eigs[1].compare(Rational(3, 2)), -1);
}

TEST(LargeEigenvalue, Lemma31Examples) {
  auto cube = parse_array("{3,2,1;1,2,3}");
  EXPECT_EQ(large_eigenvalue_check(eigenvalues(cube), cube), std::optional<bool>(true));
  auto c6 = parse_array("{2,1,1;1,1,2}");
  EXPECT_EQ(large_eigenvalue_check(eigenvalues(c6), c6), std::optional<bool>(true));
  auto pet = parse_array("{3,2;1,1}");
  EXPECT_FALSE(large_eigenvalue_check(eigenvalues(pet), pet).has_value());
}

TEST(LargeEigenvalue, HoldsForEveryDiameterThreeSample) {
  for (const auto& ia : sample_arrays()) {
    if (ia.diameter() < 3) continue;
    EXPECT_EQ(large_eigenvalue_check(eigenvalues(ia), ia), std::optional<bool>(true)) << format_array(ia);
  }
}

TEST(ValencyBound, Lemma32Examples) {
  EXPECT_TRUE(valency_bound_check(parse_array("{3,2;1,1}"), 2).holds);
  auto h = parse_array("{6,4,2;1,2,3}");
  EXPECT_TRUE(valency_bound_check(h, 3).holds);
  auto vb = valency_bound_check(h, 2);
  EXPECT_FALSE(vb.holds);
  EXPECT_EQ(vb.cap, 6);
  EXPECT_THROW(valency_bound_check(h, 1), PreconditionError);
}

TEST(ValencyBound, ClosedFormU2MatchesRecurrence) {
  for (const auto& ia : sample_arrays()) {
    auto s = eigenvalues(ia);
    auto vb = valency_bound_check(ia, s, 2);
    if (!vb.u2_theta_min) continue;
    auto seq = standard_sequence(ia, s.theta_min());
    // both enclosures of the same number must overlap
    EXPECT_LE(vb.u2_theta_min->lo(), seq.u[2].hi()) << format_array(ia);
    EXPECT_GE(vb.u2_theta_min->hi(), seq.u[2].lo()) << format_array(ia);
    if (s.theta_min().is_exact()) EXPECT_EQ(*vb.u2_theta_min, seq.u[2]);
    // u_2(theta_D) > 0 (D sign changes)
    EXPECT_GT(vb.u2_theta_min->lo(), 0) << format_array(ia);
  }
}
