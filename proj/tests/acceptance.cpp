// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit when
// anything fails. Invoked as: acceptance <cli-binary> <models-dir>.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "poscones/poscones.hpp"

namespace fs = std::filesystem;
using namespace poscones;

static int failures = 0;

static void criterion(int num, const std::string& label,
                      const std::function<void()>& body) {
  try {
    body();
    std::cout << "PASS  criterion " << num << ": " << label << "\n";
  } catch (const std::exception& e) {
    ++failures;
    std::cout << "FAIL  criterion " << num << ": " << label << " -- "
              << e.what() << "\n";
  }
}

static void check(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

static ZVec zv(std::vector<long long> xs) {
  ZVec v;
  for (auto x : xs) v.push_back(Integer(x));
  return v;
}

static bool same_poly(const FormalChernPoly& a, const FormalChernPoly& b) {
  return (a + Rational(-1) * b).is_zero();
}

static std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <cli-binary> <models-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string models = argv[2];

  criterion(1, "flip-flop threefold reproduction", [&] {
    VarietyModel m = load_model_file(models + "/plandflop.json");
    check(m.kind == ModelKind::proj_bundle_curve, "wrong model kind");
    RingClass xi = RingClass::monomial(m.ring, "xi");
    RingClass f = RingClass::monomial(m.ring, "f");
    check(xi.pow(3).degree() == Rational(-1), "deg xi^3 != -1");
    check((xi.pow(2) * f).degree() == Rational(1), "deg xi^2 f != 1");

    const auto& q = m.bundles.at("Q");
    check(q.total_chern.component(2) ==
              RingClass::monomial(m.ring, "xi^2") +
                  RingClass::monomial(m.ring, "xi*f"),
          "c2(Q) != xi^2 + xi f");

    // Eff_1 (codim 2) is the coordinate cone <xi^2, xi f>
    check(cone_equal(eff_cone(m, 2), hull({zv({1, 0}), zv({0, 1})}, 2)),
          "Eff_1 is not the shipped coordinate cone");
    // dual of Eff_1 gives Nef^1 = <f, xi+f>
    check(cone_equal(nef_cone_from_eff(m, 1), hull({zv({0, 1}), zv({1, 1})}, 2)),
          "Nef^1 from Eff_1 is not <f, xi+f>");
    // filtration recursion gives Nef^2 = <xi f, xi^2 + xi f>
    check(cone_equal(nef_cone_k(m, 2), hull({zv({0, 1}), zv({1, 1})}, 2)),
          "Nef^2 from the recursion is not <xi f, xi^2+xi f>");
    for (int k = 1; k <= 2; ++k)
      check(cone_equal(nef_cone_from_eff(m, k), nef_cone_k(m, k)),
            "the two nef computations disagree at k=" + std::to_string(k));
  });

  criterion(2, "Grassmannian duality and Giambelli", [&] {
    for (auto [k, n] :
         std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}}) {
      auto g = make_grassmannian(k, n);
      BundleEnv env = tautological_bundles(g);
      const int dim = g.ring->dimension();
      for (int c = 0; c <= dim; ++c) {
        QMatrix p = pairing_matrix(g.ring, c);
        const std::size_t rows = p.size();
        const std::size_t cols = rows ? p[0].size() : 0;
        check(rows == static_cast<std::size_t>(g.ring->basis_size(c)) &&
                  cols == static_cast<std::size_t>(g.ring->basis_size(dim - c)),
              "pairing matrix shape");
        std::vector<int> colsum(cols, 0);
        for (std::size_t i = 0; i < rows; ++i) {
          int rowsum = 0;
          for (std::size_t j = 0; j < cols; ++j) {
            check(p[i][j] == 0 || p[i][j] == 1, "pairing entry not 0/1");
            if (p[i][j] == 1) {
              ++rowsum;
              ++colsum[j];
            }
          }
          check(rowsum == 1, "pairing row is not a unit vector");
        }
        for (std::size_t j = 0; j < cols; ++j)
          check(colsum[j] == 1, "pairing column is not a unit vector");

        for (const auto& la : partitions_in_box(k, n - k, c))
          check(evaluate(jacobi_trudi(la, n - k, "Q"), g.ring, env) ==
                    schubert_class(g, la),
                "Giambelli fails for " + la.to_string() + " on G(" +
                    std::to_string(k) + "," + std::to_string(n) + ")");
      }
    }
  });

  criterion(3, "pliant cone of G(2,4) is the Schubert cone", [&] {
    VarietyModel m = grassmann_model(2, 4);
    for (int k = 1; k <= 4; ++k)
      check(cone_equal(pliant_cone(m, k),
                       detail::simplicial_cone(m.ring->basis_size(k))),
            "pliant != Schubert cone at codim " + std::to_string(k));
  });

  criterion(4, "interior complete intersections", [&] {
    VarietyModel g = grassmann_model(2, 4);
    RingClass s1 = schubert_class(*g.grassmann, Partition({1}));
    for (int k = 1; k <= 3; ++k)
      check(interior_member(s1.pow(k).coordinates(), eff_cone(g, k)),
            "sigma_1^" + std::to_string(k) + " not interior to Eff");
    VarietyModel p = load_model_file(models + "/plandflop.json");
    RingClass xif = RingClass::monomial(p.ring, "xi*f");
    check(!interior_member(xif.coordinates(), nef_cone_k(p, 2)),
          "xi f wrongly interior to Nef^2");
  });

  criterion(5, "semistable nef thresholds", [&] {
    std::mt19937 gen(58231);
    std::uniform_int_distribution<int> rr(2, 6), dd(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
      const int r = rr(gen);
      const long long d = dd(gen);
      HNData single{{{r, d}}, 0};
      for (int k = 1; k <= r - 1; ++k)
        check(nu(single, k) == Rational(-k * d) / r,
              "nu mismatch on single quotient");
      // k = r probed by stacking a higher-slope quotient on top
      HNData stacked{{{r, d}, {1, std::abs(d) + 1}}, 0};
      check(nu(stacked, r) == Rational(-r * d) / r,
            "nu mismatch at k = r");
    }
  });

  criterion(6, "Schur/Segre oracle equivalence", [&] {
    for (int e = 1; e <= 5; ++e) {
      auto s = dual_segre_series(e, 6);
      for (int k = 1; k <= 6; ++k)
        check(same_poly(s[static_cast<std::size_t>(k)],
                        jacobi_trudi(Partition(std::vector<int>(k, 1)), e)),
              "dual Segre vs column Jacobi-Trudi");
    }
    for (int e = 1; e <= 4; ++e) {
      const int nv = e + 1;
      std::vector<oracle::MultiPoly> shifted;
      for (int i = 0; i < e; ++i)
        shifted.push_back(oracle::MultiPoly::var(nv, i) +
                          oracle::MultiPoly::var(nv, e));
      for (int i = 0; i <= 4; ++i) {
        check(oracle::split_poly(chern_tensor_line(e, i), "E", e, "L") ==
                  oracle::elementary_of(shifted, i, nv),
              "chern_tensor_line vs splitting oracle");
        check(oracle::split_poly(segre_tensor_line(e, i), "E", e, "L") ==
                  Rational(i % 2 == 0 ? 1 : -1) *
                      oracle::complete_of(shifted, i, nv),
              "segre_tensor_line vs splitting oracle");
      }
      for (long long m : {-3LL, 2LL}) {
        const std::string tw = twisted_name("E", m, "H");
        std::map<ChernVar, FormalChernPoly> repl;
        for (int j = 1; j <= e; ++j) {
          FormalChernPoly cj(j);
          for (int l = 0; l <= j; ++l) {
            Integer b = binomial(e - l, j - l);
            for (int p = 0; p < j - l; ++p) b *= m;
            if (b == 0) continue;
            FormalChernPoly term =
                l == 0 ? FormalChernPoly::one() : FormalChernPoly::var("E", l);
            cj += Rational(b) *
                  (term * FormalChernPoly::var("H", 1).pow(j - l));
          }
          repl.emplace(ChernVar{tw, j, false}, std::move(cj));
        }
        for (int i = 1; i <= e; ++i)
          check(same_poly(twist_expand(e, m, i).substitute(repl),
                          FormalChernPoly::var("E", i)),
                "twist_expand round trip");
      }
    }
  });

  criterion(7, "cone engine on random cones", [&] {
    oracle::Rng rng(90210417);
    for (int trial = 0; trial < 50; ++trial) {
      const int d = rng.uniform(2, 6);
      std::vector<ZVec> gens;
      const int count = rng.uniform(2, 12);
      const bool salient_family = trial % 2 == 0;
      for (int i = 0; i < count; ++i) {
        ZVec v;
        if (salient_family) {
          v.push_back(Integer(rng.uniform(1, 5)));
          for (int j = 1; j < d; ++j) v.push_back(Integer(rng.uniform(-4, 4)));
        } else {
          v = rng.zvec(d, -4, 4);
          if (is_zero(to_rational(v))) v[0] = 1;
        }
        gens.push_back(std::move(v));
      }
      PolyCone c = hull(std::move(gens), d);

      QMatrix id(d, QVec(d, 0));
      for (int i = 0; i < d; ++i) id[i][i] = 1;
      check(cone_equal(dual_cone(dual_cone(c, id), id), c),
            "dual of dual is not the identity");
      QMatrix p = rng.unimodular(d, 3 * d);
      check(cone_equal(dual_cone(dual_cone(c, p), transpose(p)), c),
            "dual round trip under a pairing");

      auto ex = extremal_rays(c);
      for (const auto& r : ex)
        check(std::find(c.rays.begin(), c.rays.end(), r) != c.rays.end(),
              "extremal ray is not a generator");
      check(cone_equal(hull(ex, d), c), "extremal rays do not regenerate");
    }
  });

  criterion(8, "inertia correctness and Hodge examples", [&] {
    oracle::Rng rng(66100);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = rng.uniform(1, 5);
      QMatrix m = rng.symmetric(n, -5, 5);
      check(inertia(m) == oracle::inertia_by_congruence(m),
            "inertia disagrees with congruence diagonalization");
    }
    for (int trial = 0; trial < 20; ++trial) {
      const int n = rng.uniform(2, 5);
      QMatrix m = rng.symmetric(n, -5, 5);
      QMatrix a = rng.unimodular(n, 4 * n);
      check(inertia(mat_mul(transpose(a), mat_mul(m, a))) == inertia(m),
            "Sylvester invariance fails");
    }

    VarietyModel m = product_model({{1, 2}, {1, 2}, {1, 2}, {1, 2}});
    RingClass h3h4 = RingClass::monomial(
        m.ring,
        "1\xE2\x8A\x97"
        "1\xE2\x8A\x97"
        "s[1]\xE2\x8A\x97"
        "s[1]");
    HodgeResult r1 = hodge_obstruction(m, h3h4);
    check(r1.inertia == Inertia{1, 2, 1} && !r1.obstructed,
          "h3 h4 signature is not (1,2,1)");

    RingClass hsum(m.ring, 1);
    for (int i = 0; i < 4; ++i) hsum.set_coeff(i, 1);
    HodgeResult r2 = hodge_obstruction(m, hsum.pow(2));
    check(r2.inertia == Inertia{1, 0, 3} && !r2.obstructed,
          "(sum h_i)^2 signature is not (1,0,3)");

    QMatrix lorentz(4, QVec(4, 0));
    lorentz[0][0] = lorentz[1][1] = lorentz[2][2] = 1;
    lorentz[3][3] = -1;
    HodgeResult r3 = hodge_from_matrix(lorentz);
    check(r3.inertia == Inertia{3, 0, 1} && r3.obstructed,
          "diag(1,1,1,-1) signature is not (3,0,1)");
  });

  criterion(9, "degree-norm positivity", [&] {
    VarietyModel g = grassmann_model(2, 4);
    RingClass s1 = schubert_class(*g.grassmann, Partition({1}));
    for (int k = 0; k <= 4; ++k) {
      std::vector<RingClass> rays;
      for (int i = 0; i < g.ring->basis_size(k); ++i)
        rays.push_back(RingClass::monomial(g.ring, k, i));
      check(degree_functional_positive(s1.pow(4 - k), rays),
            "sigma_1 degree functional not positive at codim " +
                std::to_string(k));
    }
    VarietyModel p = load_model_file(models + "/plandflop.json");
    RingClass h = RingClass::monomial(p.ring, "xi") +
                  RingClass::monomial(p.ring, "f");
    std::vector<RingClass> rays2 = {RingClass::monomial(p.ring, "xi^2"),
                                    RingClass::monomial(p.ring, "xi*f")};
    std::optional<RingClass> witness;
    check(!degree_functional_positive(h, rays2, &witness),
          "xi+f degree functional wrongly positive at k=2");
    check(witness.has_value() &&
              *witness == RingClass::monomial(p.ring, "xi^2"),
          "witness is not the zero-pairing class xi^2");
  });

  criterion(10, "CLI determinism", [&] {
    fs::path tmp = fs::temp_directory_path() /
                   ("poscones_acceptance_" +
                    std::to_string(std::random_device{}()));
    fs::create_directories(tmp);
    {
      std::ofstream mat(tmp / "diag.json");
      mat << "{\"matrix\": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,-1]]}\n";
    }
    const std::vector<std::string> commands = {
        "ring --model " + models + "/g24.json --json",
        "eval --model " + models + "/g24.json 's[1]*s[1]' --json",
        "eval --model " + models + "/g24.json 'schur[1,1](Q)' --json",
        "deg --model " + models + "/plandflop.json 'xi^3' --json",
        "cone --model " + models + "/plandflop.json nef --codim 2 --json",
        "cone --model " + models + "/g36.json pliant --codim 3 --json",
        "member --model " + models +
            "/plandflop.json nef 'xi*f' --codim 2 --interior --json",
        "report --model " + models + "/plandflop.json --codim 2 --json",
        "signature --model " + models +
            "/p1x4.json '1\xE2\x8A\x97"
            "1\xE2\x8A\x97"
            "s[1]\xE2\x8A\x97"
            "s[1]' --json",
        "signature --matrix " + (tmp / "diag.json").string() + " --json",
    };
    int idx = 0;
    for (const auto& args : commands) {
      ++idx;
      const fs::path f1 = tmp / ("out_" + std::to_string(idx) + "_a.json");
      const fs::path f2 = tmp / ("out_" + std::to_string(idx) + "_b.json");
      const fs::path f3 = tmp / ("out_" + std::to_string(idx) + "_t1.json");
      const fs::path f4 = tmp / ("out_" + std::to_string(idx) + "_t4.json");
      const std::string base = cli + " " + args;
      auto run = [&](const std::string& prefix, const fs::path& out) {
        const std::string full =
            prefix + base + " > " + out.string() + " 2>&1";
        check(std::system(full.c_str()) == 0, "command failed: " + full);
      };
      run("", f1);
      run("", f2);
      run("POSCONES_THREADS=1 ", f3);
      run("POSCONES_THREADS=4 ", f4);
      const std::string a = slurp(f1);
      check(!a.empty(), "empty output: " + base);
      check(a == slurp(f2), "re-run differs: " + base);
      check(a == slurp(f3) && a == slurp(f4),
            "thread setting changes bytes: " + base);
    }
    // spot-check a value end to end: deg xi^3 = -1 in the JSON
    const std::string deg_out =
        slurp(tmp / "out_4_a.json");
    check(deg_out.find("-1") != std::string::npos,
          "deg output does not contain -1");
    fs::remove_all(tmp);
  });

  if (failures == 0)
    std::cout << "acceptance: all 10 criteria passed\n";
  else
    std::cout << "acceptance: " << failures << " criterion(s) FAILED\n";
  return failures == 0 ? 0 : 1;
}
