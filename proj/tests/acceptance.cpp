// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include "tenfold/classify.hpp"
#include "tenfold/decompose.hpp"
#include "tenfold/errors.hpp"
#include "tenfold/fermionic_group.hpp"
#include "tenfold/karoubi.hpp"
#include "tenfold/ktheory.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace tenfold;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& name, double budget_ms, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && budget_ms > 0 && ms > budget_ms) {
    o.ok = false;
    std::ostringstream os;
    os << "over budget of " << budget_ms << " ms";
    o.detail = os.str();
  }
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << " " << n << " " << name << " (" << std::fixed << std::setprecision(1) << ms
            << " ms)";
  if (!o.detail.empty()) std::cout << ": " << o.detail;
  std::cout << std::endl;
}

std::vector<MoritaClass> generators() {
  std::vector<MoritaClass> out;
  for (int i = 0; i < 8; ++i) out.push_back(MoritaClass::real(i));
  for (int i = 0; i < 2; ++i) out.push_back(MoritaClass::complex(i));
  return out;
}

const CTGroupSpec& ct(const std::string& label) {
  static const auto specs = ct_enumerate();
  for (const auto& s : specs)
    if (s.label == label) return s;
  throw std::runtime_error("no CT spec " + label);
}

// Ten generators, four CT algebras and three group algebras.
std::vector<GradedAlgebra> corpus() {
  std::vector<GradedAlgebra> out;
  for (auto c : generators()) out.push_back(division_algebra(c));
  for (const char* l : {"D", "BDI", "CII", "DIII"}) out.push_back(unit_charge_algebra(ct(l), Grading::theta));
  out.push_back(fermionic_group_algebra(z4_tf()));
  out.push_back(fermionic_group_algebra(quaternion_group()));
  out.push_back(fermionic_group_algebra(z2f_z2t()));
  return out;
}

// KO^m(pt) and K^m(pt), independent of the library's table.
AbelianGroup ko_upper(long m) {
  static const char* lower[8] = {"Z", "Z2", "Z2", "0", "Z", "0", "0", "0"};
  return parse_abelian_group(lower[((-m % 8) + 8) % 8]);
}
AbelianGroup k_upper(long m) { return m % 2 == 0 ? AbelianGroup::z() : AbelianGroup::zero(); }

std::string single_class(const GradedAlgebra& a) {
  auto c = classify_algebra(a);
  if (c.size() != 1) return "<" + std::to_string(c.size()) + " blocks>";
  return c[0].morita.name();
}

} // namespace

int main() {
  std::cout << "tenfold acceptance, seed 0x5EED" << std::endl;

  criterion(1, "periodic table d=0..7 against KO^{d+s} and K^{d+k}", 5000, [](Outcome& o) {
    const std::map<std::string, long> s = {{"D", -2}, {"BDI", -1}, {"AI", 0},  {"CI", 1},
                                           {"C", 2},  {"CII", 3},  {"AII", 4}, {"DIII", 5}};
    const std::map<std::string, long> k = {{"A", 0}, {"AIII", 1}};
    const PeriodicTable t = periodic_table(0, 7);
    o.require(t.rows.size() == 10, "expected ten rows");
    int cells = 0;
    for (const auto& row : t.rows)
      for (long d = 0; d <= 7; ++d) {
        const AbelianGroup expect =
            k.count(row.spec.label) ? k_upper(d + k.at(row.spec.label)) : ko_upper(d + s.at(row.spec.label));
        const AbelianGroup got = row.groups[static_cast<std::size_t>(d)];
        o.require(got == expect, row.spec.label + " d=" + std::to_string(d) + ": got " + to_string(got) + ", expected " +
                                     to_string(expect));
        ++cells;
      }
    o.require(cells == 80, "expected 80 cells");
    if (o.ok) o.detail = "80/80 cells";
  });

  criterion(2, "Bott song K^ABS_0 of the ten division algebras", 1, [](Outcome& o) {
    const std::vector<std::pair<MoritaClass, const char*>> row = {
        {MoritaClass::complex(0), "Z"}, {MoritaClass::complex(1), "0"}, {MoritaClass::real(0), "Z"},
        {MoritaClass::real(7), "Z2"},   {MoritaClass::real(6), "Z2"},   {MoritaClass::real(5), "0"},
        {MoritaClass::real(4), "Z"},    {MoritaClass::real(3), "0"},    {MoritaClass::real(2), "0"},
        {MoritaClass::real(1), "0"},
    };
    for (const auto& [c, g] : row) o.require(to_string(kabs(c, 0)) == g, c.name() + " gives " + to_string(kabs(c, 0)));
  });

  criterion(3, "worked isomorphisms", 1000, [](Outcome& o) {
    o.require(single_class(fermionic_group_algebra(z4_tf())) == "Cl_{-1}", "C*_f(Z4^TF) is not Cl_{-1}");

    // M_{1|1}(Cl_{+1}) and M_{2|0}(Cl_{+1}) are isomorphic, so the size is the total 2
    const auto bdi = classify_algebra(unit_charge_algebra(ct("BDI"), Grading::theta));
    const auto m11 = classify_algebra(matrix_algebra(division_algebra(MoritaClass::real(1)), 1, 1));
    o.require(bdi.size() == 1 && bdi[0].morita == MoritaClass::real(1) && bdi[0].size() == 2,
              "BDI algebra is not M_{1|1}(Cl_{+1})");
    o.require(bdi == m11, "BDI algebra and M_{1|1}(Cl_{+1}) classify differently");

    const auto d_theta = classify_algebra(unit_charge_algebra(ct("D"), Grading::theta));
    o.require(d_theta.size() == 1 && d_theta[0].morita == MoritaClass::real(0) && d_theta[0].size_string() == "2|0",
              "class D under theta is not M_2(R)");
    o.require(single_class(unit_charge_algebra(ct("D"), Grading::c)) == "Cl_{+2}", "class D under c is not Cl_{+2}");
    o.require(single_class(graded_tensor(quaternions(), clifford(0, 2))) == "Cl_{+2}", "H (x) Cl_{-2} is not Cl_{+2}");
  });

  criterion(4, "Brauer-Wall law", 30000, [](Outcome& o) {
    int cases = 0;
    for (std::size_t p = 0; p <= 5; ++p)
      for (std::size_t q = 0; p + q <= 5; ++q, ++cases) {
        const auto c = classify_algebra(clifford(p, q));
        o.require(c.size() == 1 && c[0].morita == MoritaClass::real(static_cast<int>(p) - static_cast<int>(q)),
                  "Cl_{" + std::to_string(p) + "," + std::to_string(q) + "}");
      }
    o.require(cases == 21, "expected 21 Clifford cases");
    int pairs = 0;
    for (auto a : generators())
      for (auto b : generators()) {
        ++pairs;
        std::multiset<std::string> got, want;
        for (const auto& c : classify_algebra(graded_tensor(division_algebra(a), division_algebra(b))))
          got.insert(c.morita.name());
        for (const auto& c : tensor_classes(a, b)) want.insert(c.name());
        o.require(got == want, a.name() + " (x) " + b.name());
      }
    if (o.ok) o.detail = "21 Clifford algebras, " + std::to_string(pairs) + " ordered pairs";
  });

  criterion(5, "Morita invariance of continuum SPT groups", 60000, [](Outcome& o) {
    const std::vector<std::pair<std::size_t, std::size_t>> sizes = {{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    for (auto c : generators()) {
      const GradedAlgebra d = division_algebra(c);
      const auto base = classify_algebra(d);
      for (auto [p, q] : sizes) {
        const auto blocks = classify_algebra(matrix_algebra(d, p, q));
        for (long dim = 0; dim <= 7; ++dim)
          o.require(spt_from_blocks(blocks, dim, SptMode::continuum).total ==
                        spt_from_blocks(base, dim, SptMode::continuum).total,
                    "M_{" + std::to_string(p) + "|" + std::to_string(q) + "}(" + c.name() + ") d=" + std::to_string(dim));
      }
    }
  });

  criterion(6, "opposite law over the corpus", 0, [](Outcome& o) {
    for (const auto& a : corpus()) {
      const auto x = classify_algebra(a), y = classify_algebra(opposite(a));
      o.require(x.size() == y.size(), a.label() + ": block count changed");
      for (std::size_t i = 0; i < x.size() && i < y.size(); ++i)
        o.require(y[i].morita == opposite_class(x[i].morita), a.label());
    }
  });

  criterion(7, "group algebra oracle", 0, [](Outcome& o) {
    auto q8 = quaternion_group();
    o.require(single_class(fermionic_group_algebra(q8)) == "H", "C*_f(Q8) is not H");
    o.require(single_class(fermionic_group_algebra(z2f_z2t())) == "Cl_{+1}", "C*_f(Z2^F x Z2^T) is not Cl_{+1}");
    for (std::size_t d = 1; d <= 3; ++d) {
      const FermionicGroup plus = clifford_monomial_group(d, 0), minus = clifford_monomial_group(0, d);
      o.require(isomorphic(opposite_group(plus), minus), "(Pin+_" + std::to_string(d) + ")^op is not Pin-");
      o.require(isomorphic(opposite_group(minus), plus), "(Pin-_" + std::to_string(d) + ")^op is not Pin+");
      o.require(single_class(fermionic_group_algebra(opposite_group(plus))) ==
                    MoritaClass::real(-static_cast<int>(d)).name(),
                "opposite Pin+ algebra class");
    }
  });

  criterion(8, "lattice formula", 0, [](Outcome& o) {
    o.require(to_string(spt_lattice(real_field(), 2).total) == "Z+Z2^3", "spt_lattice(R, 2)");
    for (const auto& a : corpus())
      o.require(spt_lattice(a, 0).total == spt_continuum(a, 0).total, a.label() + ": lattice and continuum differ at d=0");
  });

  criterion(9, "Karoubi desk properties", 60000, [](Outcome& o) {
    std::mt19937_64 rng(kDefaultSeed);
    int trials = 0, reversing = 0, witnesses = 0, obstructed = 0;
    for (std::size_t n = 1; n <= 4; ++n)
      for (int t = 0; t < 200; ++t, ++trials) {
        const Polarization p1 = random_polarization(n, rng), p2 = random_polarization(n, rng),
                           p3 = random_polarization(n, rng);
        const KaroubiPair a{p1, p2}, b{p2, p3}, c{p1, p3};
        const int ia = class_d_invariant(a), ib = class_d_invariant(b);
        o.require((ia ^ ib) == class_d_invariant(c), "difference cocycle");
        o.require(class_d_invariant(stack(a, b)) == (ia ^ ib), "stacking additivity");
        const RatMatrix g = random_orthogonal(2 * n, rng);
        if (sgn(determinant(g)) < 0) ++reversing;
        const KaroubiPair conj{{n, g.transpose() * p1.j * g}, {n, g.transpose() * p2.j * g}};
        o.require(class_d_invariant(conj) == ia, "conjugation invariance");
        const auto w = homotopy_witness(a);
        o.require(w.has_value() == (ia == 0), "witness exists iff invariant is 0");
        if (w) {
          ++witnesses;
          o.require(w->transpose() * *w == RatMatrix::identity(2 * n) && determinant(*w) == 1 &&
                        w->transpose() * p1.j * *w == p2.j,
                    "witness is not a special orthogonal conjugator");
        } else {
          ++obstructed;
          o.require(conjugator(p1, p2).det == -1, "missing witness without determinant obstruction");
        }
      }
    o.require(reversing > 0, "no orientation-reversing conjugations sampled");
    o.require(witnesses > 0 && obstructed > 0, "only one invariant value sampled");

    const RatMatrix id = RatMatrix::identity(3);
    RatMatrix flip = id;
    flip(0, 0) = -1;
    o.require(grading_pair_invariant(make_grading_pair(id, id)) == 0, "(I, I)");
    o.require(grading_pair_invariant(make_grading_pair(id, flip)) == 1, "(I, flip)");
    for (int t = 0; t < 200; ++t) {
      const RatMatrix a1 = random_orthogonal(3, rng), a2 = random_orthogonal(3, rng);
      const GradingPair g{a1, a2};
      const int expect = (sgn(determinant(a1)) * sgn(determinant(a2)) < 0) ? 1 : 0;
      o.require(grading_pair_invariant(g) == expect, "grading invariant is not the det sign");
      o.require(grading_pair_invariant(stack(g, make_grading_pair(id, flip))) == (expect ^ 1), "grading stacking");
    }
    if (o.ok)
      o.detail = std::to_string(trials) + " pairs, " + std::to_string(witnesses) + " witnesses, " +
                 std::to_string(obstructed) + " obstructed";
  });

  criterion(10, "decomposition self-consistency", 0, [](Outcome& o) {
    std::vector<GradedAlgebra> all = corpus();
    all.push_back(direct_sum(clifford(0, 1), quaternions()));
    all.push_back(direct_sum(direct_sum(clifford(2, 0), complex_clifford(1)), matrix_algebra(real_field(), 1, 1)));
    std::size_t exact = 0;
    for (const auto& a : all) {
      const DecompositionReport r = graded_blocks(a);
      if (r.exact_path) ++exact;
      o.require(r.residual == 0, a.label() + ": nonzero residual");
      Vec sum(a.dim());
      std::size_t dims = 0;
      for (std::size_t i = 0; i < r.blocks.size(); ++i) {
        const auto& p = r.blocks[i].projection;
        for (std::size_t j = 0; j < r.blocks.size(); ++j)
          o.require(a.multiply(p, r.blocks[j].projection) == (i == j ? p : Vec(a.dim())),
                    a.label() + ": idempotents not orthogonal");
        sum = add(sum, p);
        dims += r.blocks[i].invariants.dim;
        const auto again = graded_blocks(*r.blocks[i].algebra);
        o.require(again.blocks.size() == 1 && again.blocks[0].invariants == r.blocks[i].invariants,
                  a.label() + ": block does not re-decompose to itself");
      }
      o.require(sum == a.unit(), a.label() + ": idempotents do not sum to 1");
      o.require(dims == a.dim(), a.label() + ": block dims not additive");
    }
    o.require(exact == all.size(), "exact path not taken on the whole corpus");

    // Q(sqrt 2)-split center: certified integer invariants on the fallback path
    GradedAlgebra::Table mul(4);
    mul[0] = {{0, Rational(1)}};
    mul[1] = {{1, Rational(1)}};
    mul[2] = {{1, Rational(1)}};
    mul[3] = {{0, Rational(2)}};
    const GradedAlgebra split({0, 0}, mul, Vec{Rational(1), Rational(0)}, "Q(sqrt 2)");
    const DecompositionReport f = graded_blocks(split);
    o.require(!f.exact_path && f.blocks.size() == 2, "Q(sqrt 2) did not split into two certified blocks");
    for (const auto& b : f.blocks)
      o.require(b.certified_only && b.invariants.dim == 1 && b.invariants.sig_full == 1,
                "Q(sqrt 2) block invariants are not those of R");
    const auto fc = classify_algebra(graded_tensor(split, clifford(0, 2)));
    o.require(fc.size() == 2 && fc[0].morita == MoritaClass::real(6) && fc[1].morita == MoritaClass::real(6),
              "Q(sqrt 2) (x) Cl_{-2} is not two Cl_{-2} blocks");
    if (o.ok) o.detail = std::to_string(exact) + "/" + std::to_string(all.size()) + " exact";
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
