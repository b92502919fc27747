#include "commtuple/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "commtuple/cli.hpp"
#include "commtuple/cohomology.hpp"
#include "commtuple/counting.hpp"
#include "commtuple/errors.hpp"
#include "commtuple/extraspecial.hpp"
#include "commtuple/labels.hpp"

namespace commtuple {

namespace {

// A check body returns a short detail string and throws on failure.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool condition, const std::string& message) {
  if (!condition) throw CheckFailed(message);
}

std::string params_str(const GroupParams& p) {
  std::ostringstream out;
  out << "(n=" << p.n << ",m=" << p.m << ",p=" << p.p << ")";
  return out.str();
}

std::string sci(double v) {
  std::ostringstream out;
  out.precision(2);
  out << std::scientific << v;
  return out.str();
}

struct Box {
  int max_n;
  int max_m;
  std::vector<int> primes;
  std::uint64_t enumeration_limit;
};

class Suite {
 public:
  explicit Suite(const VerifyOptions& options) : options_(options) {}

  void add(std::string name, const std::function<std::string()>& body) {
    CheckResult result{std::move(name), false, {}};
    try {
      result.detail = body();
      result.passed = true;
    } catch (const CheckFailed& e) {
      result.detail = e.what();
    } catch (const std::exception& e) {
      result.detail = std::string("exception: ") + e.what();
    }
    results_.push_back(std::move(result));
  }

  std::vector<CheckResult> take() { return std::move(results_); }
  const VerifyOptions& options() const { return options_; }

 private:
  VerifyOptions options_;
  std::vector<CheckResult> results_;
};

void central_data_checks(Suite& suite, const Box& box) {
  suite.add("central_data.antisymmetry", [&] {
    std::uint64_t checked = 0;
    for (int p : box.primes) {
      for (int n = 1; n <= box.max_n; ++n) {
        if (antisym_count(n, p) > box.enumeration_limit) continue;
        for (AntisymEnumerator e(n, p); !e.done(); e.advance()) {
          expect(e.current().is_antisymmetric(), "non-antisymmetric matrix at n=" + std::to_string(n));
          ++checked;
        }
      }
    }
    return std::to_string(checked) + " matrices";
  });

  suite.add("central_data.case_partition", [&] {
    int grids = 0;
    for (int p : box.primes) {
      for (int n = 1; n <= box.max_n; ++n) {
        const std::uint64_t total = antisym_count(n, p);
        if (total > box.enumeration_limit) continue;
        std::uint64_t case1 = 0, case2 = 0, case3 = 0;
        for (AntisymEnumerator e(n, p); !e.done(); e.advance()) {
          switch (case_of(e.current()).kind) {
            case CaseTag::Kind::case1: ++case1; break;
            case CaseTag::Kind::case2: ++case2; break;
            case CaseTag::Kind::case3: ++case3; break;
          }
        }
        expect(case1 == 1, "expected exactly one Case 1 matrix at n=" + std::to_string(n));
        expect(case1 + case2 + case3 == total, "cases do not partition the matrices");
        ++grids;
      }
    }
    return std::to_string(grids) + " (n,p) grids";
  });

  suite.add("central_data.case3_counts", [&] {
    int grids = 0;
    for (int p : box.primes) {
      for (int n = 2; n <= box.max_n; ++n) {
        if (antisym_count(n, p) > box.enumeration_limit) continue;
        std::map<int, std::uint64_t> per_pivot;
        for (AntisymEnumerator e(n, p); !e.done(); e.advance()) {
          const CaseTag tag = case_of(e.current());
          if (tag.kind == CaseTag::Kind::case3 && is_realizable(e.current())) ++per_pivot[tag.pivot];
        }
        for (int pivot = 1; pivot < n; ++pivot) {
          // 1-based pivot i = pivot + 1: (p-1) p^(2n-i-2)
          const BigInt expected = (p - 1) * ipow(p, static_cast<unsigned>(2 * n - pivot - 3));
          expect(BigInt(per_pivot[pivot]) == expected, "Case 3 count mismatch at n=" + std::to_string(n) + ", pivot " +
                                                   std::to_string(pivot));
        }
        ++grids;
      }
    }
    return std::to_string(grids) + " (n,p) grids";
  });

  suite.add("central_data.delete_first_bijection", [&] {
    int grids = 0;
    for (int p : box.primes) {
      for (int n = 2; n <= box.max_n; ++n) {
        if (antisym_count(n, p) > box.enumeration_limit) continue;
        std::set<std::vector<int>> images;
        std::uint64_t case2 = 0;
        for (AntisymEnumerator e(n, p); !e.done(); e.advance()) {
          if (case_of(e.current()).kind != CaseTag::Kind::case2) continue;
          const AntisymMatrix reduced = delete_first(e.current());
          expect(!reduced.is_zero() && reduced.is_antisymmetric(), "delete_first produced an invalid image");
          expect(is_realizable(reduced) == is_realizable(e.current()), "realizability not preserved");
          images.insert(reduced.upper());
          ++case2;
        }
        expect(images.size() == case2, "delete_first is not injective on Case 2");
        expect(case2 == antisym_count(n - 1, p) - 1, "delete_first is not onto the nonzero matrices");
        ++grids;
      }
    }
    return std::to_string(grids) + " (n,p) grids";
  });
}

void counting_checks(Suite& suite, const Box& box) {
  suite.add("counting.triple_agreement", [&] {
    int triples = 0;
    for (int p : box.primes) {
      for (int n = 1; n <= box.max_n; ++n) {
        if (antisym_count(n, p) > box.enumeration_limit) continue;
        for (int m = 1; m <= box.max_m; ++m) {
          const GroupParams params{n, m, p};
          BigInt closed = count_closed_form(params);
          if (suite.options().inject_failure && n == 3) closed += 1;
          const BigInt recurrence = count_recurrence(params);
          const BigInt enumerated = count_enumeration(params);
          expect(closed == recurrence && recurrence == enumerated,
                 "disagreement at " + params_str(params) + ": " + closed.str() + " / " + recurrence.str() + " / " +
                     enumerated.str());
          ++triples;
        }
      }
    }
    return std::to_string(triples) + " triples";
  });

  suite.add("counting.torres_giese", [] {
    for (int n = 1; n <= 20; ++n) {
      const BigInt n_minus_one = count_closed_form({n, 1, 2}) - 1;
      const BigInt direct = (ipow(2, static_cast<unsigned>(n)) - 1) * (ipow(2, static_cast<unsigned>(n - 1)) - 1) / 3;
      expect(n_minus_one == torres_giese(n) && n_minus_one == direct, "mismatch at n=" + std::to_string(n));
    }
    return std::string("n = 1..20");
  });

  suite.add("counting.two_generators", [] {
    for (int p : {2, 3, 5, 7}) {
      for (int m = 1; m <= 10; ++m) {
        expect(count_closed_form({2, m, p}) == p && count_recurrence({2, m, p}) == p,
               "N(2,m,p) != p at " + params_str({2, m, p}));
      }
    }
    return std::string("m <= 10, p in {2,3,5,7}");
  });

  suite.add("counting.one_generator", [] {
    for (int p : {2, 3, 5, 7}) {
      for (int m = 1; m <= 5; ++m) {
        const GroupParams params{1, m, p};
        expect(count_closed_form(params) == 1 && count_recurrence(params) == 1 && count_enumeration(params) == 1 &&
                   count_rep_components(params) == 1,
               "N(1,m,p) != 1 at " + params_str(params));
      }
    }
    return std::string("m <= 5, p in {2,3,5,7}");
  });

  suite.add("counting.exact_divisibility", [&] {
    int triples = 0;
    for (int p : {2, 3, 5, 7}) {
      for (int n = 2; n <= 12; ++n) {
        for (int m = 1; m <= box.max_m + 2; ++m) {
          const BigInt bp = p;
          const BigInt numerator = ipow(bp, static_cast<unsigned>((m - 1) * (n - 2))) *
                                   (ipow(bp, static_cast<unsigned>(n)) - 1) *
                                   (ipow(bp, static_cast<unsigned>(n - 1)) - 1);
          expect(numerator % (bp * bp - 1) == 0, "p^2-1 does not divide the numerator at " + params_str({n, m, p}));
          ++triples;
        }
      }
    }
    return std::to_string(triples) + " triples";
  });
}

void su_core_checks(Suite& suite, const Box& box) {
  const Tolerance tol;
  suite.add("su_core.clock_shift_relations", [] {
    double worst = 0.0;
    for (int p : {2, 3, 5, 7}) {
      const auto pair = clock_shift(p);
      const ComplexMatrix id = ComplexMatrix::Identity(p, p);
      const int order = p == 2 ? 4 : p;
      worst = std::max({worst, (unitary_power(pair.x0, order) - id).norm(), (unitary_power(pair.y0, order) - id).norm(),
                        (commutator(pair.x0, pair.y0) - pair.omega * id).norm(), det_residual(pair.x0),
                        det_residual(pair.y0)});
    }
    expect(worst <= 1e-12, "residual " + sci(worst));
    return "max residual " + sci(worst);
  });

  suite.add("su_core.central_exponent_roots", [&] {
    for (int p : {2, 3, 5, 7}) {
      for (int k = 0; k < p; ++k) {
        const auto e = central_exponent(root_of_unity(p, k) * ComplexMatrix::Identity(p, p), p, tol);
        expect(e && *e == k, "central_exponent(omega^" + std::to_string(k) + ") failed for p=" + std::to_string(p));
      }
    }
    return std::string("p in {2,3,5,7}");
  });

  const int trials = suite.options().full ? 20 : 5;
  suite.add("su_core.commutator_class_invariance", [&] {
    int checked = 0;
    for (int p : {2, 3}) {
      for (int m = 1; m <= std::min(box.max_m, 2); ++m) {
        const GroupParams params{3, m, p};
        const auto labels = enumerate_labels(params);
        for (std::size_t i = 0; i < labels.size(); i += std::max<std::size_t>(1, labels.size() / 6)) {
          const UnitaryTuple t = representative(labels[i], params);
          const AntisymMatrix c = commutator_class(t, tol);
          expect(c.is_antisymmetric(), "commutator class is not antisymmetric");
          for (int s = 0; s < trials; ++s) {
            const auto g = random_su_factors(p, m, derive_seed(suite.options().seed, static_cast<std::uint64_t>(checked)));
            expect(commutator_class(t.conjugated(g), tol) == c, "class changed under conjugation at " + params_str(params));
            ++checked;
          }
        }
      }
    }
    return std::to_string(checked) + " conjugations";
  });

  suite.add("su_core.commutator_class_antisymmetry", [&] {
    int checked = 0;
    for (int p : {2, 3, 5}) {
      const GroupParams params{4, 1, p};
      for (int s = 0; s < trials; ++s) {
        const auto seed = derive_seed(suite.options().seed + 17, static_cast<std::uint64_t>(checked));
        expect(commutator_class(random_identity_tuple(params, seed), tol).is_zero(), "identity tuple has nonzero class");
        ++checked;
      }
      for (const auto& label : labels_for_class(antisym_at(4, p, antisym_count(4, p) - 1), 1)) {
        expect(commutator_class(representative(label, params), tol).is_antisymmetric(), "class not antisymmetric");
        ++checked;
      }
    }
    return std::to_string(checked) + " tuples";
  });

  suite.add("su_core.simultaneous_diagonalization", [&] {
    double worst = 0.0;
    int checked = 0;
    for (int p : {2, 3, 5, 7}) {
      for (int s = 0; s < trials; ++s) {
        const auto seed = derive_seed(suite.options().seed + 29, static_cast<std::uint64_t>(checked++));
        const UnitaryTuple t = random_identity_tuple({3, 1, p}, seed);
        std::vector<ComplexMatrix> mats{t.at(0, 0), t.at(1, 0), t.at(2, 0)};
        const auto eig = simultaneous_diagonalize(mats, tol);
        for (std::size_t k = 0; k < mats.size(); ++k) {
          ComplexMatrix d = ComplexMatrix::Zero(p, p);
          double sum = 0.0;
          for (int r = 0; r < p; ++r) {
            d(r, r) = std::polar(1.0, eig.phases[k][static_cast<std::size_t>(r)]);
            sum += eig.phases[k][static_cast<std::size_t>(r)];
          }
          worst = std::max(worst, (eig.basis * d * eig.basis.adjoint() - mats[k]).norm());
          const double turns = sum / (2.0 * std::numbers::pi);
          expect(std::abs(turns - std::round(turns)) < 1e-8, "phase sum is not a multiple of 2 pi");
        }
      }
    }
    expect(worst <= 1e-8, "reconstruction residual " + sci(worst));
    return "max reconstruction residual " + sci(worst);
  });
}

void extraspecial_checks(Suite& suite) {
  const std::vector<int> primes = suite.options().full ? std::vector<int>{2, 3, 5, 7} : std::vector<int>{2, 3, 5};
  std::map<int, FiniteMatrixGroup> groups;
  for (int p : primes) {
    try {
      groups.emplace(p, build_extraspecial(p));
    } catch (const std::exception&) {
      // reported by the order check below
    }
  }
  suite.add("extraspecial.order", [&] {
    for (int p : primes) {
      expect(groups.count(p) == 1, "closure failed for p=" + std::to_string(p));
      expect(groups.at(p).order() == static_cast<std::size_t>(p * p * p), "|E_p| != p^3 for p=" + std::to_string(p));
    }
    return std::string("|E_p| = p^3");
  });
  suite.add("extraspecial.center", [&] {
    for (const auto& [p, g] : groups) {
      const auto center = center_of(g);
      expect(center.size() == static_cast<std::size_t>(p), "|Z(E_p)| != p for p=" + std::to_string(p));
      for (const auto& z : center) expect(central_exponent(z, p).has_value(), "center element is not scalar");
      expect(g.order() / center.size() == static_cast<std::size_t>(p * p), "quotient order != p^2");
    }
    return std::string("center = scalar p-th roots of unity");
  });
  suite.add("extraspecial.presentation", [&] {
    double worst = 0.0;
    for (const auto& [p, g] : groups) worst = std::max(worst, verify_presentation(g).max_residual());
    expect(worst < 1e-10, "max residual " + sci(worst));
    return "max residual " + sci(worst);
  });
  suite.add("extraspecial.element_orders", [&] {
    for (const auto& [p, g] : groups) {
      const int expected = p == 2 ? 4 : p;
      for (const auto& e : g.elements()) {
        if (central_exponent(e, p)) continue;
        const auto order = element_order(e, expected);
        expect(order && *order == expected, "non-central element of wrong order for p=" + std::to_string(p));
      }
    }
    return std::string("non-central orders: 4 (p=2), p (odd)");
  });
}

void labels_checks(Suite& suite, const Box& box) {
  const Tolerance tol;
  const int label_n = suite.options().full ? 4 : 3;
  std::vector<GroupParams> grid;
  for (int p : {2, 3}) {
    for (int m = 1; m <= 2; ++m) {
      for (int n = 1; n <= label_n; ++n) grid.push_back({n, m, p});
    }
  }
  (void)box;

  suite.add("labels.count", [&] {
    for (const auto& params : grid) {
      expect(BigInt(enumerate_labels(params).size()) == count_closed_form(params), "count mismatch at " + params_str(params));
    }
    return std::to_string(grid.size()) + " parameter triples";
  });

  suite.add("labels.round_trip", [&] {
    std::size_t checked = 0;
    for (const auto& params : grid) {
      for (const auto& label : enumerate_labels(params)) {
        expect(classify(representative(label, params), tol) == label, "round trip failed at " + params_str(params));
        ++checked;
      }
    }
    return std::to_string(checked) + " labels";
  });

  suite.add("labels.conjugation_invariance", [&] {
    const int per_tuple = suite.options().full ? 10 : 3;
    int checked = 0;
    for (const auto& params : grid) {
      if (params.n > 3) continue;
      const auto labels = enumerate_labels(params);
      for (std::size_t i = 0; i < labels.size(); i += std::max<std::size_t>(1, labels.size() / 4)) {
        const UnitaryTuple t = representative(labels[i], params);
        for (int s = 0; s < per_tuple; ++s) {
          const auto g = random_su_factors(params.p, params.m,
                                           derive_seed(suite.options().seed + 41, static_cast<std::uint64_t>(checked++)));
          expect(classify(t.conjugated(g), tol) == labels[i], "label changed under conjugation at " + params_str(params));
        }
      }
    }
    return std::to_string(checked) + " conjugations";
  });

  suite.add("labels.central_translation", [&] {
    int checked = 0;
    for (const auto& params : grid) {
      if (params.n < 3) continue;
      for (const auto& label : enumerate_labels(params)) {
        if (label.kind() != ComponentLabel::Kind::case3) continue;
        const UnitaryTuple t = representative(label, params);
        const int pivot = case_of(label.matrix()).pivot;
        std::size_t slot = 0;
        for (int k = 1; k < params.n; ++k) {
          if (k == pivot) continue;
          for (const auto& u : all_central_vectors(params.m, params.p)) {
            const ComponentLabel moved = classify(central_translate(t, k, u), tol);
            expect(moved.matrix() == label.matrix(), "translation changed the class");
            auto expected = label.decorations();
            expected[slot] = expected[slot] + u;
            expect(moved.decorations() == expected, "decoration moved by the wrong class at " + params_str(params));
            ++checked;
          }
          ++slot;
        }
      }
    }
    return std::to_string(checked) + " translations";
  });

  suite.add("labels.rep_point_canonical", [&] {
    int checked = 0;
    double worst = 0.0;
    const int samples = suite.options().full ? 10 : 4;
    for (int p : {2, 3}) {
      for (int m = 1; m <= 2; ++m) {
        for (int n = 1; n <= 3; ++n) {
          const GroupParams params{n, m, p};
          for (int s = 0; s < samples; ++s) {
            const auto seed = derive_seed(suite.options().seed + 53, static_cast<std::uint64_t>(checked++));
            const UnitaryTuple t = random_identity_tuple(params, seed);
            const RepPoint point = canonical_rep_point(t, tol);
            expect(rep_point_distance(canonicalize_rep_point(point), point) == 0.0, "canonical form not idempotent");
            // reverse the rows of every factor
            std::vector<double> permuted = point.phases();
            for (int f = 0; f < m; ++f) {
              for (int r = 0; r < p; ++r) {
                for (int k = 0; k < n; ++k) {
                  permuted[static_cast<std::size_t>((f * p + r) * n + k)] = point.at(f, p - 1 - r, k);
                }
              }
            }
            expect(rep_point_distance(canonicalize_rep_point(RepPoint(params, permuted)), point) <= 1e-12,
                   "row permutation changed the canonical form");
            const auto g = random_su_factors(p, m, derive_seed(seed, 99));
            worst = std::max(worst, rep_point_distance(canonical_rep_point(t.conjugated(g), tol), point));
          }
        }
      }
    }
    expect(worst <= 1e-7, "conjugation moved the rep point by " + sci(worst));
    return std::to_string(checked) + " tuples, max drift " + sci(worst);
  });
}

void cohomology_checks(Suite& suite, const Box& box) {
  std::vector<GroupParams> grid;
  const int max_n = suite.options().full ? 4 : 3;
  for (int p : {2, 3, 5}) {
    for (int m = 1; m <= box.max_m; ++m) {
      for (int n = 1; n <= max_n; ++n) grid.push_back({n, m, p});
    }
  }
  std::map<std::tuple<int, int, int>, GradedSeries> series;
  for (const auto& params : grid) series.emplace(std::tuple{params.n, params.m, params.p}, poincare_identity_component(params));
  auto get = [&](const GroupParams& params) -> const GradedSeries& {
    return series.at(std::tuple{params.n, params.m, params.p});
  };

  suite.add("cohomology.one_generator", [&] {
    for (const auto& params : grid) {
      if (params.n != 1) continue;
      expect(get(params) == poincare_nonidentity_component({2, params.m, params.p}),
             "n=1 polynomial is not that of SU(p)^m at " + params_str(params));
    }
    return std::string("matches SU(p)^m");
  });
  suite.add("cohomology.euler_characteristic", [&] {
    for (const auto& params : grid) expect(get(params).evaluate(-1) == 0, "chi != 0 at " + params_str(params));
    return std::to_string(grid.size()) + " polynomials";
  });
  suite.add("cohomology.constant_term", [&] {
    for (const auto& params : grid) expect(get(params).coeff(0) == 1, "constant term != 1 at " + params_str(params));
    return std::to_string(grid.size()) + " polynomials";
  });
  suite.add("cohomology.integrality", [&] {
    for (const auto& params : grid) {
      expect(get(params).has_nonnegative_integer_coeffs(), "non-integral coefficient at " + params_str(params));
    }
    return std::to_string(grid.size()) + " polynomials";
  });
  suite.add("cohomology.class_sizes", [] {
    std::uint64_t factorial = 1;
    for (int k = 1; k <= 12; ++k) {
      factorial *= static_cast<std::uint64_t>(k);
      std::uint64_t sum = 0;
      for (const auto& lambda : partitions(k)) sum += lambda.class_size;
      expect(sum == factorial, "class sizes do not sum to " + std::to_string(k) + "!");
    }
    return std::string("sizes 1..12");
  });
}

void cli_checks(Suite& suite) {
  suite.add("cli.determinism", [] {
    const std::vector<std::vector<std::string>> commands{
        {"count", "--n", "1..4", "--m", "1..2", "--p", "2,3"},
        {"enumerate", "--n", "3", "--m", "2", "--p", "2"},
        {"poincare", "--n", "2", "--m", "1", "--p", "3"},
        {"ep", "--p", "3"},
    };
    for (const auto& args : commands) {
      std::ostringstream first, second, err;
      const int a = cli::run(args, first, err);
      const int b = cli::run(args, second, err);
      expect(a == 0 && b == 0, "command '" + args.front() + "' failed: " + err.str());
      expect(first.str() == second.str(), "command '" + args.front() + "' is not deterministic");
    }
    return std::to_string(commands.size()) + " commands";
  });
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  Suite suite(options);
  const Box box = options.full ? Box{5, 3, {2, 3, 5}, kEnumerationGuard} : Box{4, 2, {2, 3}, 100'000};
  central_data_checks(suite, options.full ? Box{5, 3, {2, 3, 5}, 2'000'000} : box);
  counting_checks(suite, box);
  su_core_checks(suite, box);
  extraspecial_checks(suite);
  labels_checks(suite, box);
  cohomology_checks(suite, box);
  cli_checks(suite);
  return suite.take();
}

}  // namespace commtuple
