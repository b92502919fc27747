// One line per acceptance criterion; exit status is nonzero if any fails.
// Usage: acceptance <path to commtuple binary>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "commtuple/cohomology.hpp"
#include "commtuple/counting.hpp"
#include "commtuple/extraspecial.hpp"
#include "commtuple/labels.hpp"

using namespace commtuple;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
};

std::string params_str(const GroupParams& p) {
  return "(n=" + std::to_string(p.n) + ", m=" + std::to_string(p.m) + ", p=" + std::to_string(p.p) + ")";
}

Outcome component_counts() {
  Outcome o;
  for (int p : {2, 3, 5}) {
    for (int n = 1; n <= 5; ++n) {
      for (int m = 1; m <= 3; ++m) {
        const GroupParams params{n, m, p};
        const BigInt closed = count_closed_form(params);
        o.require(closed == count_recurrence(params), "recurrence differs at " + params_str(params));
        if (antisym_count(n, p) <= kEnumerationGuard) {
          o.require(closed == count_enumeration(params), "enumeration differs at " + params_str(params));
        }
      }
    }
  }
  for (int p : {2, 3, 5}) {
    for (int m = 1; m <= 3; ++m) o.require(count_closed_form({2, m, p}) == p, "N(2,m,p) != p");
  }
  o.require(count_closed_form({3, 1, 2}) == 8, "N(3,1,2) != 8");
  o.require(count_closed_form({4, 1, 2}) == 36, "N(4,1,2) != 36");
  o.require(count_closed_form({3, 2, 2}) == 15, "N(3,2,2) != 15");
  o.require(count_closed_form({3, 1, 3}) == 27, "N(3,1,3) != 27");
  o.require(count_closed_form({4, 2, 2}) == 141, "N(4,2,2) != 141");
  return o;
}

Outcome literature_cross_check() {
  Outcome o;
  for (int n = 1; n <= 20; ++n) {
    o.require(count_closed_form({n, 1, 2}) - 1 == torres_giese(n), "mismatch at n=" + std::to_string(n));
  }
  return o;
}

Outcome extraspecial_structure() {
  Outcome o;
  for (int p : {2, 3, 5}) {
    const auto g = build_extraspecial(p);
    o.require(g.order() == static_cast<std::size_t>(p * p * p), "order wrong for p=" + std::to_string(p));
    o.require(center_of(g).size() == static_cast<std::size_t>(p), "center wrong for p=" + std::to_string(p));
    const auto report = verify_presentation(g);
    o.require(report.max_residual() < 1e-10, "presentation residual " + std::to_string(report.max_residual()));
    if (p > 2) {
      for (const auto& e : g.elements()) {
        const double r = (unitary_power(e, p) - ComplexMatrix::Identity(p, p)).norm();
        o.require(r < 1e-10, "exponent check fails for p=" + std::to_string(p));
      }
    }
  }
  return o;
}

Outcome label_round_trip() {
  Outcome o;
  for (int p : {2, 3}) {
    for (int n = 1; n <= 4; ++n) {
      for (int m = 1; m <= 2; ++m) {
        const GroupParams params{n, m, p};
        const auto labels = enumerate_labels(params);
        o.require(BigInt(labels.size()) == count_closed_form(params), "label count differs at " + params_str(params));
        for (const auto& label : labels) {
          o.require(classify(representative(label, params)) == label, "round trip fails at " + params_str(params));
        }
      }
    }
  }
  return o;
}

Outcome conjugation_invariance() {
  Outcome o;
  // 20 tuples: identity-component tuples and representatives spread over the box
  std::vector<UnitaryTuple> tuples;
  const std::vector<GroupParams> boxes{{2, 1, 2}, {3, 1, 2}, {3, 2, 2}, {2, 2, 3}, {3, 1, 3}, {3, 2, 3}};
  std::uint64_t identity_seed = 0;
  for (const auto& params : boxes) {
    tuples.push_back(random_identity_tuple(params, 1000 + identity_seed++));
    const auto labels = enumerate_labels(params);
    for (std::size_t i = 1; i < labels.size() && tuples.size() < 20; i += labels.size() / 2 + 1) {
      tuples.push_back(representative(labels[i], params));
    }
  }
  while (tuples.size() < 20) tuples.push_back(random_identity_tuple({3, 2, 3}, 2000 + tuples.size()));
  o.require(tuples.size() == 20, "expected 20 tuples");

  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const UnitaryTuple& t = tuples[i];
    const auto& params = t.params();
    const ComponentLabel label = classify(t);
    const AntisymMatrix c = commutator_class(t);
    const bool identity = label.is_identity();
    const std::optional<RepPoint> point = identity ? std::optional(canonical_rep_point(t)) : std::nullopt;
    for (std::uint64_t s = 0; s < 100; ++s) {
      const auto g = random_su_factors(params.p, params.m, derive_seed(i, s));
      const UnitaryTuple moved = t.conjugated(g);
      o.require(classify(moved) == label, "label changed for tuple " + std::to_string(i));
      o.require(commutator_class(moved) == c, "class changed for tuple " + std::to_string(i));
      if (point) {
        const double d = rep_point_distance(*point, canonical_rep_point(moved));
        o.require(d < 1e-7, "rep point moved by " + std::to_string(d));
      }
    }
  }
  return o;
}

GradedSeries odd_spheres(int p, int m) {
  GradedSeries out = GradedSeries::constant(1);
  for (int i = 2; i <= p; ++i) out = out * (GradedSeries::constant(1) + GradedSeries::monomial(1, 2 * i - 1));
  return out.pow(static_cast<unsigned>(m));
}

Outcome cohomology() {
  Outcome o;
  for (int p : {2, 3, 5}) {
    for (int m = 1; m <= 3; ++m) {
      o.require(poincare_identity_component({1, m, p}) == odd_spheres(p, m), "n=1 mismatch");
    }
  }
  const auto two = poincare_identity_component({2, 1, 2});
  o.require(two == parse_series("1 + t^2 + 2t^3"), "P(2,1,2) = " + two.to_string());
  for (int p : {2, 3, 5}) {
    for (int n = 1; n <= 4; ++n) {
      for (int m = 1; m <= 3; ++m) {
        const auto s = poincare_identity_component({n, m, p});
        o.require(s.evaluate(Rational(-1)) == 0, "nonzero Euler characteristic");
        o.require(s.has_nonnegative_integer_coeffs(), "non-integral coefficients");
      }
    }
  }
  return o;
}

struct Captured {
  int status = -1;
  std::string output;
};

Captured capture(const std::string& command) {
  Captured c;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return c;
  char buffer[4096];
  std::size_t got;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) c.output.append(buffer, got);
  const int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

Outcome cli_determinism(const std::string& cli) {
  Outcome o;
  const std::string command = "\"" + cli + "\" verify --full --seed 7";
  const Captured first = capture(command);
  const Captured second = capture(command);
  o.require(first.status == 0, "first run exited " + std::to_string(first.status));
  o.require(second.status == 0, "second run exited " + std::to_string(second.status));
  o.require(!first.output.empty() && first.output == second.output, "outputs differ");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <commtuple binary>\n";
    return 2;
  }
  const std::string cli = argv[1];

  struct Criterion {
    std::string name;
    double limit_seconds;
    std::function<Outcome()> body;
  };
  const std::vector<Criterion> criteria{
      {"AC1 component counts agree", 30, component_counts},
      {"AC2 Torres-Giese cross-check", 1, literature_cross_check},
      {"AC3 extraspecial structure", 10, extraspecial_structure},
      {"AC4 label round trip", 60, label_round_trip},
      {"AC5 conjugation invariance", 60, conjugation_invariance},
      {"AC6 cohomology", 5, cohomology},
      {"AC7 CLI determinism", 300, [&] { return cli_determinism(cli); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= c.limit_seconds) o.require(false, "runtime over " + std::to_string(static_cast<int>(c.limit_seconds)) + " s");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.passed ? "PASS " : "FAIL ") << c.name << "  (" << elapsed << " s)";
    if (!o.passed) line << "  " << o.detail;
    std::cout << line.str() << std::endl;
    if (!o.passed) ++failures;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
