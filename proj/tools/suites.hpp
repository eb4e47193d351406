#pragma once

// Verification suites driven by `qmhs verify`. Each suite expands into
// independent tasks; running them through parallel_map keeps report order
// fixed whatever the number of workers.

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qmhs.hpp"

namespace qmhs::cli {

struct SuiteRanges {
  std::optional<int> n_max;
  std::optional<int> cap;
  std::optional<int> k_max;
  std::optional<int> r_max;
};

using Task = std::function<std::vector<VerificationReport>()>;

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thm11", "thm12", "sumformula", "phi", "polylog", "xi", "all"};
  return names;
}

namespace detail {

inline VerificationReport rational_report(std::string suite, std::vector<std::pair<std::string, ParamValue>> params,
                                          const Rational& lhs, const Rational& rhs,
                                          std::chrono::steady_clock::time_point start) {
  return make_report(std::move(suite), std::move(params), lhs == rhs, to_string(lhs), to_string(rhs), start);
}

inline void kkk_tasks(std::vector<Task>& tasks, const SuiteRanges& g) {
  const int n_max = g.n_max.value_or(20);
  for (int n = 2; n <= n_max; ++n)
    tasks.push_back([n] {
      std::vector<VerificationReport> out;
      ExactBackend backend(n);
      for (int k = 1; k <= 3; ++k)
        for (int r = 1; r <= std::min(6, n - 1); ++r) {
          const auto start = std::chrono::steady_clock::now();
          const CycloElem lhs = zbar(repeated(k, r), backend);
          const Rational rhs = kkk_closed(k, r, n);
          out.push_back(make_report("kkk-closed", {{"n", n}, {"k", k}, {"r", r}}, lhs == CycloElem(rhs), to_string(lhs),
                                    to_string(rhs), start));
        }
      return out;
    });

  const int general_n = std::min(n_max, 10);
  const int r_max = g.r_max.value_or(4);
  for (int k = 1; k <= g.k_max.value_or(5); ++k)
    tasks.push_back([k, general_n, r_max] {
      std::vector<VerificationReport> out;
      const KkkTable table = kkk_general(k, general_n, r_max);
      for (int n = 2; n <= general_n; ++n) {
        ExactBackend backend(n);
        for (int r = 1; r <= r_max; ++r) {
          const auto start = std::chrono::steady_clock::now();
          const CycloElem direct = zbar(repeated(k, r), backend);
          out.push_back(make_report("kkk-general", {{"n", n}, {"k", k}, {"r", r}}, direct == CycloElem(table.at(n, r)),
                                    to_string(direct), to_string(table.at(n, r)), start));
        }
      }
      return out;
    });

  tasks.push_back([] {
    std::vector<VerificationReport> out;
    const BiPoly X = BiPoly::X(), Y = BiPoly::Y(), one(Rational(1));
    const BiPoly m = one - Y;
    const std::vector<std::tuple<int, int, BiPoly>> expected{
        {1, 0, m},           {1, 1, one - (one + X) * Y}, {2, 0, m},         {2, 1, m * m + X * Y},
        {2, 2, m},           {3, 0, m},                   {3, 1, m * m * m - X * Y},
        {3, 2, m * m * m + X * Y * Y},                    {3, 3, m}};
    for (const auto& [k, l, want] : expected) {
      const auto start = std::chrono::steady_clock::now();
      const BiPoly got = exterior_F(k, l);
      out.push_back(make_report("exterior-F", {{"k", k}, {"l", l}}, got == want, got.to_string(), want.to_string(), start));
    }
    return out;
  });
}

inline void ohno_zagier_tasks(std::vector<Task>& tasks, const SuiteRanges& g) {
  const int cap = g.cap.value_or(6);
  for (int n = 1; n <= g.n_max.value_or(10); ++n) tasks.push_back([n, cap] { return verify_height_generating_function(n, cap); });
}

inline void sum_formula_tasks(std::vector<Task>& tasks, const SuiteRanges& g) {
  const int k_max = g.k_max.value_or(8);
  for (int n = 2; n <= g.n_max.value_or(15); ++n)
    tasks.push_back([n, k_max] {
      std::vector<VerificationReport> out;
      for (int r = 1; r < std::min(n, 6); ++r)
        for (int k = r; k <= k_max; ++k) out.push_back(sum_formula_check(n, k, r));
      return out;
    });
}

inline void phi_tasks(std::vector<Task>& tasks, const SuiteRanges& g) {
  const int cap = g.cap.value_or(4);
  for (int n = 2; n <= g.n_max.value_or(6); ++n) tasks.push_back([n, cap] { return verify_phi_routes(n, cap); });
}

inline void polylog_tasks(std::vector<Task>& tasks, const SuiteRanges& g) {
  const int cap = g.cap.value_or(4);
  for (int n = 2; n <= g.n_max.value_or(8); ++n)
    tasks.push_back([n, cap] {
      std::vector<VerificationReport> out = verify_dq_recursions(n, cap);
      for (int k = 1; k <= cap; ++k)
        for (int r = 1; r <= k; ++r)
          for (const Index& idx : enumerate(k, r))
            for (bool star : {false, true}) out.push_back(verify_polylog_at_one(idx, n, star));
      return out;
    });
}

inline void xi_tasks(std::vector<Task>& tasks, const SuiteRanges& g) {
  const int cap = g.cap.value_or(8);
  tasks.push_back([cap] {
    std::vector<VerificationReport> out;
    const auto kernel = tilde_U(cap);
    // Exponent of x^{k-r-s} y^{r-s} z^s.
    const auto at = [&](int k, int r, int s) { return kernel.coeff({k - r - s, r - s, s}); };
    for (int k = 1; k <= cap; ++k) {
      const auto start = std::chrono::steady_clock::now();
      const int s = k >= 2 ? 1 : 0;
      out.push_back(rational_report("xi-depth-one", {{"k", k}}, at(k, 1, s), xi_closed_depth1(k).coeff, start));
    }
    for (int r = 1; r <= cap; ++r) {
      const auto start = std::chrono::steady_clock::now();
      out.push_back(rational_report("xi-kkk", {{"k", 1}, {"r", r}}, at(r, r, 0), xi_kkk(1, r).coeff, start));
    }
    for (int r = 1; 2 * r <= cap; ++r) {
      const auto start = std::chrono::steady_clock::now();
      out.push_back(rational_report("xi-kkk", {{"k", 2}, {"r", r}}, at(2 * r, r, r), xi_kkk(2, r).coeff, start));
    }
    {
      // (3) is the only index of its profile; {3}^r for r >= 2 shares its
      // profile with other indices and is checked through the closed form.
      const auto start = std::chrono::steady_clock::now();
      out.push_back(rational_report("xi-kkk", {{"k", 3}, {"r", 1}}, at(3, 1, 1), xi_kkk(3, 1).coeff, start));
    }
    for (int k = 1; k <= 3; ++k)
      for (int r = 1; r <= 3; ++r) {
        const auto start = std::chrono::steady_clock::now();
        const XiClosed limit = xi_kkk_from_closed(k, r), closed = xi_kkk(k, r);
        out.push_back(make_report("xi-kkk-limit", {{"k", k}, {"r", r}}, limit == closed, limit.to_string(),
                                  closed.to_string(), start));
      }
    for (int k = 1; k <= cap; ++k)
      for (int r = 1; r <= k; ++r) {
        const auto start = std::chrono::steady_clock::now();
        Rational row = 0;
        for (int s = 0; s <= r && r + s <= k; ++s) row += at(k, r, s);
        const XiClosed formula = xi_sum_formula(k, r);
        const XiClosed middle = xi_sum_intermediate(k, r);
        out.push_back(make_report("xi-sum-formula", {{"k", k}, {"r", r}}, row == formula.coeff && formula == middle,
                                  to_string(row), formula.to_string(), start));
      }
    const auto star = tilde_U_star(cap);
    for (int k = 1; k <= cap; ++k) {
      const auto start = std::chrono::steady_clock::now();
      const int s = k >= 2 ? 1 : 0;
      const Exponent e{k - 1 - s, 1 - s, s};
      out.push_back(rational_report("xi-star-depth-one", {{"k", k}}, star.coeff(e), kernel.coeff(e), start));
    }
    return out;
  });
  const int n_max = g.n_max.value_or(50);
  for (int n = 2; n <= n_max; ++n)
    tasks.push_back([n] {
      std::vector<VerificationReport> out;
      ExactBackend exact(n);
      ComplexBackend numeric(n);
      for (int k = 1; k <= 4; ++k)
        for (int r = 1; r <= k; ++r)
          for (const Index& idx : enumerate(k, r))
            for (Chain chain : {Chain::strict, Chain::nonstrict}) {
              const auto start = std::chrono::steady_clock::now();
              const std::complex<double> want = to_complex(nested_sum(idx, exact, chain));
              const std::complex<double> got = nested_sum(idx, numeric, chain);
              const bool ok = std::abs(got - want) < 1e-10;
              char lhs[96], rhs[96];
              std::snprintf(lhs, sizeof lhs, "%.17g%+.17gi", got.real(), got.imag());
              std::snprintf(rhs, sizeof rhs, "%.17g%+.17gi", want.real(), want.imag());
              out.push_back(make_report(
                  "numeric-vs-exact",
                  {{"n", n}, {"index", idx.to_string()}, {"star", std::string(chain == Chain::nonstrict ? "true" : "false")}},
                  ok, lhs, rhs, start));
            }
      return out;
    });
}

}  // namespace detail

/// Expands a suite name into tasks. Throws std::invalid_argument for an
/// unknown name.
inline std::vector<Task> suite_tasks(const std::string& name, const SuiteRanges& ranges) {
  std::vector<Task> tasks;
  const bool all = name == "all";
  bool known = all;
  if (all || name == "thm11") detail::kkk_tasks(tasks, ranges), known = true;
  if (all || name == "thm12") detail::ohno_zagier_tasks(tasks, ranges), known = true;
  if (all || name == "sumformula") detail::sum_formula_tasks(tasks, ranges), known = true;
  if (all || name == "phi") detail::phi_tasks(tasks, ranges), known = true;
  if (all || name == "polylog") detail::polylog_tasks(tasks, ranges), known = true;
  if (all || name == "xi") detail::xi_tasks(tasks, ranges), known = true;
  if (!known) throw std::invalid_argument("unknown suite '" + name + "'");
  return tasks;
}

inline std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  const auto batches = parallel_map(tasks, [](const Task& t) { return t(); }, jobs);
  std::vector<VerificationReport> out;
  for (const auto& batch : batches) out.insert(out.end(), batch.begin(), batch.end());
  return out;
}

}  // namespace qmhs::cli
