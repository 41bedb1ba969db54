#pragma once

// Numeric forms of the analytic inequalities used by the sparsifier analysis:
// f(x) = (1 - e^-x)/x, the allocation constant eta, the degree-allocation
// program F(d_u, d_v) and the augmenting-path linear program.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace stochmatch {

/// (1 - e^-x) / x, with f(0) = 1.
inline double f(double x) {
  if (x < 0.0 || std::isnan(x)) throw std::domain_error("f needs x >= 0");
  if (x < 1e-300) return 1.0;
  return -std::expm1(-x) / x;
}

/// f(1/e) * e^-2 * (1 - e^-1).
inline double eta() {
  const double e = std::numbers::e;
  return f(1.0 / e) / (e * e) * (1.0 - 1.0 / e);
}

inline constexpr double kBoundTolerance = 1e-12;

/// e^-x <= 1 - f(c) x for 0 <= x <= c.
inline bool check_prop_upper_exp(double x, double c) {
  if (!(x >= 0.0 && x <= c)) throw std::domain_error("need 0 <= x <= c");
  return std::exp(-x) <= 1.0 - f(c) * x + kBoundTolerance;
}

namespace detail {

inline bool prop_upper_exp2_holds(double x) {
  return std::pow(1.0 - x, 1.0 / x) >= (1.0 - x) / std::numbers::e - kBoundTolerance;
}

}  // namespace detail

/// (1 - x)^(1/x) >= (1 - x)/e for x in (0, 0.43].
inline bool check_prop_upper_exp2(double x) {
  if (!(x > 0.0 && x <= 0.43)) throw std::domain_error("need 0 < x <= 0.43");
  return detail::prop_upper_exp2_holds(x);
}

/// The same inequality on (0.43, 1]; reported, never asserted.
inline bool probe_prop_upper_exp2(double x) {
  if (!(x > 0.43 && x <= 1.0)) throw std::domain_error("probe covers (0.43, 1]");
  return detail::prop_upper_exp2_holds(x);
}

struct DegreeProfile {
  std::vector<int> du;
  std::vector<int> dv;
  int b = 1;

  void validate() const {
    if (du.size() != dv.size()) throw std::invalid_argument("du and dv differ in length");
    if (b < 1) throw std::invalid_argument("cap b must be positive");
    for (std::size_t i = 0; i < du.size(); ++i) {
      if (du[i] < 0 || du[i] > b || dv[i] < 0 || dv[i] > b) {
        throw std::invalid_argument("profile entry outside [0, b]");
      }
    }
  }
  int sum_u() const {
    int s = 0;
    for (int x : du) s += x;
    return s;
  }
  int sum_v() const {
    int s = 0;
    for (int x : dv) s += x;
    return s;
  }
};

/// f(1/e) p / e^2, the per-edge prefactor of F, times (1 - slack).
inline double mp_prefactor(double p, double slack = 0.0) {
  const double e = std::numbers::e;
  return (1.0 - slack) * f(1.0 / e) * p / (e * e);
}

/// F = prefactor * sum_i (1 - e^{-p dv_i}) max(du_i - 1, 0).
inline double mp_objective(const DegreeProfile& profile, double p, double slack = 0.0) {
  profile.validate();
  double s = 0.0;
  for (std::size_t i = 0; i < profile.du.size(); ++i) {
    s += -std::expm1(-p * profile.dv[i]) * std::max(profile.du[i] - 1, 0);
  }
  return mp_prefactor(p, slack) * s;
}

struct MpMinimum {
  double value = std::numeric_limits<double>::infinity();
  DegreeProfile argmin;
  bool feasible = false;
};

inline constexpr std::size_t kMpMaxStates = 20'000'000;

namespace detail {

// Visits every vector in {allowed}^k with the given sum.
inline void for_each_vector(int k, int sum, const std::vector<int>& allowed, std::vector<int>& cur,
                            const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(cur.size()) == k) {
    if (sum == 0) visit(cur);
    return;
  }
  const int left = k - static_cast<int>(cur.size()) - 1;
  const int hi = allowed.back();
  for (int a : allowed) {
    if (a > sum || sum - a > left * hi) continue;
    cur.push_back(a);
    for_each_vector(k, sum - a, allowed, cur, visit);
    cur.pop_back();
  }
}

inline void require_enumerable(int k, int b) {
  double states = std::pow(static_cast<double>(b + 1), 2.0 * k);
  if (k < 0 || b < 1 || states > static_cast<double>(kMpMaxStates)) {
    throw std::invalid_argument("MP enumeration too large for |M+|=" + std::to_string(k) +
                                ", b=" + std::to_string(b));
  }
}

// Minimum of F over du in du_values^k with sum dU, dv in dv_values^k with sum dV.
inline MpMinimum mp_min_restricted(int k, int b, int dU, int dV, double p, const std::vector<int>& du_values,
                                   const std::vector<int>& dv_values) {
  MpMinimum best;
  std::vector<std::vector<int>> us;
  std::vector<int> cur;
  for_each_vector(k, dU, du_values, cur, [&](const std::vector<int>& v) { us.push_back(v); });
  if (us.empty()) return best;
  cur.clear();
  const double pref = mp_prefactor(p);
  for_each_vector(k, dV, dv_values, cur, [&](const std::vector<int>& dv) {
    for (const auto& du : us) {
      double s = 0.0;
      for (int i = 0; i < k; ++i) s += -std::expm1(-p * dv[i]) * std::max(du[i] - 1, 0);
      const double value = pref * s;
      if (!best.feasible || value < best.value) {
        best.value = value;
        best.argmin = {du, dv, b};
        best.feasible = true;
      }
    }
  });
  return best;
}

inline std::vector<int> range_values(int b) {
  std::vector<int> v(b + 1);
  for (int i = 0; i <= b; ++i) v[i] = i;
  return v;
}

}  // namespace detail

/// Exact minimum of F over profiles with sum(du) = dU and sum(dv) = dV.
inline MpMinimum mp_bruteforce_min_split(int k, int b, int dU, int dV, double p) {
  detail::require_enumerable(k, b);
  return detail::mp_min_restricted(k, b, dU, dV, p, detail::range_values(b), detail::range_values(b));
}

/// Exact minimum of F over all profiles with |M+| = k entries, caps b and
/// sum(du) + sum(dv) = total.
inline MpMinimum mp_bruteforce_min(int k, int b, int total, double p) {
  detail::require_enumerable(k, b);
  if (total < 0 || total > 2 * k * b) throw std::invalid_argument("|C| infeasible for the caps");
  MpMinimum best;
  for (int dU = 0; dU <= total; ++dU) {
    auto m = mp_bruteforce_min_split(k, b, dU, total - dU, p);
    if (m.feasible && (!best.feasible || m.value < best.value)) best = m;
  }
  return best;
}

/// Minimum of F over profiles with du entries in {1, b} and dv entries in
/// {0, b} and the given sums.
inline MpMinimum mp_two_values_min(int k, int b, int dU, int dV, double p) {
  detail::require_enumerable(k, b);
  return detail::mp_min_restricted(k, b, dU, dV, p, {1, b}, {0, b});
}

/// True iff (k, b, dU, dV) satisfies the normalization of the two-values
/// structure: b >= 2, k <= dU <= k b, (dU - k) divisible by b - 1,
/// dV divisible by b and dV <= k b.
inline bool two_values_side_conditions(int k, int b, int dU, int dV) {
  return b >= 2 && dU >= k && dU <= k * b && (dU - k) % (b - 1) == 0 && dV >= 0 && dV % b == 0 && dV <= k * b;
}

/// Compares the exact minimum with the two-values minimum; true iff they
/// agree to a relative 1e-12 (some minimizer has the two-values form).
inline bool check_two_values(int k, int b, int dU, int dV, double p) {
  auto full = mp_bruteforce_min_split(k, b, dU, dV, p);
  auto two = mp_two_values_min(k, b, dU, dV, p);
  if (!full.feasible || !two.feasible) return false;
  return std::fabs(full.value - two.value) <= 1e-12 * std::max(1.0, std::fabs(full.value));
}

/// (p |C| - |M+|) eta - slack_term.
inline double mp_lower_bound(double c_size, double mplus_size, double p, double slack_term = 0.0) {
  return (p * c_size - mplus_size) * eta() - slack_term;
}

/// Bound implied by the two-values structure before the asymptotic
/// simplifications: every profile with sums (dU, dV) meeting the side
/// conditions has at least (dU - k)/(b - 1) + dV/b - k saturated pairs.
inline double mp_structural_bound(int k, int b, int dU, int dV, double p) {
  const double pairs = static_cast<double>(dU - k) / (b - 1) + static_cast<double>(dV) / b - k;
  return mp_prefactor(p) * -std::expm1(-p * b) * (b - 1) * std::max(0.0, pairs);
}

namespace detail {

inline void check_lp_params(double p, double delta, double eps, double opt) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in (0, 1]");
  if (delta < 0.0 || eps < 0.0 || opt < 0.0) throw std::invalid_argument("delta, eps, opt must be nonnegative");
  if (delta + eps > 0.5) throw std::invalid_argument("LP infeasible: delta + eps > 1/2");
}

}  // namespace detail

/// Closed-form minimum of p a1 + p^2 a3 subject to 2 a1 + a3 >= (1/2 + 3 delta + 3 eps) opt.
inline double lp_min_value(double p, double delta, double eps, double opt) {
  detail::check_lp_params(p, delta, eps, opt);
  if (p <= 0.5) return (0.5 + 3 * delta + 3 * eps) * opt * p * p;
  return (0.25 + 1.5 * delta + 1.5 * eps) * p * opt;
}

/// A linear constraint a.x (<= or >=) rhs over three variables.
struct LpConstraint {
  std::array<double, 3> a;
  bool at_most;
  double rhs;
};

/// Minimum of c.x over x >= 0 satisfying every constraint, by enumerating
/// the vertices of the polyhedron. Assumes the minimum is attained.
inline double solve_small_lp(const std::array<double, 3>& c, const std::vector<LpConstraint>& cons) {
  std::vector<LpConstraint> all = cons;
  for (int i = 0; i < 3; ++i) {
    std::array<double, 3> a{0, 0, 0};
    a[i] = 1.0;
    all.push_back({a, false, 0.0});
  }
  auto feasible = [&](const std::array<double, 3>& x) {
    for (const auto& k : all) {
      const double lhs = k.a[0] * x[0] + k.a[1] * x[1] + k.a[2] * x[2];
      const double tol = 1e-12 * std::max(1.0, std::fabs(k.rhs));
      if (k.at_most ? lhs > k.rhs + tol : lhs < k.rhs - tol) return false;
    }
    return true;
  };
  double best = std::numeric_limits<double>::infinity();
  const std::size_t m = all.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        const auto& A = all[i].a;
        const auto& B = all[j].a;
        const auto& C = all[k].a;
        const double det = A[0] * (B[1] * C[2] - B[2] * C[1]) - A[1] * (B[0] * C[2] - B[2] * C[0]) +
                           A[2] * (B[0] * C[1] - B[1] * C[0]);
        if (std::fabs(det) < 1e-14) continue;
        // Cramer's rule.
        const double r0 = all[i].rhs, r1 = all[j].rhs, r2 = all[k].rhs;
        std::array<double, 3> x{
            (r0 * (B[1] * C[2] - B[2] * C[1]) - A[1] * (r1 * C[2] - B[2] * r2) + A[2] * (r1 * C[1] - B[1] * r2)) / det,
            (A[0] * (r1 * C[2] - B[2] * r2) - r0 * (B[0] * C[2] - B[2] * C[0]) + A[2] * (B[0] * r2 - r1 * C[0])) / det,
            (A[0] * (B[1] * r2 - r1 * C[1]) - A[1] * (B[0] * r2 - r1 * C[0]) + r0 * (B[0] * C[1] - B[1] * C[0])) / det};
        if (!feasible(x)) continue;
        best = std::min(best, c[0] * x[0] + c[1] * x[1] + c[2] * x[2]);
      }
    }
  }
  if (!std::isfinite(best)) throw std::invalid_argument("LP has no feasible vertex");
  return best;
}

/// Exact minimum over (a1, a3, a5) of the relaxed single-constraint program.
inline double lp_relaxed_exact(double p, double delta, double eps, double opt) {
  detail::check_lp_params(p, delta, eps, opt);
  return solve_small_lp({p, p * p, 0.0}, {{{2.0, 1.0, 0.0}, false, (0.5 + 3 * delta + 3 * eps) * opt}});
}

/// Exact minimum of the original two-constraint program:
/// a3 + 2 a5 <= (1/2 - delta - eps) opt and a1 + a3 + a5 >= (1/2 + delta + eps) opt.
inline double lp_original_exact(double p, double delta, double eps, double opt) {
  detail::check_lp_params(p, delta, eps, opt);
  return solve_small_lp({p, p * p, 0.0}, {{{0.0, 1.0, 2.0}, true, (0.5 - delta - eps) * opt},
                                          {{1.0, 1.0, 1.0}, false, (0.5 + delta + eps) * opt}});
}

}  // namespace stochmatch
