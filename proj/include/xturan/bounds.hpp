#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace xturan {

struct BoundProfile {
  std::string name;
  int r = 2;
  double alpha = 0.5;  // ex(n, F) = O(n^(1 + alpha))
  std::optional<double> beta;
  int tau_part = 2;
  int tau_ind = 2;
  std::optional<double> c;
  std::optional<int> ell;
  std::optional<int> s;
};

// C4, C6, K33 (and K22 as an alias of C4). Throws InvalidParameter otherwise.
BoundProfile profile(const std::string& name);

// 1 / (r - 1 - alpha).
double threshold(int r, double alpha);

enum class Regime { Subcritical, Critical, Supercritical };
const char* to_string(Regime r);

struct RegimeReport {
  double p = 1.0;
  Regime regime = Regime::Subcritical;
  double exponent = 0.0;
  bool log_flag = false;
  // Supercritical only: leading constant. For r = 2 it is tau_ind - 1; for
  // r >= 3 only the interval [tau_ind - 1, tau_part - 1] is known.
  std::optional<double> constant;
  std::optional<double> constant_hi;
  std::string form;
};

RegimeReport classify(const BoundProfile& profile, double p);

std::vector<RegimeReport> phase_diagram(const BoundProfile& profile, const std::vector<double>& grid);

// Kinds: cor25_convexity, thm12_supercritical, thm13_critical, thm14_cycles,
// thm14_c6, thm14_sbounded, girth_LV, zaran_NV_odd, zaran_NV_even, kst_zaran,
// semibip, zaranA_left, zaranA_right. Missing or invalid parameters throw
// InvalidParameter.
using BoundParams = std::map<std::string, double>;
double evaluate_bound(const std::string& kind, const BoundParams& params);
const std::vector<std::string>& bound_kinds();

// The leading constant 2 (v^s / s! + v) for an s-bounded pattern on v vertices.
double sbounded_constant(int v, int s);

// Least-squares slope of log2(value) against log2(n). Needs >= 3 points.
double slope_fit(const std::vector<std::pair<double, double>>& series);

// "a:b:step" inclusive grid.
std::vector<double> parse_grid(const std::string& text);

}  // namespace xturan
