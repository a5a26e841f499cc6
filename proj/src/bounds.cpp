#include "xturan/bounds.hpp"

#include <cmath>
#include <sstream>

#include "xturan/error.hpp"

namespace xturan {

namespace {

constexpr double kCriticalTolerance = 1e-12;

double get(const BoundParams& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) fail(ErrorKind::InvalidParameter, "missing parameter '" + key + "'");
  return it->second;
}

double get_or(const BoundParams& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

int get_int(const BoundParams& params, const std::string& key) {
  double v = get(params, key);
  if (v != std::floor(v)) fail(ErrorKind::InvalidParameter, "parameter '" + key + "' must be an integer");
  return static_cast<int>(v);
}

double choose(double n, int k) {
  if (k < 0 || n < k) return 0.0;
  double out = 1.0;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

double positive(const BoundParams& params, const std::string& key) {
  double v = get(params, key);
  require(v > 0, "parameter '" + key + "' must be positive");
  return v;
}

// One-sided Zarankiewicz p-norm bound; `major` is the side whose p-norm is
// bounded (n for the left version, m for the right).
double zaran_a(const BoundParams& params, bool left) {
  const double m = positive(params, "m");
  const double n = positive(params, "n");
  const double p = get(params, "p");
  const double alpha = get(params, "alpha");
  const double beta = get(params, "beta");
  require(alpha > 0 && alpha < 1 && beta > 0 && beta < 1, "alpha and beta must lie in (0, 1)");
  require(p >= 1, "p must be at least 1");
  const double c = get_or(params, "c", 1.0);
  const double slack = get_or(params, "slack", 0.0);
  const double gap = 2 - alpha - beta;
  const double p_star = 1 / gap;
  const double lg = std::log2(left ? n : m);
  if (std::abs(p - p_star) <= kCriticalTolerance) {
    double main = left ? std::pow(m, 1 - p * (1 - alpha)) * std::pow(n, p * beta) + m + std::pow(n, p)
                       : std::pow(m, p * alpha) * std::pow(n, 1 - p * (1 - beta)) + std::pow(m, p) + n;
    return c * main * lg;
  }
  if (p < p_star) {
    const double delta = (1 - p * gap) / 2;
    const double log_power = (p_star - 1) / delta + 1;
    double main = left ? std::pow(m, 1 - p * (1 - alpha)) * std::pow(n, beta * p)
                       : std::pow(m, alpha * p) * std::pow(n, 1 - p * (1 - beta));
    double tail = left ? m + std::pow(n, p) : std::pow(m, p) + n;
    return c * (main + tail * std::pow(std::max(lg, 0.0), log_power));
  }
  const double tau = get(params, "tau_ind");
  return (tau - 1) * std::pow(left ? n : m, p) + slack * (std::pow(n, p) + std::pow(m, p));
}

}  // namespace

BoundProfile profile(const std::string& name) {
  BoundProfile b;
  b.name = name;
  if (name == "C4" || name == "K22" || name == "K2,2") {
    b.name = "C4";
    b.alpha = 0.5;
    b.beta = 0.5;
    b.ell = 2;
    b.s = 2;
  } else if (name == "C6") {
    b.alpha = 1.0 / 3;
    b.ell = 3;
  } else if (name == "K33" || name == "K3,3") {
    b.name = "K33";
    b.alpha = 2.0 / 3;
    b.beta = 2.0 / 3;
    b.tau_part = 3;
    b.tau_ind = 3;
    b.s = 3;
  } else {
    fail(ErrorKind::InvalidParameter, "unknown profile '" + name + "' (expected C4, C6 or K33)");
  }
  return b;
}

double threshold(int r, double alpha) {
  require(r >= 2, "r must be at least 2");
  if (!(alpha < r - 1)) fail(ErrorKind::InvalidParameter, "alpha must be below r - 1");
  return 1.0 / (r - 1 - alpha);
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Subcritical: return "subcritical";
    case Regime::Critical: return "critical";
    case Regime::Supercritical: return "supercritical";
  }
  return "?";
}

RegimeReport classify(const BoundProfile& profile, double p) {
  require(p >= 1, "p must be at least 1");
  require(profile.alpha >= profile.r - 2, "alpha must lie in [r-2, r-1)");
  require(profile.tau_ind <= profile.tau_part, "tau_ind must not exceed tau_part");
  const double p_star = threshold(profile.r, profile.alpha);
  RegimeReport out;
  out.p = p;
  std::ostringstream form;
  if (std::abs(p - p_star) <= kCriticalTolerance) {
    out.regime = Regime::Critical;
    out.exponent = p * (profile.r - 1);
    out.log_flag = true;
    form << "n^" << out.exponent << " log n";
  } else if (p < p_star) {
    out.regime = Regime::Subcritical;
    out.exponent = 1 + p * profile.alpha;
    form << "n^" << out.exponent;
  } else {
    out.regime = Regime::Supercritical;
    out.exponent = p * (profile.r - 1);
    out.constant = profile.tau_ind - 1;
    if (profile.r == 2) {
      form << "(" << *out.constant << " + o(1)) n^" << out.exponent;
    } else {
      out.constant_hi = profile.tau_part - 1;
      form << "[" << *out.constant << ", " << *out.constant_hi << "] C(n, " << profile.r - 1 << ")^" << p;
    }
  }
  out.form = form.str();
  return out;
}

std::vector<RegimeReport> phase_diagram(const BoundProfile& profile, const std::vector<double>& grid) {
  std::vector<RegimeReport> out;
  for (double p : grid) out.push_back(classify(profile, p));
  return out;
}

double sbounded_constant(int v, int s) {
  require(v >= 1 && s >= 1, "v and s must be positive");
  return 2 * (std::pow(v, s) / std::tgamma(s + 1.0) + v);
}

const std::vector<std::string>& bound_kinds() {
  static const std::vector<std::string> kinds = {
      "cor25_convexity", "thm12_supercritical", "thm13_critical", "thm14_cycles", "thm14_c6",
      "thm14_sbounded", "girth_LV", "zaran_NV_odd", "zaran_NV_even", "kst_zaran",
      "semibip", "zaranA_left", "zaranA_right"};
  return kinds;
}

double evaluate_bound(const std::string& kind, const BoundParams& params) {
  if (kind == "cor25_convexity") {
    const double n = positive(params, "n");
    return n * std::pow(get_or(params, "r", 2) * get(params, "ex") / n, get(params, "p"));
  }
  if (kind == "thm12_supercritical") {
    const double n = positive(params, "n");
    const int r = static_cast<int>(get_or(params, "r", 2));
    const double p = get(params, "p");
    const double tau = get(params, "tau_ind");
    const double slack = get_or(params, "slack", 0.0);
    return (tau - 1 + slack) * std::pow(std::pow(n, r - 1) / std::tgamma(r), p);
  }
  if (kind == "thm13_critical") {
    const double n = positive(params, "n");
    const int r = static_cast<int>(get_or(params, "r", 2));
    const double p_star = threshold(r, get(params, "alpha"));
    return get_or(params, "c", 1.0) * std::pow(n, p_star * (r - 1)) * std::log2(n);
  }
  if (kind == "thm14_cycles") {
    const int ell = get_int(params, "l");
    require(ell >= 3, "l must be at least 3");
    return 765 * std::pow(positive(params, "n"), static_cast<double>(ell) / (ell - 1));
  }
  if (kind == "thm14_c6") return 2162 * std::pow(positive(params, "n"), 1.5);
  if (kind == "thm14_sbounded") {
    const int s = get_int(params, "s");
    return sbounded_constant(get_int(params, "v"), s) * std::pow(positive(params, "n"), s);
  }
  if (kind == "girth_LV") {
    const int ell = get_int(params, "l");
    require(ell >= 2, "l must be at least 2");
    const double n = positive(params, "n");
    return 0.5 * std::pow(n, 1 + 1.0 / ell) + std::exp2(ell * ell) * n;
  }
  if (kind == "zaran_NV_odd" || kind == "zaran_NV_even") {
    const int ell = get_int(params, "l");
    require(ell >= 2, "l must be at least 2");
    const double m = positive(params, "m");
    const double n = positive(params, "n");
    const double main = kind == "zaran_NV_odd" ? std::pow(n * m, 0.5 + 1.0 / (2 * ell))
                                               : std::sqrt(n * m) * std::pow(m, 1.0 / ell);
    return 4 * (main + n + m);
  }
  if (kind == "kst_zaran") {
    const int r = static_cast<int>(get_or(params, "r", 2));
    return (get(params, "s1") - 1) * choose(positive(params, "n"), r - 1);
  }
  if (kind == "semibip") {
    const int r = get_int(params, "r");
    const double alpha = get(params, "alpha");
    return get(params, "c") * std::pow(positive(params, "m"), 1 + alpha - (r - 1)) *
           std::pow(positive(params, "n"), r - 1);
  }
  if (kind == "zaranA_left") return zaran_a(params, true);
  if (kind == "zaranA_right") return zaran_a(params, false);
  fail(ErrorKind::InvalidParameter, "unknown bound kind '" + kind + "'");
}

double slope_fit(const std::vector<std::pair<double, double>>& series) {
  require(series.size() >= 3, "slope fit needs at least 3 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [n, v] : series) {
    if (!(n > 0) || !(v > 0)) fail(ErrorKind::InvalidInput, "slope fit needs positive n and values");
    double x = std::log2(n), y = std::log2(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(series.size());
  const double den = k * sxx - sx * sx;
  require(den > 0, "slope fit needs at least two distinct n");
  return (k * sxy - sx * sy) / den;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidParameter, "bad grid '" + text + "' (expected a:b:step)");
    }
  }
  if (parts.size() == 1) return parts;
  require(parts.size() == 3 && parts[2] > 0 && parts[0] <= parts[1], "bad grid '" + text + "' (expected a:b:step)");
  std::vector<double> out;
  const int steps = static_cast<int>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
  for (int i = 0; i <= steps; ++i) out.push_back(parts[0] + i * parts[2]);
  for (double p : out) require(p >= 1, "grid values must be at least 1");
  return out;
}

}  // namespace xturan
