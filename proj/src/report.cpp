#include "tfu/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace tfu {
namespace {

Json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string scalar_text(const Json& j) {
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number_unsigned()) return std::to_string(j.get<unsigned long long>());
  if (j.is_number_float()) return format_double(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "null";
  return j.dump();
}

bool all_scalars(const Json& arr) {
  for (const auto& e : arr)
    if (e.is_structured()) return false;
  return true;
}

bool is_matrix(const Json& arr) {
  if (arr.empty()) return false;
  for (const auto& e : arr)
    if (!e.is_array() || !all_scalars(e)) return false;
  return true;
}

void flatten(const Json& j, const std::string& key, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), key.empty() ? it.key() : key + "." + it.key(), out);
    return;
  }
  if (j.is_array()) {
    if (all_scalars(j)) {
      out << key << "=";
      bool first = true;
      for (const auto& e : j) {
        out << (first ? "" : ",") << scalar_text(e);
        first = false;
      }
      out << "\n";
    } else if (is_matrix(j)) {
      out << key << "=";
      bool first_row = true;
      for (const auto& row : j) {
        out << (first_row ? "" : ";");
        bool first = true;
        for (const auto& e : row) {
          out << (first ? "" : ",") << scalar_text(e);
          first = false;
        }
        first_row = false;
      }
      out << "\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], key + "." + std::to_string(i), out);
    }
    return;
  }
  out << key << "=" << scalar_text(j) << "\n";
}

Json numbers(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

}  // namespace

Json to_json(const Grid& g) {
  return Json{{"dim", g.dim()}, {"half_extent", g.half_extent()}, {"points_per_axis", g.points_per_axis()},
              {"spacing", g.spacing()}};
}

Json to_json(const Eigen::MatrixXd& m) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(number(m(i, j)));
    a.push_back(std::move(row));
  }
  return a;
}

Json to_json(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(number(v(i)));
  return a;
}

Json to_json(const FunctionalTrace& t) {
  Json j;
  j["radii"] = numbers(t.radii);
  j["values"] = numbers(t.values);
  j["growth_exponent"] = number(t.growth_exponent);
  j["verdict"] = to_string(t.verdict);
  return j;
}

Json to_json(const HeisenbergReport& r) {
  Json j;
  j["factor1"] = number(r.factor1);
  j["factor2"] = number(r.factor2);
  j["product"] = number(r.product);
  j["bound"] = number(r.bound);
  j["ratio"] = number(r.ratio);
  j["direction"] = r.direction;
  j["center_a"] = number(r.center_a);
  j["center_b"] = number(r.center_b);
  return j;
}

Json to_json(const CovarianceReport& r) {
  Json j;
  j["mean_x"] = to_json(r.mean_x);
  j["mean_y"] = to_json(r.mean_y);
  j["V_X"] = to_json(r.v_x);
  j["V_Y"] = to_json(r.v_y);
  j["cross_cov"] = to_json(r.cross_cov);
  j["gap_matrix"] = to_json(r.gap_matrix);
  j["gap_eigenvalues"] = to_json(r.gap_eigenvalues);
  j["min_eigenvalue"] = number(r.min_eigenvalue);
  j["det_product"] = number(r.det_product);
  j["det_bound"] = number(r.det_bound);
  j["det_bound_sharp"] = number(r.det_bound_sharp);
  j["trace_report"] = Json{{"trace_x", number(r.trace_x)},
                           {"trace_y", number(r.trace_y)},
                           {"product", number(r.trace_product)},
                           {"bound", number(r.trace_bound)}};
  j["total_mass"] = number(r.total_mass);
  j["norm_product_sq"] = number(r.norm_product_sq);
  j["correlated"] = r.correlated;
  j["semidefinite"] = r.semidefinite;
  j["equality_case"] = r.equality_case;
  return j;
}

Json to_json(const CowlingPriceResult& r) {
  Json j;
  j["f_trace"] = to_json(r.f_trace);
  j["fhat_trace"] = to_json(r.fhat_trace);
  j["ab"] = number(r.ab);
  j["both_finite_allowed"] = r.both_finite_allowed;
  j["both_convergent"] = r.both_convergent;
  return j;
}

Json to_json(const GelfandShilovResult& r) {
  Json j;
  j["x_trace"] = to_json(r.x_trace);
  j["y_trace"] = to_json(r.y_trace);
  j["p"] = number(r.p);
  j["q"] = number(r.q);
  j["critical"] = number(r.critical);
  j["ab"] = number(r.ab);
  j["regime"] = r.regime;
  return j;
}

Json to_json(const GelfandShilovAmbiguityResult& r) {
  Json j;
  j["x_trace"] = to_json(r.x_trace);
  j["y_trace"] = to_json(r.y_trace);
  j["p"] = number(r.p);
  j["q"] = number(r.q);
  j["critical"] = number(r.critical);
  j["ab"] = number(r.ab);
  j["regime"] = r.regime;
  return j;
}

Json to_json(const HardyResult& r) {
  Json j;
  j["envelope_ok_f"] = r.envelope_ok_f;
  j["envelope_ok_fhat"] = r.envelope_ok_fhat;
  j["C_f"] = number(r.c_f);
  j["C_fhat"] = number(r.c_fhat);
  j["envelope_slope_f"] = number(r.envelope_slope_f);
  j["envelope_slope_fhat"] = number(r.envelope_slope_fhat);
  j["case"] = r.hardy_case;
  return j;
}

Json to_json(const HbaResult& r) {
  Json j;
  j["joint"] = to_json(r.joint);
  j["marginal_x"] = to_json(r.marginal_x);
  j["marginal_y"] = to_json(r.marginal_y);
  return j;
}

Json to_json(const DetectionResult& r) {
  Json j;
  j["is_gauss_hermite"] = r.is_gauss_hermite;
  j["A_est"] = to_json(r.a_est);
  j["degree_est"] = r.degree_est;
  j["residual"] = number(r.residual);
  Json v;
  for (const auto& [n, verdict] : r.bh_verdicts) v[format_double(n)] = to_string(verdict);
  j["bh_verdicts"] = v;
  j["bh_consistent"] = r.bh_consistent;
  j["bh_overflow"] = r.bh_overflow;
  j["chirp_detected"] = r.chirp_detected;
  j["chirp_est"] = to_json(r.chirp_est);
  j["A_initial"] = to_json(r.a_initial);
  j["fit_points"] = r.fit_points;
  return j;
}

Json to_json(const EqualityProbe& r) {
  Json j;
  j["is_equality_pair"] = r.is_equality_pair;
  j["evidence"] = to_json(r.evidence);
  if (r.detect_u) j["detect_u"] = to_json(*r.detect_u);
  if (r.detect_v) j["detect_v"] = to_json(*r.detect_v);
  return j;
}

Json to_json(const Lem0Report& r) {
  Json j;
  j["shift"] = number(r.shift);
  j["modulation"] = number(r.modulation);
  j["dilation"] = number(r.dilation);
  j["reflection"] = number(r.reflection);
  j["fourier"] = number(r.fourier);
  j["hermitian"] = number(r.hermitian);
  j["dilation_lossy"] = r.dilation_lossy;
  Json c = Json::array();
  for (auto n : r.compared) c.push_back(n);
  j["compared"] = c;
  return j;
}

Json to_json(const IdentityCheck& r) { return Json{{"max_error", number(r.max_error)}, {"compared", r.compared}}; }

Json to_json(const MoyalNorms& r) {
  const double gap = std::abs(r.surface_norm - r.product_norm);
  return Json{{"surface_norm", number(r.surface_norm)},
              {"product_norm", number(r.product_norm)},
              {"gap", number(gap)},
              {"relative_gap", number(r.product_norm > 0 ? gap / r.product_norm : gap)}};
}

std::string to_text(const Json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

std::string to_json_text(const Json& j) { return j.dump() + "\n"; }

}  // namespace tfu
