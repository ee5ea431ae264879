#include "tfu/spec.hpp"

#include "tfu/errors.hpp"

namespace tfu {
namespace {

bool symmetric(const Eigen::MatrixXd& m) {
  return m.rows() == m.cols() && (m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * (1.0 + m.cwiseAbs().maxCoeff());
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& j, int d) {
  Eigen::MatrixXd m(d, d);
  if (j.is_number()) {
    m = j.get<double>() * Eigen::MatrixXd::Identity(d, d);
    return m;
  }
  if (!j.is_array() || static_cast<int>(j.size()) != d) throw FormatError("spec json: matrix has wrong shape");
  for (int r = 0; r < d; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (d == 1 && row.is_number()) {
      m(0, 0) = row.get<double>();
      continue;
    }
    if (!row.is_array() || static_cast<int>(row.size()) != d) throw FormatError("spec json: matrix row has wrong shape");
    for (int c = 0; c < d; ++c) m(r, c) = row[static_cast<std::size_t>(c)].get<double>();
  }
  return m;
}

Eigen::VectorXd vector_from_json(const nlohmann::json& j, int d) {
  Eigen::VectorXd v(d);
  if (!j.is_array() || static_cast<int>(j.size()) != d) throw FormatError("spec json: vector has wrong length");
  for (int k = 0; k < d; ++k) v(k) = j[static_cast<std::size_t>(k)].get<double>();
  return v;
}

}  // namespace

GaussHermiteSpec::GaussHermiteSpec(Polynomial poly, Eigen::MatrixXd a, Eigen::MatrixXd b,
                                   Eigen::VectorXd center, Eigen::VectorXd modulation)
    : poly_(std::move(poly)), a_(std::move(a)), b_(std::move(b)), center_(std::move(center)),
      modulation_(std::move(modulation)) {
  const int d = poly_.dim();
  require(a_.rows() == d && b_.rows() == d && center_.size() == d && modulation_.size() == d,
          "spec: parameter dimensions do not match the polynomial");
  require(symmetric(a_), "spec: A must be symmetric");
  require(symmetric(b_), "spec: B must be symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a_);
  require(eig.eigenvalues().minCoeff() > 0.0, "spec: A must be positive definite");
}

GaussHermiteSpec GaussHermiteSpec::centered(Polynomial poly, Eigen::MatrixXd a) {
  const int d = poly.dim();
  return GaussHermiteSpec(std::move(poly), std::move(a), Eigen::MatrixXd::Zero(d, d),
                          Eigen::VectorXd::Zero(d), Eigen::VectorXd::Zero(d));
}

ClosedForm GaussHermiteSpec::closed_form() const {
  // -pi (x-a)^T A (x-a) - i pi x^T B x + 2 i pi w.x
  //   = -pi x^T (A + iB) x + 2 pi (A a + i w)^T x - pi a^T A a
  const cplx i(0.0, 1.0);
  GaussianTerm t;
  t.poly = poly_;
  t.quad = a_.cast<cplx>() + i * b_.cast<cplx>();
  t.lin = (a_ * center_).cast<cplx>() + i * modulation_.cast<cplx>();
  t.offset = -kPi * center_.dot(a_ * center_);
  return ClosedForm(std::move(t));
}

nlohmann::json GaussHermiteSpec::to_json() const {
  const int d = dim();
  auto mat = [d](const Eigen::MatrixXd& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < d; ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < d; ++c) row.push_back(m(r, c));
      rows.push_back(row);
    }
    return rows;
  };
  auto vec = [d](const Eigen::VectorXd& v) {
    nlohmann::json out = nlohmann::json::array();
    for (int k = 0; k < d; ++k) out.push_back(v(k));
    return out;
  };
  nlohmann::json poly = nlohmann::json::array();
  poly_.for_each_term([&](MultiIndex alpha, cplx c) {
    nlohmann::json idx = nlohmann::json::array();
    for (int k = 0; k < d; ++k) idx.push_back(alpha[static_cast<std::size_t>(k)]);
    poly.push_back({{"alpha", idx}, {"re", c.real()}, {"im", c.imag()}});
  });
  return {{"dim", d}, {"poly", poly}, {"A", mat(a_)}, {"B", mat(b_)},
          {"center", vec(center_)}, {"modulation", vec(modulation_)}};
}

GaussHermiteSpec GaussHermiteSpec::from_json(const nlohmann::json& j) {
  try {
    const int d = j.at("dim").get<int>();
    if (d != 1 && d != 2) throw PreconditionError("spec json: dim must be 1 or 2");
    Polynomial poly(d, 0);
    for (const auto& term : j.at("poly")) {
      const auto& idx = term.at("alpha");
      if (static_cast<int>(idx.size()) != d) throw FormatError("spec json: multi-index length differs from dim");
      MultiIndex alpha{idx[0].get<int>(), d == 2 ? idx[1].get<int>() : 0};
      poly.set_coefficient(alpha, cplx(term.value("re", 0.0), term.value("im", 0.0)));
    }
    const Eigen::MatrixXd a = matrix_from_json(j.at("A"), d);
    const Eigen::MatrixXd b = j.contains("B") ? matrix_from_json(j.at("B"), d) : Eigen::MatrixXd::Zero(d, d);
    const Eigen::VectorXd c = j.contains("center") ? vector_from_json(j.at("center"), d) : Eigen::VectorXd::Zero(d);
    const Eigen::VectorXd w =
        j.contains("modulation") ? vector_from_json(j.at("modulation"), d) : Eigen::VectorXd::Zero(d);
    return GaussHermiteSpec(std::move(poly), a, b, c, w);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("spec json: ") + e.what());
  }
}

Signal sample_spec(const GaussHermiteSpec& spec, const Grid& grid) {
  if (spec.dim() != grid.dim()) throw_precondition("sample_spec: spec dimension does not match grid");
  return Signal::from_closed_form(grid, spec.closed_form());
}

}  // namespace tfu
