#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "sparsecert/interference.hpp"
#include "sparsecert/omp.hpp"
#include "sparsecert/ric.hpp"
#include "sparsecert/sp.hpp"

namespace py = pybind11;
namespace sc = sparsecert;

namespace {

sc::SupportSet support_of(sc::Index n, const std::vector<sc::Index>& idx) { return sc::SupportSet(n, idx); }

py::dict result_dict(const sc::SolverResult& r) {
  py::dict d;
  d["support"] = r.final_support().indices();
  d["x_hat"] = sc::Vector(r.estimate.dense());
  d["iterations"] = r.iterations;
  d["residual_norms"] = r.residual_norms;
  d["halted_by"] = std::string(sc::to_string(r.halted_by));
  std::vector<std::vector<sc::Index>> trace;
  for (const auto& s : r.support_trace) trace.push_back(s.indices());
  d["support_trace"] = trace;
  return d;
}

sc::OmpConfig omp_config(const std::string& mode, sc::Index k, double epsilon) {
  if (mode == "noiseless") return sc::OmpConfig::noiseless(k);
  if (mode == "l2") return sc::OmpConfig::l2(epsilon);
  if (mode == "linf") return sc::OmpConfig::linf(epsilon);
  throw sc::Error(sc::ErrorCode::InvalidDimensions, "mode must be noiseless, l2 or linf");
}

sc::OmpThreshold threshold_of(const std::string& name) {
  if (name == "l2_prior") return sc::OmpThreshold::L2Prior;
  if (name == "l2_proposed") return sc::OmpThreshold::L2Proposed;
  if (name == "linf_prior") return sc::OmpThreshold::LinfPrior;
  if (name == "linf_proposed") return sc::OmpThreshold::LinfProposed;
  throw sc::Error(sc::ErrorCode::UnknownBound, "unknown threshold '" + name + "'");
}

sc::EffectiveRic effective_of(const std::string& name) {
  if (name == "davenport") return sc::EffectiveRic::Davenport;
  if (name == "plane_geometry") return sc::EffectiveRic::PlaneGeometry;
  if (name == "proposed") return sc::EffectiveRic::Proposed;
  throw sc::Error(sc::ErrorCode::UnknownBound, "unknown effective RIC estimate '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_sparsecert, m) {
  m.doc() = "Greedy sparse recovery and restricted isometry certification";
  m.attr("__version__") = SPARSECERT_VERSION;

  static py::exception<sc::Error> err(m, "SparsecertError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const sc::Error& e) {
      py::set_error(err, e.what());
    }
  });

  m.def("gaussian_matrix", [](sc::Index m_, sc::Index n, std::uint64_t seed) {
    return sc::generate_gaussian_matrix(m_, n, seed).matrix();
  }, py::arg("m"), py::arg("n"), py::arg("seed"));
  m.def("tight_frame_matrix", [](sc::Index m_, sc::Index n, double perturbation, std::uint64_t seed) {
    return sc::generate_tight_frame_matrix(m_, n, perturbation, seed).matrix();
  }, py::arg("m"), py::arg("n"), py::arg("perturbation") = 0.0, py::arg("seed") = 0);
  m.def("sparse_signal", [](sc::Index n, sc::Index k, std::uint64_t seed) {
    return sc::generate_sparse_signal(n, k, seed).dense();
  }, py::arg("n"), py::arg("k"), py::arg("seed"));

  m.def("exact_ric", [](const sc::Matrix& phi, sc::Index k) {
    return sc::exact_ric(sc::SensingMatrix(phi), k).delta;
  }, py::arg("phi"), py::arg("k"), "Exact delta_k of the column-normalized phi.");
  m.def("ric_bound", [](const std::string& name, sc::Index k) {
    return sc::ric_bound(sc::parse_ric_bound(name), k);
  }, py::arg("name"), py::arg("k"));
  m.def("check_recovery_guarantee", [](const sc::Matrix& phi, sc::Index k, const std::string& bound) {
    const auto c = sc::check_recovery_guarantee(sc::SensingMatrix(phi), k, sc::parse_ric_bound(bound));
    py::dict d;
    d["delta"] = c.delta;
    d["bound"] = c.bound_value;
    d["guaranteed"] = c.guaranteed;
    d["conjectural"] = c.conjectural;
    return d;
  }, py::arg("phi"), py::arg("k"), py::arg("bound") = "proposed");
  m.def("condition_angle", [](const sc::Matrix& a) {
    const auto r = sc::condition_angle(a);
    return py::make_tuple(r.kappa, r.theta);
  }, py::arg("a"), "(kappa, theta) with kappa = cot(theta / 2).");

  m.def("omp", [](const sc::Matrix& phi, const sc::Vector& y, sc::Index k, const std::string& mode, double epsilon) {
    return result_dict(sc::omp(sc::SensingMatrix(phi), y, omp_config(mode, k, epsilon)));
  }, py::arg("phi"), py::arg("y"), py::arg("k") = 0, py::arg("mode") = "noiseless", py::arg("epsilon") = 0.0);
  m.def("omp_threshold", [](const std::string& name, sc::Index k, double delta, double eps) {
    return sc::omp_threshold(threshold_of(name), k, delta, eps);
  }, py::arg("name"), py::arg("k"), py::arg("delta"), py::arg("epsilon"));

  m.def("subspace_pursuit", [](const sc::Matrix& phi, const sc::Vector& y, sc::Index k, bool rollback) {
    sc::SpConfig cfg;
    cfg.k = k;
    cfg.rollback_on_stop = rollback;
    return result_dict(sc::subspace_pursuit(sc::SensingMatrix(phi), y, cfg).result);
  }, py::arg("phi"), py::arg("y"), py::arg("k"), py::arg("rollback_on_stop") = false);
  m.def("sp_constants", [](double delta) {
    const auto c = sc::sp_constants(delta);
    py::dict d;
    d["alpha"] = c.alpha;
    d["beta"] = c.beta;
    d["margin"] = c.margin;
    d["c_k"] = c.c_k ? py::cast(*c.c_k) : py::none();
    d["c_prime_k"] = c.c_prime_k;
    d["c_bar_k"] = c.c_bar_k;
    return d;
  }, py::arg("delta"));

  m.def("effective_ric", [](const std::string& name, double delta) {
    return sc::effective_ric_estimate(effective_of(name), delta);
  }, py::arg("name"), py::arg("delta"));
  m.def("cancel", [](const sc::Matrix& phi, const std::vector<sc::Index>& t_d, const sc::Vector& y) {
    const sc::SensingMatrix s(phi);
    return sc::cancel(s, support_of(s.n(), t_d), y);
  }, py::arg("phi"), py::arg("t_d"), py::arg("y"));
  m.def("recover_after_cancellation", [](const sc::Matrix& phi, const std::vector<sc::Index>& t_d,
                                         const sc::Vector& y, sc::Index k, const std::string& method) {
    const sc::SensingMatrix s(phi);
    const auto how = method == "sp" ? sc::RecoveryMethod::Sp : sc::RecoveryMethod::Omp;
    return result_dict(sc::recover_after_cancellation(s, support_of(s.n(), t_d), y, how, k));
  }, py::arg("phi"), py::arg("t_d"), py::arg("y"), py::arg("k"), py::arg("method") = "omp");
}
