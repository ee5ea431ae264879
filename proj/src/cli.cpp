#include "tfu/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "tfu/acceptance.hpp"
#include "tfu/detector.hpp"
#include "tfu/errors.hpp"
#include "tfu/fourier.hpp"
#include "tfu/functional.hpp"
#include "tfu/io.hpp"
#include "tfu/parallel.hpp"
#include "tfu/quadrature.hpp"
#include "tfu/report.hpp"
#include "tfu/transforms.hpp"
#include "tfu/uncertainty.hpp"

namespace tfu {
namespace {

struct Options {
  bool json = false;
  int threads = 0;

  std::string generator;
  std::string u;
  std::string v;
  std::string output;

  int dim = 1;
  std::optional<double> half_extent;
  std::optional<int> points;

  double n_exp = 0.0;
  double p = 1.5;
  double a = 1.0;
  double b = 1.0;
  std::optional<double> center_a;
  std::optional<double> center_b;
  int axis = 0;
  std::string radii;
  std::string matrix_a = "1";
  std::string matrix_b = "1";
  bool split = false;

  std::string filter;
  bool mutate_bound = false;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

double parse_number(const std::string& text, const char* what) {
  const std::string t = trim(text);
  char* end = nullptr;
  const double value = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size()) throw_precondition(std::string(what) + ": not a number: '" + t + "'");
  return value;
}

std::vector<double> parse_list(const std::string& text, char separator, const char* what) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, separator)) out.push_back(parse_number(item, what));
  return out;
}

// "a" for d=1, "a,b;c,d" for d=2.
Eigen::MatrixXd parse_matrix(const std::string& text, int dim, const char* what) {
  std::vector<std::vector<double>> rows;
  std::stringstream in(text);
  std::string row;
  while (std::getline(in, row, ';')) rows.push_back(parse_list(row, ',', what));
  Eigen::MatrixXd m(dim, dim);
  if (static_cast<int>(rows.size()) != dim) throw_precondition(std::string(what) + ": expected " + std::to_string(dim) + " rows");
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != dim)
      throw_precondition(std::string(what) + ": expected " + std::to_string(dim) + " columns");
    for (int j = 0; j < dim; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

Grid grid_of(const Options& o) {
  const Grid def = default_grid(o.dim);
  return make_grid(o.dim, o.half_extent.value_or(def.half_extent()), o.points.value_or(def.points_per_axis()));
}

bool is_generator(const std::string& s) {
  return s == "gauss" || s.rfind("hermite:", 0) == 0 || s.rfind("spec:", 0) == 0;
}

// A TFSIG1 manifest path, or a generator string sampled on the option grid.
Signal load(const std::string& source, const Options& o, const char* flag) {
  if (source.empty()) throw_precondition(std::string("missing input ") + flag);
  if (is_generator(source) && !std::filesystem::exists(source)) return generate_signal(source, grid_of(o));
  return read_signal(source);
}

Signal load_v(const Options& o, const Signal& u) { return o.v.empty() ? u : load(o.v, o, "-v"); }

Json signal_summary(const Signal& s) {
  return Json{{"grid", to_json(s.grid())}, {"l2_norm", l2_norm(s)}, {"exact_form", s.closed_form() != nullptr}};
}

Json surface_summary(const Surface& s) {
  double peak = 0.0;
  for (cplx z : s.samples()) peak = std::max(peak, std::abs(z));
  return Json{{"x_grid", to_json(s.x_grid())}, {"y_grid", to_json(s.y_grid())}, {"l2_norm", s.l2_norm()},
              {"max_abs", peak}};
}

void emit(std::ostream& out, const Options& o, const Json& j) { out << (o.json ? to_json_text(j) : to_text(j)); }

using Runner = std::function<int(const Options&, std::ostream&)>;

int run_surface(const Options& o, std::ostream& out, const char* name,
                Surface (*transform)(const Signal&, const Signal&)) {
  const Signal u = load(o.u, o, "-u");
  const Signal v = load_v(o, u);
  const Surface s = transform(u, v);
  Json j{{"command", name}};
  j.update(surface_summary(s));
  if (!o.output.empty()) {
    write_surface(o.output, s);
    j["output"] = o.output;
  }
  emit(out, o, j);
  return kExitOk;
}

std::vector<double> radii_of(const Options& o) { return parse_list(o.radii, ',', "--radii"); }

void add_grid_options(CLI::App* sub, Options& o) {
  sub->add_option("--dim", o.dim, "dimension d (1 or 2) for generated inputs");
  sub->add_option("--L", o.half_extent, "half-extent L of the grid for generated inputs");
  sub->add_option("--n", o.points, "points per axis for generated inputs");
}

void add_inputs(CLI::App* sub, Options& o, bool with_v) {
  sub->add_option("-u,--u", o.u, "TFSIG1 manifest or generator string")->required();
  if (with_v) sub->add_option("-v,--v", o.v, "second signal (defaults to u)");
  add_grid_options(sub, o);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Time-frequency transforms and uncertainty functionals", "tfu"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "emit JSON instead of key=value lines");
  app.add_option("--threads", o.threads, "worker threads (default: TFU_THREADS or 1)");

  std::vector<std::pair<CLI::App*, Runner>> commands;
  auto command = [&](const char* name, const char* help, Runner run) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    commands.emplace_back(sub, std::move(run));
    return sub;
  };

  auto* gen = command("gen", "sample a generator to a TFSIG1 file", [](const Options& opt, std::ostream& os) {
    const Signal s = generate_signal(opt.generator, grid_of(opt));
    write_signal(opt.output, s, opt.generator);
    Json j{{"command", "gen"}, {"generator", opt.generator}, {"output", opt.output}};
    j.update(signal_summary(s));
    emit(os, opt, j);
    return kExitOk;
  });
  gen->add_option("--spec", o.generator, "gauss | hermite:<k>[,<k2>] | spec:<json file>")->required();
  gen->add_option("-o,--output", o.output, "output manifest")->required();
  add_grid_options(gen, o);

  auto* four = command("fourier", "continuous Fourier transform of a signal", [](const Options& opt, std::ostream& os) {
    const Signal s = fourier(load(opt.u, opt, "-u"));
    Json j{{"command", "fourier"}};
    j.update(signal_summary(s));
    if (!opt.output.empty()) {
      write_signal(opt.output, s);
      j["output"] = opt.output;
    }
    emit(os, opt, j);
    return kExitOk;
  });
  add_inputs(four, o, false);
  four->add_option("-o,--output", o.output, "output manifest");

  for (auto [name, help, fn] : {std::tuple{"ambiguity", "ambiguity surface A(u,v)", &ambiguity},
                                std::tuple{"wigner", "Wigner surface W(u,v)", &wigner},
                                std::tuple{"stft", "windowed Fourier surface S_v u", &stft}}) {
    auto* sub = command(name, help, [name = name, fn = fn](const Options& opt, std::ostream& os) {
      return run_surface(opt, os, name, fn);
    });
    add_inputs(sub, o, true);
    sub->add_option("-o,--output", o.output, "output TFSUR1 manifest");
  }

  add_inputs(command("moyal", "surface norm of A(u,v) against |u||v|",
                     [](const Options& opt, std::ostream& os) {
                       const Signal u = load(opt.u, opt, "-u");
                       Json j = to_json(moyal_norm(u, load_v(opt, u)));
                       emit(os, opt, j);
                       return kExitOk;
                     }),
             o, true);

  auto* heis = command("heisenberg", "Heisenberg product of f (or of A(u,v) when -v is given)",
                       [](const Options& opt, std::ostream& os) {
                         const Signal u = load(opt.u, opt, "-u");
                         const HeisenbergReport r =
                             opt.v.empty() ? heisenberg_fourier(u, opt.axis, opt.center_a, opt.center_b)
                                           : heisenberg_ambiguity(u, load(opt.v, opt, "-v"), opt.axis,
                                                                  opt.center_a, opt.center_b);
                         emit(os, opt, to_json(r));
                         return kExitOk;
                       });
  add_inputs(heis, o, true);
  heis->add_option("--axis", o.axis, "coordinate direction i");
  heis->add_option("--a", o.center_a, "position center (default: mean)");
  heis->add_option("--b", o.center_b, "frequency center (default: mean)");

  add_inputs(command("covariance", "covariance report of |A(u,v)|^2",
                     [](const Options& opt, std::ostream& os) {
                       const Signal u = load(opt.u, opt, "-u");
                       emit(os, opt, to_json(covariance_report(u, load_v(opt, u))));
                       return kExitOk;
                     }),
             o, true);

  auto* bh = command("bh", "Beurling-Hormander functional", [](const Options& opt, std::ostream& os) {
    const Signal f = load(opt.u, opt, "-u");
    const auto radii = radii_of(opt);
    emit(os, opt, to_json(opt.split ? bh_functional_split(f, opt.n_exp, radii) : bh_functional(f, opt.n_exp, radii)));
    return kExitOk;
  });
  add_inputs(bh, o, false);
  bh->add_option("--N", o.n_exp, "polynomial weight exponent");
  bh->add_option("--radii", o.radii, "comma-separated truncation radii");
  bh->add_flag("--split", o.split, "use the weight (1+|x|)^{-N/2}(1+|y|)^{-N/2}");

  auto* cp = command("cowling-price", "Cowling-Price functionals", [](const Options& opt, std::ostream& os) {
    emit(os, opt, to_json(cowling_price(load(opt.u, opt, "-u"), opt.a, opt.b, opt.n_exp, opt.axis, radii_of(opt))));
    return kExitOk;
  });
  add_inputs(cp, o, false);
  cp->add_option("--a", o.a, "x-weight constant");
  cp->add_option("--b", o.b, "y-weight constant");
  cp->add_option("--N", o.n_exp, "polynomial weight exponent");
  cp->add_option("--axis", o.axis, "coordinate j");
  cp->add_option("--radii", o.radii, "comma-separated truncation radii");

  auto* gs = command("gelfand-shilov", "Gel'fand-Shilov functionals of f (or of A(u,v) when -v is given)",
                     [](const Options& opt, std::ostream& os) {
                       const Signal u = load(opt.u, opt, "-u");
                       const auto radii = radii_of(opt);
                       if (opt.v.empty())
                         emit(os, opt, to_json(gelfand_shilov(u, opt.p, opt.a, opt.b, opt.axis, radii)));
                       else
                         emit(os, opt,
                              to_json(gelfand_shilov_ambiguity(u, load(opt.v, opt, "-v"), opt.p, opt.a, opt.b,
                                                               opt.axis, radii)));
                       return kExitOk;
                     });
  add_inputs(gs, o, true);
  gs->add_option("--p", o.p, "exponent p in (1, 2)");
  gs->add_option("--a", o.a, "x-weight constant");
  gs->add_option("--b", o.b, "y-weight constant");
  gs->add_option("--axis", o.axis, "coordinate j");
  gs->add_option("--radii", o.radii, "comma-separated truncation radii");

  auto* hardy = command("hardy", "Hardy envelope check and case", [](const Options& opt, std::ostream& os) {
    const Signal f = load(opt.u, opt, "-u");
    const Eigen::MatrixXd a = parse_matrix(opt.matrix_a, f.dim(), "--A");
    const Eigen::MatrixXd b = parse_matrix(opt.matrix_b, f.dim(), "--B");
    emit(os, opt, to_json(hardy_check(f, a, b, opt.n_exp, radii_of(opt))));
    return kExitOk;
  });
  add_inputs(hardy, o, false);
  hardy->add_option("--A", o.matrix_a, "matrix A: 'a' or 'a11,a12;a21,a22'");
  hardy->add_option("--B", o.matrix_b, "matrix B, same syntax");
  hardy->add_option("--N", o.n_exp, "polynomial envelope exponent");
  hardy->add_option("--radii", o.radii, "comma-separated radii");

  auto* hba = command("hba", "ambiguity functionals (joint and marginals)", [](const Options& opt, std::ostream& os) {
    const Signal u = load(opt.u, opt, "-u");
    emit(os, opt, to_json(hba_functionals(u, load_v(opt, u), opt.n_exp, radii_of(opt))));
    return kExitOk;
  });
  add_inputs(hba, o, true);
  hba->add_option("--N", o.n_exp, "polynomial weight exponent");
  hba->add_option("--radii", o.radii, "comma-separated truncation radii");

  add_inputs(command("detect", "Gauss-Hermite detection of u (equality probe of (u,v) when -v is given)",
                     [](const Options& opt, std::ostream& os) {
                       const Signal u = load(opt.u, opt, "-u");
                       if (opt.v.empty())
                         emit(os, opt, to_json(detect(u)));
                       else
                         emit(os, opt, to_json(equality_case_probe(u, load(opt.v, opt, "-v"))));
                       return kExitOk;
                     }),
             o, true);

  auto* verify = command("verify-all", "run every acceptance criterion", [](const Options& opt, std::ostream& os) {
    const AcceptanceReport r = verify_all({opt.filter, opt.mutate_bound});
    if (opt.json) {
      Json j = Json::array();
      for (const auto& c : r.results) j.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      os << to_json_text(Json{{"criteria", j}, {"all_pass", r.all_pass()}});
    } else {
      os << r.text();
    }
    return r.all_pass() ? kExitOk : kExitPrecondition;
  });
  verify->add_option("--filter", o.filter, "criterion number or name substring");
  verify->add_flag("--mutate-bound", o.mutate_bound, "invert the 4 pi^2 factor of the reference bounds");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error code=USAGE message=\"" << e.what() << "\"\n";
    return kExitPrecondition;
  }

  try {
    int threads = o.threads;
    if (threads <= 0) {
      if (const char* env = std::getenv("TFU_THREADS")) threads = static_cast<int>(parse_number(env, "TFU_THREADS"));
    }
    set_thread_count(std::max(threads, 1));
    for (const auto& [sub, run] : commands)
      if (sub->parsed()) return run(o, out);
    return kExitPrecondition;
  } catch (const NumericalError& e) {
    err << "error code=" << e.code() << " message=\"" << e.what() << "\"\n";
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error code=" << e.code() << " message=\"" << e.what() << "\"\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error code=INTERNAL message=\"" << e.what() << "\"\n";
    return kExitNumerical;
  }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace tfu
