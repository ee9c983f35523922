#include "latspar/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "latspar/approx_cvp.hpp"
#include "latspar/io.hpp"
#include "latspar/modp.hpp"
#include "latspar/oracle.hpp"

namespace latspar {

namespace {

struct CommonInputs {
  std::string basis_path;
  std::string body_path;
  std::string target_path;
};

Lattice load_basis(const std::string& path) { return read_basis_file(path); }

Rat opt_rat(const std::string& text, const char* what) {
  try {
    return parse_rat(text);
  } catch (const input_error& e) {
    throw CLI::ValidationError(std::string(what) + ": " + e.what());
  }
}

// Certified rational upper bound for a gauge value, suitable for BOUND lines.
Rat gauge_rational_ub(const GaugeValue& g) {
  if (!g.is_sqrt) return g.v;
  if (g.v == 0) return Rat(0);
  return sqrt_bracket_rel(g.v).second;
}

std::uint64_t mix_rng(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  while (true) {
    std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

int cmd_cvp_approx(const CommonInputs& in, const std::string& eps_text, bool as_json,
                   bool verbose) {
  Lattice lat = load_basis(in.basis_path);
  ConvexBody body = body_from_json_file(in.body_path, lat.dim());
  QVec target = read_vector_file(in.target_path, lat.dim());
  Rat eps = opt_rat(eps_text, "--eps");
  CvpResult res = approx_cvp(body, lat, target, eps);
  if (verbose) {
    std::cerr << "dim " << lat.dim() << ", body " << body.describe() << "\n";
    std::cerr << "l " << rat_str(res.trace.l) << ", eps0 " << rat_str(res.trace.eps0) << ", d_f "
              << rat_str(res.trace.d_f) << ", d_tilde " << rat_str(res.trace.d_tilde) << ", "
              << res.trace.sparsifier_reports.size() << " sparsifier rounds\n";
  }
  if (as_json) {
    std::cout << cvp_result_to_json(res);
  } else {
    std::cout << format_points(res.points);
    std::cout << "BOUND " << rat_str(res.distance_bound) << "\n";
  }
  return 0;
}

int cmd_cvp_l2(const CommonInputs& in, bool as_json) {
  Lattice lat = load_basis(in.basis_path);
  QVec target = read_vector_file(in.target_path, lat.dim());
  CvpL2Result res = cvp_l2(lat, target);
  if (as_json) {
    std::cout << points_to_json(res.points);
  } else {
    std::cout << format_points(res.points);
    std::cout << "BOUND " << rat_str(res.dist_sq) << "\n";  // squared distance
  }
  return 0;
}

int cmd_svp(const CommonInputs& in, const std::string& eps_text, bool as_json) {
  Lattice lat = load_basis(in.basis_path);
  ConvexBody body = symmetrize(body_from_json_file(in.body_path, lat.dim()));
  Rat eps = opt_rat(eps_text, "--eps");
  ShortestVectorsResult res = shortest_vectors(body, lat, eps);
  if (as_json) {
    std::cout << points_to_json(res.points);
  } else {
    std::cout << format_points(res.points);
    std::cout << "BOUND " << rat_str(gauge_rational_ub(res.lambda1)) << "\n";
  }
  return 0;
}

int cmd_enum(const CommonInputs& in, const std::string& scale_text, const std::string& eps_text,
             bool as_json) {
  Lattice lat = load_basis(in.basis_path);
  ConvexBody body = body_from_json_file(in.body_path, lat.dim());
  QVec center(lat.dim(), Rat(0));
  if (!in.target_path.empty()) center = read_vector_file(in.target_path, lat.dim());
  Rat scale = opt_rat(scale_text, "--scale");
  Rat eps = opt_rat(eps_text, "--eps");
  PointStream s = lattice_enum(body, center, scale, lat, eps);
  if (as_json) {
    std::cout << points_to_json(s.points);
  } else {
    std::cout << format_points(s.points);
    std::cout << "COUNT " << s.size() << "\n";
  }
  return 0;
}

int cmd_sparsify(const CommonInputs& in, const std::string& t_text, bool randomized,
                 std::uint64_t seed, const std::string& report_path, bool as_json, bool verbose) {
  Lattice lat = load_basis(in.basis_path);
  ConvexBody body = body_from_json_file(in.body_path, lat.dim());
  Rat t = opt_rat(t_text, "--t");
  auto [sub, report] =
      randomized ? sparsify_randomized(body, lat, t, seed) : sparsify(body, lat, t);
  if (verbose) {
    std::cerr << "lambda " << rat_str(report.lambda) << ", k " << report.k << "\n";
    for (const auto& lv : report.levels) {
      std::cerr << "level " << lv.index << ": N " << lv.point_count.get_str();
      if (lv.prime) std::cerr << ", p " << lv.prime->get_str();
      std::cerr << ", det " << rat_str(lv.sublattice_det) << "\n";
    }
    if (report.randomized) std::cerr << "retries " << report.retries << "\n";
  }
  QMat hnf_out = sub.hnf_basis();
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw input_error("cannot write report file '" + report_path + "'");
    out << report_to_json(report);
  }
  if (as_json) {
    std::cout << sparsify_result_to_json(hnf_out, report);
  } else {
    std::cout << format_basis(hnf_out);
  }
  return 0;
}

int cmd_verify_bounds(const CommonInputs& in, const std::string& d_text, int grid_den) {
  Lattice lat = load_basis(in.basis_path);
  ConvexBody body = body_from_json_file(in.body_path, lat.dim());
  Rat d = opt_rat(d_text, "--d");
  std::vector<QVec> centers = fundamental_grid(lat, grid_den);
  std::vector<CountReport> reports = check_counting_bounds(body, lat, d, centers);
  Int max_count(0);
  bool all = true;
  for (const CountReport& r : reports) {
    if (!r.pass) all = false;
    if (r.count > max_count) max_count = r.count;
  }
  std::cout << "centers " << reports.size() << "\n";
  std::cout << "max_count " << max_count.get_str() << "\n";
  std::cout << "bound " << rat_str(reports.front().bound) << "\n";
  std::cout << (all ? "PASS" : "FAIL") << "\n";
  return all ? 0 : 2;
}

int cmd_verify_sumset(std::int64_t max_p, long families, std::uint64_t seed) {
  std::vector<std::int64_t> primes;
  for (std::int64_t q = 2; q <= max_p; ++q)
    if (is_prime_i64(q)) primes.push_back(q);
  if (primes.empty()) throw input_error("verify sumset: no prime <= max-p");
  std::mt19937_64 rng(seed);
  long failures = 0;
  for (long f = 0; f < families; ++f) {
    std::int64_t p = primes[mix_rng(rng, primes.size())];
    int k = 1 + static_cast<int>(mix_rng(rng, 4));
    std::vector<std::vector<std::int64_t>> sets(k);
    for (auto& set : sets) {
      long size = 1 + static_cast<long>(mix_rng(rng, static_cast<std::uint64_t>(p)));
      for (long i = 0; i < size; ++i)
        set.push_back(static_cast<std::int64_t>(mix_rng(rng, static_cast<std::uint64_t>(p))));
    }
    if (!check_cauchy_davenport(p, sets)) ++failures;
  }
  std::cout << "families " << families << "\n";
  std::cout << "failures " << failures << "\n";
  std::cout << (failures == 0 ? "PASS" : "FAIL") << "\n";
  return failures == 0 ? 0 : 2;
}

int cmd_verify_sparsifier(const CommonInputs& in, const std::string& t_text, int grid_den,
                          bool randomized, std::uint64_t seed, bool as_json) {
  Lattice lat = load_basis(in.basis_path);
  ConvexBody body = body_from_json_file(in.body_path, lat.dim());
  Rat t = opt_rat(t_text, "--t");
  auto [sub, report] =
      randomized ? sparsify_randomized(body, lat, t, seed) : sparsify(body, lat, t);
  std::vector<QVec> targets = fundamental_grid(lat, grid_den);
  SparsifierVerification v = verify_sparsifier(body, lat, sub, t, targets);
  if (as_json) {
    std::cout << verification_to_json(v);
  } else {
    std::cout << "targets " << v.targets.size() << "\n";
    std::cout << "max_translate_count " << v.max_translate_count.get_str() << "\n";
    std::cout << (v.distance_ok ? "PASS" : "FAIL") << "\n";
  }
  return v.distance_ok ? 0 : 2;
}

int cmd_verify_primegap(long from, long to) {
  if (from < 1001) throw input_error("verify primegap: --from must be > 1000");
  if (to < from) throw input_error("verify primegap: empty range");
  for (long n = from; n <= to; ++n) {
    Int p = find_prime(Int(n));  // throws internal_error on a gap miss
    if (!(p > n && 3 * p < 4 * Int(n)))
      throw internal_error("verify primegap: prime outside (N, 4N/3) at N=" + std::to_string(n));
  }
  std::cout << "range " << from << ".." << to << "\n";
  std::cout << "PASS" << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Exact-arithmetic lattice sparsifiers and (1+eps)-approximate CVP"};
  app.require_subcommand(1);

  CommonInputs in;
  std::string eps_text = "1/2";
  std::string scale_text, t_text, d_text;
  std::string report_path;
  bool as_json = false;
  bool verbose = false;
  bool randomized = false;
  std::uint64_t seed = 0;
  int grid_den = 8;
  long from = 1001, to = 100000;
  std::int64_t max_p = 13;
  long families = 500;

  auto add_basis = [&](CLI::App* c) {
    c->add_option("--basis", in.basis_path, "lattice basis file")->required();
  };
  auto add_body = [&](CLI::App* c) {
    c->add_option("--body", in.body_path, "convex body JSON file")->required();
  };
  auto add_json = [&](CLI::App* c) { c->add_flag("--json", as_json, "JSON output"); };
  app.add_flag("--verbose", verbose, "progress diagnostics on stderr");

  CLI::App* cvp = app.add_subcommand("cvp-approx", "(1+eps)-approximate closest vectors");
  add_basis(cvp);
  add_body(cvp);
  cvp->add_option("--target", in.target_path, "target vector file")->required();
  cvp->add_option("--eps", eps_text, "approximation parameter in (0,1]")->required();
  add_json(cvp);

  CLI::App* cl2 = app.add_subcommand("cvp-l2", "exact closest vectors under l2");
  add_basis(cl2);
  cl2->add_option("--target", in.target_path, "target vector file")->required();
  add_json(cl2);

  CLI::App* svp = app.add_subcommand("svp", "shortest vectors under the body gauge");
  add_basis(svp);
  add_body(svp);
  svp->add_option("--eps", eps_text, "oracle slack (default 1/2)");
  add_json(svp);

  CLI::App* en = app.add_subcommand("enum", "lattice points in scale*K + center");
  add_basis(en);
  add_body(en);
  en->add_option("--scale", scale_text, "body scale")->required();
  en->add_option("--center", in.target_path, "center vector file (default origin)");
  std::string enum_eps = "1/1000";
  en->add_option("--eps", enum_eps, "enumeration shell (default 1/1000)");
  add_json(en);

  CLI::App* sp = app.add_subcommand("sparsify", "lattice sparsifier");
  add_basis(sp);
  add_body(sp);
  sp->add_option("--t", t_text, "sparsification distance")->required();
  sp->add_flag("--randomized", randomized, "Las Vegas variant");
  sp->add_option("--seed", seed, "PRNG seed for --randomized");
  sp->add_option("--report", report_path, "write SparsifierReport JSON here");
  add_json(sp);

  CLI::App* ver = app.add_subcommand("verify", "brute-force verifiers");
  ver->require_subcommand(1);

  CLI::App* vb = ver->add_subcommand("bounds", "translate counting bounds");
  add_basis(vb);
  add_body(vb);
  vb->add_option("--d", d_text, "scale d")->required();
  vb->add_option("--grid-den", grid_den, "fundamental grid denominator (default 8)");

  CLI::App* vs = ver->add_subcommand("sumset", "iterated sumset lower bound");
  vs->add_option("--max-p", max_p, "largest prime modulus (default 13)");
  vs->add_option("--families", families, "number of random families (default 500)");
  vs->add_option("--seed", seed, "PRNG seed");

  CLI::App* vf = ver->add_subcommand("sparsifier", "sparsifier contract on a target grid");
  add_basis(vf);
  add_body(vf);
  vf->add_option("--t", t_text, "sparsification distance")->required();
  int target_den = 10;
  vf->add_option("--grid", target_den, "target grid denominator (default 10)");
  vf->add_flag("--randomized", randomized, "verify the Las Vegas variant");
  vf->add_option("--seed", seed, "PRNG seed for --randomized");
  add_json(vf);

  CLI::App* vp = ver->add_subcommand("primegap", "prime in (N, 4N/3) for a range of N");
  vp->add_option("--from", from, "first N (default 1001)");
  vp->add_option("--to", to, "last N (default 100000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors are exit 1; --help is 0
  }

  try {
    if (cvp->parsed()) return cmd_cvp_approx(in, eps_text, as_json, verbose);
    if (cl2->parsed()) return cmd_cvp_l2(in, as_json);
    if (svp->parsed()) return cmd_svp(in, eps_text, as_json);
    if (en->parsed()) return cmd_enum(in, scale_text, enum_eps, as_json);
    if (sp->parsed()) return cmd_sparsify(in, t_text, randomized, seed, report_path, as_json, verbose);
    if (ver->parsed()) {
      if (vb->parsed()) return cmd_verify_bounds(in, d_text, grid_den);
      if (vs->parsed()) return cmd_verify_sumset(max_p, families, seed);
      if (vf->parsed()) return cmd_verify_sparsifier(in, t_text, target_den, randomized, seed, as_json);
      if (vp->parsed()) return cmd_verify_primegap(from, to);
    }
    std::cerr << "error: no command\n";
    return 1;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace latspar
