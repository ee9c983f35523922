#include "latspar/io.hpp"

#include <sstream>

#include "json.hpp"

namespace latspar {

namespace {

using ojson = nlohmann::ordered_json;

ojson qvec_json(const QVec& v) {
  ojson a = ojson::array();
  for (const Rat& x : v) a.push_back(rat_str(x));
  return a;
}

ojson zvec_json(const ZVec& v) {
  ojson a = ojson::array();
  for (const Int& x : v) a.push_back(x.get_str());
  return a;
}

ojson modvec_json(const ModVec& v) {
  ojson a = ojson::array();
  for (std::int64_t x : v) a.push_back(x);
  return a;
}

ojson point_json(const LatticePoint& p) {
  ojson o;
  o["coeffs"] = zvec_json(p.coeffs);
  o["ambient"] = qvec_json(p.ambient);
  return o;
}

ojson gauge_json(const GaugeValue& g) {
  ojson o;
  o["form"] = g.is_sqrt ? "sqrt" : "rational";
  o["value"] = rat_str(g.v);
  return o;
}

}  // namespace

std::string format_point(const LatticePoint& p) {
  std::ostringstream out;
  out << "POINT";
  for (const Int& c : p.coeffs) out << ' ' << c.get_str();
  out << " |";
  for (const Rat& x : p.ambient) out << ' ' << rat_str(x);
  return out.str();
}

std::string format_points(const std::vector<LatticePoint>& pts) {
  std::ostringstream out;
  for (const LatticePoint& p : pts) out << format_point(p) << '\n';
  return out.str();
}

std::string report_to_json(const SparsifierReport& rep) {
  ojson o;
  o["schema"] = 1;
  o["kind"] = "sparsifier_report";
  o["dim"] = rep.dim;
  o["t"] = rat_str(rep.t);
  o["lambda"] = rat_str(rep.lambda);
  o["epsilon"] = rat_str(rep.epsilon);
  o["k"] = rep.k;
  o["randomized"] = rep.randomized;
  if (rep.randomized) {
    o["seed"] = rep.seed;
    o["retries"] = rep.retries;
  }
  ojson levels = ojson::array();
  for (const SparsifierLevel& lv : rep.levels) {
    ojson l;
    l["i"] = lv.index;
    l["lambda_scale"] = rat_str(lv.lambda_scale);
    l["N"] = lv.point_count.get_str();
    if (lv.prime)
      l["p"] = lv.prime->get_str();
    else
      l["p"] = nullptr;
    if (lv.a)
      l["a"] = modvec_json(*lv.a);
    else
      l["a"] = nullptr;
    if (lv.w)
      l["w"] = qvec_json(*lv.w);
    else
      l["w"] = nullptr;
    l["sublattice_det"] = rat_str(lv.sublattice_det);
    levels.push_back(std::move(l));
  }
  o["levels"] = std::move(levels);
  return o.dump(2) + "\n";
}

std::string sparsify_result_to_json(const QMat& hnf_basis, const SparsifierReport& rep) {
  ojson o;
  o["schema"] = 1;
  o["kind"] = "sparsify_result";
  ojson rows = ojson::array();
  for (int i = 0; i < hnf_basis.rows; ++i) {
    ojson row = ojson::array();
    for (int j = 0; j < hnf_basis.cols; ++j) row.push_back(rat_str(hnf_basis.at(i, j)));
    rows.push_back(std::move(row));
  }
  o["basis"] = std::move(rows);
  o["report"] = ojson::parse(report_to_json(rep));
  return o.dump(2) + "\n";
}

std::string verification_to_json(const SparsifierVerification& v) {
  ojson o;
  o["schema"] = 1;
  o["kind"] = "sparsifier_verification";
  o["distance_ok"] = v.distance_ok;
  o["max_translate_count"] = v.max_translate_count.get_str();
  ojson targets = ojson::array();
  for (const SparsifierTargetCheck& c : v.targets) {
    ojson t;
    t["target"] = qvec_json(c.target);
    t["dist_full"] = gauge_json(c.dist_full);
    t["dist_sub"] = gauge_json(c.dist_sub);
    t["distance_ok"] = c.distance_ok;
    t["translate_count"] = c.translate_count.get_str();
    targets.push_back(std::move(t));
  }
  o["targets"] = std::move(targets);
  return o.dump(2) + "\n";
}

std::string cvp_result_to_json(const CvpResult& res) {
  ojson o;
  o["schema"] = 1;
  o["kind"] = "cvp_result";
  ojson pts = ojson::array();
  for (const LatticePoint& p : res.points) pts.push_back(point_json(p));
  o["points"] = std::move(pts);
  o["bound"] = rat_str(res.distance_bound);
  o["trace"] = ojson{{"l", rat_str(res.trace.l)},
                     {"eps0", rat_str(res.trace.eps0)},
                     {"d_f", rat_str(res.trace.d_f)},
                     {"d_tilde", rat_str(res.trace.d_tilde)},
                     {"sparsifier_rounds", res.trace.sparsifier_reports.size()}};
  return o.dump(2) + "\n";
}

std::string points_to_json(const std::vector<LatticePoint>& pts) {
  ojson o;
  o["schema"] = 1;
  o["kind"] = "points";
  ojson arr = ojson::array();
  for (const LatticePoint& p : pts) arr.push_back(point_json(p));
  o["points"] = std::move(arr);
  return o.dump(2) + "\n";
}

}  // namespace latspar
