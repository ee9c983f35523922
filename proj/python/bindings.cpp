#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latspar/approx_cvp.hpp"
#include "latspar/io.hpp"
#include "latspar/modp.hpp"
#include "latspar/oracle.hpp"

namespace py = pybind11;
using namespace latspar;

namespace {

// Every rational crosses the boundary as text ("num/den" or an integer);
// stringifying the handle first means Python ints work directly while
// floats are rejected by the exact parser.
Rat rat_in(const py::handle& h) { return parse_rat(py::str(h).cast<std::string>()); }

QVec qvec_in(const py::sequence& seq) {
  QVec v;
  for (const auto& item : seq) v.push_back(rat_in(item));
  return v;
}

QMat qmat_in(const py::sequence& rows) {
  if (rows.size() == 0) throw input_error("empty matrix");
  py::sequence first = rows[0].cast<py::sequence>();
  QMat m(static_cast<int>(rows.size()), static_cast<int>(first.size()));
  for (int i = 0; i < m.rows; ++i) {
    py::sequence row = rows[i].cast<py::sequence>();
    if (static_cast<int>(row.size()) != m.cols) throw input_error("ragged matrix");
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rat_in(row[j]);
  }
  return m;
}

Lattice lattice_in(const py::sequence& rows) { return Lattice(qmat_in(rows)); }

ConvexBody body_in(const py::object& spec, int dim) {
  if (py::isinstance<py::str>(spec)) return body_from_json_text(spec.cast<std::string>(), dim);
  py::object dumps = py::module_::import("json").attr("dumps");
  return body_from_json_text(dumps(spec).cast<std::string>(), dim);
}

py::list qvec_out(const QVec& v) {
  py::list out;
  for (const Rat& x : v) out.append(rat_str(x));
  return out;
}

py::list qmat_out(const QMat& m) {
  py::list rows;
  for (int i = 0; i < m.rows; ++i) {
    py::list row;
    for (int j = 0; j < m.cols; ++j) row.append(rat_str(m.at(i, j)));
    rows.append(std::move(row));
  }
  return rows;
}

py::dict point_out(const LatticePoint& p) {
  py::list coeffs;
  for (const Int& c : p.coeffs) coeffs.append(c.get_str());
  py::dict d;
  d["coeffs"] = std::move(coeffs);
  d["ambient"] = qvec_out(p.ambient);
  return d;
}

py::list points_out(const std::vector<LatticePoint>& pts) {
  py::list out;
  for (const auto& p : pts) out.append(point_out(p));
  return out;
}

py::dict gauge_out(const GaugeValue& g) {
  py::dict d;
  d["form"] = g.is_sqrt ? "sqrt" : "rational";
  d["value"] = rat_str(g.v);
  return d;
}

py::object json_loads(const std::string& text) {
  return py::module_::import("json").attr("loads")(text);
}

ModVec modvec_in(const py::sequence& seq) {
  ModVec v;
  for (const auto& item : seq) v.push_back(item.cast<std::int64_t>());
  return v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-arithmetic lattice sparsifiers and (1+eps)-approximate CVP";

  py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
  py::register_exception<internal_error>(m, "InternalError", PyExc_RuntimeError);

  m.def("hnf", [](const py::sequence& rows) {
    QMat q = qmat_in(rows);
    ZMat z(q.rows, q.cols);
    for (int i = 0; i < q.rows; ++i)
      for (int j = 0; j < q.cols; ++j) {
        if (q.at(i, j).get_den() != 1) throw input_error("hnf expects integer entries");
        z.at(i, j) = q.at(i, j).get_num();
      }
    HnfResult r = hnf(z);
    py::dict out;
    out["h"] = qmat_out(zmat_to_qmat(r.h));
    out["u"] = qmat_out(zmat_to_qmat(r.u));
    return out;
  });

  m.def("dual_basis", [](const py::sequence& rows) { return qmat_out(dual_basis(qmat_in(rows))); });

  m.def("kernel_mod_p", [](const py::sequence& rows, std::int64_t p) {
    ModMat mm;
    for (const auto& r : rows) mm.push_back(modvec_in(r.cast<py::sequence>()));
    return kernel_mod_p(mm, p);
  });

  m.def("lll_reduce",
        [](const py::sequence& basis) { return qmat_out(lll_reduce(lattice_in(basis)).basis()); });

  m.def("hnf_basis",
        [](const py::sequence& basis) { return qmat_out(lattice_in(basis).hnf_basis()); });

  m.def("contains", [](const py::sequence& basis, const py::sequence& x) {
    return lattice_in(basis).contains(qvec_in(x));
  });

  m.def("sublattice_mod",
        [](const py::sequence& basis, const py::sequence& w, const py::object& p) {
          Rat pr = rat_in(p);
          if (pr.get_den() != 1) throw input_error("p must be an integer");
          return qmat_out(sublattice_mod(lattice_in(basis), qvec_in(w), pr.get_num()).basis());
        });

  m.def("find_prime", [](const py::object& n) {
    Rat nr = rat_in(n);
    if (nr.get_den() != 1) throw input_error("N must be an integer");
    return find_prime(nr.get_num()).get_str();
  });

  m.def("lines", [](std::int64_t p, int n) { return all_lines(p, n); });

  m.def("complement_basis",
        [](const py::sequence& q, std::int64_t p) { return complement_basis(modvec_in(q), p); });

  m.def("good_vector", [](const py::sequence& s, const py::object& p) {
    std::vector<ModVec> set;
    for (const auto& row : s) set.push_back(modvec_in(row.cast<py::sequence>()));
    Rat pr = rat_in(p);
    GoodVectorResult r = good_vector(std::move(set), pr.get_num());
    py::dict out;
    out["a"] = r.a;
    out["zeros"] = r.zeros;
    out["distinct"] = r.distinct;
    return out;
  });

  m.def("membership",
        [](const py::object& body, const py::sequence& x, const py::object& eps) {
          QVec xv = qvec_in(x);
          ConvexBody k = body_in(body, static_cast<int>(xv.size()));
          return k.membership(xv, rat_in(eps)) == Membership::inside ? "inside" : "outside";
        });

  m.def("gauge", [](const py::object& body, const py::sequence& x, const py::object& eps) {
    QVec xv = qvec_in(x);
    ConvexBody k = body_in(body, static_cast<int>(xv.size()));
    DistanceEstimate d = k.gauge(xv, rat_in(eps));
    py::dict out;
    out["value"] = rat_str(d.value);
    out["eps"] = rat_str(d.eps);
    return out;
  });

  m.def("gauge_exact", [](const py::object& body, const py::sequence& x) {
    QVec xv = qvec_in(x);
    ConvexBody k = body_in(body, static_cast<int>(xv.size()));
    return gauge_out(k.gauge_exact(xv));
  });

  m.def("lattice_enum", [](const py::object& body, const py::sequence& center,
                           const py::object& scale, const py::sequence& basis,
                           const py::object& eps) {
    Lattice lat = lattice_in(basis);
    PointStream s =
        lattice_enum(body_in(body, lat.dim()), qvec_in(center), rat_in(scale), lat, rat_in(eps));
    return points_out(s.points);
  });

  m.def("svp_l2", [](const py::sequence& basis) {
    SvpL2Result r = svp_l2(lattice_in(basis));
    py::dict out;
    out["points"] = points_out(r.points);
    out["norm_sq"] = rat_str(r.norm_sq);
    return out;
  });

  m.def("cvp_l2", [](const py::sequence& basis, const py::sequence& target) {
    CvpL2Result r = cvp_l2(lattice_in(basis), qvec_in(target));
    py::dict out;
    out["points"] = points_out(r.points);
    out["dist_sq"] = rat_str(r.dist_sq);
    return out;
  });

  m.def("shortest_vectors",
        [](const py::object& body, const py::sequence& basis, const py::object& eps) {
          Lattice lat = lattice_in(basis);
          ShortestVectorsResult r =
              shortest_vectors(symmetrize(body_in(body, lat.dim())), lat, rat_in(eps));
          py::dict out;
          out["points"] = points_out(r.points);
          out["lambda1"] = gauge_out(r.lambda1);
          return out;
        });

  m.def("sparsify", [](const py::object& body, const py::sequence& basis, const py::object& t) {
    Lattice lat = lattice_in(basis);
    auto [sub, rep] = sparsify(body_in(body, lat.dim()), lat, rat_in(t));
    py::dict out;
    out["basis"] = qmat_out(sub.hnf_basis());
    out["report"] = json_loads(report_to_json(rep));
    return out;
  });

  m.def("sparsify_randomized", [](const py::object& body, const py::sequence& basis,
                                  const py::object& t, std::uint64_t seed) {
    Lattice lat = lattice_in(basis);
    auto [sub, rep] = sparsify_randomized(body_in(body, lat.dim()), lat, rat_in(t), seed);
    py::dict out;
    out["basis"] = qmat_out(sub.hnf_basis());
    out["report"] = json_loads(report_to_json(rep));
    return out;
  });

  m.def("verify_sparsifier",
        [](const py::object& body, const py::sequence& basis, const py::sequence& sub_basis,
           const py::object& t, const py::sequence& targets) {
          Lattice lat = lattice_in(basis);
          Lattice sub = lattice_in(sub_basis);
          std::vector<QVec> tv;
          for (const auto& x : targets) tv.push_back(qvec_in(x.cast<py::sequence>()));
          SparsifierVerification v =
              verify_sparsifier(body_in(body, lat.dim()), lat, sub, rat_in(t), tv);
          return json_loads(verification_to_json(v));
        });

  m.def("approx_cvp", [](const py::object& body, const py::sequence& basis,
                         const py::sequence& target, const py::object& eps) {
    Lattice lat = lattice_in(basis);
    CvpResult r = approx_cvp(body_in(body, lat.dim()), lat, qvec_in(target), rat_in(eps));
    py::dict out;
    out["points"] = points_out(r.points);
    out["bound"] = rat_str(r.distance_bound);
    py::dict trace;
    trace["l"] = rat_str(r.trace.l);
    trace["eps0"] = rat_str(r.trace.eps0);
    trace["d_f"] = rat_str(r.trace.d_f);
    trace["d_tilde"] = rat_str(r.trace.d_tilde);
    trace["sparsifier_rounds"] = r.trace.sparsifier_reports.size();
    out["trace"] = std::move(trace);
    return out;
  });

  m.def("brute_cvp", [](const py::object& body, const py::sequence& basis,
                        const py::sequence& target, long box) {
    Lattice lat = lattice_in(basis);
    BruteCvpResult r = brute_cvp(body_in(body, lat.dim()), lat, qvec_in(target), box);
    py::dict out;
    out["distance"] = gauge_out(r.distance);
    out["argmin"] = points_out(r.argmin);
    return out;
  });

  m.def("count_points", [](const py::object& body, const py::object& scale,
                           const py::sequence& basis, const py::sequence& center) {
    Lattice lat = lattice_in(basis);
    return count_points(body_in(body, lat.dim()), rat_in(scale), lat, qvec_in(center)).get_str();
  });

  m.def("check_cauchy_davenport",
        [](std::int64_t p, const std::vector<std::vector<std::int64_t>>& sets) {
          return check_cauchy_davenport(p, sets);
        });
}
