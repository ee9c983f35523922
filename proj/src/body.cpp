#include "latspar/body.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace latspar {

namespace {

Rat sqrt_dim_upper(int n) { return sqrt_upper(Rat(n), Rat(1, 1000000)); }

Rat dot(const QVec& x, const QVec& y) {
  Rat acc(0);
  for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

GaugeValue gauge_max(const GaugeValue& a, const GaugeValue& b) {
  return gauge_leq(a, b) ? b : a;
}

}  // namespace

ConvexBody ConvexBody::lp_ball(LpKind p, const Rat& radius, int dim) {
  if (radius <= 0) throw input_error("lp ball radius must be positive");
  if (dim < 1) throw input_error("lp ball dimension must be >= 1");
  ConvexBody k;
  k.kind_ = Kind::Lp;
  k.dim_ = dim;
  k.lp_ = p;
  k.radius_ = radius;
  k.symmetric_ = true;
  k.gamma_ = 1;
  switch (p) {
    case LpKind::L2:
      k.r_ = k.big_r_ = radius;
      break;
    case LpKind::Linf:
      k.r_ = radius;
      k.big_r_ = radius * sqrt_dim_upper(dim);
      break;
    case LpKind::L1:
      k.r_ = radius / sqrt_dim_upper(dim);
      k.big_r_ = radius;
      break;
  }
  return k;
}

namespace {

// Vertex/facet analysis for polytopes in dim <= 4: exact inradius lower
// bound from facet distances, circumradius upper bound from vertex norms,
// and a recession-ray scan to reject unbounded inputs.
void polytope_centering(const QMat& a, const QVec& b, Rat* r_out, Rat* big_r_out) {
  int m = a.rows, n = a.cols;
  if (n > 4) throw input_error("polytope centering analysis limited to dim <= 4; supply r and R");
  if (qmat_rank(a) < n) throw input_error("polytope is unbounded (facet normals not full rank)");

  // r = min_i b_i / ||a_i||_2, rounded down.
  Rat r;
  bool first = true;
  for (int i = 0; i < m; ++i) {
    Rat norm2(0);
    for (int j = 0; j < n; ++j) norm2 += a.at(i, j) * a.at(i, j);
    if (norm2 == 0) throw input_error("polytope has a zero facet normal");
    Rat ub = sqrt_upper(norm2, Rat(1, 1000000));
    Rat ri = b[i] / ub;
    if (first || ri < r) r = ri;
    first = false;
  }

  // Recession rays live in kernels of (n-1)-subsets of facet normals.
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  std::vector<int> comb;
  auto ray_blocked = [&](const QVec& d) {
    for (int i = 0; i < m; ++i) {
      Rat s(0);
      for (int j = 0; j < n; ++j) s += a.at(i, j) * d[j];
      if (s > 0) return true;
    }
    return false;
  };
  std::function<void(int, int)> scan_rays = [&](int start, int need) {
    if (need == 0) {
      QMat sub(static_cast<int>(comb.size()), n);
      for (size_t r2 = 0; r2 < comb.size(); ++r2)
        for (int j = 0; j < n; ++j) sub.at(static_cast<int>(r2), j) = a.at(comb[r2], j);
      for (const QVec& d : qmat_kernel(sub)) {
        QVec neg(d.size());
        for (size_t j = 0; j < d.size(); ++j) neg[j] = -d[j];
        if (!ray_blocked(d) || !ray_blocked(neg)) throw input_error("polytope is unbounded");
      }
      return;
    }
    for (int i = start; i <= m - need; ++i) {
      comb.push_back(i);
      scan_rays(i + 1, need - 1);
      comb.pop_back();
    }
  };
  if (n >= 2) {
    scan_rays(0, n - 1);
  } else {
    QVec up{Rat(1)}, down{Rat(-1)};
    if (!ray_blocked(up) || !ray_blocked(down)) throw input_error("polytope is unbounded");
  }

  // Vertices: feasible solutions of n active facets.
  Rat max_norm2(0);
  bool any_vertex = false;
  std::function<void(int, int)> scan_vertices = [&](int start, int need) {
    if (need == 0) {
      QMat sub(n, n);
      QVec rhs(n);
      for (int r2 = 0; r2 < n; ++r2) {
        for (int j = 0; j < n; ++j) sub.at(r2, j) = a.at(comb[r2], j);
        rhs[r2] = b[comb[r2]];
      }
      QVec v;
      try {
        v = qmat_solve(sub, rhs);
      } catch (const input_error&) {
        return;  // degenerate subset
      }
      for (int i = 0; i < m; ++i) {
        Rat s(0);
        for (int j = 0; j < n; ++j) s += a.at(i, j) * v[j];
        if (s > b[i]) return;  // infeasible
      }
      any_vertex = true;
      Rat norm2 = dot(v, v);
      if (norm2 > max_norm2) max_norm2 = norm2;
      return;
    }
    for (int i = start; i <= m - need; ++i) {
      comb.push_back(i);
      scan_vertices(i + 1, need - 1);
      comb.pop_back();
    }
  };
  scan_vertices(0, n);
  if (!any_vertex) throw input_error("polytope has no vertices (unbounded or empty)");

  *r_out = r;
  *big_r_out = sqrt_upper(max_norm2, Rat(1, 1000000));
}

}  // namespace

ConvexBody ConvexBody::polytope(QMat a, QVec b) {
  if (a.rows < 1 || a.cols < 1) throw input_error("polytope needs at least one facet");
  if (static_cast<int>(b.size()) != a.rows) throw input_error("polytope A/b shape mismatch");
  for (const Rat& bi : b)
    if (bi <= 0) throw input_error("polytope must contain 0 in its interior (b > 0)");
  for (Rat& e : a.a) e.canonicalize();
  for (Rat& e : b) e.canonicalize();
  ConvexBody k;
  k.kind_ = Kind::Polytope;
  k.dim_ = a.cols;
  k.symmetric_ = false;
  k.gamma_ = 1;
  polytope_centering(a, b, &k.r_, &k.big_r_);
  k.a_ = std::move(a);
  k.b_ = std::move(b);
  return k;
}

ConvexBody ConvexBody::symmetrized(const ConvexBody& inner) {
  if (inner.symmetric()) {
    ConvexBody k = inner;
    k.gamma_ = 1;
    return k;
  }
  ConvexBody k;
  k.kind_ = Kind::Symmetrized;
  k.dim_ = inner.dim();
  k.symmetric_ = true;
  k.gamma_ = 1;
  k.r_ = inner.inradius();
  k.big_r_ = inner.circumradius();
  k.inner_ = std::make_shared<ConvexBody>(inner);
  return k;
}

ConvexBody ConvexBody::with_metadata(std::optional<Rat> r, std::optional<Rat> big_r,
                                     std::optional<Rat> gamma) const {
  ConvexBody k = *this;
  if (r) {
    if (*r <= 0) throw input_error("r must be positive");
    k.r_ = std::move(*r);
  }
  if (big_r) {
    if (*big_r <= 0) throw input_error("R must be positive");
    k.big_r_ = std::move(*big_r);
  }
  if (gamma) {
    if (*gamma <= 0 || *gamma > 1) throw input_error("gamma must lie in (0, 1]");
    k.gamma_ = std::move(*gamma);
  }
  if (k.r_ > k.big_r_) throw input_error("r must not exceed R");
  return k;
}

GaugeValue ConvexBody::gauge_exact(const QVec& x) const {
  if (static_cast<int>(x.size()) != dim_) throw input_error("gauge: dimension mismatch");
  switch (kind_) {
    case Kind::Lp: {
      if (lp_ == LpKind::L2) return GaugeValue::sqrt_of(dot(x, x) / (radius_ * radius_));
      Rat acc(0);
      for (const Rat& xi : x) {
        Rat a = xi < 0 ? Rat(-xi) : xi;
        if (lp_ == LpKind::L1)
          acc += a;
        else if (a > acc)
          acc = a;
      }
      return GaugeValue::exact(acc / radius_);
    }
    case Kind::Polytope: {
      Rat best(0);  // gauge is >= 0; all-nonpositive rows only at x = 0
      for (int i = 0; i < a_.rows; ++i) {
        Rat s(0);
        for (int j = 0; j < a_.cols; ++j) s += a_.at(i, j) * x[j];
        s /= b_[i];
        if (s > best) best = s;
      }
      return GaugeValue::exact(best);
    }
    case Kind::Symmetrized: {
      QVec neg(x.size());
      for (size_t i = 0; i < x.size(); ++i) neg[i] = -x[i];
      return gauge_max(inner_->gauge_exact(x), inner_->gauge_exact(neg));
    }
  }
  throw internal_error("unreachable body kind");
}

bool ConvexBody::gauge_leq_scale(const QVec& x, const Rat& s) const {
  return gauge_leq_rat(gauge_exact(x), s);
}

DistanceEstimate ConvexBody::gauge(const QVec& x, const Rat& eps) const {
  if (eps <= 0) throw input_error("gauge: eps must be positive");
  GaugeValue g = gauge_exact(x);
  if (!g.is_sqrt) return {g.v, Rat(0)};
  auto [lo, hi] = gauge_bracket(g, eps);
  if (lo == hi) return {lo, Rat(0)};
  return {(lo + hi) / 2, eps};
}

Membership ConvexBody::membership(const QVec& x, const Rat& eps) const {
  if (eps <= 0) throw input_error("membership: eps must be positive");
  if (static_cast<int>(x.size()) != dim_) throw input_error("membership: dimension mismatch");
  return gauge_leq_scale(x, Rat(1)) ? Membership::inside : Membership::outside;
}

LpKind ConvexBody::lp_kind() const {
  if (kind_ != Kind::Lp) throw input_error("not an lp ball");
  return lp_;
}

const QMat& ConvexBody::facet_matrix() const {
  if (kind_ != Kind::Polytope) throw input_error("not a polytope");
  return a_;
}

const QVec& ConvexBody::facet_rhs() const {
  if (kind_ != Kind::Polytope) throw input_error("not a polytope");
  return b_;
}

const Rat& ConvexBody::lp_radius() const {
  if (kind_ != Kind::Lp) throw input_error("not an lp ball");
  return radius_;
}

const ConvexBody& ConvexBody::inner() const {
  if (kind_ != Kind::Symmetrized) throw input_error("not a symmetrized body");
  return *inner_;
}

std::string ConvexBody::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::Lp:
      out << "lp(" << (lp_ == LpKind::L1 ? "1" : lp_ == LpKind::L2 ? "2" : "inf") << ", radius "
          << rat_str(radius_) << ")";
      break;
    case Kind::Polytope:
      out << "polytope(" << a_.rows << " facets)";
      break;
    case Kind::Symmetrized:
      out << "symmetrized(" << inner_->describe() << ")";
      break;
  }
  return out.str();
}

ConvexBody symmetrize(const ConvexBody& k) { return ConvexBody::symmetrized(k); }

namespace {

using nlohmann::json;

Rat rat_from_json(const json& v, const char* what) {
  if (v.is_string()) return parse_rat(v.get<std::string>());
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_number_unsigned()) return Rat(static_cast<unsigned long>(v.get<std::uint64_t>()));
  throw input_error(std::string(what) + ": rationals must be strings or integers, not decimals");
}

ConvexBody body_from_json(const json& j, int expected_dim) {
  if (!j.is_object()) throw input_error("body spec must be a JSON object");
  std::string type = j.value("type", "");
  ConvexBody body = [&]() {
    if (type == "lp") {
      std::string p;
      if (j.contains("p") && j.at("p").is_string())
        p = j.at("p").get<std::string>();
      else if (j.contains("p") && j.at("p").is_number_integer())
        p = std::to_string(j.at("p").get<int>());
      else
        throw input_error("lp body: missing or bad field 'p'");
      LpKind kind;
      if (p == "1")
        kind = LpKind::L1;
      else if (p == "2")
        kind = LpKind::L2;
      else if (p == "inf")
        kind = LpKind::Linf;
      else
        throw input_error("lp body: p must be \"1\", \"2\" or \"inf\"");
      if (!j.contains("radius")) throw input_error("lp body: missing field 'radius'");
      Rat radius = rat_from_json(j.at("radius"), "radius");
      int dim = expected_dim;
      if (j.contains("dim")) dim = j.at("dim").get<int>();
      if (dim < 1) throw input_error("lp body: dimension unknown; add a 'dim' field");
      return ConvexBody::lp_ball(kind, radius, dim);
    }
    if (type == "polytope") {
      if (!j.contains("A") || !j.at("A").is_array() || j.at("A").empty())
        throw input_error("polytope body: missing facet matrix 'A'");
      if (!j.contains("b") || !j.at("b").is_array())
        throw input_error("polytope body: missing right-hand side 'b'");
      const json& ja = j.at("A");
      int m = static_cast<int>(ja.size());
      int n = static_cast<int>(ja.at(0).size());
      QMat a(m, n);
      for (int i = 0; i < m; ++i) {
        if (static_cast<int>(ja.at(i).size()) != n)
          throw input_error("polytope body: ragged facet matrix");
        for (int jj = 0; jj < n; ++jj) a.at(i, jj) = rat_from_json(ja.at(i).at(jj), "A entry");
      }
      const json& jb = j.at("b");
      if (static_cast<int>(jb.size()) != m) throw input_error("polytope body: |b| != rows of A");
      QVec b(m);
      for (int i = 0; i < m; ++i) b[i] = rat_from_json(jb.at(i), "b entry");
      return ConvexBody::polytope(std::move(a), std::move(b));
    }
    if (type == "symmetrized") {
      if (!j.contains("inner")) throw input_error("symmetrized body: missing field 'inner'");
      return ConvexBody::symmetrized(body_from_json(j.at("inner"), expected_dim));
    }
    throw input_error("body spec: unknown type '" + type + "'");
  }();

  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    if (key != "type" && key != "p" && key != "radius" && key != "dim" && key != "A" &&
        key != "b" && key != "inner" && key != "r" && key != "R" && key != "gamma")
      throw input_error("body spec: unknown field '" + key + "'");
  }
  std::optional<Rat> r, big_r, gamma;
  if (j.contains("r")) r = rat_from_json(j.at("r"), "r");
  if (j.contains("R")) big_r = rat_from_json(j.at("R"), "R");
  if (j.contains("gamma")) gamma = rat_from_json(j.at("gamma"), "gamma");
  if (r || big_r || gamma) body = body.with_metadata(std::move(r), std::move(big_r), std::move(gamma));
  if (expected_dim > 0 && body.dim() != expected_dim)
    throw input_error("body dimension " + std::to_string(body.dim()) +
                      " does not match expected dimension " + std::to_string(expected_dim));
  return body;
}

}  // namespace

ConvexBody body_from_json_text(const std::string& text, int expected_dim) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(1, std::string("bad JSON: ") + e.what());
  }
  return body_from_json(j, expected_dim);
}

ConvexBody body_from_json_file(const std::string& path, int expected_dim) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open body file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return body_from_json_text(buf.str(), expected_dim);
}

}  // namespace latspar
