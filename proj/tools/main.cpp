// bstab command-line front-end.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bstab/charge.hpp"
#include "bstab/errors.hpp"
#include "bstab/geometry.hpp"
#include "bstab/interlace.hpp"
#include "bstab/plot.hpp"
#include "bstab/quadform.hpp"
#include "bstab/restrict.hpp"
#include "bstab/walls.hpp"
#include "bstab_test/criteria.hpp"

namespace {

using J = nlohmann::ordered_json;
using namespace bstab;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<double> tol;
  std::optional<int> samples;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
};

/// What a verb produces: a JSON document, or a plot rendered as CSV/SVG on request.
struct Output {
  J body = J::object();
  std::vector<std::string> warnings;
  std::string mode = "exact";
  std::optional<PlotDoc> plot;
  bool failed = false;  // selftest failures exit 1 without an error document
};

// ---- input -----------------------------------------------------------------

J load(const std::string& text, const char* what) {
  std::string src = text;
  if (!src.empty() && src[0] == '@') {
    std::ifstream in(src.substr(1), std::ios::binary);
    if (!in) throw UsageError(std::string("cannot read ") + what + " from " + src.substr(1));
    std::ostringstream s;
    s << in.rdbuf();
    src = s.str();
  }
  try {
    return J::parse(src);
  } catch (const J::exception& e) {
    throw UsageError(std::string("malformed JSON for ") + what + ": " + e.what());
  }
}

Rational rat(const J& j, const char* what) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.dump());
    if (j.is_number()) return parse_rational(j.dump());
  } catch (const Error& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
  throw UsageError(std::string(what) + ": expected a rational string or number");
}

Rational rat_text(const std::string& s, const char* what) {
  try {
    return parse_rational(s);
  } catch (const Error& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

RationalVec rvec(const J& j, const char* what) {
  if (!j.is_array()) throw UsageError(std::string(what) + ": expected a JSON array");
  RationalVec v;
  for (const auto& x : j) v.push_back(rat(x, what));
  return v;
}

RootTuple tuple(const J& j, const char* what) {
  if (!j.is_array() || j.empty()) throw UsageError(std::string(what) + ": expected a nonempty JSON array");
  RationalVec fin;
  bool inf = false;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].is_string() && (j[i] == "inf" || j[i] == "+inf")) {
      if (i + 1 != j.size()) throw UsageError(std::string(what) + ": only the last entry may be inf");
      inf = true;
    } else {
      fin.push_back(rat(j[i], what));
    }
  }
  return RootTuple(fin, inf);
}

QMatrix qmatrix(const J& j, const char* what) {
  if (!j.is_array() || j.empty()) throw UsageError(std::string(what) + ": expected a 2-D JSON array");
  std::vector<RationalVec> rows;
  for (const auto& r : j) rows.push_back(rvec(r, what));
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw UsageError(std::string(what) + ": ragged matrix");
  return QMatrix::from_rows(rows);
}

LatticeVector lattice(const J& j, const char* what) { return LatticeVector{rvec(j, what)}; }

NSVector nsvector(const J& j, const char* what) {
  if (!j.is_object() || !j.contains("r") || !j.contains("D") || !j.contains("s"))
    throw UsageError(std::string(what) + ": expected {\"r\":..., \"D\":[...], \"s\":...}");
  return NSVector{rat(j["r"], what), rvec(j["D"], what), rat(j["s"], what)};
}

// ---- output ----------------------------------------------------------------

J jr(const Rational& q) { return to_string(q); }

J jd(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

J jvec(const RationalVec& v) {
  J a = J::array();
  for (const auto& x : v) a.push_back(jr(x));
  return a;
}

J jdvec(const std::vector<double>& v) {
  J a = J::array();
  for (double x : v) a.push_back(jd(x));
  return a;
}

J jmat(const QMatrix& m) {
  J a = J::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(jvec(m.row(i)));
  return a;
}

/// Exact entries as strings, snapped numeric roots as decimals.
J jtuple(const RootTuple& t, Output& o) {
  J a = J::array();
  for (std::size_t i = 0; i < t.finite().size(); ++i) {
    if (t.exact()) a.push_back(jr(t.finite()[i]));
    else a.push_back(jd(t.at(i)));
  }
  if (!t.exact()) o.mode = "mixed";
  if (t.infinite_last()) a.push_back("inf");
  return a;
}

J jns(const NSVector& v) { return J{{"r", jr(v.r)}, {"D", jvec(v.D)}, {"s", jr(v.s)}}; }

J jlocus(const WallLocus& L) {
  J br = J::array();
  for (const auto& b : L.branches) {
    J pts = J::array();
    for (const auto& p : b) pts.push_back(J::array({jd(p.c1), jd(p.c2), jd(p.residual)}));
    br.push_back(pts);
  }
  J out{{"coord1", L.coord1}, {"coord2", L.coord2}, {"description", L.description}, {"codim", L.codim},
        {"scattered", L.scattered}, {"points", L.size()}};
  if (L.line) out["line"] = J::array({jr((*L.line)[0]), jr((*L.line)[1]), jr((*L.line)[2])});
  out["branches"] = br;
  return out;
}

void note_sep(const SepResult& r, Output& o) {
  if (!r.certified) o.warnings.push_back("sep_pencil is a sampled minimum (uncertified)");
}

PlotDoc single_layer(const std::string& title, const Viewport& v, const WallLocus& L) {
  PlotDoc d;
  d.title = title;
  d.view = v;
  d.layers.push_back(PlotLayer{"locus", "#1f4e9c", L, false});
  return d;
}

Viewport viewport(const std::string& text, const Viewport& def) {
  if (text.empty()) return def;
  J j = load(text, "--view");
  if (!j.is_array() || j.size() != 4) throw UsageError("--view: expected [xmin, xmax, ymin, ymax]");
  Viewport v;
  double* f[4] = {&v.xmin, &v.xmax, &v.ymin, &v.ymax};
  for (int i = 0; i < 4; ++i) {
    if (!j[i].is_number()) throw UsageError("--view: entries must be numbers");
    *f[i] = j[i].get<double>();
  }
  if (!(v.xmin < v.xmax && v.ymin < v.ymax)) throw UsageError("--view: empty viewport");
  return v;
}

int ambient_of(int given, std::initializer_list<const QPoly*> ps) {
  if (given > 0) return given;
  int n = 0;
  for (const QPoly* p : ps) n = std::max(n, p->degree());
  return n;
}

// ---- verbs -----------------------------------------------------------------

struct Args {
  std::string f, g, t, v, w, re, im, gram, ms, G, H, view, kind = "tilde";
  std::string m_rat, alpha, beta, a, b, c = "1", K_lo, K_hi;
  int n = 0, grid = 64, figure = 1, cells = 400;
  long long m_int = 1;
  double lo = -8, hi = 0, scale = 0.1;
};

void interlace_check(const Args& A, const Globals&, Output& o) {
  QPoly f(rvec(load(A.f, "--f"), "--f")), g(rvec(load(A.g, "--g"), "--g"));
  int n = ambient_of(A.n, {&f, &g});
  Polynomial pf(f, n), pg(g, n);
  bool inter = is_interlaced(pf, pg);
  o.mode = "mixed";
  o.body["n"] = n;
  o.body["interlaced"] = inter;
  o.body["f_roots"] = jtuple(pf.roots(), o);
  o.body["g_roots"] = jtuple(pg.roots(), o);
  if (inter) {
    o.body["f_lhd_g"] = lhd(pf, pg);
    o.body["g_lhd_f"] = lhd(pg, pf);
    SepResult s = sep_pencil(Pencil(pf, pg));
    o.body["sep_pencil"] = jd(s.value);
    note_sep(s, o);
  }
}

void interlace_sep(const Args& A, const Globals&, Output& o) {
  QPoly f(rvec(load(A.f, "--f"), "--f"));
  Polynomial pf(f, ambient_of(A.n, {&f}));
  o.mode = "numeric";
  o.body["roots"] = jtuple(pf.roots(), o);
  o.body["sep"] = jd(sep(pf));
}

void charge_eval(const Args& A, const Globals&, Output& o) {
  RootTuple t = tuple(load(A.t, "--t"), "--t");
  LatticeVector v = lattice(load(A.v, "--v"), "--v");
  ReducedCharge b = reduced_charge(t);
  if (v.ambient() != b.ambient()) throw Error(ErrorKind::AmbientMismatch, "v must have n+1 = " + std::to_string(b.ambient() + 1) + " coordinates");
  o.body["value"] = jr(eval_charge(b, v));
  o.body["weights"] = jvec(b.weights);
}

void charge_decompose(const Args& A, const Globals&, Output& o) {
  RootTuple t = tuple(load(A.t, "--t"), "--t");
  LatticeVector v = lattice(load(A.v, "--v"), "--v");
  Decomposition d = decompose(v, t);
  o.body["a"] = jvec(d.a);
  o.body["verdict"] = verdict_name(d.verdict);
  o.body["boundary"] = d.boundary;
  if (d.boundary) o.warnings.push_back("boundary verdict: some 0 < |a_i| < 1e-8");
}

void charge_poly(const Args& A, const Globals&, Output& o) {
  QPoly f(rvec(load(A.f, "--f"), "--f"));
  Polynomial pf(f, ambient_of(A.n, {&f}));
  ReducedCharge b = charge_of_poly(pf);
  o.body["weights"] = jvec(b.weights);
  if (b.scale) o.body["scale"] = jr(*b.scale);
  if (b.tuple) o.body["t"] = jtuple(*b.tuple, o);
}

CentralCharge central(const Args& A) {
  CentralCharge z;
  z.re.weights = rvec(load(A.re, "--re"), "--re");
  z.im.weights = rvec(load(A.im, "--im"), "--im");
  if (z.re.weights.size() != z.im.weights.size()) throw Error(ErrorKind::AmbientMismatch, "--re and --im differ in length");
  return z;
}

void charge_member(const Args& A, const Globals& gl, Output& o) {
  CentralCharge z = central(A);
  UnMembership u = in_Un(z, gl.tol.value_or(0));
  o.mode = "mixed";
  o.body["member"] = u.member;
  if (!u.reason.empty()) o.body["reason"] = u.reason;
  if (u.member) {
    o.body["c1"] = jr(u.c1);
    o.body["c2"] = jr(u.c2);
    o.body["s"] = jtuple(*u.s, o);
    o.body["t"] = jtuple(*u.t, o);
    o.body["pencil_sep"] = jd(u.pencil_sep);
    if (!u.certified) o.warnings.push_back("sep_pencil is a sampled minimum (uncertified)");
  }
}

Pencil pencil_from(const Args& A) {
  QPoly f(rvec(load(A.f, "--f"), "--f")), g(rvec(load(A.g, "--g"), "--g"));
  int n = ambient_of(A.n, {&f, &g});
  return Pencil(Polynomial(f, n), Polynomial(g, n));
}

SupportOptions support_opts(const Globals& gl) {
  SupportOptions s;
  if (gl.samples) {
    if (*gl.samples < 1) throw UsageError("--samples must be positive");
    s.t_samples = s.member_samples = *gl.samples;
  }
  if (gl.tol) s.vanish_tol = *gl.tol;
  return s;
}

void quadform_build(const Args& A, const Globals& gl, Output& o) {
  Pencil l = pencil_from(A);
  QuadraticForm q;
  if (A.kind == "line") {
    q = q_line(l);
  } else if (A.kind == "tilde" || A.kind == "dual") {
    QTildeOptions opt;
    opt.verify = support_opts(gl);
    q = q_tilde(l, opt);
    if (A.kind == "dual") q = dual_form(q);
  } else {
    throw UsageError("--kind must be line, tilde or dual");
  }
  o.body["gram"] = jmat(q.gram);
  o.body["provenance"] = q.provenance;
  o.body["alphas"] = jvec(q.alphas);
}

void quadform_verify(const Args& A, const Globals& gl, Output& o) {
  Pencil l = pencil_from(A);
  QuadraticForm q;
  if (!A.gram.empty()) {
    q.gram = qmatrix(load(A.gram, "--gram"), "--gram");
    q.provenance = "input";
    if (!q.gram.is_symmetric()) throw Error(ErrorKind::InvalidInput, "Gram matrix must be symmetric");
    if (q.ambient() != l.ambient()) throw Error(ErrorKind::AmbientMismatch, "Gram size must be n+1");
  } else {
    QTildeOptions opt;
    opt.verify = support_opts(gl);
    q = q_tilde(l, opt);
  }
  SupportReport r = verify_support(q, l, support_opts(gl));
  o.mode = "mixed";
  o.body["pass"] = r.pass();
  o.body["vanishing"] = r.vanishing;
  o.body["kernel_negdef"] = r.kernel_negdef;
  o.body["alternating"] = r.alternating;
  o.body["max_vanish_residual"] = jd(r.max_vanish_residual);
  o.body["min_alternating_ratio"] = jd(r.min_alternating_ratio);
  if (!r.witness.empty()) o.body["witness"] = r.witness;
  o.failed = !r.pass();
}

void quadform_wq(const Args& A, const Globals&, Output& o) {
  CentralCharge z = central(A);
  QuadraticForm q;
  q.gram = qmatrix(load(A.gram, "--gram"), "--gram");
  q.provenance = "input";
  WQReport r = in_WQ(z, q);
  o.body["in_w"] = r.in_w;
  o.body["kernel_negdef"] = r.kernel_negdef;
  o.body["q_dual_f"] = jr(r.qf);
  o.body["q_dual_g"] = jr(r.qg);
  o.body["q_dual_fg"] = jr(r.qfg);
}

void geom_family(const Args& A, const Globals&, Output& o) {
  LatticeVector v = lattice(load(A.v, "--v"), "--v");
  RootTuple t = tuple(load(A.t, "--t"), "--t");
  std::optional<std::pair<Rational, Rational>> K;
  if (!A.K_lo.empty() || !A.K_hi.empty()) {
    if (A.K_lo.empty() || A.K_hi.empty()) throw UsageError("--K-lo and --K-hi go together");
    K = std::make_pair(rat_text(A.K_lo, "--K-lo"), rat_text(A.K_hi, "--K-hi"));
  }
  std::optional<Rational> beta;
  if (!A.beta.empty()) beta = rat_text(A.beta, "--beta");
  FamilyReport r = family_equiv_check(v, t, K, beta, A.grid);
  o.body["K_interval"] = J::array({jr(r.K_lo), jr(r.K_hi)});
  o.body["beta"] = jr(r.beta);
  o.body["grid"] = r.grid;
  o.body["all_K_nonneg"] = r.all_K_nonneg;
  if (r.failing_K) o.body["failing_K"] = jr(*r.failing_K);
  o.body["verdict"] = verdict_name(r.verdict);
  o.body["boundary"] = r.boundary;
  o.body["agree"] = r.agree;
  if (r.boundary) o.warnings.push_back("boundary verdict: some 0 < |a_i| < 1e-8");
}

J jparams(const ThreefoldParams& p) {
  return J{{"alpha", jr(p.alpha)}, {"beta", jr(p.beta)}, {"a", jr(p.a)}, {"b", jr(p.b)}};
}

ThreefoldParams threefold_args(const Args& A) {
  if (A.alpha.empty() || A.beta.empty() || A.a.empty() || A.b.empty())
    throw UsageError("--alpha, --beta, --a and --b are required");
  ThreefoldParams p;
  p.alpha = rat_text(A.alpha, "--alpha");
  p.beta = rat_text(A.beta, "--beta");
  p.a = rat_text(A.a, "--a");
  p.b = rat_text(A.b, "--b");
  return p;
}

void geom_threefold(const Args& A, const Globals&, Output& o) {
  ThreefoldParams p = threefold_args(A);
  auto [valid, inter] = validity_iff_interlaced(p);
  o.body["params"] = jparams(p);
  o.body["valid"] = valid;
  o.body["interlaced"] = inter;
  if (valid) {
    CentralCharge z = threefold_charge(p);
    ThreefoldRoots r = threefold_roots(p);
    o.mode = "mixed";
    o.body["re"] = jvec(z.re.weights);
    o.body["im"] = jvec(z.im.weights);
    J im = jdvec(r.im);
    im.push_back("inf");
    o.body["re_roots"] = jdvec(r.re);
    o.body["im_roots"] = im;
  }
}

void geom_params(const Args& A, const Globals&, Output& o) {
  PartialParams pp = params_from_tuples(tuple(load(A.t, "--t"), "--t"));
  o.body["params"] = jparams(pp.p);
  o.body["alpha_defaulted"] = pp.alpha_defaulted;
  o.body["ab_defaulted"] = pp.ab_defaulted;
  o.body["valid"] = pp.p.valid();
}

void geom_ab(const Args& A, const Globals&, Output& o) {
  NSLattice L(qmatrix(load(A.gram, "--gram"), "--gram"));
  NSVector v = nsvector(load(A.v, "--v"), "--v");
  o.body["delta_v"] = jr(ab_delta(L, v));
  if (!A.G.empty()) {
    RationalVec G = rvec(load(A.G, "--G"), "--G");
    NSVector vt = ab_twist(L, v, G);
    o.body["twist"] = jns(vt);
    o.body["delta_twist"] = jr(ab_delta(L, vt));
    o.body["bayer_step"] = criterion_bayer_step(L, v, G);
    o.body["neg_def_twist"] = criterion_neg_def(L, v, vt);
  }
  if (!A.w.empty()) {
    NSVector w = nsvector(load(A.w, "--w"), "--w");
    o.body["delta_vw"] = jr(ab_delta(L, v, w));
    o.body["neg_def"] = criterion_neg_def(L, v, w);
    if (!A.H.empty()) {
      RestrictCriterion rc = criterion_restrict(L, v, w, rvec(load(A.H, "--H"), "--H"));
      o.body["restrict_setup"] = rc.setup;
      o.body["restricts"] = rc.restricts;
      o.warnings.push_back("effectivity of D2 is not checked");
    }
  }
}

void walls_hilb(const Args& A, const Globals&, Output& o) {
  if (A.m_int < 1) throw Error(ErrorKind::InvalidInput, "m must be a positive integer");
  HilbBounds h = hilb_bounds(A.m_int);
  o.body["m"] = A.m_int;
  o.body["N"] = h.N;
  o.body["M"] = h.M;
  PlotDoc doc = figure4(A.m_int, viewport(A.view, Viewport{4, 14, 5, 35}));
  double worst = 0;
  for (const auto& layer : doc.layers)
    for (const auto& br : layer.locus.branches)
      for (const auto& p : br) worst = std::max(worst, p.residual);
  o.mode = "mixed";
  o.body["max_residual"] = jd(worst);
  o.plot = doc;
}

void walls_surface(const Args& A, const Globals& gl, Output& o) {
  LatticeVector v = lattice(load(A.v, "--v"), "--v");
  Viewport view = viewport(A.view, Viewport{});
  WallLocus L = sb_v_surface(v, view, gl.samples.value_or(401));
  o.mode = "mixed";
  o.body["locus"] = jlocus(L);
  if (L.empty()) o.warnings.push_back("EmptyLocus");
  o.plot = single_layer("Sb_v", view, L);
}

void walls_numerical(const Args& A, const Globals& gl, Output& o) {
  LatticeVector v = lattice(load(A.v, "--v"), "--v"), w = lattice(load(A.w, "--w"), "--w");
  WallGrid g;
  g.lo = A.lo;
  g.hi = A.hi;
  g.cells = gl.samples.value_or(A.cells);
  if (gl.tol) g.tol = *gl.tol;
  if (!(g.lo < g.hi) || g.cells < 1) throw UsageError("need --lo < --hi and a positive cell count");
  WallLocus L = numerical_wall(v, w, g);
  o.mode = "numeric";
  o.body["locus"] = jlocus(L);
  if (L.empty()) o.warnings.push_back("EmptyLocus");
  Viewport view{g.lo, g.hi, g.lo, g.hi};
  if (v.ambient() == 2) view = viewport(A.view, Viewport{});
  else if (!A.view.empty()) view = viewport(A.view, view);
  o.plot = single_layer("numerical wall", view, L);
}

void walls_plot(const Args& A, const Globals&, Output& o) {
  PlotDoc doc;
  if (A.figure == 1) doc = figure1(rat_text(A.c, "--c"), viewport(A.view, Viewport{-6, 6, -6, 6}));
  else if (A.figure == 4) {
    if (A.m_int < 1) throw Error(ErrorKind::InvalidInput, "m must be a positive integer");
    doc = figure4(A.m_int, viewport(A.view, Viewport{4, 14, 5, 35}));
  } else {
    throw UsageError("--figure must be 1 or 4");
  }
  o.mode = "numeric";
  o.body["title"] = doc.title;
  J layers = J::array();
  for (const auto& l : doc.layers) {
    J lj = jlocus(l.locus);
    lj["name"] = l.name;
    lj["guide"] = l.guide;
    layers.push_back(lj);
  }
  o.body["layers"] = layers;
  if (doc.empty_locus()) o.warnings.push_back("EmptyLocus");
  o.plot = doc;
}

void restrict_xi(const Args& A, const Globals&, Output& o) {
  RootTuple t = tuple(load(A.t, "--t"), "--t");
  RootTuple x = xi(t, rat_text(A.m_rat, "--m"));
  o.body["xi"] = jtuple(x, o);
  o.body["sep"] = jd(sep(x));
}

void restrict_chain(const Args& A, const Globals&, Output& o) {
  RootTuple t = tuple(load(A.t, "--t"), "--t");
  RootTuple x = xi_multi(t, rvec(load(A.ms, "--ms"), "--ms"));
  o.body["xi"] = jtuple(x, o);
  o.body["sep"] = jd(sep(x));
}

void restrict_charge_verb(const Args& A, const Globals&, Output& o) {
  CentralCharge z = central(A);
  RestrictedCharge r = restrict_charge(z, rat_text(A.m_rat, "--m"));
  o.body["re"] = jvec(r.z.re.weights);
  o.body["im"] = jvec(r.z.im.weights);
  o.body["c1"] = jr(r.c1);
  o.body["c2"] = jr(r.c2);
  o.body["s"] = jtuple(r.s, o);
  o.body["t"] = jtuple(r.t, o);
  o.body["exact_match"] = r.exact_match;
  o.body["residual"] = jd(r.residual);
}

void restrict_pushforward(const Args& A, const Globals&, Output& o) {
  if (A.n < 1) throw Error(ErrorKind::InvalidAmbient, "n must be at least 1");
  Rational m = rat_text(A.m_rat, "--m");
  if (sgn(m) <= 0) throw Error(ErrorKind::InvalidInput, "m must be positive");
  o.body["matrix"] = jmat(pushforward_matrix(A.n, m));
}

void selftest(const Args& A, const Globals& gl, Output& o) {
  if (!(A.scale > 0)) throw UsageError("--scale must be positive");
  testing::RunConfig cfg;
  cfg.seed = gl.seed;
  cfg.scale = A.scale;
  J list = J::array();
  bool all = true;
  for (const auto& r : testing::run_all(cfg)) {
    all = all && r.pass;
    list.push_back(J{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  }
  o.mode = "mixed";
  o.body["scale"] = A.scale;
  o.body["pass"] = all;
  o.body["criteria"] = list;
  o.failed = !all;
}

void emit(const std::string& text, const Globals& gl) {
  if (gl.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream f(gl.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + gl.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical toolkit for reduced central charges, interlacing pencils and their walls"};
  app.require_subcommand(1);
  Globals gl;
  Args A;
  app.add_option("--tol", gl.tol, "Tolerance override for the verb's numeric checks");
  app.add_option("--samples", gl.samples, "Sample-count override");
  app.add_option("--seed", gl.seed, "Seed for sampled checks (default 0)");
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"json", "csv", "svg"}));
  app.add_option("--out", gl.out, "Write output to PATH instead of stdout");

  std::string verb;
  std::function<void(const Args&, const Globals&, Output&)> action;
  bool plots = false;

  auto group = [&](const char* name, const char* help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  auto leaf = [&](CLI::App* g, const char* name, const char* help, auto fn, bool plot_formats = false) {
    auto* s = g->add_subcommand(name, help);
    s->fallthrough();
    s->callback([&, s, g, fn, plot_formats] {
      verb = g->get_name() + " " + s->get_name();
      action = fn;
      plots = plot_formats;
    });
    return s;
  };
  const char* poly_help = "JSON coefficient array, ascending, or @file";

  auto* gi = group("interlace", "Interlacing and separation");
  auto* s = leaf(gi, "check", "Test whether two members of B_n interlace", interlace_check);
  s->add_option("--f", A.f, poly_help)->required();
  s->add_option("--g", A.g, poly_help)->required();
  s->add_option("--n", A.n, "Ambient n (default: the larger degree)");
  s = leaf(gi, "sep", "Root separation of one member", interlace_sep);
  s->add_option("--f", A.f, poly_help)->required();
  s->add_option("--n", A.n, "Ambient n");

  auto* gc = group("charge", "Reduced central charges");
  s = leaf(gc, "eval", "Evaluate B_t on a lattice vector", charge_eval);
  s->add_option("--t", A.t, "Root tuple, last entry may be \"inf\"")->required();
  s->add_option("--v", A.v, "Lattice vector")->required();
  s = leaf(gc, "decompose", "Expand v in gamma(t_i) and classify signs", charge_decompose);
  s->add_option("--t", A.t, "Root tuple")->required();
  s->add_option("--v", A.v, "Lattice vector in Ker B_t")->required();
  s = leaf(gc, "poly", "Charge of a polynomial", charge_poly);
  s->add_option("--f", A.f, poly_help)->required();
  s->add_option("--n", A.n, "Ambient n");
  s = leaf(gc, "member", "Membership of Z = re + i im in U_n (--tol is the sep bound d)", charge_member);
  s->add_option("--re", A.re, "Weights of the real part")->required();
  s->add_option("--im", A.im, "Weights of the imaginary part")->required();

  auto* gq = group("quadform", "Quadratic forms on the lattice");
  s = leaf(gq, "build", "Build Q_l, Q~_l or its dual for the pencil of f, g", quadform_build);
  s->add_option("--f", A.f, poly_help)->required();
  s->add_option("--g", A.g, poly_help)->required();
  s->add_option("--n", A.n, "Ambient n");
  s->add_option("--kind", A.kind, "line | tilde | dual");
  s = leaf(gq, "verify", "Run the support checks", quadform_verify);
  s->add_option("--f", A.f, poly_help)->required();
  s->add_option("--g", A.g, poly_help)->required();
  s->add_option("--n", A.n, "Ambient n");
  s->add_option("--gram", A.gram, "Gram matrix to test (default: Q~ of the pencil)");
  s = leaf(gq, "wq", "Test Z = re + i im against a form of signature (2, rho-2)", quadform_wq);
  s->add_option("--re", A.re, "Real part weights")->required();
  s->add_option("--im", A.im, "Imaginary part weights")->required();
  s->add_option("--gram", A.gram, "Gram matrix")->required();

  auto* gg = group("geom", "Surface, threefold and abelian-surface numerics");
  s = leaf(gg, "family", "Compare K Delta_H + nabla^beta >= 0 with the sign verdict", geom_family);
  s->add_option("--v", A.v, "Lattice vector (4 coordinates)")->required();
  s->add_option("--t", A.t, "Finite 3-tuple")->required();
  s->add_option("--K-lo", A.K_lo, "Lower end of the K interval");
  s->add_option("--K-hi", A.K_hi, "Upper end of the K interval");
  s->add_option("--beta", A.beta, "beta (default t_2)");
  s->add_option("--grid", A.grid, "Number of K grid points");
  s = leaf(gg, "threefold", "Threefold central charge from (alpha, beta, a, b)", geom_threefold);
  s->add_option("--alpha", A.alpha);
  s->add_option("--beta", A.beta);
  s->add_option("--a", A.a);
  s->add_option("--b", A.b);
  s = leaf(gg, "params", "Threefold parameters from a 2- or 3-tuple", geom_params);
  s->add_option("--t", A.t, "Root tuple")->required();
  s = leaf(gg, "ab", "Abelian-surface discriminant, twist and criteria", geom_ab);
  s->add_option("--gram", A.gram, "Intersection form on NS")->required();
  s->add_option("--v", A.v, "{\"r\":..., \"D\":[...], \"s\":...}")->required();
  s->add_option("--w", A.w, "Second vector");
  s->add_option("--G", A.G, "Twist class");
  s->add_option("--H", A.H, "Polarization (restriction criterion, needs --w)");

  auto* gw = group("walls", "Walls and kernel loci");
  s = leaf(gw, "hilb", "Hilbert-scheme bounds (csv/svg: the figure for m)", walls_hilb, true);
  s->add_option("--m", A.m_int, "m >= 1");
  s->add_option("--view", A.view, "[xmin, xmax, ymin, ymax]");
  s = leaf(gw, "surface", "Sb_v for ambient 2", walls_surface, true);
  s->add_option("--v", A.v, "Lattice vector (3 coordinates)")->required();
  s->add_option("--view", A.view, "[xmin, xmax, ymin, ymax]");
  s = leaf(gw, "numerical", "Common kernel locus of v and w", walls_numerical, true);
  s->add_option("--v", A.v, "Lattice vector")->required();
  s->add_option("--w", A.w, "Lattice vector")->required();
  s->add_option("--lo", A.lo, "Box lower end");
  s->add_option("--hi", A.hi, "Box upper end");
  s->add_option("--cells", A.cells, "Grid cells per axis");
  s->add_option("--view", A.view, "[xmin, xmax, ymin, ymax]");
  s = leaf(gw, "plot", "Reference figures", walls_plot, true);
  s->add_option("--figure", A.figure, "1 or 4");
  s->add_option("--m", A.m_int, "m for figure 4");
  s->add_option("--c", A.c, "c for figure 1");
  s->add_option("--view", A.view, "[xmin, xmax, ymin, ymax]");

  auto* gr = group("restrict", "Restriction to hypersurfaces");
  s = leaf(gr, "xi", "Xi_m of a root tuple", restrict_xi);
  s->add_option("--t", A.t, "Root tuple")->required();
  s->add_option("--m", A.m_rat, "Degree m > 0")->required();
  s = leaf(gr, "chain", "Composition of several Xi", restrict_chain);
  s->add_option("--t", A.t, "Root tuple")->required();
  s->add_option("--ms", A.ms, "JSON array of degrees")->required();
  s = leaf(gr, "charge", "Restrict a central charge in U_n", restrict_charge_verb);
  s->add_option("--re", A.re, "Real part weights")->required();
  s->add_option("--im", A.im, "Imaginary part weights")->required();
  s->add_option("--m", A.m_rat, "Degree m > 0")->required();
  s = leaf(gr, "pushforward", "Matrix of the pushforward Lambda_{n-1} -> Lambda_n", restrict_pushforward);
  s->add_option("--n", A.n, "Ambient n")->required();
  s->add_option("--m", A.m_rat, "Degree m > 0")->required();

  auto* st = app.add_subcommand("selftest", "Acceptance criteria at reduced sample counts");
  st->fallthrough();
  st->add_option("--scale", A.scale, "Sample-count multiplier (default 0.1)");
  st->callback([&] {
    verb = "selftest";
    action = selftest;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  }

  Output o;
  try {
    if (gl.format != "json" && !plots) throw UsageError("--format " + gl.format + " is not available for " + verb);
    action(A, gl, o);
    if (gl.format == "csv") {
      emit(emit_csv(*o.plot), gl);
    } else if (gl.format == "svg") {
      emit(emit_svg(*o.plot), gl);
    } else {
      J doc{{"command", verb}};
      for (auto& [k, val] : o.body.items()) doc[k] = val;
      doc["mode"] = o.mode;
      doc["warnings"] = o.warnings;
      J cfg{{"seed", gl.seed}, {"format", gl.format}};
      cfg["tol"] = gl.tol ? J(*gl.tol) : J(nullptr);
      cfg["samples"] = gl.samples ? J(*gl.samples) : J(nullptr);
      doc["config"] = cfg;
      emit(doc.dump(2) + "\n", gl);
    }
    return o.failed ? 1 : 0;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    J err{{"error", e.name()}, {"message", e.what()}};
    std::string text = err.dump(2) + "\n";
    std::fwrite(text.data(), 1, text.size(), stdout);
    return 1;
  }
}
