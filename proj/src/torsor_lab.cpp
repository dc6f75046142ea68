#include "grt/torsor_lab.hpp"

#include <fstream>
#include <numeric>
#include <stdexcept>

namespace grt {

namespace {

struct Triple {
  int x, y, z;
};

std::size_t encode3(int n, int x, int y, int z) {
  return static_cast<std::size_t>((x * n + y) * n + z);
}

Triple decode3(int n, std::size_t i) {
  const int z = static_cast<int>(i % static_cast<std::size_t>(n));
  i /= static_cast<std::size_t>(n);
  const int y = static_cast<int>(i % static_cast<std::size_t>(n));
  return {static_cast<int>(i / static_cast<std::size_t>(n)), y, z};
}

std::vector<std::string> labels3(const TorsorTable& t, std::size_t i) {
  const auto [x, y, z] = decode3(t.size(), i);
  return {t.label(x), t.label(y), t.label(z)};
}

Report make_report(std::string construction, const std::string& group, int arity) {
  Report r;
  r.construction = std::move(construction);
  r.group = group;
  r.arity = arity;
  return r;
}

NaryMap with_values(const NaryMap& like, std::vector<int> values) {
  if (like.source()) return NaryMap(like.source(), like.arity(), like.target_ptr(), std::move(values));
  return NaryMap(like.base(), like.arity(), like.target_ptr(), std::move(values));
}

void require_ternary(const NaryMap& phi, const TorsorTable& t, const char* op) {
  if (phi.arity() != 3 || phi.base() != t.size())
    throw std::invalid_argument(std::string(op) + ": map is not defined on X^3 for torsor " + t.name());
}

void require_values_in(const NaryMap& phi, const BinaryPairing& p, const char* op) {
  if (phi.target().name() != p.group().name())
    throw std::invalid_argument(std::string(op) + ": map must take values in " + p.group().name());
}

Report axioms_report(const std::string& name, int n, const std::vector<int>& table,
                     const std::vector<std::string>& labels, bool* heap, bool* abelian) {
  auto tau = [&](int x, int y, int z) { return table[encode3(n, x, y, z)]; };
  Report r = make_report("torsor-axioms", name, 3);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ++r.points_checked;
      if (tau(x, y, y) != x) r.record({"tau(x,y,y) = x", {labels[x], labels[y]}, ""});
      if (tau(y, y, x) != x) r.record({"tau(y,y,x) = x", {labels[x], labels[y]}, ""});
    }
  bool h = true, a = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int xyz = tau(x, y, z);
        a = a && xyz == tau(z, y, x);
        for (int v = 0; v < n; ++v)
          for (int w = 0; w < n; ++w) {
            ++r.points_checked;
            const int lhs = tau(xyz, v, w);
            if (lhs != tau(x, y, tau(z, v, w)))
              r.record({"tau(tau(x,y,z),v,w) = tau(x,y,tau(z,v,w))",
                        {labels[x], labels[y], labels[z], labels[v], labels[w]}, ""});
            h = h && lhs == tau(x, tau(v, z, y), w);
          }
      }
  if (heap) *heap = h;
  if (abelian) *abelian = a;
  r.extra["heap"] = h;
  r.extra["abelian"] = a;
  return r;
}

}  // namespace

TorsorTable::TorsorTable(std::string name, std::vector<std::string> labels, std::vector<int> table)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {
  size_ = static_cast<int>(labels_.size());
  const int n = size_;
  if (n == 0) throw TorsorError(name_ + ": a torsor is non-empty");
  if (n > 24) throw TorsorError(name_ + ": torsors above 24 elements are not supported");
  if (table_.size() != static_cast<std::size_t>(n) * n * n)
    throw TorsorError(name_ + ": tau table has wrong size");
  for (int v : table_)
    if (v < 0 || v >= n) throw TorsorError(name_ + ": tau value out of range");
  const Report r = axioms_report(name_, n, table_, labels_, &heap_, &abelian_);
  if (!r.passed()) {
    const auto& v = r.violations.front();
    std::string at;
    for (const auto& p : v.point) at += (at.empty() ? "" : ",") + p;
    throw TorsorError(name_ + ": axiom " + v.check + " fails at (" + at + ")");
  }
}

TorsorTable TorsorTable::from_group(const GroupPtr& g) {
  const int n = g->order();
  std::vector<int> table(static_cast<std::size_t>(n) * n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) table[encode3(n, x, y, z)] = g->mul(g->mul(x, g->inv(y)), z);
  TorsorTable t("torsor(" + g->name() + ")", g->labels(), std::move(table));
  t.group_ = g;
  return t;
}

TorsorTable TorsorTable::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw TorsorError("torsor JSON must be an object");
  if (j.contains("group")) return from_group(make_group(j.at("group").get<std::string>()));
  const auto& tau = j.at("tau");
  const int n = static_cast<int>(tau.size());
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  else
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  if (static_cast<int>(labels.size()) != n) throw TorsorError("torsor JSON: labels and tau disagree in size");
  std::vector<int> table;
  for (const auto& plane : tau) {
    if (static_cast<int>(plane.size()) != n) throw TorsorError("torsor JSON: tau is not cubic");
    for (const auto& row : plane) {
      if (static_cast<int>(row.size()) != n) throw TorsorError("torsor JSON: tau is not cubic");
      for (const auto& v : row) table.push_back(v.get<int>());
    }
  }
  return TorsorTable(j.value("name", std::string("torsor")), std::move(labels), std::move(table));
}

nlohmann::json TorsorTable::to_json() const {
  nlohmann::json cube = nlohmann::json::array();
  for (int x = 0; x < size_; ++x) {
    nlohmann::json plane = nlohmann::json::array();
    for (int y = 0; y < size_; ++y) {
      nlohmann::json row = nlohmann::json::array();
      for (int z = 0; z < size_; ++z) row.push_back(tau(x, y, z));
      plane.push_back(std::move(row));
    }
    cube.push_back(std::move(plane));
  }
  return {{"name", name_}, {"labels", labels_}, {"tau", std::move(cube)}};
}

FiniteGroup TorsorTable::basepoint_group(int e) const {
  std::vector<int> table(static_cast<std::size_t>(size_) * size_);
  for (int x = 0; x < size_; ++x)
    for (int z = 0; z < size_; ++z) table[static_cast<std::size_t>(x * size_ + z)] = tau(x, e, z);
  return FiniteGroup(name_ + "@" + label(e), labels_, std::move(table));
}

Report check_torsor_axioms(const TorsorTable& t) {
  std::vector<int> table(static_cast<std::size_t>(t.size()) * t.size() * t.size());
  std::vector<std::string> labels;
  for (int x = 0; x < t.size(); ++x) {
    labels.push_back(t.label(x));
    for (int y = 0; y < t.size(); ++y)
      for (int z = 0; z < t.size(); ++z) table[encode3(t.size(), x, y, z)] = t.tau(x, y, z);
  }
  return axioms_report(t.name(), t.size(), table, labels, nullptr, nullptr);
}

Report check_basepoint_groups(const TorsorTable& t) {
  Report r = make_report("basepoint-groups", t.name(), 3);
  const int n = t.size();
  for (int e = 0; e < n; ++e) {
    try {
      const FiniteGroup g = t.basepoint_group(e);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            ++r.points_checked;
            if (g.mul(g.mul(x, g.inv(y)), z) != t.tau(x, y, z))
              r.record({"tau(x,y,z) = x y^-1 z at basepoint " + t.label(e),
                        {t.label(x), t.label(y), t.label(z)}, ""});
          }
    } catch (const GroupError& err) {
      r.record({"basepoint group", {t.label(e)}, err.what()});
    }
  }
  return r;
}

// ------------------------------------------------------------ f maps

Report check_f_maps(const TorsorTable& t) {
  const FMaps m = [&] {
    const int n = t.size();
    const std::size_t size = static_cast<std::size_t>(n) * n * n;
    FMaps out{IndexMap(size), IndexMap(size), IndexMap(size), {}};
    for (std::size_t i = 0; i < size; ++i) {
      const auto [x, y, z] = decode3(n, i);
      const int s = t.tau(x, y, z);
      out.f1[i] = encode3(n, s, z, y);
      out.f2[i] = encode3(n, y, x, s);
      out.f3[i] = encode3(n, z, s, x);
    }
    return out;
  }();
  Report r = make_report("f-maps", t.name(), 3);
  const IndexMap f1f1 = compose_maps(m.f1, m.f1), f2f2 = compose_maps(m.f2, m.f2);
  const IndexMap f1f2 = compose_maps(m.f1, m.f2), f2f1 = compose_maps(m.f2, m.f1);
  const IndexMap f3f3 = compose_maps(m.f3, m.f3);
  const IndexMap f2f3 = compose_maps(m.f2, m.f3), f1f3 = compose_maps(m.f1, m.f3);
  bool f3_involution = true, klein = true;
  for (std::size_t i = 0; i < m.f1.size(); ++i) {
    ++r.points_checked;
    auto expect = [&](bool ok, const char* name) {
      if (!ok) r.record({name, labels3(t, i), ""});
    };
    expect(f1f1[i] == i, "f1^2 = id");
    expect(f2f2[i] == i, "f2^2 = id");
    expect(f1f2[i] == m.f3[i], "f1 f2 = f3");
    expect(f2f1[i] == m.f3[i], "f2 f1 = f3");
    f3_involution = f3_involution && f3f3[i] == i;
    klein = klein && f3f3[i] == i && f2f3[i] == m.f1[i] && f1f3[i] == m.f2[i];
    if (t.abelian()) {
      expect(f3f3[i] == i, "f3^2 = id");
      expect(f2f3[i] == m.f1[i], "f2 f3 = f1");
      expect(f1f3[i] == m.f2[i], "f1 f3 = f2");
    }
  }
  r.extra["abelian"] = t.abelian();
  r.extra["klein_four"] = klein && r.passed();
  r.extra["f3_squared_is_identity"] = f3_involution;
  return r;
}

FMaps f_maps(const TorsorTable& t) {
  const int n = t.size();
  const std::size_t size = static_cast<std::size_t>(n) * n * n;
  FMaps out{IndexMap(size), IndexMap(size), IndexMap(size), check_f_maps(t)};
  if (!out.certificate.passed())
    throw std::logic_error("f-map certificate failed on " + t.name() + ": " +
                           out.certificate.violations.front().check);
  for (std::size_t i = 0; i < size; ++i) {
    const auto [x, y, z] = decode3(n, i);
    const int s = t.tau(x, y, z);
    out.f1[i] = encode3(n, s, z, y);
    out.f2[i] = encode3(n, y, x, s);
    out.f3[i] = encode3(n, z, s, x);
  }
  return out;
}

NaryMap random_ternary(Rng& rng, const TorsorTable& t, const GroupPtr& target) {
  if (t.group()) return NaryMap::random(rng, t.group(), 3, target);
  return NaryMap::random(rng, t.size(), 3, target);
}

// ------------------------------------------------------------ gamma

NaryMap gamma_solve(const NaryMap& phi, const TorsorTable& t, GammaSign sign, bool tilde) {
  require_ternary(phi, t, "gamma");
  const FMaps m = f_maps(t);
  const auto& g = phi.target();
  std::vector<int> v(phi.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int a = phi[m.f1[i]], b = phi[m.f2[i]];
    v[i] = sign == GammaSign::kMinus ? g.mul(g.inv(a), b) : g.mul(a, g.inv(b));
    if (tilde) v[i] = g.inv(v[i]);
  }
  return with_values(phi, std::move(v));
}

Report check_gamma_equation(const NaryMap& gamma, const TorsorTable& t) {
  require_ternary(gamma, t, "gamma");
  const FMaps m = f_maps(t);
  const auto& g = gamma.target();
  Report r = make_report("torsor-gamma", t.name() + "->" + g.name(), 3);
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    ++r.points_checked;
    const int v = g.mul(gamma[m.f1[i]], gamma[m.f2[i]]);
    if (v != g.identity())
      r.record({"gamma(f1 x) gamma(f2 x) = e", labels3(t, i), "value " + g.label(v)});
  }
  return r;
}

// ------------------------------------------------------------ torsor differential

NaryMap torsor_diff(const NaryMap& phi, const TorsorTable& t, const BinaryPairing& p,
                    bool permissive) {
  require_ternary(phi, t, "torsor differential");
  require_values_in(phi, p, "torsor differential");
  if (!permissive && !p.skew())
    throw std::invalid_argument("torsor differential: pairing " + p.name() + " is not skew");
  if (!permissive && !p.bihomomorphic())
    throw std::invalid_argument("torsor differential: pairing " + p.name() + " is not bihomomorphic");
  const FMaps m = f_maps(t);
  std::vector<int> v(phi.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = p(phi[m.f1[i]], phi[m.f2[i]]);
  return with_values(phi, std::move(v));
}

Report check_torsor_diff(const NaryMap& phi, const TorsorTable& t, const BinaryPairing& p,
                         bool permissive) {
  const auto& g = p.group();
  Report r = make_report("torsor-diff", t.name() + "," + p.name(), 3);
  const FMaps m = f_maps(t);
  const NaryMap d = torsor_diff(phi, t, p, permissive);
  const NaryMap dd = torsor_diff(d, t, p, permissive);
  for (std::size_t i = 0; i < d.size(); ++i) {
    ++r.points_checked;
    if (dd[i] != g.identity()) r.record({"dd phi = e", labels3(t, i), "value " + g.label(dd[i])});
    if (d[m.f1[i]] != g.inv(d[m.f2[i]]))
      r.record({"(d phi) o f1 = ((d phi) o f2)^-1", labels3(t, i), ""});
  }
  r.extra["permissive"] = permissive;
  r.extra["pairing_skew"] = p.skew();
  r.extra["pairing_bihomomorphic"] = p.bihomomorphic();
  r.extra["pairing_alternating"] = p.alternating();
  return r;
}

// ------------------------------------------------------------ gamma differential

NaryMap default_gamma(const NaryMap& phi0, const TorsorTable& t) {
  require_ternary(phi0, t, "default gamma");
  if (!phi0.target().abelian()) throw std::invalid_argument("default gamma: target must be abelian");
  const FMaps m = f_maps(t);
  const auto& g = phi0.target();
  std::vector<int> v(phi0.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = g.mul(phi0[m.f1[i]], g.inv(phi0[m.f2[i]]));
  return with_values(phi0, std::move(v));
}

namespace {

// [a, b o f1 +- b o f2] without validating a.
NaryMap gamma_diff_raw(const NaryMap& a, const NaryMap& b, const FMaps& m, const BinaryPairing& p,
                       GammaSign sign) {
  const auto& g = p.group();
  std::vector<int> v(b.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int second = sign == GammaSign::kPlus ? b[m.f2[i]] : g.inv(b[m.f2[i]]);
    v[i] = p(a[i], g.mul(b[m.f1[i]], second));
  }
  return with_values(b, std::move(v));
}

NaryMap add_maps(const NaryMap& a, const NaryMap& b) { return pointwise_mul(a, b); }
NaryMap sub_maps(const NaryMap& a, const NaryMap& b) { return pointwise_mul(a, b.pointwise_inverse()); }

}  // namespace

NaryMap gamma_diff(const NaryMap& gamma, const NaryMap& phi, const TorsorTable& t,
                   const BinaryPairing& p, GammaSign sign) {
  require_ternary(gamma, t, "gamma differential");
  require_ternary(phi, t, "gamma differential");
  require_values_in(gamma, p, "gamma differential");
  require_values_in(phi, p, "gamma differential");
  const auto& g = p.group();
  if (!g.abelian()) throw std::invalid_argument("gamma differential: " + g.name() + " is not abelian");
  if (!p.bihomomorphic())
    throw std::invalid_argument("gamma differential: pairing " + p.name() + " is not bilinear");
  const FMaps m = f_maps(t);
  for (std::size_t i = 0; i < gamma.size(); ++i)
    if (g.mul(gamma[m.f1[i]], gamma[m.f2[i]]) != g.identity())
      throw std::invalid_argument("gamma differential: gamma f1 + gamma f2 != 0");
  return gamma_diff_raw(gamma, phi, m, p, sign);
}

Report check_gamma_diff(const NaryMap& gamma, const NaryMap& phi, const TorsorTable& t,
                        const BinaryPairing& p, GammaSign sign) {
  const auto& g = p.group();
  Report r = make_report(sign == GammaSign::kPlus ? "gamma-diff-plus" : "gamma-diff-minus",
                         t.name() + "," + p.name(), 3);
  const FMaps m = f_maps(t);
  const NaryMap d = gamma_diff(gamma, phi, t, p, sign);
  const NaryMap dd = gamma_diff(gamma, d, t, p, sign);
  for (std::size_t i = 0; i < d.size(); ++i) {
    ++r.points_checked;
    if (dd[i] != g.identity()) r.record({"dd phi = 0", labels3(t, i), "value " + g.label(dd[i])});
    const int second = sign == GammaSign::kPlus ? d[m.f2[i]] : g.inv(d[m.f2[i]]);
    if (g.mul(d[m.f1[i]], second) != g.identity())
      r.record({"(d phi) f1 +- (d phi) f2 = 0", labels3(t, i), ""});
  }
  return r;
}

Report check_modified_leibniz(const NaryMap& gamma, const NaryMap& phi, const NaryMap& chi,
                              const TorsorTable& t, const BinaryPairing& p) {
  if (!p.lie()) throw std::invalid_argument("modified Leibniz rule: pairing " + p.name() + " is not a Lie bracket");
  const auto sign = GammaSign::kPlus;
  Report r = make_report("modified-leibniz", t.name() + "," + p.name(), 3);
  const FMaps m = f_maps(t);
  auto d = [&](const NaryMap& a, const NaryMap& b) { return gamma_diff(a, b, t, p, sign); };
  auto br = [&](const NaryMap& a, const NaryMap& b) { return pointwise_bracket(a, b, p); };
  auto sym3 = [&](const NaryMap& a) { return add_maps(a, a.compose(m.f3)); };
  auto f12 = [&](const NaryMap& a) { return add_maps(a.compose(m.f1), a.compose(m.f2)); };

  const NaryMap dphi = d(gamma, phi), dchi = d(gamma, chi);
  const NaryMap lhs1 = d(gamma, br(phi, sym3(chi)));
  const NaryMap lhs2 = d(gamma, br(sym3(phi), chi));
  const NaryMap rhs = sub_maps(d(dphi, chi), d(dchi, phi));
  const NaryMap expanded_lhs = d(gamma, br(phi, chi));
  const NaryMap cross = add_maps(br(phi.compose(m.f1), chi.compose(m.f2)),
                                 br(phi.compose(m.f2), chi.compose(m.f1)));
  const NaryMap expanded_rhs =
      sub_maps(add_maps(br(dphi, f12(chi)), br(f12(phi), dchi)), br(gamma, cross));
  for (std::size_t i = 0; i < phi.size(); ++i) {
    ++r.points_checked;
    if (lhs1[i] != rhs[i]) r.record({"d[phi, chi + chi f3] = d^(d phi) chi - d^(d chi) phi", labels3(t, i), ""});
    if (lhs2[i] != rhs[i]) r.record({"d[phi + phi f3, chi] = d^(d phi) chi - d^(d chi) phi", labels3(t, i), ""});
    if (expanded_lhs[i] != expanded_rhs[i]) r.record({"expanded identity", labels3(t, i), ""});
  }
  return r;
}

// ------------------------------------------------------------ iota

IndexMap iota_map(const TorsorTable& t) {
  const int n = t.size();
  IndexMap out(static_cast<std::size_t>(n) * n * n);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto [x, y, z] = decode3(n, i);
    const int a = t.tau(y, x, z);
    out[i] = encode3(n, a, x, t.tau(a, x, y));
  }
  return out;
}

Report check_iota(const TorsorTable& t) {
  const int n = t.size();
  Report r = make_report("iota", t.name(), 3);
  const IndexMap iota = iota_map(t);
  const IndexMap iota2 = compose_maps(iota, iota);
  const IndexMap iota3 = compose_maps(iota, iota2);
  for (std::size_t i = 0; i < iota.size(); ++i) {
    ++r.points_checked;
    const auto [x, y, z] = decode3(n, i);
    if (iota3[i] != i) r.record({"iota^3 = id", labels3(t, i), ""});
    const int a = t.tau(y, x, z);
    if (iota2[i] != encode3(n, y, a, t.tau(y, a, x))) r.record({"iota^2 closed form", labels3(t, i), ""});
    if (x == y && y == z && iota[i] != i) r.record({"iota(x,x,x) = (x,x,x)", labels3(t, i), ""});
  }
  r.extra["heap"] = t.heap();
  return r;
}

// ------------------------------------------------------------ lab runner

std::vector<std::string> torsor_lab_ids() {
  return {"torsor-gamma", "torsor-diff", "gamma-diff", "iota", "klein", "axioms"};
}

namespace {

std::string or_default(const std::string& s, const char* fallback) { return s.empty() ? fallback : s; }
int or_default(int v, int fallback) { return v > 0 ? v : fallback; }

TorsorTable load_torsor(const LabConfig& cfg, const char* fallback_group) {
  if (!cfg.torsor_json.empty()) {
    std::ifstream in(cfg.torsor_json);
    if (!in) throw std::invalid_argument("cannot open torsor file '" + cfg.torsor_json + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument("torsor file '" + cfg.torsor_json + "': " + e.what());
    }
    return TorsorTable::from_json(j);
  }
  return TorsorTable::from_group(make_group(or_default(cfg.group, fallback_group)));
}

struct Suite {
  Report total;
  Suite(std::string id, std::string group) {
    total.construction = std::move(id);
    total.group = std::move(group);
    total.arity = 3;
    total.extra["checks"] = nlohmann::json::array();
  }
  void add(const Report& r) {
    total.merge(r);
    total.extra["checks"].push_back(
        {{"check", r.construction}, {"points_checked", r.points_checked},
         {"violation_count", r.violation_count}});
  }
  LabOutcome done() { return {total, total.passed()}; }
};

}  // namespace

LabOutcome run_torsor_lab(std::string_view id_in, const LabConfig& cfg) {
  const std::string id(id_in);
  Rng rng(cfg.seed);
  if (id == "torsor-gamma") {
    const TorsorTable t = load_torsor(cfg, "Z6");
    const GroupPtr target = make_group(or_default(cfg.target, "S3"));
    Suite s(id, t.name() + "->" + target->name());
    s.add(check_f_maps(t));
    const NaryMap phi = random_ternary(rng, t, target);
    for (GammaSign sign : {GammaSign::kMinus, GammaSign::kPlus})
      for (bool tilde : {false, true}) s.add(check_gamma_equation(gamma_solve(phi, t, sign, tilde), t));
    s.total.extra["seed"] = cfg.seed;
    return s.done();
  }
  if (id == "torsor-diff") {
    const TorsorTable t = load_torsor(cfg, "Z5");
    const BinaryPairing p = make_pairing(or_default(cfg.pairing, "heisenberg:5"));
    Suite s(id, t.name() + "," + p.name());
    s.add(check_torsor_diff(random_ternary(rng, t, p.group_ptr()), t, p, cfg.permissive));
    s.total.extra["seed"] = cfg.seed;
    return s.done();
  }
  if (id == "gamma-diff") {
    const TorsorTable t = load_torsor(cfg, "Z3");
    const BinaryPairing p = make_pairing(or_default(cfg.pairing, "heisenberg:3"));
    Suite s(id, t.name() + "," + p.name());
    const auto& gp = p.group_ptr();
    const NaryMap gamma = default_gamma(random_ternary(rng, t, gp), t);
    for (GammaSign sign : {GammaSign::kMinus, GammaSign::kPlus})
      s.add(check_gamma_diff(gamma, random_ternary(rng, t, gp), t, p, sign));
    if (p.lie()) {
      for (int k = 0; k < or_default(cfg.samples, 5); ++k) {
        const NaryMap phi = random_ternary(rng, t, gp);
        const NaryMap chi = random_ternary(rng, t, gp);
        s.add(check_modified_leibniz(gamma, phi, chi, t, p));
      }
    }
    s.total.extra["seed"] = cfg.seed;
    return s.done();
  }
  if (id == "iota") {
    const TorsorTable t = load_torsor(cfg, "S3");
    Suite s(id, t.name());
    s.add(check_iota(t));
    return s.done();
  }
  if (id == "klein") {
    const TorsorTable t = load_torsor(cfg, "Z5");
    Suite s(id, t.name());
    const Report r = check_f_maps(t);
    s.add(r);
    s.total.extra["klein_four"] = r.extra["klein_four"];
    s.total.extra["f3_squared_is_identity"] = r.extra["f3_squared_is_identity"];
    return s.done();
  }
  if (id == "axioms") {
    const TorsorTable t = load_torsor(cfg, "S3");
    Suite s(id, t.name());
    s.add(check_torsor_axioms(t));
    s.add(check_basepoint_groups(t));
    s.total.extra["heap"] = t.heap();
    s.total.extra["abelian"] = t.abelian();
    return s.done();
  }
  throw std::invalid_argument("unknown torsor lab id '" + id + "'");
}

}  // namespace grt
