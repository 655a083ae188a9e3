#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "greenscan/errors.hpp"
#include "greenscan/geometry.hpp"
#include "greenscan/homology.hpp"
#include "greenscan/matrix.hpp"
#include "greenscan/render.hpp"
#include "greenscan/universe.hpp"
#include "report.hpp"

using namespace greenscan;
using greenscan::cli::Json;

namespace {

enum Exit { kOk = 0, kInput = 1, kInconclusive = 2, kInvariant = 3 };

struct Config {
  std::string algebra_file;
  int dim_bound = 6;
  std::size_t node_cap = 10000;
  std::size_t max_len = 64;
  std::string format;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> paths;
  std::string charge;
  std::string slice;
  std::string module_file;
  std::optional<std::size_t> from_chain;
  bool probe = false;
};

/// Lazily built shared state for one run.
class Session {
 public:
  explicit Session(const Config& cfg) : cfg_(cfg) {
    if (cfg.dim_bound < 1) throw InputError("--dim-bound must be positive");
    if (cfg.node_cap < 1) throw InputError("--node-cap must be positive");
    if (cfg.max_len < 1) throw InputError("--max-len must be positive");
    alg_ = load_algebra(cfg.algebra_file);
  }

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t n() const { return static_cast<std::size_t>(alg_->n()); }

  const TauContext& ctx() {
    if (!ctx_) {
      TauBounds b;
      b.dim_bound = cfg_.dim_bound;
      b.node_cap = cfg_.node_cap;
      b.max_len = cfg_.max_len;
      if (cfg_.seed) b.seed = *cfg_.seed;
      ctx_ = std::make_unique<TauContext>(alg_, b);
    }
    return *ctx_;
  }
  const ExchangeGraph& graph() {
    if (!graph_) graph_ = exchange_graph(ctx());
    return *graph_;
  }
  const Universe& universe() {
    if (!universe_) {
      UniverseBounds b;
      b.dim_cap = cfg_.dim_bound;
      if (cfg_.seed) b.seed = *cfg_.seed;
      universe_ = enumerate_indecomposables(alg_, b);
    }
    return *universe_;
  }
  const std::vector<Representation>& bricks() {
    if (!bricks_) bricks_ = brick_universe(universe());
    return *bricks_;
  }

  Json header(const std::string& command) {
    Json j;
    j["schema"] = "greenscan/1";
    j["command"] = command;
    j["algebra"] = alg_->name();
    j["rank"] = alg_->n();
    Json b;
    b["dim_bound"] = cfg_.dim_bound;
    b["node_cap"] = cfg_.node_cap;
    b["max_len"] = cfg_.max_len;
    b["label"] = "complete up to dim <= " + std::to_string(cfg_.dim_bound);
    j["bounds"] = b;
    return j;
  }

  Json universe_summary() {
    Json j;
    j["modules"] = universe().modules.size();
    j["bricks"] = bricks().size();
    j["saturated"] = universe().saturated;
    j["bound"] = universe().bound_label();
    return j;
  }

 private:
  Config cfg_;
  AlgebraPtr alg_;
  std::unique_ptr<TauContext> ctx_;
  std::optional<ExchangeGraph> graph_;
  std::optional<Universe> universe_;
  std::optional<std::vector<Representation>> bricks_;
};

struct Output {
  Json json;
  std::string raw;  // dot or svg
  int code = kOk;
};

Json pair_json(const TauContext& ctx, const TauPair& p) {
  Json j;
  j["label"] = describe(ctx, p);
  Json m = Json::array();
  for (auto i : p.m) m.push_back(cli::module_json(ctx.module(i)));
  j["M"] = m;
  Json pv = Json::array();
  for (int v : p.p) pv.push_back(ctx.algebra()->vertex_id(v));
  j["P"] = pv;
  Json cols = Json::array();
  for (const auto& c : g_matrix(ctx, p)) cols.push_back(cli::dims_json(c));
  j["g_columns"] = cols;
  return j;
}

Rational g_determinant(const TauContext& ctx, const TauPair& p) {
  std::vector<RationalVector> cols;
  for (const auto& c : g_matrix(ctx, p)) cols.push_back(to_rational(c));
  return determinant(Matrix::from_columns(static_cast<std::size_t>(ctx.n()), cols));
}

Json graph_summary(const ExchangeGraph& g) {
  Json j;
  j["nodes"] = g.nodes.size();
  j["edges"] = g.edges.size();
  j["stubs"] = g.stubs.size();
  j["complete"] = g.complete;
  return j;
}

std::string require_format(const std::string& given, std::initializer_list<const char*> allowed) {
  const std::string f = given.empty() ? *allowed.begin() : given;
  for (const char* a : allowed)
    if (f == a) return f;
  throw InputError("format '" + f + "' is not available for this command");
}

// --- subcommands ---------------------------------------------------------

Output cmd_check(Session& s) {
  Output out;
  Json j = s.header("check");
  const auto& a = *s.algebra();
  Json alg;
  Json vertices = Json::array();
  for (long id : a.vertex_ids()) vertices.push_back(id);
  alg["vertices"] = vertices;
  Json arrows = Json::array();
  for (const auto& arr : a.arrows())
    arrows.push_back({{"label", arr.label}, {"source", a.vertex_id(arr.source)}, {"target", a.vertex_id(arr.target)}});
  alg["arrows"] = arrows;
  alg["relations"] = a.relations().size();
  alg["total_dim"] = a.total_dim();
  Json basis = Json::array();
  for (std::size_t b = 0; b < a.basis().size(); ++b) basis.push_back(a.basis_label(static_cast<int>(b)));
  alg["path_basis"] = basis;
  alg["nilpotency_index"] = a.nilpotency_index();
  Json proj = Json::array();
  long sum = 0;
  for (int v = 0; v < a.n(); ++v) {
    const auto p = projective(s.algebra(), v);
    for (long d : p.dims()) sum += d;
    proj.push_back({{"vertex", a.vertex_id(v)}, {"dims", cli::dims_json(p.dims())}});
  }
  alg["projectives"] = proj;
  j["algebra_data"] = alg;

  Json mods = Json::array();
  bool hom_ok = true;
  for (const auto& m : s.universe().modules) {
    Json mj = cli::module_json(m);
    mj["brick"] = is_brick(m);
    mj["tau_rigid"] = is_tau_rigid_module(m);
    mods.push_back(mj);
    for (int v = 0; v < a.n(); ++v)
      if (static_cast<long>(hom_dim(projective(s.algebra(), v), m)) != m.dims()[static_cast<std::size_t>(v)]) hom_ok = false;
  }
  Json u = s.universe_summary();
  u["list"] = mods;
  j["universe"] = u;

  Json cat;
  cat["count"] = s.ctx().catalog().modules.size();
  cat["bound"] = s.ctx().catalog().bound_label();
  Json cm = Json::array();
  for (std::size_t i = 0; i < s.ctx().catalog().modules.size(); ++i) {
    Json mj = cli::module_json(s.ctx().module(i));
    mj["g"] = cli::dims_json(s.ctx().g(i));
    cm.push_back(mj);
  }
  cat["list"] = cm;
  j["tau_rigid_catalog"] = cat;

  const bool basis_ok = sum == static_cast<long>(a.total_dim());
  j["checks"] = {{"projective_dims_sum_to_total_dim", basis_ok}, {"hom_from_projective_equals_dims", hom_ok}};
  if (!basis_ok || !hom_ok) throw InvariantViolation("algebra self-checks failed");
  out.json = j;
  return out;
}

Output cmd_tau_pairs(Session& s) {
  Output out;
  Json j = s.header("tau-pairs");
  const auto& g = s.graph();
  Json pairs = Json::array();
  for (const auto& node : g.nodes) {
    Json pj = pair_json(s.ctx(), node);
    const Rational det = g_determinant(s.ctx(), node);
    pj["determinant"] = cli::rational_json(det);
    if (det != 1 && det != -1) throw InvariantViolation("g-matrix of " + describe(s.ctx(), node) + " is not unimodular");
    pairs.push_back(pj);
  }
  j["count"] = g.nodes.size();
  j["complete"] = g.complete;
  j["pairs"] = pairs;
  j["exchange_graph"] = graph_summary(g);
  out.json = j;
  out.code = g.complete ? kOk : kInconclusive;
  return out;
}

Output cmd_exchange_graph(Session& s, const std::string& format) {
  Output out;
  const auto& g = s.graph();
  out.code = g.complete ? kOk : kInconclusive;
  if (format == "dot") {
    out.raw = exchange_graph_dot(s.ctx(), g);
    return out;
  }
  Json j = s.header("exchange-graph");
  Json nodes = Json::array();
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    Json nj{{"id", v}};
    nj.update(pair_json(s.ctx(), g.nodes[v]));
    nodes.push_back(nj);
  }
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"from", e.from},
                     {"to", e.to},
                     {"larger_fac", e.from},
                     {"smaller_fac", e.to},
                     {"brick", cli::module_json(e.brick)}});
  Json stubs = Json::array();
  for (const auto& st : g.stubs) stubs.push_back({{"node", st.node}, {"position", st.position}, {"reason", st.reason}});
  j["orientation"] = "edges point from the larger torsion class Fac M to the smaller one";
  j["top"] = g.top ? Json(*g.top) : Json();
  j["bottom"] = g.bottom ? Json(*g.bottom) : Json();
  j["complete"] = g.complete;
  j["nodes"] = nodes;
  j["edges"] = edges;
  j["stubs"] = stubs;
  out.json = j;
  return out;
}

Json markov_json(const TauContext& ctx, const MarkovReport& rep) {
  Json j;
  Json triple = Json::array();
  for (int v : rep.triple) triple.push_back(ctx.algebra()->vertex_id(v));
  j["subquiver_vertices"] = triple;
  Json ws = Json::array();
  for (const auto& w : rep.witnesses) {
    ws.push_back({{"first_simple", ctx.algebra()->vertex_id(w.simple_vertex)},
                  {"dims", cli::dims_json(w.dims)},
                  {"theta", cli::vector_json(w.theta)},
                  {"king_class", to_string(w.king)},
                  {"path", w.path.to_string()},
                  {"t_simple", cli::rational_json(w.simple_time)},
                  {"t_witness", cli::rational_json(w.witness_time)},
                  {"simple_crossed_first", w.simple_first},
                  {"path_class", to_string(w.path_class)},
                  {"certified", w.certified()}});
  }
  j["witnesses"] = ws;
  j["all_certified"] = rep.all_certified();
  j["exchange_graph"] = {{"nodes", rep.graph_nodes},
                         {"edges", rep.graph_edges},
                         {"stubs", rep.graph_stubs},
                         {"complete", rep.graph_complete}};
  j["chains_found"] = rep.chains_found;
  j["max_len"] = rep.max_len;
  j["verdict"] = rep.chains_found == 0 && rep.all_certified()
                     ? "no maximal green sequence up to the bounds; each first wall crossing makes a witness stable"
                     : "inconsistent";
  return j;
}

Output cmd_mgs(Session& s, std::size_t max_len) {
  Output out;
  Json j = s.header("mgs");
  const auto& g = s.graph();
  const auto chains = enumerate_mgs(g, max_len);
  const auto& u = s.universe().modules;
  Json cj = Json::array();
  for (const auto& ids : chains.chains) {
    Json c;
    c["length"] = ids.size() - 1;
    Json inc = Json::array(), dec = Json::array(), snaps = Json::array();
    for (auto v : ids) {
      inc.push_back(describe(s.ctx(), g.nodes[v]));
      const auto fac = fac_membership(s.ctx(), g.nodes[v], u);
      Json members = Json::array();
      for (std::size_t i = 0; i < u.size(); ++i)
        if (fac[i]) members.push_back(u[i].name());
      snaps.push_back(members);
    }
    for (auto it = ids.rbegin(); it != ids.rend(); ++it) dec.push_back(describe(s.ctx(), g.nodes[*it]));
    c["increasing_fac"] = inc;
    c["mutation_order"] = dec;
    c["torsion_classes"] = snaps;
    cj.push_back(c);
  }
  const bool complete = chains.complete;
  j["count"] = chains.chains.size();
  j["complete"] = complete;
  j["length_capped"] = chains.length_capped;
  j["count_capped"] = chains.count_capped;
  j["exchange_graph"] = graph_summary(g);
  j["universe"] = s.universe_summary();
  j["chains"] = cj;
  if (chains.chains.empty()) {
    try {
      find_markov_triple(*s.algebra());
      j["obstruction"] = markov_json(s.ctx(), markov_witness(s.ctx(), g, max_len));
    } catch (const InputError&) {
    }
  }
  out.json = j;
  out.code = complete ? kOk : kInconclusive;
  return out;
}

Output cmd_walls(Session& s, bool probe) {
  Output out;
  Json j = s.header("walls");
  const auto& g = s.graph();
  std::vector<ChamberRecord> recs;
  Json chambers = Json::array();
  bool partition_ok = true;
  for (const auto& node : g.nodes) {
    ChamberRecord rec;
    try {
      rec = chamber_of(s.ctx(), node);
    } catch (const BoundExhausted& e) {
      chambers.push_back({{"pair", describe(s.ctx(), node)}, {"inconclusive", e.what()}});
      continue;
    }
    Json cj;
    cj["pair"] = describe(s.ctx(), node);
    Json gens = Json::array();
    for (const auto& c : rec.cone.generators) gens.push_back(cli::dims_json(c));
    cj["cone"] = gens;
    Json ws = Json::array();
    for (const auto& w : rec.walls)
      ws.push_back({{"position", w.position}, {"brick", cli::module_json(w.brick)}, {"sign", w.sign}, {"in_fac", w.in_fac}});
    cj["walls"] = ws;
    cj["sign_partition_ok"] = rec.sign_partition_ok();
    partition_ok = partition_ok && rec.sign_partition_ok();
    chambers.push_back(cj);
    recs.push_back(std::move(rec));
  }
  j["chambers"] = chambers;
  j["complete"] = g.complete;
  if (s.n() == 2 && recs.size() == g.nodes.size()) {
    Json cycle = Json::array();
    for (const auto& w : rank_two_wall_cycle(recs))
      cycle.push_back({{"ray", cli::dims_json(w.ray)}, {"brick", w.brick.name()}});
    j["wall_cycle"] = cycle;
  }
  Json certs = Json::array();
  for (const auto& b : s.bricks()) {
    const auto c = wall_certificate(b);
    Json cj;
    cj["brick"] = cli::module_json(b);
    cj["normal"] = cli::dims_json(c.normal);
    cj["status"] = to_string(c.status);
    Json sup = Json::array();
    for (const auto& p : c.support) sup.push_back(cli::vector_json(p.theta));
    cj["support"] = sup;
    if (!c.rays.empty()) {
      Json rays = Json::array();
      for (const auto& [r, cls] : c.rays) rays.push_back({{"direction", cli::vector_json(r)}, {"class", to_string(cls)}});
      cj["rays"] = rays;
    }
    certs.push_back(cj);
  }
  j["wall_certificates"] = certs;
  j["universe"] = s.universe_summary();
  if (probe) {
    const auto p = probe_conjectures(g, s.ctx(), s.bricks());
    Json pj;
    pj["note"] = "experimental probe; reports only";
    pj["samples"] = p.samples;
    pj["in_chamber"] = p.in_chamber;
    pj["on_wall"] = p.on_wall;
    pj["uncovered"] = p.uncovered;
    Json ex = Json::array();
    for (const auto& v : p.uncovered_examples) ex.push_back(cli::vector_json(v));
    pj["uncovered_examples"] = ex;
    pj["face_pairs"] = p.face_pairs;
    pj["face_pairs_without_edge"] = p.face_pairs_without_edge;
    j["conjecture_probe"] = pj;
  }
  if (!partition_ok) throw InvariantViolation("a chamber's wall signs disagree with Fac M");
  out.json = j;
  out.code = g.complete ? kOk : kInconclusive;
  return out;
}

Json validation_json(const PathValidation& v, const std::vector<Representation>& u) {
  Json j;
  j["pass"] = v.pass;
  Json table = Json::array();
  for (const auto& e : v.table) table.push_back({{"module", u[e.index].name()}, {"dims", cli::dims_json(u[e.index].dims())}, {"t", cli::rational_json(e.time)}});
  j["crossings"] = table;
  if (v.offender) {
    Json roots = Json::array();
    for (const auto& r : v.offender_roots) roots.push_back(cli::rational_json(r));
    j["offender"] = {{"module", u[*v.offender].name()}, {"roots", roots}, {"degenerate", v.offender_degenerate}};
  }
  return j;
}

Output cmd_path(Session& s, const Config& cfg) {
  Output out;
  Json j = s.header("path");
  const auto& u = s.bricks();
  j["universe"] = s.universe_summary();
  if (cfg.from_chain) {
    const auto chains = enumerate_mgs(s.graph(), cfg.max_len);
    if (*cfg.from_chain >= chains.chains.size())
      throw InputError("--from-chain " + std::to_string(*cfg.from_chain) + " but only " +
                       std::to_string(chains.chains.size()) + " chains were found");
    std::vector<TauPair> chain;
    for (auto v : chains.chains[*cfg.from_chain]) chain.push_back(s.graph().nodes[v]);
    const GreenPath path = path_from_mgs(s.ctx(), s.graph(), chain, u);
    Json labels = Json::array();
    for (const auto& p : chain) labels.push_back(describe(s.ctx(), p));
    j["chain"] = labels;
    j["path"] = path.to_string();
    j["round_trip"] = true;
    out.json = j;
    return out;
  }
  if (cfg.paths.size() != 1) throw InputError("path needs exactly one --path or --from-chain");
  const GreenPath path = parse_green_path(cfg.paths.front(), s.n());
  j["path"] = path.to_string();
  const PathMgs r = mgs_from_path(s.ctx(), s.graph(), path, u);
  j["validation"] = validation_json(r.validation, u);
  if (r.refused) {
    j["refusal"] = {{"code", r.reason_code}, {"detail", r.detail}};
    out.json = j;
    out.code = kInconclusive;
    return out;
  }
  Json stables = Json::array();
  for (std::size_t k = 0; k < r.extraction.stables.size(); ++k)
    stables.push_back({{"module", u[r.extraction.stables[k]].name()}, {"phase", cli::phase_json(r.extraction.phases[k])}});
  j["stables"] = stables;
  Json chain = Json::array();
  for (std::size_t k = 0; k < r.chain.size(); ++k)
    chain.push_back({{"pair", describe(s.ctx(), r.chain[k])}, {"cone_checked", bool(r.cone_checked[k])}});
  j["chain"] = chain;
  j["length"] = r.chain.size() - 1;
  out.json = j;
  return out;
}

Output cmd_hn(Session& s, const Config& cfg) {
  Output out;
  Json j = s.header("hn");
  if (cfg.charge.empty() == cfg.paths.empty()) throw InputError("hn needs exactly one of --charge or --path");
  if (cfg.paths.size() > 1) throw InputError("hn takes a single --path");
  const StabilitySpec spec = cfg.charge.empty() ? StabilitySpec::path(parse_green_path(cfg.paths.front(), s.n()))
                                                : StabilitySpec::charge(parse_charge(cfg.charge, s.n()));
  j["stability"] = spec.describe();
  std::vector<Representation> mods;
  if (!cfg.module_file.empty()) {
    mods.push_back(load_module(cfg.module_file, s.algebra()));
  } else {
    mods = s.universe().modules;
    j["universe"] = s.universe_summary();
  }
  Json list = Json::array();
  for (const auto& m : mods) {
    Json mj = cli::module_json(m);
    mj["phase"] = cli::phase_json(spec.phase(m));
    mj["class"] = to_string(classify(spec, m).cls);
    const auto hn = hn_filtration(spec, m);
    Json factors = Json::array();
    for (std::size_t k = 0; k < hn.factors.size(); ++k) {
      Json fj;
      fj["dims"] = cli::dims_json(hn.factors[k].dims());
      fj["phase"] = cli::phase_json(hn.phases[k]);
      Json jh = Json::array();
      for (const auto& f : stable_factors(spec, hn.factors[k])) jh.push_back(cli::dims_json(f.dims()));
      fj["stable_factors"] = jh;
      factors.push_back(fj);
    }
    mj["hn_factors"] = factors;
    list.push_back(mj);
  }
  j["modules"] = list;
  if (cfg.module_file.empty()) {
    const auto ex = extract_mgs(spec, s.universe().modules);
    Json ej;
    if (ex.refused) {
      ej["refusal"] = {{"code", ex.reason_code}, {"detail", ex.detail}};
    } else {
      Json st = Json::array();
      for (std::size_t k = 0; k < ex.stables.size(); ++k)
        st.push_back({{"module", s.universe().modules[ex.stables[k]].name()}, {"phase", cli::phase_json(ex.phases[k])}});
      ej["stables"] = st;
      ej["length"] = ex.chain.empty() ? 0 : ex.chain.size() - 1;
      ej["endpoints_ok"] = ex.endpoints_ok;
    }
    j["induced_chain"] = ej;
  }
  out.json = j;
  return out;
}

Output cmd_markov(Session& s, std::size_t max_len) {
  Output out;
  Json j = s.header("markov");
  const MarkovReport rep = markov_witness(s.ctx(), s.graph(), max_len);
  j["report"] = markov_json(s.ctx(), rep);
  if (rep.chains_found != 0) throw InvariantViolation("a maximal green sequence was found for a doubled three-cycle");
  if (!rep.all_certified()) throw InvariantViolation("a witness failed its stability certificate");
  out.json = j;
  out.code = kInconclusive;
  return out;
}

Output cmd_render(Session& s, const Config& cfg, const std::string& format) {
  Output out;
  const auto& g = s.graph();
  if (format == "dot") {
    out.raw = exchange_graph_dot(s.ctx(), g);
    return out;
  }
  const int rank = static_cast<int>(s.n());
  if (rank == 3) {
    std::string compact;
    for (char c : cfg.slice)
      if (c != ' ') compact += c;
    if (compact != "x+y+z=1") throw InputError("rank 3 rendering needs --slice x+y+z=1");
  } else if (rank != 2) {
    throw InputError("rendering supports rank 2 and rank 3 only");
  }
  std::vector<SvgChamber> chambers;
  for (const auto& node : g.nodes) {
    SvgChamber c;
    c.generators = g_matrix(s.ctx(), node);
    c.label = describe(s.ctx(), node);
    try {
      for (const auto& w : chamber_of(s.ctx(), node).walls) c.wall_labels.push_back(w.brick.name());
    } catch (const BoundExhausted&) {
      c.wall_labels.clear();
    }
    chambers.push_back(std::move(c));
  }
  std::vector<SvgPath> paths;
  for (std::size_t k = 0; k < cfg.paths.size(); ++k)
    paths.push_back({parse_green_path(cfg.paths[k], s.n()), "gamma" + std::to_string(k + 1)});
  out.raw = render_svg(chambers, paths, rank);
  out.code = g.complete ? kOk : kInconclusive;
  return out;
}

void print(const Output& out, const std::string& format) {
  if (!out.raw.empty()) {
    std::cout << out.raw;
  } else if (format == "text") {
    std::cout << cli::to_text(out.json);
  } else {
    std::cout << out.json.dump(2) << "\n";
  }
}

void print_error(const std::string& kind, const std::string& message, const std::string& format, const std::string& code = {}) {
  std::cerr << "greenscan: " << kind << ": " << message << "\n";
  if (format == "json" || format.empty()) {
    Json j;
    j["schema"] = "greenscan/1";
    j["error"] = {{"kind", kind}, {"message", message}};
    if (!code.empty()) j["error"]["code"] = code;
    std::cout << j.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"greenscan: stability, tau-tilting and maximal green sequences of quiver algebras"};
  app.require_subcommand(1, 1);
  Config cfg;
  std::string seed_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("algebra", cfg.algebra_file, "algebra file")->required();
    sub->add_option("--dim-bound", cfg.dim_bound, "per-vertex dimension bound (default 6)");
    sub->add_option("--node-cap", cfg.node_cap, "exchange graph node cap (default 10000)");
    sub->add_option("--max-len", cfg.max_len, "maximal green sequence length cap (default 64)");
    sub->add_option("--format", cfg.format, "json, text, dot or svg");
    sub->add_option("--seed", seed_text, "seed for the randomized searches");
  };
  auto* check = app.add_subcommand("check", "parse the algebra and summarize the enumerated modules");
  auto* tau_pairs = app.add_subcommand("tau-pairs", "list the tau-tilting pairs reached by mutation");
  auto* graph = app.add_subcommand("exchange-graph", "oriented exchange graph (json or dot)");
  auto* mgs = app.add_subcommand("mgs", "enumerate maximal green sequences");
  auto* walls = app.add_subcommand("walls", "chambers, wall bricks and wall certificates");
  auto* path = app.add_subcommand("path", "validate a green path and extract its chain");
  auto* hn = app.add_subcommand("hn", "Harder-Narasimhan filtrations for a charge or a path");
  auto* markov = app.add_subcommand("markov", "obstruction report for a doubled three-cycle");
  auto* render = app.add_subcommand("render", "svg picture of the walls or dot exchange graph");
  for (auto* sub : {check, tau_pairs, graph, mgs, walls, path, hn, markov, render}) add_common(sub);
  walls->add_flag("--probe-conjectures", cfg.probe, "sample the stability space against the chambers");
  path->add_option("--path", cfg.paths, "breakpoints, e.g. \"(1,1);(0,3/2);(-1,-1)\"");
  path->add_option("--from-chain", cfg.from_chain, "build a path from the chain with this index");
  hn->add_option("--path", cfg.paths, "green path inducing the stability function");
  hn->add_option("--charge", cfg.charge, "central charge, e.g. \"a=(1,-1);b=(1,1)\"");
  hn->add_option("--module", cfg.module_file, "module file (default: every enumerated module)");
  render->add_option("--path", cfg.paths, "green path overlay (repeatable)");
  render->add_option("--slice", cfg.slice, "slice for rank 3: x+y+z=1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  std::string format = cfg.format;
  try {
    if (!seed_text.empty()) cfg.seed = std::stoull(seed_text, nullptr, 0);
    Session s(cfg);
    Output out;
    if (check->parsed()) {
      format = require_format(cfg.format, {"json", "text"});
      out = cmd_check(s);
    } else if (tau_pairs->parsed()) {
      format = require_format(cfg.format, {"json", "text"});
      out = cmd_tau_pairs(s);
    } else if (graph->parsed()) {
      format = require_format(cfg.format, {"json", "text", "dot"});
      out = cmd_exchange_graph(s, format);
    } else if (mgs->parsed()) {
      format = require_format(cfg.format, {"json", "text"});
      out = cmd_mgs(s, cfg.max_len);
    } else if (walls->parsed()) {
      format = require_format(cfg.format, {"json", "text"});
      out = cmd_walls(s, cfg.probe);
    } else if (path->parsed()) {
      format = require_format(cfg.format, {"json", "text"});
      out = cmd_path(s, cfg);
    } else if (hn->parsed()) {
      format = require_format(cfg.format, {"json", "text"});
      out = cmd_hn(s, cfg);
    } else if (markov->parsed()) {
      format = require_format(cfg.format, {"json", "text"});
      out = cmd_markov(s, cfg.max_len);
    } else if (render->parsed()) {
      format = require_format(cfg.format, {"svg", "dot"});
      out = cmd_render(s, cfg, format);
    }
    print(out, format);
    return out.code;
  } catch (const Refusal& e) {
    print_error("refusal", e.what(), format, e.code());
    return kInconclusive;
  } catch (const BoundExhausted& e) {
    print_error("bound-exhausted", e.what(), format, "BOUND_EXHAUSTED");
    return kInconclusive;
  } catch (const InputError& e) {
    print_error("input", e.what(), format);
    return kInput;
  } catch (const InvariantViolation& e) {
    print_error("invariant-violation", e.what(), format);
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    print_error("input", e.what(), format);
    return kInput;
  } catch (const std::out_of_range& e) {
    print_error("input", e.what(), format);
    return kInput;
  }
}
