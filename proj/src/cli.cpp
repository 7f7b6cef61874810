#include "km/cli.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "km/algebra/checks.hpp"
#include "km/json_io.hpp"
#include "km/quiver_varieties.hpp"

namespace km {

namespace {

struct Options {
  std::string v, w, lambda, weight, lambda2, type, start, side = "weight", dedup = "mod_translations",
      generators = "wext", file;
  unsigned long p = 0;
  int m = 0, n = 0, size = 0, attach = 0, depth = 6;
  long bound = 8;
  bool strict_b = false;
  unsigned seed = 0;
};

json verdict(const char* v, json witness = nullptr, std::vector<std::string> flags = {}) {
  return {{"verdict", v}, {"witness", std::move(witness)}, {"hypothesis_flags", std::move(flags)}};
}

AffineDiagram diagram_from(const Options& o) {
  if (o.type.empty()) throw Error(ErrorCode::Usage, "--type is required");
  const DiagramKind k = parse_kind(o.type);
  int size = o.size;
  if (k == DiagramKind::A && o.m) size = o.m;
  if (k != DiagramKind::A && o.n) size = o.n;
  if (size == 0) throw Error(ErrorCode::Usage, "diagram size missing (--m for type A, --n for D/E)");
  return build_diagram(k, size);
}

Weight weight_arg(const std::string& text, const char* flag) {
  if (text.empty()) throw Error(ErrorCode::Usage, std::string(flag) + " is required");
  const auto xs = parse_scalar_list(text);
  Weight w(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) w(static_cast<Eigen::Index>(i)) = xs[i];
  return w;
}

DimVector dimvector_arg(const std::string& text, const char* flag) {
  const Weight w = weight_arg(text, flag);
  DimVector d(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    const auto k = w(i).as_integer();
    if (!k) throw Error(ErrorCode::ParseError, std::string(flag) + " must hold integers");
    d(i) = k->get_si();
  }
  return d;
}

RootMultiset roots_arg(const std::string& text, const char* flag) {
  if (text.empty()) throw Error(ErrorCode::Usage, std::string(flag) + " is required");
  return parse_v(text);
}

unsigned long prime_arg(const Options& o) {
  if (o.p == 0) throw Error(ErrorCode::Usage, "--p is required");
  if (!is_prime(o.p)) throw Error(ErrorCode::NotPrime, std::to_string(o.p) + " is not prime");
  return o.p;
}

json pair_json(const std::pair<Scalar, Scalar>& pr) { return json::array({pr.first.to_string(), pr.second.to_string()}); }

json cmd_generic_v(const Options& o) {
  const auto res = is_generic_v(roots_arg(o.v, "--v"));
  if (res.generic) return verdict("yes");
  return verdict("no", {{"pair", pair_json(*res.pair)}});
}

json cmd_reflexive(const Options& o) {
  const auto a = is_reflexive(roots_arg(o.v, "--v"));
  json out = verdict(a ? "yes" : "no");
  out["a"] = a ? json(a->to_string()) : json(nullptr);
  return out;
}

json cmd_iso(const Options& o) {
  const auto r = roots_arg(o.v, "--v"), r2 = roots_arg(o.w, "--w");
  std::vector<std::string> flags;
  if (o.strict_b) flags.push_back("strict_b");
  if (r.degree() != r2.degree()) flags.push_back("degree_mismatch");
  const auto wit = iso_test(r, r2, o.strict_b);
  if (!wit) return verdict("no", nullptr, flags);
  return verdict("yes", iso_witness_json(r, r2, *wit), flags);
}

json cmd_morita(const Options& o) {
  const auto r = roots_arg(o.v, "--v"), r2 = roots_arg(o.w, "--w");
  try {
    const auto wit = morita_test(r, r2);
    if (!wit) return verdict("no");
    return verdict("yes", morita_witness_json(r, r2, *wit));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegreeMismatch) throw;
    return verdict("no", nullptr, {"degree_mismatch"});
  }
}

json cmd_v2lambda(const Options& o) {
  const auto f = v_to_lambda(roots_arg(o.v, "--v"));
  return {{"lambda", to_json(f.lambda)}, {"weight", to_json(f.weight)}, {"shift", f.shift.to_string()}};
}

json cmd_lambda2v(const Options& o) {
  if (!o.weight.empty()) return {{"v", to_json(weight_to_v(weight_arg(o.weight, "--weight")))}};
  const Weight l = weight_arg(o.lambda, "--lambda");
  return {{"v", to_json(lambda_to_v(l))}, {"weight", to_json(lambda_to_weight(l))}};
}

json cmd_reduce_p(const Options& o) {
  const auto r = roots_arg(o.v, "--v");
  return {{"v", to_json(r)}, {"p", o.p}, {"vp", to_json(vp_reduction(r, prime_arg(o)))}};
}

json cmd_center_check(const Options& o) {
  const auto c = center_relation_check(roots_arg(o.v, "--v"), prime_arg(o));
  json out = verdict(c.ok() ? "yes" : "no");
  out["x_central"] = c.x_central;
  out["y_central"] = c.y_central;
  out["h_central"] = c.h_central;
  out["product_matches"] = c.product_matches;
  return out;
}

json cmd_bracket_check(const Options& o) {
  const auto b = bracket_check(roots_arg(o.v, "--v"), prime_arg(o));
  json pairs = json::array();
  for (const auto& pr : b.pairs) {
    pairs.push_back({{"left", pr.left}, {"right", pr.right}, {"sign", pr.sign}, {"matches", pr.matches},
                     {"routes_agree", pr.routes_agree}});
  }
  json out = verdict(b.consistent() && b.sign == kFrozenBracketSign ? "yes" : "no");
  out["sign"] = b.sign;
  out["frozen_sign"] = kFrozenBracketSign;
  out["pairs"] = pairs;
  return out;
}

json cmd_generic_lambda(const Options& o) {
  const AffineDiagram d = diagram_from(o);
  const auto res = is_generic_lambda(d, weight_arg(o.lambda, "--lambda"));
  json out = verdict(res.generic ? "yes" : "no", res.witness ? to_json(*res.witness) : json(nullptr));
  out["very_generic"] = is_very_generic(weight_arg(o.lambda, "--lambda"));
  return out;
}

json cmd_kleinian(const Options& o, int& code) {
  const AffineDiagram d = diagram_from(o);
  const auto res = kleinian_morita_test(d, weight_arg(o.lambda, "--lambda"), weight_arg(o.lambda2, "--lambda2"), o.depth);
  const auto& m = res.membership;
  json out = m.certificate ? verdict("yes", certificate_json(d, *m.certificate), res.hypothesis_flags)
                           : verdict("unknown_within_depth", nullptr, res.hypothesis_flags);
  out["depth"] = o.depth;
  out["searched"] = m.searched;
  out["exhausted"] = m.exhausted;
  if (!m.certificate) code = 2;
  return out;
}

json cmd_roots(const Options& o) {
  const AffineDiagram d = diagram_from(o);
  json rows = json::array();
  for (const DimVector& r : enumerate_roots(d, o.bound)) {
    rows.push_back({{"alpha", to_json(r)}, {"kind", root_kind_name(classify_vector(d, r).kind)}});
  }
  return {{"diagram", to_json(d)}, {"bound", o.bound}, {"roots", rows}};
}

json cmd_zero_dim(const Options& o) {
  const AffineDiagram d = diagram_from(o);
  if (d.kind() != DiagramKind::A) throw Error(ErrorCode::UnsupportedKind, "zero-dim needs a type A base");
  const FramedQuiver qi = extend_quiver_infty(d, o.attach);
  const auto orbit = theta_orbit(qi, o.bound);
  std::map<std::string, const OrbitEntry<DimVector>*> in_orbit;
  for (const auto& e : orbit.entries) in_orbit[to_string(e.value)] = &e;
  json rows = json::array();
  std::set<std::string> zero;
  for (const DimVector& a : enumerate_zero_dim(qi, o.bound)) {
    zero.insert(to_string(a));
    const auto it = in_orbit.find(to_string(a));
    json word = json::array();
    if (it != in_orbit.end()) {
      for (const Letter& l : it->second->word) word.push_back(to_json(l));
    }
    rows.push_back({{"alpha", to_json(a)}, {"dim", variety_dimension(qi, a)}, {"in_theta_orbit", it != in_orbit.end()},
                    {"witness_word", it != in_orbit.end() ? word : json(nullptr)}});
  }
  bool equal = zero.size() == in_orbit.size();
  for (const auto& [k, e] : in_orbit) equal = equal && zero.count(k);
  return {{"base", to_json(d)}, {"attach", o.attach}, {"bound", o.bound}, {"rows", rows},
          {"theta_orbit_size", orbit.entries.size()}, {"orbit_equals_zero_locus", equal}};
}

json cmd_orbit(const Options& o) {
  const AffineDiagram d = diagram_from(o);
  if (o.start.empty()) throw Error(ErrorCode::Usage, "--start is required");
  json entries = json::array();
  bool saturated = false;
  if (o.side == "dimvector") {
    if (o.generators != "reflections" && o.generators != "wext") throw Error(ErrorCode::Usage, "bad --generators");
    std::vector<int> refl;
    for (int i = 0; i < d.size(); ++i) refl.push_back(i);
    const DimVector s = dimvector_arg(o.start, "--start");
    d.check_dim(s.size());
    const auto res = orbit_bfs(d, s, refl, o.depth);
    for (const auto& e : res.entries) entries.push_back({{"value", to_json(e.value)}, {"word", to_json(e.word)}});
    saturated = res.saturated;
  } else if (o.side == "weight") {
    const GroupWord gens = o.generators == "reflections" ? reflection_generators(d) : wext_generators(d);
    if (o.dedup != "exact" && o.dedup != "mod_translations") throw Error(ErrorCode::Usage, "bad --dedup");
    const Dedup dd = o.dedup == "exact" ? Dedup::Exact : Dedup::ModTranslations;
    const auto res = orbit_bfs(d, weight_arg(o.start, "--start"), gens, o.depth, dd);
    for (const auto& e : res.entries) entries.push_back({{"value", to_json(e.value)}, {"word", to_json(e.word)}});
    saturated = res.saturated;
  } else {
    throw Error(ErrorCode::Usage, "--side must be weight or dimvector");
  }
  return {{"diagram", to_json(d)}, {"depth", o.depth}, {"entries", entries}, {"saturated", saturated}};
}

void collect_witnesses(const json& j, std::vector<json>& out) {
  if (j.is_array()) {
    for (const auto& x : j) collect_witnesses(x, out);
  } else if (j.is_object()) {
    if (j.contains("kind")) {
      out.push_back(j);
    } else if (j.contains("witness") && !j["witness"].is_null()) {
      collect_witnesses(j["witness"], out);
    }
  }
}

json cmd_verify(const Options& o, std::istream& in) {
  std::stringstream buf;
  if (!o.file.empty()) {
    std::ifstream f(o.file);
    if (!f) throw Error(ErrorCode::Usage, "cannot open " + o.file);
    buf << f.rdbuf();
  } else {
    buf << in.rdbuf();
  }
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  std::vector<json> ws;
  collect_witnesses(doc, ws);
  if (ws.empty()) throw Error(ErrorCode::ParseError, "no witness found in input");
  std::size_t valid = 0;
  for (const auto& w : ws) valid += verify_witness(w) ? 1 : 0;
  return {{"verdict", valid == ws.size() ? "valid" : "invalid"}, {"checked", ws.size()}, {"valid", valid}};
}

json error_json(const std::string& code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::istream& in) {
  Options o;
  CLI::App app{"Exact classification engine for deformations of Kleinian singularities", "km"};
  app.require_subcommand(1);
  auto add_v = [&](CLI::App* c) { c->add_option("--v", o.v, "roots of v, e.g. \"[t1, t1+1/2]\""); };
  auto add_w = [&](CLI::App* c) { c->add_option("--w", o.w, "roots of v'"); };
  auto add_p = [&](CLI::App* c) { c->add_option("--p", o.p, "prime"); };
  auto add_diagram = [&](CLI::App* c) {
    c->add_option("--type", o.type, "A, D or E");
    c->add_option("--m", o.m, "vertex count for type A");
    c->add_option("--n", o.n, "rank for types D and E");
    c->add_option("--size", o.size, "diagram size");
  };
  auto* generic_v = app.add_subcommand("generic-v", "is v generic");
  add_v(generic_v);
  auto* reflexive = app.add_subcommand("reflexive", "is v reflexive");
  add_v(reflexive);
  auto* iso = app.add_subcommand("iso", "isomorphism test A(v) ~ A(v')");
  add_v(iso);
  add_w(iso);
  iso->add_flag("--strict-b", o.strict_b, "allow any nonzero b in v'(h) = a v(bh + c)");
  auto* morita = app.add_subcommand("morita", "Morita test by integer root shifts");
  add_v(morita);
  add_w(morita);
  auto* v2lambda = app.add_subcommand("v2lambda", "roots to parameters");
  add_v(v2lambda);
  auto* lambda2v = app.add_subcommand("lambda2v", "parameters to roots");
  lambda2v->add_option("--lambda", o.lambda, "n-1 parameters");
  lambda2v->add_option("--weight", o.weight, "weight on the n-cycle");
  auto* reduce_p = app.add_subcommand("reduce-p", "roots c^p - c");
  add_v(reduce_p);
  add_p(reduce_p);
  auto* center = app.add_subcommand("center-check", "center relations in characteristic p");
  add_v(center);
  add_p(center);
  auto* bracket = app.add_subcommand("bracket-check", "reduction bracket against B(v^[p])");
  add_v(bracket);
  add_p(bracket);
  auto* generic_lambda = app.add_subcommand("generic-lambda", "is a weight generic");
  add_diagram(generic_lambda);
  generic_lambda->add_option("--lambda", o.lambda, "weight");
  auto* kleinian = app.add_subcommand("kleinian-morita", "search for lambda' = t w(lambda)");
  add_diagram(kleinian);
  kleinian->add_option("--lambda", o.lambda, "weight");
  kleinian->add_option("--lambda2", o.lambda2, "second weight");
  auto* roots = app.add_subcommand("roots", "positive roots up to a height");
  add_diagram(roots);
  roots->add_option("--bound,--height-bound", o.bound, "height bound");
  auto* zero_dim = app.add_subcommand("zero-dim", "zero-dimensional framed roots");
  add_diagram(zero_dim);
  zero_dim->add_option("--bound,--height-bound", o.bound, "height bound");
  zero_dim->add_option("--attach", o.attach, "attachment vertex");
  auto* orbit = app.add_subcommand("orbit", "bounded orbit enumeration");
  add_diagram(orbit);
  orbit->add_option("--start", o.start, "start vector");
  orbit->add_option("--side", o.side, "weight or dimvector");
  orbit->add_option("--dedup", o.dedup, "exact or mod_translations");
  orbit->add_option("--generators", o.generators, "wext or reflections");
  auto* verify = app.add_subcommand("verify-witness", "replay witnesses from a file or stdin");
  verify->add_option("--file", o.file, "JSON file");
  for (auto* c : app.get_subcommands({})) {
    c->add_option("--seed", o.seed, "seed (accepted for reproducible batch runs)");
    c->add_option("--depth", o.depth, "word length bound")->check(CLI::NonNegativeNumber);
  }

  std::vector<const char*> args;
  for (const auto& a : argv) args.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << error_json("Usage", e.what()).dump() << "\n";
    return 1;
  }

  int code = 0;
  try {
    json result;
    if (*generic_v) result = cmd_generic_v(o);
    else if (*reflexive) result = cmd_reflexive(o);
    else if (*iso) result = cmd_iso(o);
    else if (*morita) result = cmd_morita(o);
    else if (*v2lambda) result = cmd_v2lambda(o);
    else if (*lambda2v) result = cmd_lambda2v(o);
    else if (*reduce_p) result = cmd_reduce_p(o);
    else if (*center) result = cmd_center_check(o);
    else if (*bracket) result = cmd_bracket_check(o);
    else if (*generic_lambda) result = cmd_generic_lambda(o);
    else if (*kleinian) result = cmd_kleinian(o, code);
    else if (*roots) result = cmd_roots(o);
    else if (*zero_dim) result = cmd_zero_dim(o);
    else if (*orbit) result = cmd_orbit(o);
    else if (*verify) result = cmd_verify(o, in);
    out << result.dump() << "\n";
    return code;
  } catch (const Error& e) {
    out << error_json(std::string(code_name(e.code())), e.what()).dump() << "\n";
    return 1;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cin);
}

}  // namespace km
