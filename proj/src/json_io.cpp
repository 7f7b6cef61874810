#include "km/json_io.hpp"

namespace km {

namespace {

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw Error(ErrorCode::ParseError, "expected a scalar literal, got " + j.dump());
}

void require_array(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string("expected an array for ") + what);
}

}  // namespace

json to_json(const Weight& w) {
  json a = json::array();
  for (Eigen::Index i = 0; i < w.size(); ++i) a.push_back(w(i).to_string());
  return a;
}

json to_json(const DimVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json to_json(const RootMultiset& r) {
  json a = json::array();
  for (const Scalar& t : r.roots()) a.push_back(t.to_string());
  return a;
}

json to_json(const Letter& l) {
  if (const auto* r = std::get_if<Reflection>(&l)) return {{"reflection", r->vertex}};
  if (const auto* r = std::get_if<Rotation>(&l)) return {{"rotation", r->steps}};
  if (std::holds_alternative<Flip>(l)) return {{"flip", true}};
  if (const auto* p = std::get_if<Permutation>(&l)) return {{"permutation", p->src}};
  return {{"translation", to_json(std::get<Translation>(l).d)}};
}

json to_json(const GroupWord& w) {
  json a = json::array();
  for (const Letter& l : w) a.push_back(to_json(l));
  return a;
}

json to_json(const AffineDiagram& d) {
  json arrows = json::array();
  for (const auto& [t, h] : d.arrows()) arrows.push_back({t, h});
  return {{"kind", d.name()},
          {"type", std::string(1, kind_letter(d.kind()))},
          {"size", d.diagram_size()},
          {"vertices", d.size()},
          {"arrows", arrows},
          {"delta", to_json(d.delta())}};
}

Weight weight_from_json(const json& j) {
  require_array(j, "weight");
  Weight w(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) w(static_cast<Eigen::Index>(i)) = scalar_from_json(j[i]);
  return w;
}

DimVector dimvector_from_json(const json& j) {
  require_array(j, "dimension vector");
  DimVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw Error(ErrorCode::ParseError, "dimension vectors hold integers");
    v(static_cast<Eigen::Index>(i)) = j[i].get<long>();
  }
  return v;
}

RootMultiset roots_from_json(const json& j) {
  require_array(j, "root multiset");
  if (j.empty()) throw Error(ErrorCode::DegreeZero, "v must have at least one root");
  std::vector<Scalar> roots;
  for (const auto& x : j) roots.push_back(scalar_from_json(x));
  return RootMultiset(roots);
}

Letter letter_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) throw Error(ErrorCode::ParseError, "letter must be a one-key object");
  const auto& [key, val] = *j.items().begin();
  if (key == "reflection") return Reflection{val.get<int>()};
  if (key == "rotation") return Rotation{val.get<int>()};
  if (key == "flip") return Flip{};
  if (key == "permutation") return Permutation{val.get<std::vector<int>>()};
  if (key == "translation") return Translation{dimvector_from_json(val)};
  throw Error(ErrorCode::ParseError, "unknown letter '" + key + "'");
}

GroupWord word_from_json(const json& j) {
  require_array(j, "word");
  GroupWord w;
  for (const auto& l : j) w.push_back(letter_from_json(l));
  return w;
}

json iso_witness_json(const RootMultiset& r, const RootMultiset& r2, const IsoWitness& w) {
  json out{{"kind", "iso"}, {"v", to_json(r)}, {"w", to_json(r2)}, {"c", w.c.to_string()}, {"matching", w.matching}};
  if (w.b == Scalar(1) || w.b == Scalar(-1)) {
    out["eps"] = w.b == Scalar(1) ? 1 : -1;
  } else {
    out["b"] = w.b.to_string();
  }
  return out;
}

json morita_witness_json(const RootMultiset& r, const RootMultiset& r2, const MoritaWitness& w) {
  return {{"kind", "morita"}, {"v", to_json(r)}, {"w", to_json(r2)}, {"eps", w.eps},
          {"c", w.c.to_string()}, {"d", w.d}, {"matching", w.matching}};
}

json certificate_json(const AffineDiagram& d, const OrbitCertificate& c) {
  return {{"kind", "orbit"},
          {"diagram", {{"type", std::string(1, kind_letter(d.kind()))}, {"size", d.diagram_size()}}},
          {"word", to_json(c.word)},
          {"scale", c.scale.to_string()},
          {"start", to_json(c.start)},
          {"end", to_json(c.end)}};
}

bool verify_witness(const json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "iso") {
      IsoWitness w;
      w.b = j.contains("b") ? scalar_from_json(j.at("b")) : Scalar(j.at("eps").get<long>());
      if (!j.contains("b") && !(w.b == Scalar(1) || w.b == Scalar(-1))) return false;
      w.c = scalar_from_json(j.at("c"));
      w.matching = j.at("matching").get<std::vector<int>>();
      return verify_iso(roots_from_json(j.at("v")), roots_from_json(j.at("w")), w);
    }
    if (kind == "morita") {
      MoritaWitness w;
      w.eps = j.at("eps").get<int>();
      w.c = scalar_from_json(j.at("c"));
      w.d = j.at("d").get<std::vector<long>>();
      w.matching = j.at("matching").get<std::vector<int>>();
      return verify_morita(roots_from_json(j.at("v")), roots_from_json(j.at("w")), w);
    }
    if (kind == "orbit") {
      const auto& dj = j.at("diagram");
      const AffineDiagram d = build_diagram(parse_kind(dj.at("type").get<std::string>()), dj.at("size").get<int>());
      const OrbitCertificate c{word_from_json(j.at("word")), scalar_from_json(j.at("scale")),
                               weight_from_json(j.at("start")), weight_from_json(j.at("end"))};
      return verify_certificate(d, c);
    }
  } catch (const Error&) {
    return false;
  } catch (const json::exception&) {
    return false;
  }
  return false;
}

}  // namespace km
