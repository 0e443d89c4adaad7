#pragma once

#include <json.hpp>

#include "axioms.hpp"
#include "element.hpp"
#include "progression.hpp"
#include "subset.hpp"
#include "sumset.hpp"
#include "textform.hpp"
#include "verify.hpp"

namespace nil2 {

using Json = nlohmann::json;

inline void to_json(Json& out, const MalcevElement& g) {
  out = Json{{"gens", g.gens}, {"comms", g.comms}};
}

inline void from_json(const Json& in, MalcevElement& g) {
  in.at("gens").get_to(g.gens);
  in.at("comms").get_to(g.comms);
  if (g.gens.empty()) throw ParseError("element needs at least one generator exponent");
  const std::size_t n = g.gens.size();
  if (g.comms.size() != n * (n - 1) / 2)
    throw ParseError("element has a commutator block of the wrong length");
}

// element argument in either the text form or the JSON object form
inline MalcevElement element_from_any(const std::string& text) {
  for (char ch : text) {
    if (ch == ' ' || ch == '\t') continue;
    if (ch == '{') {
      try {
        return Json::parse(text).get<MalcevElement>();
      } catch (const Json::exception& e) {
        throw ParseError(std::string("bad element JSON: ") + e.what());
      }
    }
    break;
  }
  return element_from_text(text);
}

inline void to_json(Json& out, const Subset& s) {
  out = Json{{"n", s.context().generators()}, {"elements", s.elements()}};
}

inline void to_json(Json& out, const StructureDescription& d) {
  out = Json{{"shape", to_string(d.shape)},
             {"a", d.a},
             {"b", d.b},
             {"c", d.c},
             {"i", d.i},
             {"j", d.j},
             {"v", d.v},
             {"relation", to_string(d.relation)},
             {"has_holes", d.has_holes},
             {"strict", d.strict}};
  if (d.shape == StructureShape::progression_plus_point) out["exponents"] = d.exponents;
}

inline void to_json(Json& out, const K3Classification& c) {
  out = Json{{"kind", to_string(c.kind)}};
  if (c.description) out["description"] = *c.description;
  if (!c.central_members.empty()) out["central_members"] = c.central_members;
}

inline void to_json(Json& out, const DoublingReport& r) {
  out = Json{{"k", r.k},
             {"square_size", r.square_size},
             {"generated_abelian", r.generated_abelian},
             {"cna", r.cna},
             {"band", to_string(r.band)},
             {"landmarks",
              Json{{"2k-1", r.landmark(0)},
                   {"3k-3", r.landmark(1)},
                   {"3k-2", r.landmark(2)},
                   {"3k-1", r.landmark(3)},
                   {"4k-4", r.landmark(4)}}}};
}

inline void to_json(Json& out, const Counterexample& ce) {
  out = Json{{"ordinal", ce.ordinal}, {"subset", ce.subset}, {"detail", ce.detail}};
}

inline void to_json(Json& out, const VerificationReport& r) {
  Json dirs = Json::array();
  for (OrderDirection d : r.directions)
    dirs.push_back(d == OrderDirection::standard ? "standard" : "reversed");
  out = Json{{"theorem", to_string(r.theorem)},
             {"mode", to_string(r.mode)},
             {"instances_checked", r.instances_checked},
             {"hypothesis_hits", r.hypothesis_hits},
             {"counterexample_count", r.counterexample_count},
             {"counterexamples", r.counterexamples},
             {"directions", dirs},
             {"elapsed_seconds", r.elapsed_seconds},
             {"vacuous", r.vacuous()},
             {"status", r.status()}};
}

inline void to_json(Json& out, const AxiomCheckResult& r) {
  out = Json{{"name", r.name}, {"trials", r.trials}, {"failures", r.failures}};
  if (!r.first_failure.empty()) out["first_failure"] = r.first_failure;
}

}  // namespace nil2
