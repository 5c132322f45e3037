#include "factorcover/report.hpp"

#include <cmath>
#include <sstream>

#ifndef FACTORCOVER_VERSION
#define FACTORCOVER_VERSION "0.0.0"
#endif

namespace fcover {
namespace {

Json vertex_list(VertexSet s) {
  Json out = Json::array();
  for (int v : s.members()) out.push_back(v);
  return out;
}

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

struct Checker {
  std::vector<std::string> errors;

  void fail(const std::string& path, const std::string& what) { errors.push_back(path + ": " + what); }

  const Json* field(const Json& obj, const std::string& path, const std::string& key) {
    if (!obj.is_object()) {
      fail(path, "expected object");
      return nullptr;
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
      fail(path + "." + key, "missing");
      return nullptr;
    }
    return &*it;
  }

  void string_field(const Json& obj, const std::string& path, const std::string& key) {
    if (auto f = field(obj, path, key); f && !f->is_string()) fail(path + "." + key, "expected string");
  }
  void int_field(const Json& obj, const std::string& path, const std::string& key) {
    if (auto f = field(obj, path, key); f && !f->is_number_integer()) fail(path + "." + key, "expected integer");
  }
  void bool_field(const Json& obj, const std::string& path, const std::string& key) {
    if (auto f = field(obj, path, key); f && !f->is_boolean()) fail(path + "." + key, "expected boolean");
  }
  void array_field(const Json& obj, const std::string& path, const std::string& key) {
    if (auto f = field(obj, path, key); f && !f->is_array()) fail(path + "." + key, "expected array");
  }

  void measure(const Json& m, const std::string& path) {
    if (!m.is_object()) {
      fail(path, "expected measure object");
      return;
    }
    auto v = m.find("value");
    if (v == m.end() || !v->is_number()) fail(path + ".value", "expected number");
    auto method = m.find("method");
    if (method == m.end() || !method->is_string()) {
      fail(path + ".method", "expected string");
    } else {
      const auto tag = method->get<std::string>();
      if (tag != "full-eig" && tag != "power" && tag != "quotient") fail(path + ".method", "unknown method " + tag);
    }
    auto res = m.find("residual");
    if (res == m.end())
      fail(path + ".residual", "missing");
    else if (!res->is_null() && !res->is_number())
      fail(path + ".residual", "expected number or null");
  }

  void measure_field(const Json& obj, const std::string& path, const std::string& key, bool optional = false) {
    if (optional && (!obj.is_object() || !obj.contains(key))) return;
    if (auto f = field(obj, path, key)) measure(*f, path + "." + key);
  }

  void spectrum(const Json& r) {
    measure_field(r, "results", "rho");
    measure_field(r, "results", "q");
    measure_field(r, "results", "lambda_alpha", true);
    if (r.contains("quotient")) {
      measure_field(r["quotient"], "results.quotient", "A");
      measure_field(r["quotient"], "results.quotient", "Q");
    }
  }

  void check(const Json& r) {
    string_field(r, "results", "property");
    int_field(r, "results", "k");
    bool_field(r, "results", "holds");
    array_field(r, "results", "verdicts");
    if (!r.contains("verdicts") || !r["verdicts"].is_array()) return;
    int i = 0;
    for (const auto& v : r["verdicts"]) {
      const auto path = "results.verdicts[" + std::to_string(i++) + "]";
      string_field(v, path, "criterion");
      bool_field(v, path, "holds");
      string_field(v, path, "detail");
      if (auto w = field(v, path, "witness_set"); w && !w->is_null() && !w->is_array())
        fail(path + ".witness_set", "expected array or null");
      if (auto w = field(v, path, "witness_edge"); w && !w->is_null() && !(w->is_array() && w->size() == 2))
        fail(path + ".witness_edge", "expected pair or null");
      field(v, path, "certificate");
    }
  }

  void sweep(const Json& r) {
    string_field(r, "results", "target");
    string_field(r, "results", "evidence");
    bool_field(r, "results", "passed");
    for (const char* key : {"graphs_checked", "condition_hits", "skipped"}) int_field(r, "results", key);
    if (auto t = field(r, "results", "threshold"); t && !t->is_null()) measure(*t, "results.threshold");
    for (const char* key : {"violations", "exempt", "errata", "notes"}) array_field(r, "results", key);
    bool_field(r, "results", "outside_hypothesis");
    if (auto e = field(r, "results", "extremal_confirmed"); e && !e->is_null() && !e->is_boolean())
      fail("results.extremal_confirmed", "expected boolean or null");
    if (r.contains("violations") && r["violations"].is_array())
      for (const auto& v : r["violations"]) {
        string_field(v, "results.violations[]", "graph6");
        string_field(v, "results.violations[]", "detail");
      }
  }

  void graph_summary(const Json& r) {
    string_field(r, "results", "graph6");
    int_field(r, "results", "n");
    int_field(r, "results", "m");
  }
};

}  // namespace

std::string tool_version() { return FACTORCOVER_VERSION; }

Json measure(const SpectralResult& r) { return measure(r.value, r.method, r.residual); }

Json measure(double value, SpectralMethod method, std::optional<double> residual) {
  Json out;
  out["value"] = value;
  out["method"] = to_string(method);
  out["residual"] = residual ? Json(*residual) : Json(nullptr);
  return out;
}

Json to_json(const FamilyParams& p) {
  return Json{{"family", to_string(p.family)}, {"n", p.n}, {"k", p.k}, {"s", p.s}};
}

Json to_json(const Verdict& v) {
  Json out;
  out["holds"] = v.holds;
  if (const auto* m = std::get_if<Matching>(&v.certificate)) {
    Json edges = Json::array();
    for (auto e : m->edges) edges.push_back({e.u, e.v});
    out["certificate"] = Json{{"type", "matching"}, {"edges", edges}};
  } else if (const auto* f = std::get_if<StarForest>(&v.certificate)) {
    Json stars = Json::array();
    for (const auto& s : f->stars) stars.push_back(Json{{"center", s.center}, {"leaves", vertex_list(s.leaves)}});
    out["certificate"] = Json{{"type", "star-forest"}, {"stars", stars}};
  } else {
    out["certificate"] = nullptr;
  }
  out["witness_set"] = v.witness_set ? vertex_list(*v.witness_set) : Json(nullptr);
  out["witness_edge"] = v.witness_edge ? Json{v.witness_edge->u, v.witness_edge->v} : Json(nullptr);
  out["detail"] = v.detail;
  return out;
}

Json to_json(const SweepReport& r) {
  Json out;
  out["target"] = target_tag(r.config);
  out["evidence"] = r.evidence;
  out["passed"] = r.passed();
  out["graphs_checked"] = r.graphs_checked;
  out["condition_hits"] = r.condition_hits;
  out["skipped"] = r.skipped;
  out["threshold"] = r.threshold ? measure(*r.threshold, SpectralMethod::FullEig, r.threshold_residual) : Json(nullptr);
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(Json{{"graph6", v.graph6}, {"detail", v.detail}});
  out["violations"] = violations;
  out["exempt"] = r.exempt;
  out["extremal_confirmed"] = r.extremal_confirmed ? Json(*r.extremal_confirmed) : Json(nullptr);
  Json errata = Json::array();
  for (const auto& e : r.errata)
    errata.push_back(Json{{"lemma", to_string(e.lemma)},
                          {"params", to_json(e.params)},
                          {"printed", e.printed.c},
                          {"derived", e.derived.c}});
  out["errata"] = errata;
  out["notes"] = r.notes;
  out["outside_hypothesis"] = r.outside_hypothesis;
  return out;
}

Json make_record(const std::string& kind, const std::vector<std::string>& command, Json inputs, Json results,
                 double elapsed_ms) {
  Json out;
  out["schema"] = kSchemaId;
  out["record"] = kind;
  out["tool_version"] = tool_version();
  out["command"] = command;
  out["inputs"] = std::move(inputs);
  out["results"] = std::move(results);
  out["elapsed_ms"] = number_or_null(elapsed_ms);
  return out;
}

std::vector<std::string> validate_record(const Json& record) {
  Checker c;
  if (!record.is_object()) {
    c.fail("$", "expected object");
    return c.errors;
  }
  if (auto s = c.field(record, "$", "schema"); s && (!s->is_string() || *s != kSchemaId))
    c.fail("$.schema", std::string("expected \"") + kSchemaId + "\"");
  c.string_field(record, "$", "tool_version");
  if (auto cmd = c.field(record, "$", "command")) {
    if (!cmd->is_array())
      c.fail("$.command", "expected array");
    else
      for (const auto& part : *cmd)
        if (!part.is_string()) c.fail("$.command", "expected array of strings");
  }
  if (auto in = c.field(record, "$", "inputs"); in && !in->is_object()) c.fail("$.inputs", "expected object");
  if (auto e = c.field(record, "$", "elapsed_ms"); e && !(e->is_number() && e->get<double>() >= 0))
    c.fail("$.elapsed_ms", "expected non-negative number");
  const Json* results = c.field(record, "$", "results");
  if (results && !results->is_object()) {
    c.fail("$.results", "expected object");
    results = nullptr;
  }
  const Json* kind = c.field(record, "$", "record");
  if (!kind) return c.errors;
  if (!kind->is_string()) {
    c.fail("$.record", "expected string");
    return c.errors;
  }
  const auto k = kind->get<std::string>();
  if (!results) return c.errors;
  if (k == "spectrum")
    c.spectrum(*results);
  else if (k == "check")
    c.check(*results);
  else if (k == "sweep")
    c.sweep(*results);
  else if (k == "build" || k == "graph")
    c.graph_summary(*results);
  else
    c.fail("$.record", "unknown record type " + k);
  return c.errors;
}

std::string summarize(const SweepReport& r) {
  std::ostringstream os;
  os << target_tag(r.config) << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.evidence << ")\n";
  os << "  checked " << r.graphs_checked;
  if (r.condition_hits) os << ", meeting threshold " << r.condition_hits;
  if (r.skipped) os << ", skipped " << r.skipped;
  os << ", violations " << r.violations.size() << "\n";
  if (r.threshold) os << "  threshold " << *r.threshold << "\n";
  if (r.extremal_confirmed) os << "  extremal graph confirmed: " << (*r.extremal_confirmed ? "yes" : "no") << "\n";
  if (!r.errata.empty()) os << "  errata " << r.errata.size() << "\n";
  for (std::size_t i = 0; i < r.violations.size() && i < 10; ++i)
    os << "  violation " << r.violations[i].graph6 << ": " << r.violations[i].detail << "\n";
  if (r.violations.size() > 10) os << "  ... " << r.violations.size() - 10 << " more\n";
  for (const auto& note : r.notes) os << "  note: " << note << "\n";
  return os.str();
}

}  // namespace fcover
