#include "hopfrb/report.hpp"

#include <sstream>

namespace hopfrb {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::skipped:
      return "skipped";
  }
  return "?";
}

Verdict Report::result() const {
  bool any_checked = false;
  for (const auto& a : axioms) {
    if (a.verdict == Verdict::fail) return Verdict::fail;
    if (a.verdict == Verdict::pass) any_checked = true;
  }
  return any_checked || axioms.empty() ? Verdict::pass : Verdict::skipped;
}

const AxiomResult* Report::first_failure() const {
  for (const auto& a : axioms) {
    if (a.verdict == Verdict::fail) return &a;
  }
  return nullptr;
}

const AxiomResult* Report::find(std::string_view axiom) const {
  for (const auto& a : axioms) {
    if (a.axiom == axiom) return &a;
  }
  return nullptr;
}

AxiomResult& Report::add(std::string axiom) {
  AxiomResult& r = axioms.emplace_back();
  r.axiom = std::move(axiom);
  return r;
}

void Report::assert_that(std::string axiom, bool ok, std::string note) {
  AxiomResult& r = add(std::move(axiom));
  r.tested = 1;
  if (!ok) {
    r.verdict = Verdict::fail;
    r.violations = 1;
  }
  r.note = std::move(note);
}

void Report::skip(std::string axiom, std::string note) {
  AxiomResult& r = add(std::move(axiom));
  r.verdict = Verdict::skipped;
  r.note = std::move(note);
}

void Report::absorb(const Report& other, std::string_view prefix) {
  for (AxiomResult a : other.axioms) {
    if (!prefix.empty()) a.axiom = std::string(prefix) + "/" + a.axiom;
    axioms.push_back(std::move(a));
  }
}

std::string Report::summary() const {
  std::ostringstream os;
  os << check << " [" << instance << "]";
  if (!weight.empty()) os << " weight " << weight;
  os << ": " << verdict_name(result());
  if (const AxiomResult* f = first_failure()) {
    os << " (" << f->axiom << ", " << f->violations << " violation" << (f->violations == 1 ? "" : "s");
    if (f->witness) {
      os << ", witness";
      for (const auto& [k, v] : f->witness->indices) os << ' ' << k << '=' << v;
    }
    if (!f->note.empty()) os << ", " << f->note;
    os << ')';
  }
  return os.str();
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["instance"] = r.instance;
  if (!r.weight.empty()) j["weight"] = r.weight;
  if (!r.construction.empty()) j["construction"] = r.construction;
  j["result"] = std::string(verdict_name(r.result()));
  if (const AxiomResult* f = r.first_failure(); f && f->witness) {
    nlohmann::json w;
    w["axiom"] = f->axiom;
    for (const auto& [k, v] : f->witness->indices) w[k] = v;
    w["delta"] = f->witness->delta;
    j["witness"] = std::move(w);
  }
  if (r.trials) j["trials"] = *r.trials;
  nlohmann::json axioms = nlohmann::json::array();
  for (const auto& a : r.axioms) {
    nlohmann::json x;
    x["axiom"] = a.axiom;
    x["result"] = std::string(verdict_name(a.verdict));
    x["tested"] = a.tested;
    x["violations"] = a.violations;
    if (!a.note.empty()) x["note"] = a.note;
    axioms.push_back(std::move(x));
  }
  j["axioms"] = std::move(axioms);
  return j;
}

}  // namespace hopfrb
