// Axiom-check reports shared by every checker and construction.
#ifndef HOPFRB_REPORT_HPP
#define HOPFRB_REPORT_HPP

#include <cstddef>
#include <deque>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hopfrb/field.hpp"

namespace hopfrb {

enum class Verdict { pass, fail, skipped };

std::string_view verdict_name(Verdict v);

/// A violating basis tuple together with the (nonzero) difference of the two
/// sides of the axiom, written in the target basis.
struct Witness {
  std::vector<std::pair<std::string, std::size_t>> indices;
  std::vector<std::string> delta;
};

struct AxiomResult {
  std::string axiom;
  Verdict verdict = Verdict::pass;
  std::size_t tested = 0;
  std::size_t violations = 0;
  std::optional<Witness> witness;  // first violation only
  std::string note;
};

struct Report {
  std::string check;
  std::string instance;
  std::string weight;        // empty when the check has no weight
  std::string construction;  // theorem replayed, for construction results
  std::optional<long> trials;
  std::deque<AxiomResult> axioms;  // stable references for Tally

  Report() = default;
  Report(std::string check_name, std::string instance_name)
      : check(std::move(check_name)), instance(std::move(instance_name)) {}

  /// fail if any axiom failed; skipped if every axiom was skipped; else pass.
  Verdict result() const;
  bool passed() const { return result() != Verdict::fail; }
  const AxiomResult* first_failure() const;
  const AxiomResult* find(std::string_view axiom) const;

  AxiomResult& add(std::string axiom);
  void assert_that(std::string axiom, bool ok, std::string note = {});
  void skip(std::string axiom, std::string note);
  /// Appends the axioms of `other`, prefixing their names.
  void absorb(const Report& other, std::string_view prefix);

  std::string summary() const;
};

nlohmann::json to_json(const Report& r);

/// Raised when an input structure fails the axioms a caller relies on.
struct ValidationError : Error {
  Report report;
  ValidationError(const std::string& what, Report r) : Error(what), report(std::move(r)) {}
};

/// Raised when a construction's stated hypotheses do not hold.
struct PreconditionError : Error {
  Report report;
  explicit PreconditionError(const std::string& what, Report r = {}) : Error(what), report(std::move(r)) {}
};

/// Accumulates basis-tuple evaluations of one axiom into an AxiomResult.
class Tally {
 public:
  explicit Tally(AxiomResult& r) : r_(r) {}

  /// Records one evaluation; `delta` is lhs - rhs. Returns true when zero.
  template <class V>
  bool operator()(std::initializer_list<std::pair<const char*, std::size_t>> idx, const V& delta) {
    ++r_.tested;
    bool zero = true;
    for (decltype(delta.size()) i = 0; i < delta.size(); ++i) {
      if (!delta(i).is_zero()) {
        zero = false;
        break;
      }
    }
    if (zero) return true;
    note_violation(idx, delta);
    return false;
  }

  /// Scalar-valued variant.
  template <class S>
  bool scalar(std::initializer_list<std::pair<const char*, std::size_t>> idx, const S& delta) {
    ++r_.tested;
    if (delta.is_zero()) return true;
    ++r_.violations;
    r_.verdict = Verdict::fail;
    if (!r_.witness) r_.witness = Witness{indices(idx), {to_string(delta)}};
    return false;
  }

 private:
  static std::vector<std::pair<std::string, std::size_t>> indices(
      std::initializer_list<std::pair<const char*, std::size_t>> idx) {
    std::vector<std::pair<std::string, std::size_t>> out;
    for (const auto& [k, v] : idx) out.emplace_back(k, v);
    return out;
  }

  template <class V>
  void note_violation(std::initializer_list<std::pair<const char*, std::size_t>> idx, const V& delta) {
    ++r_.violations;
    r_.verdict = Verdict::fail;
    if (r_.witness) return;
    Witness w{indices(idx), {}};
    for (decltype(delta.size()) i = 0; i < delta.size(); ++i) w.delta.push_back(to_string(delta(i)));
    r_.witness = std::move(w);
  }

  AxiomResult& r_;
};

}  // namespace hopfrb

#endif  // HOPFRB_REPORT_HPP
