// Named, validated example structures and their JSON form.
//
// Entry names double as the names of the structures they hold, so composite
// entries (dimodules, Hopf modules, ...) serialize as references to other
// entries and reload against the same catalog.
#ifndef HOPFRB_CATALOG_HPP
#define HOPFRB_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hopfrb/constructions.hpp"
#include "hopfrb/io.hpp"

namespace hopfrb {

enum class EntryKind {
  algebra,
  bialgebra,
  hopf,
  weak_bialgebra,
  weak_hopf,
  module,
  comodule,
  dimodule,
  hopf_module,
  doi_hopf,
  comodule_algebra,
  pairing,
  rmatrix,
  functional,
  rbp_instance,
};

std::string_view kind_name(EntryKind k);
/// Throws ParseError on an unknown name.
EntryKind parse_kind(std::string_view s);
const std::vector<EntryKind>& all_kinds();

template <class S>
struct PairingEntry {
  Bialgebra<S> host;
  PairingForm<S> form;
  bool long_axioms = true;     // (L1)-(L5)
  bool braided_axioms = false;  // (B1)-(B3)
};

template <class S>
struct RMatrixEntry {
  Bialgebra<S> host;
  RMatrix<S> r;
};

template <class S>
struct FunctionalEntry {
  Bialgebra<S> host;
  Functional<S> f;
};

template <class S>
using Payload = std::variant<FinAlgebra<S>, Bialgebra<S>, ActionStructure<S>, CoactionStructure<S>, Dimodule<S>, HopfModule<S>,
                             DoiHopfModule<S>, WeakComoduleAlgebra<S>, PairingEntry<S>, RMatrixEntry<S>, FunctionalEntry<S>,
                             RbpInstance<S>>;

template <class S>
struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::algebra;
  Payload<S> payload;
  std::string provenance;

  template <class T>
  const T& as() const {
    if (const T* p = std::get_if<T>(&payload)) return *p;
    throw Error("entry " + name + " is a " + std::string(kind_name(kind)));
  }
};

namespace detail {

template <class S>
Report single_axiom_report(const std::string& check, const std::string& instance) {
  Report r(check, instance);
  r.assert_that("shape", true);
  return r;
}

template <class S>
Report pairing_report(const PairingEntry<S>& p) {
  Report r("pairing", p.form.name);
  if (p.long_axioms) r.absorb(check_long_pairing(p.host, p.form).report, "long");
  if (p.braided_axioms) r.absorb(check_braided(p.host, p.form).report, "braided");
  if (!p.long_axioms && !p.braided_axioms) r.skip("axioms", "no axiom set declared");
  return r;
}

}  // namespace detail

/// The full axiom checker for the entry's kind.
template <class S>
Report validate(const CatalogEntry<S>& e) {
  switch (e.kind) {
    case EntryKind::algebra:
      return check_algebra(e.template as<FinAlgebra<S>>());
    case EntryKind::bialgebra:
      return check_bialgebra(e.template as<Bialgebra<S>>());
    case EntryKind::hopf:
      return check_hopf(e.template as<Bialgebra<S>>());
    case EntryKind::weak_bialgebra:
      return check_weak_bialgebra(e.template as<Bialgebra<S>>());
    case EntryKind::weak_hopf:
      return check_weak_hopf(e.template as<Bialgebra<S>>());
    case EntryKind::module:
      return check_action(e.template as<ActionStructure<S>>());
    case EntryKind::comodule:
      return check_coaction(e.template as<CoactionStructure<S>>());
    case EntryKind::dimodule:
      return check_dimodule(e.template as<Dimodule<S>>());
    case EntryKind::hopf_module:
      return check_hopf_module(e.template as<HopfModule<S>>());
    case EntryKind::doi_hopf:
      return check_doi_hopf(e.template as<DoiHopfModule<S>>());
    case EntryKind::comodule_algebra:
      return check_weak_comodule_algebra(e.template as<WeakComoduleAlgebra<S>>());
    case EntryKind::pairing:
      return detail::pairing_report(e.template as<PairingEntry<S>>());
    case EntryKind::rmatrix: {
      const auto& r = e.template as<RMatrixEntry<S>>();
      return check_quasitriangular(r.host, r.r).report;
    }
    case EntryKind::functional:
      return detail::single_axiom_report<S>("functional", e.name);
    case EntryKind::rbp_instance:
      return check_rbp_module(e.template as<RbpInstance<S>>());
  }
  throw Error("unhandled entry kind");
}

/// Name carried by the payload itself, where it has one.
template <class S>
std::optional<std::string> payload_name(const Payload<S>& p) {
  return std::visit(
      [](const auto& x) -> std::optional<std::string> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FinAlgebra<S>> || std::is_same_v<T, Bialgebra<S>> || std::is_same_v<T, ActionStructure<S>> ||
                      std::is_same_v<T, CoactionStructure<S>>)
          return x.name();
        else if constexpr (std::is_same_v<T, PairingEntry<S>>)
          return x.form.name;
        else if constexpr (std::is_same_v<T, RMatrixEntry<S>>)
          return x.r.name;
        else if constexpr (std::is_same_v<T, FunctionalEntry<S>>)
          return std::nullopt;
        else
          return x.name;
      },
      p);
}

template <class S>
class Catalog {
 public:
  explicit Catalog(FieldSpec field = FieldSpec::rational()) : field_(field) {
    if (!ScalarTraits<S>::supports(field_)) throw FieldError("catalog scalar type does not match " + field_.str());
  }

  const FieldSpec& field() const { return field_; }

  /// Validates and stores; throws ValidationError with the checker's report.
  const CatalogEntry<S>& add(CatalogEntry<S> e) {
    if (index_.count(e.name)) throw Error("duplicate catalog entry " + e.name);
    if (const auto n = payload_name<S>(e.payload); n && *n != e.name)
      throw Error("entry " + e.name + " holds a structure named " + *n);
    Report r = validate(e);
    if (!r.passed()) throw ValidationError("entry " + e.name + " fails its axioms: " + r.summary(), std::move(r));
    index_[e.name] = entries_.size();
    entries_.push_back(std::move(e));
    return entries_.back();
  }

  bool contains(const std::string& name) const { return index_.count(name) != 0; }

  const CatalogEntry<S>& get(const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) throw Error("unknown catalog entry " + name);
    return entries_[it->second];
  }

  /// In insertion order, optionally filtered by kind.
  std::vector<const CatalogEntry<S>*> list(std::optional<EntryKind> kind = std::nullopt) const {
    std::vector<const CatalogEntry<S>*> out;
    for (const auto& e : entries_)
      if (!kind || e.kind == *kind) out.push_back(&e);
    return out;
  }

  std::size_t size() const { return entries_.size(); }

  // Typed lookups used when resolving references.
  FinAlgebra<S> algebra(const std::string& name) const {
    const auto& e = get(name);
    if (const auto* a = std::get_if<FinAlgebra<S>>(&e.payload)) return *a;
    if (const auto* b = std::get_if<Bialgebra<S>>(&e.payload)) return b->algebra();
    throw Error("entry " + name + " is not an algebra");
  }
  const Bialgebra<S>& bialgebra(const std::string& name) const { return get(name).template as<Bialgebra<S>>(); }
  const ActionStructure<S>& module(const std::string& name) const { return get(name).template as<ActionStructure<S>>(); }
  const CoactionStructure<S>& comodule(const std::string& name) const { return get(name).template as<CoactionStructure<S>>(); }
  const WeakComoduleAlgebra<S>& comodule_algebra(const std::string& name) const {
    return get(name).template as<WeakComoduleAlgebra<S>>();
  }

 private:
  FieldSpec field_;
  std::vector<CatalogEntry<S>> entries_;
  std::map<std::string, std::size_t> index_;
};

// ------------------------------------------------------------------ JSON

namespace detail {

template <class S>
io::json algebra_fields(const FinAlgebra<S>& a) {
  io::json j;
  j["name"] = a.name();
  j["field"] = io::field_to_json(a.field());
  j["dim"] = a.dim();
  j["basis"] = a.labels();
  if (a.unital()) j["unit"] = io::vec_to_json(a.one());
  j["mult"] = io::sparse_to_json(a.mult(), io::Layout::output_row, a.dim());
  return j;
}

template <class S>
FinAlgebra<S> algebra_from(const io::json& j, const FieldSpec& f) {
  const Index n = io::index_member(j, "dim");
  auto labels = io::labels_member(j, "basis", n);
  std::optional<Vec<S>> unit;
  if (j.contains("unit")) unit = io::vec_from_json<S>(f, j["unit"], n);
  return FinAlgebra<S>(io::string_member(j, "name"), f, std::move(labels),
                       io::sparse_from_json<S>(f, io::member(j, "mult"), io::Layout::output_row, n, n * n, n), std::move(unit));
}

inline std::string side_of(const io::json& j) { return j.contains("side") ? io::string_member(j, "side") : "left"; }

}  // namespace detail

template <class S>
io::json to_json(const CatalogEntry<S>& e) {
  io::json j;
  const std::string kind(kind_name(e.kind));
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FinAlgebra<S>>) {
          j = detail::algebra_fields(x);
        } else if constexpr (std::is_same_v<T, Bialgebra<S>>) {
          j = detail::algebra_fields(x.algebra());
          j["comult"] = io::sparse_to_json(x.coalgebra().comult(), io::Layout::input_col, x.dim());
          j["counit"] = io::vec_to_json(x.coalgebra().counit());
          if (x.has_antipode()) j["antipode"] = io::dense_to_json(x.antipode());
        } else if constexpr (std::is_same_v<T, ActionStructure<S>>) {
          j["name"] = x.name();
          j["algebra"] = x.algebra().name();
          j["side"] = side_name(x.side());
          j["dim"] = x.dim();
          j["basis"] = x.labels();
          const Index n = x.algebra().dim();
          j["action"] = x.side() == Side::left ? io::sparse_to_json(x.action(), io::Layout::output_row, x.dim())
                                               : io::sparse_to_json(x.action(), io::Layout::output_row_ji, n);
        } else if constexpr (std::is_same_v<T, CoactionStructure<S>>) {
          j["name"] = x.name();
          j["coalgebra"] = x.coalgebra().name();
          j["side"] = side_name(x.side());
          j["dim"] = x.dim();
          j["basis"] = x.labels();
          j["coaction"] = io::sparse_to_json(x.coaction(), io::Layout::input_col, x.side() == Side::right ? x.coalgebra().dim() : x.dim());
        } else if constexpr (std::is_same_v<T, Dimodule<S>> || std::is_same_v<T, HopfModule<S>>) {
          j["name"] = x.name;
          j["host"] = x.host.name();
          j["module"] = x.action.name();
          j["comodule"] = x.coaction.name();
        } else if constexpr (std::is_same_v<T, DoiHopfModule<S>>) {
          j["name"] = x.name;
          j["comodule-algebra"] = x.base.name;
          j["module"] = x.action.name();
          j["comodule"] = x.coaction.name();
        } else if constexpr (std::is_same_v<T, WeakComoduleAlgebra<S>>) {
          j["name"] = x.name;
          j["host"] = x.host.name();
          j["algebra"] = x.algebra.name();
          j["comodule"] = x.coaction.name();
        } else if constexpr (std::is_same_v<T, PairingEntry<S>>) {
          j["name"] = x.form.name;
          j["host"] = x.host.name();
          j["sigma"] = io::dense_to_json(x.form.sigma);
          io::json ax = io::json::array();
          if (x.long_axioms) ax.push_back("long");
          if (x.braided_axioms) ax.push_back("braided");
          j["axioms"] = std::move(ax);
        } else if constexpr (std::is_same_v<T, RMatrixEntry<S>>) {
          j["name"] = x.r.name;
          j["host"] = x.host.name();
          j["R"] = io::vec_to_json(x.r.R);
          j["Rinv"] = io::vec_to_json(x.r.Rinv);
        } else if constexpr (std::is_same_v<T, FunctionalEntry<S>>) {
          j["name"] = e.name;
          j["host"] = x.host.name();
          j["coords"] = io::vec_to_json(x.f.coords);
        } else if constexpr (std::is_same_v<T, RbpInstance<S>>) {
          j["name"] = x.name;
          j["module"] = x.module.name();
          j["side"] = side_name(x.side);
          j["P"] = io::dense_to_json(x.P);
          j["T"] = io::dense_to_json(x.T);
          j["weight"] = to_string(x.lambda);
        }
      },
      e.payload);
  j["kind"] = kind;
  if (!e.provenance.empty()) j["note"] = e.provenance;
  return j;
}

/// Decodes one entry; references resolve against `c`. Does not validate.
template <class S>
CatalogEntry<S> entry_from_json(const io::json& j, const Catalog<S>& c, std::string provenance = {}) {
  if (!j.is_object()) throw ParseError("catalog entry must be a JSON object");
  const FieldSpec& f = c.field();
  if (j.contains("field") && !(io::field_from_json(j["field"]) == f))
    throw FieldError("entry " + io::string_member(j, "name") + " is over " + io::field_from_json(j["field"]).str() + ", catalog is over " + f.str());
  CatalogEntry<S> e;
  e.name = io::string_member(j, "name");
  e.provenance = j.contains("note") ? io::string_member(j, "note") : std::move(provenance);
  if (j.contains("kind")) {
    e.kind = parse_kind(io::string_member(j, "kind"));
  } else {
    e.kind = !j.contains("comult") ? EntryKind::algebra : j.contains("antipode") ? EntryKind::hopf : EntryKind::bialgebra;
  }
  switch (e.kind) {
    case EntryKind::algebra:
      e.payload = detail::algebra_from<S>(j, f);
      break;
    case EntryKind::bialgebra:
    case EntryKind::hopf:
    case EntryKind::weak_bialgebra:
    case EntryKind::weak_hopf: {
      FinAlgebra<S> a = detail::algebra_from<S>(j, f);
      const Index n = a.dim();
      FinCoalgebra<S> co(a.name(), f, a.labels(), io::sparse_from_json<S>(f, io::member(j, "comult"), io::Layout::input_col, n * n, n, n),
                         io::vec_from_json<S>(f, io::member(j, "counit"), n));
      std::optional<Mat<S>> s;
      if (j.contains("antipode")) s = io::dense_from_json<S>(f, j["antipode"], n, n);
      if (!s && (e.kind == EntryKind::hopf || e.kind == EntryKind::weak_hopf)) s = compute_antipode(Bialgebra<S>(a, co));
      if (!s && (e.kind == EntryKind::hopf || e.kind == EntryKind::weak_hopf))
        throw ValidationError("entry " + e.name + " declares an antipode kind but none exists", Report("antipode", e.name));
      e.payload = Bialgebra<S>(std::move(a), std::move(co), std::move(s));
      break;
    }
    case EntryKind::module: {
      const FinAlgebra<S> a = c.algebra(io::string_member(j, "algebra"));
      const Side side = parse_side(detail::side_of(j));
      const Index m = io::index_member(j, "dim"), n = a.dim();
      auto labels = j.contains("basis") ? io::labels_member(j, "basis", m) : std::vector<std::string>{};
      const Mat<S> act = side == Side::left
                             ? io::sparse_from_json<S>(f, io::member(j, "action"), io::Layout::output_row, m, n * m, m)
                             : io::sparse_from_json<S>(f, io::member(j, "action"), io::Layout::output_row_ji, m, m * n, n);
      e.payload = ActionStructure<S>(e.name, a, side, m, act, std::move(labels));
      break;
    }
    case EntryKind::comodule: {
      const Bialgebra<S>& h = c.bialgebra(io::string_member(j, "coalgebra"));
      const Side side = parse_side(detail::side_of(j));
      const Index m = io::index_member(j, "dim"), n = h.dim();
      auto labels = j.contains("basis") ? io::labels_member(j, "basis", m) : std::vector<std::string>{};
      const Mat<S> rho = io::sparse_from_json<S>(f, io::member(j, "coaction"), io::Layout::input_col, m * n, m, side == Side::right ? n : m);
      e.payload = CoactionStructure<S>(e.name, h.coalgebra(), side, m, rho, std::move(labels));
      break;
    }
    case EntryKind::dimodule:
      e.payload = Dimodule<S>(e.name, c.bialgebra(io::string_member(j, "host")), c.module(io::string_member(j, "module")),
                              c.comodule(io::string_member(j, "comodule")));
      break;
    case EntryKind::hopf_module:
      e.payload = HopfModule<S>(e.name, c.bialgebra(io::string_member(j, "host")), c.module(io::string_member(j, "module")),
                                c.comodule(io::string_member(j, "comodule")));
      break;
    case EntryKind::doi_hopf:
      e.payload = DoiHopfModule<S>(e.name, c.comodule_algebra(io::string_member(j, "comodule-algebra")),
                                   c.module(io::string_member(j, "module")), c.comodule(io::string_member(j, "comodule")));
      break;
    case EntryKind::comodule_algebra:
      e.payload = WeakComoduleAlgebra<S>(e.name, c.bialgebra(io::string_member(j, "host")), c.algebra(io::string_member(j, "algebra")),
                                         c.comodule(io::string_member(j, "comodule")));
      break;
    case EntryKind::pairing: {
      PairingEntry<S> p;
      p.host = c.bialgebra(io::string_member(j, "host"));
      p.form = {e.name, io::dense_from_json<S>(f, io::member(j, "sigma"), p.host.dim(), p.host.dim())};
      p.long_axioms = false;
      if (!j.contains("axioms")) {
        p.long_axioms = true;
      } else {
        for (const auto& a : io::member(j, "axioms")) {
          const std::string s = a.is_string() ? a.get<std::string>() : "";
          if (s == "long") p.long_axioms = true;
          else if (s == "braided") p.braided_axioms = true;
          else throw ParseError("unknown pairing axiom set " + a.dump());
        }
      }
      e.payload = std::move(p);
      break;
    }
    case EntryKind::rmatrix: {
      RMatrixEntry<S> r;
      r.host = c.bialgebra(io::string_member(j, "host"));
      const Index n2 = r.host.dim() * r.host.dim();
      r.r = {e.name, io::vec_from_json<S>(f, io::member(j, "R"), n2), io::vec_from_json<S>(f, io::member(j, "Rinv"), n2)};
      e.payload = std::move(r);
      break;
    }
    case EntryKind::functional: {
      FunctionalEntry<S> fe;
      fe.host = c.bialgebra(io::string_member(j, "host"));
      fe.f = make_functional(fe.host.coalgebra(), io::vec_from_json<S>(f, io::member(j, "coords"), fe.host.dim()));
      e.payload = std::move(fe);
      break;
    }
    case EntryKind::rbp_instance: {
      const ActionStructure<S>& mod = c.module(io::string_member(j, "module"));
      const Side side = parse_side(detail::side_of(j));
      const Index n = mod.algebra().dim(), m = mod.dim();
      e.payload = RbpInstance<S>(e.name, mod, side, io::dense_from_json<S>(f, io::member(j, "P"), n, n),
                                 io::dense_from_json<S>(f, io::member(j, "T"), m, m),
                                 io::scalar_from_json<S>(f, io::member(j, "weight")));
      break;
    }
  }
  return e;
}

/// Adds one entry or a list of entries; returns the names added.
template <class S>
std::vector<std::string> load_json(const io::json& j, Catalog<S>& c, const std::string& provenance = {}) {
  std::vector<std::string> names;
  if (j.is_array()) {
    for (const auto& x : j) names.push_back(c.add(entry_from_json(x, c, provenance)).name);
  } else {
    names.push_back(c.add(entry_from_json(j, c, provenance)).name);
  }
  return names;
}

template <class S>
std::vector<std::string> load_file(const std::string& path, Catalog<S>& c) {
  return load_json(io::read_file(path), c, "file " + path);
}

/// Field of the first structure declared in a JSON document (rational when none is).
FieldSpec declared_field(const io::json& j);

/// Built-in examples over Q, each validated as it is added.
Catalog<Rational> standard_catalog();

/// Left or right instance P = T = multiplication by a basis idempotent of M_2.
RbpInstance<Rational> mat2_projection_instance();

}  // namespace hopfrb

#endif  // HOPFRB_CATALOG_HPP
