// JSON encodings of fields, scalars and structure-constant tables.
//
// Sparse tables are lists of {"i","j","k","c"} records; omitted entries are
// zero. Dense matrices are row-major lists of scalar strings.
#ifndef HOPFRB_IO_HPP
#define HOPFRB_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "hopfrb/linalg.hpp"

namespace hopfrb::io {

using json = nlohmann::json;

json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const json& j);

/// Reads a whole file as JSON; throws ParseError with the path on failure.
json read_file(const std::string& path);

/// Member lookup that reports the missing key instead of throwing a json error.
const json& member(const json& j, const char* key);
Index index_member(const json& j, const char* key);
std::string string_member(const json& j, const char* key);
std::vector<std::string> labels_member(const json& j, const char* key, Index expected);

template <class S>
S scalar_from_json(const FieldSpec& f, const json& j) {
  if (j.is_string()) return parse_scalar<S>(f, j.get<std::string>());
  if (j.is_number_integer()) return scalar<S>(f, j.get<long>());
  throw ParseError("expected a scalar string, got " + j.dump());
}

template <class S>
json vec_to_json(const Vec<S>& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

template <class S>
Vec<S> vec_from_json(const FieldSpec& f, const json& j, Index expected) {
  if (!j.is_array() || static_cast<Index>(j.size()) != expected)
    throw ParseError("expected a list of " + std::to_string(expected) + " scalars");
  Vec<S> out(expected);
  for (Index i = 0; i < expected; ++i) out(i) = scalar_from_json<S>(f, j[static_cast<std::size_t>(i)]);
  bind(out, f.tag());
  return out;
}

template <class S>
json dense_to_json(const Mat<S>& m) {
  json out = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

template <class S>
Mat<S> dense_from_json(const FieldSpec& f, const json& j, Index rows, Index cols) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows)
    throw ParseError("expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  Mat<S> out(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) throw ParseError("matrix row " + std::to_string(r) + " has the wrong length");
    for (Index c = 0; c < cols; ++c) out(r, c) = scalar_from_json<S>(f, row[static_cast<std::size_t>(c)]);
  }
  bind(out, f.tag());
  return out;
}

/// How (i, j, k) addresses a table entry.
enum class Layout {
  output_row,     // table(k, i*inner + j): products and left actions
  output_row_ji,  // table(k, j*inner + i): right actions, i the algebra index
  input_col,      // table(i*inner + j, k): coproducts and coactions
};

template <class S>
json sparse_to_json(const Mat<S>& t, Layout layout, Index inner) {
  json out = json::array();
  const auto emit = [&](Index i, Index j, Index k, const S& c) {
    if (!c.is_zero()) out.push_back({{"i", i}, {"j", j}, {"k", k}, {"c", to_string(c)}});
  };
  switch (layout) {
    case Layout::output_row:
      for (Index col = 0; col < t.cols(); ++col)
        for (Index k = 0; k < t.rows(); ++k) emit(col / inner, col % inner, k, t(k, col));
      break;
    case Layout::output_row_ji: {
      // sort by algebra index first so that dumps read like the other layouts
      const Index outer = inner == 0 ? 0 : t.cols() / inner;
      for (Index i = 0; i < inner; ++i)
        for (Index j = 0; j < outer; ++j)
          for (Index k = 0; k < t.rows(); ++k) emit(i, j, k, t(k, j * inner + i));
      break;
    }
    case Layout::input_col:
      for (Index k = 0; k < t.cols(); ++k)
        for (Index row = 0; row < t.rows(); ++row) emit(row / inner, row % inner, k, t(row, k));
      break;
  }
  return out;
}

template <class S>
Mat<S> sparse_from_json(const FieldSpec& f, const json& j, Layout layout, Index rows, Index cols, Index inner) {
  if (!j.is_array()) throw ParseError("expected a list of {i,j,k,c} entries");
  Mat<S> out = zeros<S>(f, rows, cols);
  const Index outer_rows = layout == Layout::input_col ? rows : cols;
  const Index outer = inner == 0 ? 0 : outer_rows / inner;
  const Index kmax = layout == Layout::input_col ? cols : rows;
  for (const json& e : j) {
    const Index i = index_member(e, "i"), jj = index_member(e, "j"), k = index_member(e, "k");
    const S c = scalar_from_json<S>(f, member(e, "c"));
    const bool ok = layout == Layout::output_row_ji ? (i < inner && jj < outer) : (i < outer && jj < inner);
    if (!ok || k >= kmax) throw ParseError("entry index out of range: " + e.dump());
    switch (layout) {
      case Layout::output_row:
        out(k, i * inner + jj) += c;
        break;
      case Layout::output_row_ji:
        out(k, jj * inner + i) += c;
        break;
      case Layout::input_col:
        out(i * inner + jj, k) += c;
        break;
    }
  }
  return out;
}

}  // namespace hopfrb::io

#endif  // HOPFRB_IO_HPP
