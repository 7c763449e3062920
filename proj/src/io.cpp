#include "blockfact/io.hpp"

#include <fstream>
#include <sstream>

#include "blockfact/errors.hpp"
#include "blockfact/prng.hpp"

namespace blockfact {

namespace {

constexpr int kAlgebraVersion = 1;
constexpr int kComplexVersion = 1;

Rational rational_field(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) entries.push_back(render_rational(m.at(r, c)));
  j["entries"] = std::move(entries);
  return j;
}

Matrix matrix_from_json(const Json& j) {
  const int rows = int_field(j, "rows");
  const int cols = int_field(j, "cols");
  if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be non-negative");
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || int(entries.size()) != rows * cols)
    throw InputError("matrix entry list has the wrong length");
  Matrix m(rows, cols);
  int idx = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = rational_field(entries[idx++], "matrix entry");
  return m;
}

Json sparse_to_json(const SparseMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) {
      Json e;
      e["r"] = r;
      e["c"] = c;
      e["value"] = render_rational(v);
      entries.push_back(std::move(e));
    }
  j["entries"] = std::move(entries);
  return j;
}

SparseMatrix sparse_from_json(const Json& j) {
  const int rows = int_field(j, "rows");
  const int cols = int_field(j, "cols");
  if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be non-negative");
  SparseMatrix m(rows, cols);
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw InputError("sparse entries must be an array");
  for (const auto& e : entries) {
    const int r = int_field(e, "r"), c = int_field(e, "c");
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw InputError("sparse entry out of range");
    m.set(r, c, rational_field(field(e, "value"), "sparse entry"));
  }
  return m;
}

Json algebra_to_json(const Algebra& a) {
  Json j;
  j["format"] = "blockfact/algebra";
  j["version"] = kAlgebraVersion;
  j["dim"] = a.dim();
  j["labels"] = a.labels();
  Json unit = Json::array();
  for (const auto& u : a.unit()) unit.push_back(render_rational(u));
  j["unit"] = std::move(unit);
  Json table = Json::array();
  for (int i = 0; i < a.dim(); ++i)
    for (int jj = 0; jj < a.dim(); ++jj)
      for (const auto& [k, v] : a.product(i, jj)) {
        Json rec;
        rec["i"] = i;
        rec["j"] = jj;
        rec["k"] = k;
        rec["value"] = render_rational(v);
        table.push_back(std::move(rec));
      }
  j["table"] = std::move(table);
  return j;
}

Algebra algebra_from_json(const Json& j) {
  if (field(j, "format").get<std::string>() != "blockfact/algebra")
    throw InputError("not an algebra document");
  if (int_field(j, "version") != kAlgebraVersion)
    throw InputError("unsupported algebra format version");
  const int dim = int_field(j, "dim");
  if (dim < 1) throw InputError("algebra dimension must be positive");
  const Json& labels_j = field(j, "labels");
  if (!labels_j.is_array() || int(labels_j.size()) != dim)
    throw InputError("labels list must have one entry per basis element");
  std::vector<std::string> labels;
  for (const auto& l : labels_j) {
    if (!l.is_string()) throw InputError("labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  const Json& unit_j = field(j, "unit");
  if (!unit_j.is_array() || int(unit_j.size()) != dim)
    throw InputError("unit vector must have one entry per basis element");
  Vec unit(dim);
  for (int i = 0; i < dim; ++i) unit[i] = rational_field(unit_j[i], "unit entry");
  Algebra::Table table(dim, std::vector<SparseVec>(dim));
  const Json& table_j = field(j, "table");
  if (!table_j.is_array()) throw InputError("table must be an array of records");
  for (const auto& rec : table_j) {
    const int i = int_field(rec, "i"), jj = int_field(rec, "j"), k = int_field(rec, "k");
    if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim)
      throw InputError("table record index out of range");
    const Rational v = rational_field(field(rec, "value"), "table value");
    if (is_zero(v)) continue;
    table[i][jj].emplace_back(k, v);
  }
  for (auto& row : table)
    for (auto& entry : row) {
      std::sort(entry.begin(), entry.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t t = 1; t < entry.size(); ++t)
        if (entry[t].first == entry[t - 1].first)
          throw InputError("duplicate table record for one (i, j, k) triple");
    }
  return Algebra::create(std::move(labels), std::move(unit), std::move(table));
}

Json bimodule_to_json(const Bimodule& b) {
  Json j;
  j["dim"] = b.dim();
  Json left = Json::array(), right = Json::array();
  for (int i = 0; i < b.algebra().dim(); ++i) {
    left.push_back(sparse_to_json(b.left(i)));
    right.push_back(sparse_to_json(b.right(i)));
  }
  j["left"] = std::move(left);
  j["right"] = std::move(right);
  return j;
}

Bimodule bimodule_from_json(const Json& j, const Algebra& a) {
  const int dim = int_field(j, "dim");
  const Json& left_j = field(j, "left");
  const Json& right_j = field(j, "right");
  if (!left_j.is_array() || !right_j.is_array() || int(left_j.size()) != a.dim() ||
      int(right_j.size()) != a.dim())
    throw InputError("bimodule action lists must have one matrix per algebra basis element");
  std::vector<SparseMatrix> left, right;
  for (int i = 0; i < a.dim(); ++i) {
    left.push_back(sparse_from_json(left_j[i]));
    right.push_back(sparse_from_json(right_j[i]));
    if (left.back().rows() != dim || right.back().rows() != dim)
      throw InputError("bimodule action matrices disagree with the stated dimension");
  }
  return Bimodule(a, std::move(left), std::move(right));
}

Json complex_to_json(const ChainComplex& c) {
  Json j;
  j["format"] = "blockfact/complex";
  j["version"] = kComplexVersion;
  j["algebra"] = algebra_to_json(c.term(0).algebra());
  Json terms = Json::array();
  for (int i = 0; i < c.term_count(); ++i) terms.push_back(bimodule_to_json(c.term(i)));
  j["terms"] = std::move(terms);
  Json diffs = Json::array();
  for (int i = 0; i + 1 < c.term_count(); ++i) diffs.push_back(matrix_to_json(c.differential(i).map));
  j["differentials"] = std::move(diffs);
  j["target"] = bimodule_to_json(c.target());
  j["augmentation"] = matrix_to_json(c.augmentation().map);
  j["notes"] = c.notes();
  return j;
}

ChainComplex complex_from_json(const Json& j) {
  if (field(j, "format").get<std::string>() != "blockfact/complex")
    throw InputError("not a complex document");
  if (int_field(j, "version") != kComplexVersion)
    throw InputError("unsupported complex format version");
  const Algebra a = algebra_from_json(field(j, "algebra"));
  const Json& terms_j = field(j, "terms");
  if (!terms_j.is_array() || terms_j.empty()) throw InputError("complex needs at least one term");
  std::vector<Bimodule> terms;
  for (const auto& t : terms_j) terms.push_back(bimodule_from_json(t, a));
  const Json& diffs_j = field(j, "differentials");
  if (!diffs_j.is_array()) throw InputError("differentials must be an array");
  std::vector<Matrix> diffs;
  for (const auto& d : diffs_j) diffs.push_back(matrix_from_json(d));
  Bimodule target = bimodule_from_json(field(j, "target"), a);
  Matrix aug = matrix_from_json(field(j, "augmentation"));
  std::vector<std::string> notes;
  for (const auto& n : field(j, "notes")) notes.push_back(n.get<std::string>());
  return ChainComplex(std::move(terms), std::move(diffs), std::move(target), std::move(aug),
                      std::move(notes));
}

std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

Json parse_document(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(origin + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

std::string digest_string(const std::string& bytes) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a:%016llx",
                static_cast<unsigned long long>(fnv1a(bytes.data(), bytes.size())));
  return buf;
}

}  // namespace blockfact
