#include "tsg/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "toml.hpp"

namespace tsg::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

toml::table parse_toml(const std::string& text) {
  try {
    return toml::parse(text);
  } catch (const toml::parse_error& e) {
    std::ostringstream os;
    os << "TOML syntax error at line " << e.source().begin.line << ": " << e.description();
    bad(os.str());
  }
}

const toml::array& require_array(const toml::node* node, const std::string& what) {
  if (!node || !node->is_array()) bad(what + " must be an array");
  return *node->as_array();
}

long require_int(const toml::node* node, const std::string& what) {
  if (!node) bad("missing " + what);
  const auto v = node->value<std::int64_t>();
  if (!node->is_integer() || !v) bad(what + " must be an integer");
  return static_cast<long>(*v);
}

std::string require_string(const toml::node* node, const std::string& what) {
  if (!node || !node->is_string()) bad(what + " must be a string");
  return *node->value<std::string>();
}

Rational to_rational(const toml::node& node, const std::string& what) {
  if (node.is_integer()) return make_rational(static_cast<long>(*node.value<std::int64_t>()));
  if (node.is_string()) return parse_rational(*node.value<std::string>());
  bad(what + " must be a rational string or an integer");
}

Poly to_poly(const toml::node& node, std::size_t vars, const std::string& what) {
  if (node.is_integer()) return Poly::constant(vars, make_rational(static_cast<long>(*node.value<std::int64_t>())));
  if (node.is_string()) return parse_poly(*node.value<std::string>(), vars);
  bad(what + " must be a polynomial string or an integer");
}

// 1-based index in [1, bound] -> 0-based
int to_index(const toml::node& node, long bound, const std::string& what) {
  const long v = require_int(&node, what);
  if (v < 1 || v > bound) bad(what + " index " + std::to_string(v) + " out of range 1.." + std::to_string(bound));
  return static_cast<int>(v - 1);
}

RatMatrix to_matrix(const toml::node& node, int dim, const std::string& what) {
  const auto& rows = require_array(&node, what);
  if (static_cast<int>(rows.size()) != dim) bad(what + " must have " + std::to_string(dim) + " rows");
  RatMatrix m = zero_matrix(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const auto& row = require_array(rows.get(r), what + " row");
    if (static_cast<int>(row.size()) != dim) bad(what + " must have " + std::to_string(dim) + " columns");
    for (int c = 0; c < dim; ++c) m(r, c) = to_rational(*row.get(c), what + " entry");
  }
  return m;
}

// Shared reader for [[[i,j..], coeff], ...] entries.
template <class Set>
void read_form_entries(const toml::array& entries, int dim, int degree, Set&& set) {
  for (const auto& e : entries) {
    const auto& pair = require_array(&e, "form entry");
    if (pair.size() != 2) bad("form entry must be [[indices], coefficient]");
    const auto& idx = require_array(pair.get(0), "form indices");
    if (static_cast<int>(idx.size()) != degree)
      bad("form entry has " + std::to_string(idx.size()) + " indices, degree is " + std::to_string(degree));
    IndexTuple t;
    for (const auto& i : idx) t.push_back(to_index(i, dim, "form"));
    for (std::size_t q = 1; q < t.size(); ++q)
      if (t[q] <= t[q - 1]) bad("form indices must be strictly increasing");
    set(t, *pair.get(1));
  }
}

int read_degree(const toml::table& tbl) {
  if (!tbl.contains("degree")) return 2;
  const long k = require_int(tbl.get("degree"), "degree");
  if (k < 0) bad("degree must be nonnegative");
  return static_cast<int>(k);
}

std::filesystem::path dir_of(const std::string& path) { return std::filesystem::path(path).parent_path(); }

std::string resolve(const std::string& ref, const std::filesystem::path& base_dir) {
  if (ref.rfind("builtin:", 0) == 0 || base_dir.empty()) return ref;
  const std::filesystem::path p(ref);
  return p.is_absolute() ? ref : (base_dir / p).string();
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

std::string input_digest(const std::string& ref) {
  if (ref.rfind("builtin:", 0) == 0) return sha256_hex(ref);
  return sha256_hex(read_file(ref));
}

LieAlgebra parse_algebra(const std::string& text) {
  const toml::table tbl = parse_toml(text);
  const long dim = require_int(tbl.get("dim"), "dim");
  if (dim < 0) bad("dim must be nonnegative");
  std::vector<std::string> names;
  if (tbl.contains("basis")) {
    for (const auto& b : require_array(tbl.get("basis"), "basis")) names.push_back(require_string(&b, "basis name"));
    if (static_cast<long>(names.size()) != dim) bad("basis must list dim names");
  }
  LieAlgebra g(static_cast<int>(dim), names);
  if (tbl.contains("brackets")) {
    for (const auto& e : require_array(tbl.get("brackets"), "brackets")) {
      const auto& row = require_array(&e, "bracket entry");
      if (row.size() != 4) bad("bracket entry must be [i, j, k, coefficient]");
      const int i = to_index(*row.get(0), dim, "bracket");
      const int j = to_index(*row.get(1), dim, "bracket");
      const int k = to_index(*row.get(2), dim, "bracket");
      if (i >= j) bad("bracket entries need i < j");
      g.add_bracket(i, j, k, to_rational(*row.get(3), "bracket coefficient"));
    }
  }
  return g;
}

LieAlgebra load_algebra(const std::string& ref, const std::filesystem::path& base_dir) {
  if (ref.rfind("builtin:", 0) == 0) return catalog(ref.substr(8));
  return parse_algebra(read_file(resolve(ref, base_dir)));
}

AltForm parse_form(const std::string& text, int dim) {
  const toml::table tbl = parse_toml(text);
  if (tbl.contains("dim") && require_int(tbl.get("dim"), "dim") != dim)
    throw Error(ErrorKind::DimensionMismatch, "form file declares a different dimension");
  const int degree = read_degree(tbl);
  if (degree > dim) bad("form degree exceeds the dimension");
  AltForm f(dim, degree);
  if (tbl.contains("forms"))
    read_form_entries(require_array(tbl.get("forms"), "forms"), dim, degree,
                      [&](const IndexTuple& t, const toml::node& c) { f.add(t, to_rational(c, "form coefficient")); });
  return f;
}

AltForm load_form(const std::string& path, int dim) { return parse_form(read_file(path), dim); }

PolyAlgebroid parse_algebroid(const std::string& text, const std::filesystem::path& base_dir) {
  const toml::table tbl = parse_toml(text);
  if (tbl.contains("algebra")) {
    const LieAlgebra g = load_algebra(require_string(tbl.get("algebra"), "algebra"), base_dir);
    const long n = require_int(tbl.get("chart_dim"), "chart_dim");
    if (n < 0) bad("chart_dim must be nonnegative");
    const auto& rows = require_array(tbl.get("fields"), "fields");
    if (static_cast<int>(rows.size()) != g.dim()) bad("fields must have one row per basis element");
    std::vector<PolyVectorField> fields;
    for (const auto& r : rows) {
      const auto& comps = require_array(&r, "field");
      if (static_cast<long>(comps.size()) != n) bad("each field needs chart_dim components");
      PolyVectorField v = PolyVectorField::zero(n);
      for (long i = 0; i < n; ++i) v.components[i] = to_poly(*comps.get(i), n, "field component");
      fields.push_back(std::move(v));
    }
    return action_algebroid(g, fields);
  }
  const long r = require_int(tbl.get("rank"), "rank");
  const long n = require_int(tbl.get("chart_dim"), "chart_dim");
  if (r < 0 || n < 0) bad("rank and chart_dim must be nonnegative");
  PolyAlgebroid a(r, n);
  if (tbl.contains("anchor")) {
    const auto& rows = require_array(tbl.get("anchor"), "anchor");
    if (static_cast<long>(rows.size()) != r) bad("anchor must have rank rows");
    for (long q = 0; q < r; ++q) {
      const auto& comps = require_array(rows.get(q), "anchor row");
      if (static_cast<long>(comps.size()) != n) bad("anchor rows need chart_dim entries");
      for (long i = 0; i < n; ++i) a.set_anchor(q, i, to_poly(*comps.get(i), n, "anchor entry"));
    }
  } else if (n > 0) {
    bad("missing anchor");
  }
  if (tbl.contains("structure")) {
    for (const auto& e : require_array(tbl.get("structure"), "structure")) {
      const auto& row = require_array(&e, "structure entry");
      if (row.size() != 4) bad("structure entry must be [a, b, c, polynomial]");
      const int i = to_index(*row.get(0), r, "structure");
      const int j = to_index(*row.get(1), r, "structure");
      const int k = to_index(*row.get(2), r, "structure");
      if (i >= j) bad("structure entries need a < b");
      a.add_structure(i, j, k, to_poly(*row.get(3), n, "structure function"));
    }
  }
  return a;
}

PolyAlgebroid load_algebroid(const std::string& path) { return parse_algebroid(read_file(path), dir_of(path)); }

PolyAlgebroidForm parse_algebroid_form(const std::string& text, std::size_t rank, std::size_t chart_dim) {
  const toml::table tbl = parse_toml(text);
  const int degree = read_degree(tbl);
  if (static_cast<std::size_t>(degree) > rank) bad("form degree exceeds the rank");
  PolyAlgebroidForm f(rank, chart_dim, degree);
  if (tbl.contains("forms"))
    read_form_entries(require_array(tbl.get("forms"), "forms"), static_cast<int>(rank), degree,
                      [&](const IndexTuple& t, const toml::node& c) {
                        f.set(t, f.evaluate(t) + to_poly(c, chart_dim, "form coefficient"));
                      });
  return f;
}

PolyAlgebroidForm load_algebroid_form(const std::string& path, std::size_t rank, std::size_t chart_dim) {
  return parse_algebroid_form(read_file(path), rank, chart_dim);
}

GroupoidRealization parse_realization(const std::string& text) {
  const toml::table tbl = parse_toml(text);
  const std::string kind = require_string(tbl.get("kind"), "kind");
  const long n = require_int(tbl.get("chart_dim"), "chart_dim");
  if (n < 0) bad("chart_dim must be nonnegative");
  if (kind == "pair") return GroupoidRealization::pair(n);
  const MatrixGroupModel g = matrix_group(require_string(tbl.get("group"), "group"));
  if (kind == "mgm") return GroupoidRealization::mgm(n, g);
  if (kind != "action") bad("kind must be action, pair or mgm");
  const std::string act = tbl.contains("action") ? require_string(tbl.get("action"), "action") : "trivial";
  GroupAction ga;
  if (act == "trivial")
    ga = GroupAction::Trivial;
  else if (act == "linear")
    ga = GroupAction::Linear;
  else if (act == "affine")
    ga = GroupAction::Affine;
  else
    bad("action must be trivial, linear or affine");
  return GroupoidRealization::action(g, n, ga);
}

GroupoidRealization load_realization(const std::string& path) { return parse_realization(read_file(path)); }

SLGBSpec parse_slgb(const std::string& text, const std::filesystem::path& base_dir) {
  const toml::table tbl = parse_toml(text);
  SLGBSpec spec;
  spec.algebra = load_algebra(require_string(tbl.get("algebra"), "algebra"), base_dir);
  const int dim = spec.algebra.dim();
  spec.beta = AltForm(dim, 2);
  if (tbl.contains("beta"))
    read_form_entries(require_array(tbl.get("beta"), "beta"), dim, 2, [&](const IndexTuple& t, const toml::node& c) {
      spec.beta.add(t, to_rational(c, "beta coefficient"));
    });
  for (const auto& o : require_array(tbl.get("opens"), "opens")) spec.nerve.opens.push_back(require_string(&o, "open"));
  const long opens = static_cast<long>(spec.nerve.opens.size());
  auto open_index = [&](const toml::node& node) {
    const long v = require_int(&node, "open index");
    if (v < 0 || v >= opens) bad("open index " + std::to_string(v) + " out of range 0.." + std::to_string(opens - 1));
    return static_cast<std::size_t>(v);
  };
  auto points_of = [&](const toml::table& t) {
    std::vector<std::string> pts;
    if (t.contains("points"))
      for (const auto& p : require_array(t.get("points"), "points")) pts.push_back(require_string(&p, "point label"));
    return pts;
  };
  if (tbl.contains("overlaps")) {
    for (const auto& e : require_array(tbl.get("overlaps"), "overlaps")) {
      if (!e.is_table()) bad("overlap entries must be tables");
      const toml::table& t = *e.as_table();
      const auto& ids = require_array(t.get("pair"), "pair");
      if (ids.size() != 2) bad("pair needs two open indices");
      PairOverlap ov{open_index(*ids.get(0)), open_index(*ids.get(1)), points_of(t)};
      if (t.contains("maps")) {
        const toml::node* maps = t.get("maps");
        if (!maps->is_table()) bad("maps must be a table keyed by point label");
        for (const auto& [label, m] : *maps->as_table()) {
          const std::string p(label.str());
          if (std::find(ov.points.begin(), ov.points.end(), p) == ov.points.end())
            bad("map given at point '" + p + "' which is not listed in the overlap");
          spec.transitions.set(ov.i, ov.j, p, to_matrix(m, dim, "transition map"));
        }
      }
      spec.nerve.pairs.push_back(std::move(ov));
    }
  }
  if (tbl.contains("triples")) {
    for (const auto& e : require_array(tbl.get("triples"), "triples")) {
      if (!e.is_table()) bad("triple entries must be tables");
      const toml::table& t = *e.as_table();
      const auto& ids = require_array(t.get("ids"), "ids");
      if (ids.size() != 3) bad("ids needs three open indices");
      spec.nerve.triples.push_back({open_index(*ids.get(0)), open_index(*ids.get(1)), open_index(*ids.get(2)), points_of(t)});
    }
  }
  return spec;
}

SLGBSpec load_slgb(const std::string& path) { return parse_slgb(read_file(path), dir_of(path)); }

}  // namespace tsg::io
