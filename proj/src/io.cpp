#include "liechar/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

namespace liechar {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << text;
}

namespace {

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(offset, text.size()); ++i) {
    if (text[i] == '\n') ++line, col = 1;
    else ++col;
  }
  return {line, col};
}

[[noreturn]] void parse_error(const std::string& source, std::size_t line, std::size_t col, const std::string& what) {
  throw Error(ErrorCode::ParseError, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
}

// Field access for artifacts; structural problems raise `code`.
const Json& field(const Json& j, const char* key, ErrorCode code) {
  if (!j.is_object() || !j.contains(key)) throw Error(code, std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T get(const Json& j, const char* what, ErrorCode code) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(code, std::string("field '") + what + "' has the wrong type");
  }
}

std::size_t parse_index(const std::string& key, ErrorCode code) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != key.size()) throw Error(code, "'" + key + "' is not an index");
  return static_cast<std::size_t>(v);
}

Json int_matrix(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

IntMatrix int_matrix_from(const Json& j, const char* what, ErrorCode code) {
  auto rows = get<std::vector<std::vector<std::int64_t>>>(j, what, code);
  if (rows.empty()) throw Error(code, std::string("'") + what + "' is empty");
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw Error(code, std::string("'") + what + "' is ragged");
    for (std::size_t k = 0; k < rows[i].size(); ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k];
  }
  return m;
}

Json weight_json(const Weight& w) { return Json(std::vector<std::int64_t>(w.data(), w.data() + w.size())); }

Weight weight_from(const Json& j, ErrorCode code) {
  auto v = get<std::vector<std::int64_t>>(j, "weight", code);
  Weight w(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) w[static_cast<Eigen::Index>(i)] = v[i];
  return w;
}

Json torus_json(const TorusElement& t) { return Json(t.to_strings()); }

TorusElement torus_from(const Json& j, int rank, ErrorCode code) {
  auto coords = get<std::vector<std::string>>(j, "rep", code);
  if (static_cast<int>(coords.size()) != rank) throw Error(code, "representative has the wrong rank");
  std::vector<Rational> values;
  for (const auto& c : coords) values.push_back(parse_rational(c));
  return TorusElement::from_fractions(values);
}

std::string weight_text(const Weight& w) { return format_row(w, ","); }

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    auto cut = what.find("; ");
    parse_error(source, line, col, cut == std::string::npos ? what : what.substr(cut + 2));
  }
}

namespace {

// Containers whose compact form fits on one line stay on one line.
void write_json(std::string& out, const Json& j, int indent) {
  constexpr std::size_t width = 100;
  std::string compact = j.dump();
  if (!j.is_structured() || j.empty() || compact.size() + static_cast<std::size_t>(indent) <= width) {
    out += compact;
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  out += j.is_array() ? "[\n" : "{\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (j.is_object()) out += Json(it.key()).dump() + ": ";
    write_json(out, *it, indent + 2);
  }
  out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + (j.is_array() ? "]" : "}");
}

}  // namespace

std::string dump_json(const Json& j) {
  std::string out;
  write_json(out, j, 0);
  return out + "\n";
}

Json to_json(const RootDatum& datum) {
  Json j;
  j["type"] = datum.type();
  j["cartan"] = int_matrix(datum.cartan());
  j["twist"] = int_matrix(datum.twist());
  return j;
}

DatumPtr datum_from_json(const Json& j) {
  const ErrorCode code = ErrorCode::ParseError;
  IntMatrix cartan = int_matrix_from(field(j, "cartan", code), "cartan", code);
  IntMatrix twist = j.contains("twist") ? int_matrix_from(j.at("twist"), "twist", code) : IntMatrix();
  auto datum = RootDatum::build(cartan, twist);
  if (j.contains("type") && get<std::string>(j.at("type"), "type", code) != datum->type())
    throw Error(code, "datum type " + j.at("type").get<std::string>() + " does not match its Cartan matrix (" +
                          datum->type() + ")");
  return datum;
}

Json to_json(const Cyclotomic& x) {
  Json terms = Json::object();
  for (const auto& [e, c] : x.terms()) terms[std::to_string(e)] = to_string(c);
  return Json::array({x.conductor(), terms});
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  const ErrorCode code = ErrorCode::SchemaError;
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_object())
    throw Error(code, "cyclotomic value must be [n, {exponent: coefficient}]: " + j.dump());
  const auto n = j[0].get<std::int64_t>();
  std::map<std::int64_t, Rational> terms;
  for (const auto& [e, c] : j[1].items()) {
    std::int64_t exp = 0;
    try {
      std::size_t pos = 0;
      exp = std::stoll(e, &pos);
      if (pos != e.size()) throw std::invalid_argument(e);
    } catch (const std::exception&) {
      throw Error(code, "bad exponent '" + e + "'");
    }
    terms[exp] += c.is_string() ? parse_rational(c.get<std::string>()) : Rational(get<std::int64_t>(c, "coefficient", code));
  }
  return Cyclotomic::from_terms(n, terms);
}

Json to_json(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return Json(static_cast<std::uint64_t>(x));
  if (x < 0 && x >= std::numeric_limits<std::int64_t>::min()) return Json(static_cast<std::int64_t>(x));
  return Json(x.str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
      throw Error(ErrorCode::SchemaError, "'" + s + "' is not an integer");
    return BigInt(s);
  }
  throw Error(ErrorCode::SchemaError, "expected an integer, got " + j.dump());
}

// ---------------------------------------------------------------- library

std::string serialize_library_entry(const DominantCharacter& character, std::int64_t p) {
  const RootDatum& d = character.datum();
  std::ostringstream out;
  bool standard = false;
  try {
    standard = cartan_matrix(d.type()) == d.cartan();
  } catch (const Error&) {
  }
  if (standard) {
    out << "# datum " << d.type() << "\n";
  } else {
    out << "# cartan ";
    for (Eigen::Index i = 0; i < d.rank(); ++i) out << (i ? ";" : "") << weight_text(d.cartan().row(i));
    out << "\n";
  }
  out << "# p " << p << "\n";
  if (character.label()) out << "# highest " << weight_text(*character.label()) << "\n";
  std::vector<std::pair<Weight, std::int64_t>> rows(character.entries().begin(), character.entries().end());
  std::reverse(rows.begin(), rows.end());
  for (const auto& [mu, m] : rows) out << weight_text(mu) << " : " << m << "\n";
  return out.str();
}

LibraryEntry parse_library_entry(const std::string& text, const std::string& source) {
  DatumPtr datum;
  std::optional<std::int64_t> p;
  std::optional<Weight> label;
  WeightMultiset entries;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto parse_weight = [&](const std::string& s, std::size_t col) {
    try {
      return parse_row(s);
    } catch (const Error&) {
      parse_error(source, lineno, col, "'" + s + "' is not a weight");
    }
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream h(line.substr(1));
      std::string key, value;
      h >> key >> value;
      const std::size_t col = line.find(value) + 1;
      if (key == "datum") {
        std::string twist_key, twist;
        h >> twist_key >> twist;
        try {
          if (twist_key == "twist") {
            std::vector<int> perm;
            for (auto x : parse_weight(twist, line.rfind(twist) + 1)) perm.push_back(static_cast<int>(x));
            datum = make_datum(value, perm);
          } else {
            datum = make_datum(value);
          }
        } catch (const Error& e) {
          parse_error(source, lineno, col, e.what());
        }
      } else if (key == "cartan") {
        std::vector<std::vector<std::int64_t>> rows;
        std::istringstream r(value);
        std::string row;
        while (std::getline(r, row, ';')) {
          Weight w = parse_weight(row, col);
          rows.emplace_back(w.data(), w.data() + w.size());
        }
        try {
          datum = RootDatum::build(int_matrix_from(Json(rows), "cartan", ErrorCode::ParseError));
        } catch (const Error& e) {
          parse_error(source, lineno, col, e.what());
        }
      } else if (key == "p") {
        try {
          p = std::stoll(value);
        } catch (const std::exception&) {
          parse_error(source, lineno, col, "bad characteristic '" + value + "'");
        }
      } else if (key == "highest") {
        label = parse_weight(value, col);
      }
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) parse_error(source, lineno, 1, "expected 'weight : multiplicity'");
    std::string key = line.substr(0, colon);
    key.erase(key.find_last_not_of(" \t") + 1);
    // Keys may also be written space-separated: "a1 a2 a3 a4 : m".
    if (key.find(',') == std::string::npos) {
      std::istringstream parts(key);
      std::string part, joined;
      while (parts >> part) joined += (joined.empty() ? "" : ",") + part;
      key = joined;
    }
    Weight mu = parse_weight(key, 1);
    if (!datum) parse_error(source, lineno, 1, "weight before the datum header");
    if (mu.size() != datum->rank()) parse_error(source, lineno, 1, "key " + key + " has the wrong rank");
    if (!is_dominant(mu)) parse_error(source, lineno, 1, "key " + key + " is not dominant");
    if (entries.count(mu)) parse_error(source, lineno, 1, "key " + key + " is repeated");
    const std::string rest = line.substr(colon + 1);
    std::int64_t m = 0;
    std::size_t pos = 0;
    try {
      m = std::stoll(rest, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || rest.find_first_not_of(" \t", pos) != std::string::npos || m <= 0)
      parse_error(source, lineno, colon + 2, "bad multiplicity for key " + key);
    entries.emplace(std::move(mu), m);
  }
  if (!datum) parse_error(source, 1, 1, "missing '# datum' header");
  if (!p) parse_error(source, 1, 1, "missing '# p' header");
  if (label && label->size() != datum->rank()) parse_error(source, 1, 1, "highest weight has the wrong rank");
  try {
    return {datum, *p, DominantCharacter(datum, std::move(entries), label)};
  } catch (const Error& e) {
    parse_error(source, 1, 1, e.what());
  }
}

CharacterLibrary load_library(const fs::path& path) {
  std::vector<fs::path> files;
  if (fs::is_directory(path) && fs::exists(path / "index.txt")) {
    std::istringstream index(read_file(path / "index.txt"));
    std::string name;
    while (std::getline(index, name))
      if (!name.empty()) files.push_back(path / name);
  } else if (fs::is_directory(path)) {
    for (const auto& e : fs::directory_iterator(path))
      if (e.is_regular_file() && e.path().extension() == ".txt") files.push_back(e.path());
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  if (files.empty()) throw Error(ErrorCode::InvalidArgument, "no library entries in " + path.string());
  std::optional<CharacterLibrary> lib;
  for (const auto& f : files) {
    auto entry = parse_library_entry(read_file(f), f.string());
    if (!entry.character.label())
      throw Error(ErrorCode::ParseError, f.string() + ": missing '# highest' header");
    if (!lib) lib.emplace(entry.datum, entry.p);
    if (lib->characteristic() != entry.p || lib->datum().cartan() != entry.datum->cartan())
      throw Error(ErrorCode::ParseError, f.string() + ": datum or characteristic differs from the other entries");
    // Entries share the first datum so characters combine.
    lib->insert(DominantCharacter(lib->datum_ptr(), entry.character.entries(), entry.character.label()));
  }
  return std::move(*lib);
}

void save_library(const CharacterLibrary& library, const fs::path& dir) {
  fs::create_directories(dir);
  std::string index;
  for (const auto& [lambda, c] : library.entries()) {
    const std::string name = format_row(lambda, "_") + ".txt";
    write_file(dir / name, serialize_library_entry(c, library.characteristic()));
    index += name + "\n";
  }
  write_file(dir / "index.txt", index);
}

// ---------------------------------------------------------------- classes

Json to_json(const ClassList& list) {
  Json j;
  j["datum"] = to_json(*list.datum);
  j["q"] = list.q;
  j["p"] = list.p;
  j["group_order"] = to_json(list.group_order);
  j["center"] = list.center;
  Json classes = Json::array();
  for (const auto& c : list.classes) {
    Json x;
    x["rep"] = torus_json(c.rep);
    x["order"] = c.order;
    x["orbit_size"] = c.orbit_size;
    x["centralizer_order"] = to_json(c.centralizer_order);
    x["subsystem_type"] = c.subsystem_type;
    x["centralizer_type"] = c.centralizer_type;
    Json power = Json::object(), central = Json::object();
    for (const auto& [k, i] : c.power_map) power[std::to_string(k)] = i;
    for (const auto& [z, i] : c.central_translates) central[std::to_string(z)] = i;
    x["power"] = power;
    x["central"] = central;
    classes.push_back(x);
  }
  j["classes"] = classes;
  return j;
}

ClassList classes_from_json(const Json& j) {
  const ErrorCode code = ErrorCode::ParseError;
  ClassList list;
  list.datum = datum_from_json(field(j, "datum", code));
  list.q = get<std::int64_t>(field(j, "q", code), "q", code);
  list.p = get<std::int64_t>(field(j, "p", code), "p", code);
  list.group_order = bigint_from_json(field(j, "group_order", code));
  const auto& arr = field(j, "classes", code);
  if (!arr.is_array() || arr.empty()) throw Error(code, "'classes' must be a non-empty array");
  const std::size_t n = arr.size();
  std::vector<SemisimpleClass> raw(n);
  auto index = [&](const Json& v) {
    auto i = get<std::size_t>(v, "class index", code);
    if (i >= n) throw Error(code, "class index " + std::to_string(i) + " out of range");
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = arr[i];
    auto& c = raw[i];
    c.rep = torus_from(field(x, "rep", code), list.datum->rank(), code);
    c.order = get<std::int64_t>(field(x, "order", code), "order", code);
    if (c.order != c.rep.order) throw Error(code, "class " + format_torus(c.rep) + " has the wrong order");
    c.orbit_size = get<std::size_t>(field(x, "orbit_size", code), "orbit_size", code);
    c.centralizer_order = bigint_from_json(field(x, "centralizer_order", code));
    c.subsystem_type = get<std::string>(field(x, "subsystem_type", code), "subsystem_type", code);
    c.centralizer_type = get<std::string>(field(x, "centralizer_type", code), "centralizer_type", code);
    for (const auto& [k, v] : field(x, "power", code).items())
      c.power_map[static_cast<std::int64_t>(parse_index(k, code))] = index(v);
    for (const auto& [z, v] : field(x, "central", code).items()) c.central_translates[parse_index(z, code)] = index(v);
    for (const auto& [z, v] : c.central_translates)
      if (z >= n) throw Error(code, "central class index out of range");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (raw[a].order != raw[b].order) return raw[a].order < raw[b].order;
    return torus_less(raw[a].rep, raw[b].rep);
  });
  std::vector<std::size_t> where(n);
  for (std::size_t k = 0; k < n; ++k) where[order[k]] = k;
  for (std::size_t k = 0; k < n; ++k) {
    SemisimpleClass c = raw[order[k]];
    for (auto& [prime, i] : c.power_map) i = where[i];
    std::map<std::size_t, std::size_t> central;
    for (const auto& [z, i] : c.central_translates) central[where[z]] = where[i];
    c.central_translates = std::move(central);
    list.classes.push_back(std::move(c));
  }
  for (const auto& v : field(j, "center", code)) list.center.push_back(where[index(v)]);
  std::sort(list.center.begin(), list.center.end());
  list.reindex();
  return list;
}

// ---------------------------------------------------------------- Brauer

Json to_json(const BrauerTable& table) {
  Json j;
  j["datum"] = to_json(*table.datum);
  j["p"] = table.p;
  j["q"] = table.q;
  Json labels = Json::array(), reps = Json::array(), values = Json::array();
  for (const auto& l : table.labels) labels.push_back(weight_json(l));
  for (const auto& t : table.classes) reps.push_back(torus_json(t));
  for (Eigen::Index i = 0; i < table.values.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < table.values.cols(); ++k) row.push_back(to_json(table.values(i, k)));
    values.push_back(row);
  }
  j["labels"] = labels;
  j["classes"] = table.class_ids;
  j["reps"] = reps;
  j["values"] = values;
  return j;
}

BrauerTable brauer_table_from_json(const Json& j) {
  const ErrorCode code = ErrorCode::ParseError;
  BrauerTable t;
  t.datum = datum_from_json(field(j, "datum", code));
  t.p = get<std::int64_t>(field(j, "p", code), "p", code);
  t.q = get<std::int64_t>(field(j, "q", code), "q", code);
  for (const auto& l : field(j, "labels", code)) {
    t.labels.push_back(weight_from(l, code));
    if (t.labels.back().size() != t.datum->rank()) throw Error(code, "label has the wrong rank");
  }
  for (const auto& r : field(j, "reps", code)) t.classes.push_back(torus_from(r, t.datum->rank(), code));
  t.class_ids = get<std::vector<std::size_t>>(field(j, "classes", code), "classes", code);
  if (t.class_ids.size() != t.classes.size()) throw Error(code, "'classes' and 'reps' differ in length");
  const auto& values = field(j, "values", code);
  if (values.size() != t.labels.size()) throw Error(code, "one value row per label expected");
  t.values = CycMatrix(static_cast<Eigen::Index>(t.labels.size()), static_cast<Eigen::Index>(t.classes.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].size() != t.classes.size()) throw Error(code, "value row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < values[i].size(); ++k) {
      try {
        t.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = cyclotomic_from_json(values[i][k]);
      } catch (const Error& e) {
        throw Error(code, e.what());
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------- abstract tables

Json to_json(const AbstractTable& table) {
  Json j;
  if (table.p_hint) j["p_hint"] = *table.p_hint;
  Json classes = Json::array();
  for (const auto& c : table.classes) {
    Json x;
    x["name"] = c.name;
    x["order"] = c.order;
    x["centralizer"] = to_json(c.centralizer);
    Json power = Json::object();
    for (const auto& [k, i] : c.power) power[std::to_string(k)] = i;
    x["power"] = power;
    if (c.central) {
      Json central = Json::object();
      for (const auto& [z, i] : *c.central) central[std::to_string(z)] = i;
      x["central"] = central;
    }
    classes.push_back(x);
  }
  j["classes"] = classes;
  Json chars = Json::array();
  for (const auto& chi : table.chars) {
    Json row = Json::array();
    for (const auto& v : chi) row.push_back(to_json(v));
    chars.push_back(row);
  }
  j["chars"] = chars;
  j["automorphisms"] = table.automorphisms;
  return j;
}

AbstractTable abstract_table_from_json(const Json& j) {
  const ErrorCode code = ErrorCode::SchemaError;
  AbstractTable t;
  if (j.contains("p_hint") && !j.at("p_hint").is_null()) t.p_hint = get<std::int64_t>(j.at("p_hint"), "p_hint", code);
  const auto& classes = field(j, "classes", code);
  if (!classes.is_array()) throw Error(code, "'classes' must be an array");
  for (const auto& x : classes) {
    AbstractClass c;
    c.name = get<std::string>(field(x, "name", code), "name", code);
    c.order = get<std::int64_t>(field(x, "order", code), "order", code);
    c.centralizer = bigint_from_json(field(x, "centralizer", code));
    if (x.contains("power"))
      for (const auto& [k, v] : x.at("power").items())
        c.power[static_cast<std::int64_t>(parse_index(k, code))] = get<std::size_t>(v, "power", code);
    if (x.contains("central")) {
      c.central.emplace();
      for (const auto& [z, v] : x.at("central").items()) (*c.central)[parse_index(z, code)] = get<std::size_t>(v, "central", code);
    }
    t.classes.push_back(std::move(c));
  }
  const auto& chars = field(j, "chars", code);
  if (!chars.is_array()) throw Error(code, "'chars' must be an array");
  for (const auto& row : chars) {
    if (!row.is_array()) throw Error(code, "character must be an array");
    std::vector<Cyclotomic> values;
    for (const auto& v : row) values.push_back(cyclotomic_from_json(v));
    t.chars.push_back(std::move(values));
  }
  if (j.contains("automorphisms"))
    t.automorphisms = get<std::vector<std::vector<std::size_t>>>(j.at("automorphisms"), "automorphisms", code);
  t.validate();
  return t;
}

Json to_json(const MatchReport& report, const AbstractTable& table) {
  Json j;
  j["candidates"] = report.candidates;
  j["valid"] = report.filter.survivors.size();
  j["representatives"] = report.filter.representatives.size();
  Json survivors = Json::array();
  for (std::size_t s = 0; s < report.filter.survivors.size(); ++s) {
    const std::size_t k = report.filter.survivors[s];
    Json x;
    x["candidate"] = k;
    std::vector<std::string> names;
    for (std::size_t a : report.identifications[k]) names.push_back(table.classes[a].name);
    x["classes"] = names;
    x["representative"] = std::find(report.filter.representatives.begin(), report.filter.representatives.end(), k) !=
                          report.filter.representatives.end();
    const auto& d = report.filter.matrices[s].entries;
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < d.rows(); ++r) {
      Json row = Json::array();
      for (Eigen::Index c = 0; c < d.cols(); ++c) row.push_back(to_json(BigInt(boost::multiprecision::numerator(d(r, c)))));
      rows.push_back(row);
    }
    x["decomposition"] = rows;
    survivors.push_back(x);
  }
  j["survivors"] = survivors;
  return j;
}

std::string canonical_form(const std::string& text, const std::string& source) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '#') {
    auto entry = parse_library_entry(text, source);
    return serialize_library_entry(entry.character, entry.p);
  }
  const Json j = parse_json(text, source);
  if (j.contains("chars")) return dump_json(to_json(abstract_table_from_json(j)));
  if (j.contains("values")) return dump_json(to_json(brauer_table_from_json(j)));
  if (j.contains("group_order")) return dump_json(to_json(classes_from_json(j)));
  throw Error(ErrorCode::ParseError, source + ": unrecognized artifact");
}

}  // namespace liechar
