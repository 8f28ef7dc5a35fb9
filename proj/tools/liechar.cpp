#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "liechar/io.hpp"
#include "liechar/parallel.hpp"
#include "liechar/steinberg.hpp"
#include "liechar/weyl_orbits.hpp"

using namespace liechar;
namespace fs = std::filesystem;

namespace {

struct DatumOptions {
  std::string type;
  std::string cartan;
  std::string twist;

  void add(CLI::App* app) {
    app->add_option("--type", type, "Dynkin type, e.g. D4 or A2+A1")->check(CLI::Validator(
        [](std::string& s) -> std::string {
          try {
            cartan_matrix(s);
            return {};
          } catch (const Error&) {
            return "unknown type '" + s + "'";
          }
        },
        "TYPE", "type"));
    app->add_option("--cartan", cartan, "Cartan matrix rows separated by ';', e.g. 2,-1;-1,2");
    app->add_option("--twist", twist, "F0 as a permutation of the simple roots, e.g. 2,1,3,4, or a matrix on X");
  }

  static IntMatrix parse_matrix(const std::string& text, const char* option) {
    std::vector<IntRow> rows;
    std::istringstream in(text);
    std::string row;
    while (std::getline(in, row, ';')) rows.push_back(parse_row(row));
    IntMatrix m(static_cast<Eigen::Index>(rows.size()), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols()) throw CLI::ValidationError(option, "matrix is ragged");
      m.row(static_cast<Eigen::Index>(i)) = rows[i];
    }
    return m;
  }

  // A permutation "2,1,3,4" or a full matrix on X with rows separated by ';'.
  IntMatrix twist_matrix(Eigen::Index rank) const {
    if (twist.empty()) return IntMatrix();
    IntMatrix f;
    if (twist.find(';') != std::string::npos) {
      f = parse_matrix(twist, "--twist");
    } else {
      IntRow row = parse_row(twist);
      std::vector<int> perm(row.data(), row.data() + row.size());
      f = permutation_twist(perm);
    }
    if (f.rows() != rank || f.cols() != rank)
      throw Error(ErrorCode::TwistIncompatible, "twist size does not match the rank");
    return f;
  }

  DatumPtr datum() const {
    if (type.empty() == cartan.empty()) throw CLI::ValidationError("--type/--cartan", "give exactly one of them");
    IntMatrix c = type.empty() ? parse_matrix(cartan, "--cartan") : cartan_matrix(type);
    return RootDatum::build(c, twist_matrix(c.rows()));
  }

  bool given() const { return !type.empty() || !cartan.empty(); }
};

struct Output {
  std::string format = "text";
  std::string out;

  void emit(const std::string& text) const {
    if (out.empty()) std::cout << text;
    else write_file(out, text);
  }
  void emit(const Json& j, const std::string& text) const { emit(format == "json" ? dump_json(j) : text); }
};

std::string lines(const std::vector<std::string>& rows) {
  std::string s;
  for (const auto& r : rows) s += r + "\n";
  return s;
}

Json weight_json(const Weight& w) { return Json(std::vector<std::int64_t>(w.data(), w.data() + w.size())); }

std::string matrix_text(const IntMatrix& m, const std::string& indent) {
  std::string s;
  for (Eigen::Index i = 0; i < m.rows(); ++i) s += indent + format_row(m.row(i), " ") + "\n";
  return s;
}

// Library entries rebuilt on `datum` (same Cartan matrix, possibly twisted).
CharacterLibrary on_datum(const CharacterLibrary& lib, const DatumPtr& datum) {
  if (datum->cartan() != lib.datum().cartan())
    throw Error(ErrorCode::InvalidArgument, "library datum " + lib.datum().type() + " differs from " + datum->type());
  CharacterLibrary out(datum, lib.characteristic());
  for (const auto& [lambda, c] : lib.entries()) out.insert(DominantCharacter(datum, c.entries(), lambda));
  return out;
}

Json character_json(const DominantCharacter& c) {
  Json rows = Json::array();
  for (auto it = c.entries().rbegin(); it != c.entries().rend(); ++it) {
    Json r;
    r["weight"] = weight_json(it->first);
    r["multiplicity"] = it->second;
    r["orbit"] = to_json(orbit_length(c.datum(), it->first));
    rows.push_back(r);
  }
  Json j;
  j["dimension"] = to_json(dimension(c));
  j["entries"] = rows;
  return j;
}

std::string character_text(const DominantCharacter& c) {
  std::vector<std::string> rows;
  for (auto it = c.entries().rbegin(); it != c.entries().rend(); ++it)
    rows.push_back(format_row(it->first) + " : " + std::to_string(it->second) + " (orbit " +
                   orbit_length(c.datum(), it->first).str() + ")");
  rows.push_back("dimension " + dimension(c).str());
  return lines(rows);
}

Json multiset_json(const WeightMultiset& m) {
  Json rows = Json::array();
  for (auto it = m.rbegin(); it != m.rend(); ++it) rows.push_back(Json::array({weight_json(it->first), it->second}));
  return rows;
}

std::string multiset_text(const WeightMultiset& m) {
  std::vector<std::string> rows;
  for (auto it = m.rbegin(); it != m.rend(); ++it) rows.push_back(format_row(it->first) + " : " + std::to_string(it->second));
  return lines(rows);
}

std::int64_t smallest_prime_factor(std::int64_t q) {
  auto f = prime_factors(q);
  if (f.empty()) throw CLI::ValidationError("--q", "must be a prime power");
  return f.front();
}

std::map<std::size_t, std::size_t> parse_pins(const std::vector<std::string>& pins, const AbstractTable& table) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& pin : pins) {
    const auto eq = pin.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--pin", "expected computed=abstract, got '" + pin + "'");
    const std::string lhs = pin.substr(0, eq), rhs = pin.substr(eq + 1);
    std::size_t a = table.classes.size();
    for (std::size_t k = 0; k < table.classes.size(); ++k)
      if (table.classes[k].name == rhs) a = k;
    try {
      if (a == table.classes.size()) a = std::stoul(rhs);
      out[std::stoul(lhs)] = a;
    } catch (const std::exception&) {
      throw CLI::ValidationError("--pin", "bad pin '" + pin + "'");
    }
  }
  return out;
}

MatchReport run_match(const ClassList& classes, const AbstractTable& table, const BrauerTable& brauer,
                      const std::map<std::size_t, std::size_t>& pins, std::size_t cap) {
  MatchReport report;
  report.identifications = candidate_identifications(classes, table, classes.p, pins, cap);
  report.candidates = report.identifications.size();
  report.filter = filter_identifications(report.identifications, table, brauer);
  return report;
}

std::string report_text(const MatchReport& r) {
  return "candidates " + std::to_string(r.candidates) + "\nvalid " + std::to_string(r.filter.survivors.size()) +
         "\nrepresentatives " + std::to_string(r.filter.representatives.size()) + "\n";
}

struct PipelineConfig {
  DatumOptions datum;
  std::int64_t p = 0, q = 0;
  std::string library, table, out_dir = ".";
  std::vector<std::string> pins;
  std::size_t cap = default_identification_cap;
};

PipelineConfig read_config(const fs::path& file) {
  const Json j = parse_json(read_file(file), file.string());
  const fs::path base = file.parent_path();
  auto path = [&](const char* key) {
    if (!j.contains(key)) return std::string();
    fs::path p = j.at(key).get<std::string>();
    return (p.is_absolute() ? p : base / p).lexically_normal().string();
  };
  PipelineConfig c;
  try {
    if (j.contains("type")) c.datum.type = j.at("type").get<std::string>();
    // Matrices and permutations may be given as arrays or in flag syntax.
    auto flag_text = [](const Json& v) {
      if (v.is_string()) return v.get<std::string>();
      std::string out;
      for (const auto& row : v) {
        if (!out.empty()) out += row.is_array() ? ";" : ",";
        if (!row.is_array()) {
          out += std::to_string(row.get<std::int64_t>());
          continue;
        }
        std::string r;
        for (const auto& x : row) r += (r.empty() ? "" : ",") + std::to_string(x.get<std::int64_t>());
        out += r;
      }
      return out;
    };
    if (j.contains("cartan")) c.datum.cartan = flag_text(j.at("cartan"));
    if (j.contains("twist")) c.datum.twist = flag_text(j.at("twist"));
    c.q = j.at("q").get<std::int64_t>();
    c.p = j.value("p", std::int64_t(0));
    if (j.contains("pins"))
      for (const auto& [k, v] : j.at("pins").items()) c.pins.push_back(k + "=" + (v.is_string() ? v.get<std::string>() : v.dump()));
    c.cap = j.value("cap", default_identification_cap);
  } catch (const nlohmann::json::exception& e) {
    throw CLI::ValidationError("--config", e.what());
  }
  c.library = path("library");
  c.table = path("table");
  c.out_dir = j.contains("out_dir") ? path("out_dir") : base.string();
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characters, semisimple classes and Brauer tables of finite groups of Lie type"};
  app.require_subcommand(1);
  unsigned threads = 0;
  Output output;
  app.add_option("--threads", threads, "worker threads (default: all cores)");
  app.add_option("--format", output.format, "output format")->check(CLI::IsMember({"text", "json"}));
  std::function<void()> action;
  std::string lib_path;
  auto add_lib = [&](CLI::App* cmd, bool required) {
    auto opt = cmd->add_option("--lib", lib_path, "library directory or entry file")->envname("LIECHAR_LIB");
    if (required) opt->required();
  };

  // datum
  DatumOptions dopt;
  auto* datum_cmd = app.add_subcommand("datum", "root datum, reflections and Weyl group order");
  dopt.add(datum_cmd);
  std::string datum_print = "reflections";
  datum_cmd->add_option("--print", datum_print, "reflections (default) or positive roots in the weight basis")
      ->check(CLI::IsMember({"roots", "reflections"}));
  datum_cmd->callback([&] {
    action = [&] {
      auto d = dopt.datum();
      Json j = to_json(*d);
      j["rank"] = d->rank();
      j["weyl_order"] = to_json(d->weyl_order());
      j["positive_roots"] = d->num_positive_roots();
      Json refl = Json::array();
      std::string text = "type " + d->type() + "\nrank " + std::to_string(d->rank()) + "\nweyl_order " +
                         d->weyl_order().str() + "\npositive_roots " + std::to_string(d->num_positive_roots()) +
                         "\ncartan\n" + matrix_text(d->cartan(), "  ");
      if (datum_print == "roots") {
        Json roots = Json::array();
        text += "positive roots\n";
        for (const auto& r : d->positive_roots()) {
          roots.push_back(weight_json(r));
          text += "  " + format_row(r) + "\n";
        }
        j["positive_roots"] = roots;
        if (!d->twist().isIdentity()) text += "twist\n" + matrix_text(d->twist(), "  ");
        output.emit(j, text);
        return;
      }
      for (std::size_t i = 0; i < d->reflections().size(); ++i) {
        const auto& s = d->reflections()[i];
        Json m = Json::array();
        for (Eigen::Index r = 0; r < s.rows(); ++r) m.push_back(weight_json(s.row(r)));
        refl.push_back(m);
        text += "s" + std::to_string(i + 1) + "\n" + matrix_text(s, "  ");
      }
      if (!d->twist().isIdentity()) text += "twist\n" + matrix_text(d->twist(), "  ");
      j["reflections"] = refl;
      output.emit(j, text);
    };
  });

  // orbit
  std::string weight_text, other_text;
  bool list_elements = false;
  auto* orbit_cmd = app.add_subcommand("orbit", "Weyl orbit of a weight");
  DatumOptions oopt;
  oopt.add(orbit_cmd);
  orbit_cmd->add_option("--weight", weight_text, "weight in the fundamental-weight basis")->required();
  orbit_cmd->add_flag("--list", list_elements, "print all orbit elements");
  orbit_cmd->callback([&] {
    action = [&] {
      auto d = oopt.datum();
      Weight w = parse_row(weight_text);
      if (w.size() != d->rank()) throw CLI::ValidationError("--weight", "wrong rank");
      auto rec = orbit(*d, w);
      std::vector<Weight> elems = *rec.elements;
      std::sort(elems.begin(), elems.end(), [](const Weight& a, const Weight& b) { return LexLess{}(b, a); });
      Json j;
      j["dominant"] = weight_json(rec.dominant_rep);
      j["length"] = to_json(rec.length);
      std::string text = "dominant " + format_row(rec.dominant_rep) + "\nlength " + rec.length.str() + "\n";
      if (list_elements) {
        Json e = Json::array();
        for (const auto& x : elems) {
          e.push_back(weight_json(x));
          text += format_row(x) + "\n";
        }
        j["elements"] = e;
      }
      output.emit(j, text);
    };
  });

  // char
  auto* char_cmd = app.add_subcommand("char", "dominant characters");
  char_cmd->require_subcommand(1);
  DatumOptions copt;
  std::int64_t p_opt = 0, q_opt = 0;
  int power = 1;
  std::string input_file;

  auto* dim_cmd = char_cmd->add_subcommand("dim", "dimension of L(lambda) from the library, or of V(lambda) with --type");
  add_lib(dim_cmd, false);
  copt.add(dim_cmd);
  dim_cmd->add_option("--weight", weight_text)->required();
  dim_cmd->callback([&] {
    action = [&] {
      Weight w = parse_row(weight_text);
      BigInt dim = copt.given() ? weyl_dimension(*copt.datum(), w)
                   : !lib_path.empty() ? dimension(load_library(lib_path).irreducible(w))
                   : throw CLI::ValidationError("--lib", "give a library or --type");
      output.emit(to_json(dim), dim.str() + "\n");
    };
  });

  auto* twist_cmd = char_cmd->add_subcommand("twist", "Frobenius twist of a library character");
  add_lib(twist_cmd, true);
  twist_cmd->add_option("--weight", weight_text)->required();
  twist_cmd->add_option("--power", power, "power of the Frobenius");
  twist_cmd->callback([&] {
    action = [&] {
      auto lib = load_library(lib_path);
      auto c = frobenius_twist(lib.irreducible(parse_row(weight_text)), lib.characteristic(), power);
      output.emit(character_json(c), character_text(c));
    };
  });

  auto* tensor_cmd = char_cmd->add_subcommand("tensor", "character of L(a) (x) L(b)");
  add_lib(tensor_cmd, true);
  tensor_cmd->add_option("--weight", weight_text)->required();
  tensor_cmd->add_option("--with,--weight2", other_text)->required();
  tensor_cmd->callback([&] {
    action = [&] {
      auto lib = load_library(lib_path);
      auto c = tensor_product(lib.irreducible(parse_row(weight_text)), lib.irreducible(parse_row(other_text)));
      output.emit(character_json(c), character_text(c));
    };
  });

  auto* decompose_cmd = char_cmd->add_subcommand("decompose", "composition factors of a character");
  add_lib(decompose_cmd, true);
  decompose_cmd->add_option("--input", input_file, "character in library-entry format");
  decompose_cmd->add_option("--weight", weight_text, "decompose L(weight) (x) L(with) instead");
  decompose_cmd->add_option("--with,--weight2", other_text);
  decompose_cmd->callback([&] {
    action = [&] {
      auto lib = load_library(lib_path);
      DominantCharacter c(lib.datum_ptr());
      if (!input_file.empty()) {
        auto e = parse_library_entry(read_file(input_file), input_file);
        c = DominantCharacter(lib.datum_ptr(), e.character.entries());
      } else if (!weight_text.empty() && !other_text.empty()) {
        c = tensor_product(lib.irreducible(parse_row(weight_text)), lib.irreducible(parse_row(other_text)));
      } else {
        throw CLI::ValidationError("--input", "give --input or --weight with --with");
      }
      auto m = decompose(c, lib);
      output.emit(multiset_json(m), multiset_text(m));
    };
  });

  auto* weyl_cmd = char_cmd->add_subcommand("weyl", "Weyl module character as a library entry");
  DatumOptions wopt;
  wopt.add(weyl_cmd);
  weyl_cmd->add_option("--weight", weight_text)->required();
  weyl_cmd->add_option("--p", p_opt, "characteristic recorded in the header");
  weyl_cmd->callback([&] {
    action = [&] {
      auto d = wopt.datum();
      auto w = parse_row(weight_text);
      auto c = weyl_character(d, w);
      c.set_label(w);
      output.emit(character_json(c), serialize_library_entry(c, p_opt));
    };
  });

  // steinberg
  auto* st_cmd = app.add_subcommand("steinberg", "Steinberg tensor product factorizations");
  st_cmd->require_subcommand(1);
  DatumOptions sopt;
  bool f4_special = false;

  auto* digits_cmd = st_cmd->add_subcommand("digits", "base-p digits of a weight");
  digits_cmd->add_option("--weight", weight_text)->required();
  digits_cmd->add_option("--p", p_opt)->required();
  digits_cmd->add_flag("--f4-special", f4_special, "digits for the exceptional isogeny of F4 (p = 2)");
  digits_cmd->callback([&] {
    action = [&] {
      auto w = parse_row(weight_text);
      auto f = f4_special ? f4_special_digits(*make_datum("F4"), p_opt, w) : base_p_digits(w, p_opt);
      Json j = Json::array();
      std::vector<std::string> rows;
      for (const auto& d : f.digits) {
        j.push_back(weight_json(d));
        rows.push_back(format_row(d));
      }
      output.emit(j, lines(rows));
    };
  });

  auto* restrict_cmd = st_cmd->add_subcommand("restrict", "factors of L(lambda) restricted to G(q)");
  sopt.add(restrict_cmd);
  restrict_cmd->add_option("--weight", weight_text)->required();
  restrict_cmd->add_option("--q", q_opt)->required();
  restrict_cmd->callback([&] {
    action = [&] {
      auto d = sopt.datum();
      auto f = restriction_factorization(parse_row(weight_text), q_opt, d->twist());
      Json j = Json::array();
      std::vector<std::string> rows;
      for (std::size_t i = 0; i < f.digits.size(); ++i) {
        j.push_back(Json::array({weight_json(f.digits[i]), f.twist_powers[i]}));
        rows.push_back(format_row(f.digits[i]) + " twisted " + std::to_string(f.twist_powers[i]));
      }
      output.emit(j, lines(rows));
    };
  });

  auto* degrees_cmd = st_cmd->add_subcommand("degrees", "degrees of all q-restricted irreducibles");
  add_lib(degrees_cmd, true);
  degrees_cmd->add_option("--q", q_opt)->required();
  degrees_cmd->callback([&] {
    action = [&] {
      auto lib = load_library(lib_path);
      std::map<Weight, BigInt, LexLess> dims;
      for (const auto& [lambda, c] : lib.entries()) dims.emplace(lambda, dimension(c));
      auto deg = irreducible_degrees(lib.datum().rank(), q_opt, lib.characteristic(), dims);
      Json j = Json::array();
      std::vector<std::string> rows;
      for (const auto& [lambda, d] : deg) {
        j.push_back(Json::array({weight_json(lambda), to_json(d)}));
        rows.push_back(format_row(lambda) + " : " + d.str());
      }
      output.emit(j, lines(rows));
    };
  });

  auto* gq_cmd = st_cmd->add_subcommand("gqtensor", "composition factors of L(a) (x) L(b) over G(q)");
  add_lib(gq_cmd, true);
  gq_cmd->add_option("--weight", weight_text)->required();
  gq_cmd->add_option("--with,--weight2", other_text)->required();
  gq_cmd->add_option("--q", q_opt)->required();
  gq_cmd->add_option("--twist", sopt.twist, "F0 as a permutation of the simple roots");
  gq_cmd->callback([&] {
    action = [&] {
      auto lib = load_library(lib_path);
      auto datum = RootDatum::build(lib.datum().cartan(), sopt.twist_matrix(lib.datum().rank()));
      auto m = gq_tensor_decompose(parse_row(weight_text), parse_row(other_text), q_opt, on_datum(lib, datum));
      output.emit(multiset_json(m), multiset_text(m));
    };
  });

  // ssclasses
  auto* ss_cmd = app.add_subcommand("ssclasses", "semisimple classes of G(q)");
  DatumOptions ssopt;
  ssopt.add(ss_cmd);
  ss_cmd->add_option("--q", q_opt)->required();
  ss_cmd->add_option("--p", p_opt, "characteristic (default: the prime dividing q)");
  ss_cmd->add_option("--out", output.out);
  ss_cmd->callback([&] {
    action = [&] {
      auto list = semisimple_classes(ssopt.datum(), q_opt, p_opt ? p_opt : smallest_prime_factor(q_opt));
      std::string text = "classes " + std::to_string(list.classes.size()) + "\ngroup_order " + list.group_order.str() +
                         "\ncenter " + std::to_string(list.center.size()) + "\n";
      for (std::size_t i = 0; i < list.classes.size(); ++i) {
        const auto& c = list.classes[i];
        text += std::to_string(i) + " " + format_torus(c.rep) + " order " + std::to_string(c.order) + " centralizer " +
                c.centralizer_order.str() + " " + c.centralizer_type + "\n";
      }
      // Files are always the JSON artifact.
      if (!output.out.empty()) output.format = "json";
      output.emit(to_json(list), text);
    };
  });

  // brauer
  std::string classes_file, btable_file, table_file;
  auto* brauer_cmd = app.add_subcommand("brauer", "Brauer table on the semisimple classes");
  add_lib(brauer_cmd, true);
  brauer_cmd->add_option("--classes", classes_file)->required();
  brauer_cmd->add_option("--q", q_opt, "must match the class list");
  brauer_cmd->add_option("--out", output.out);
  brauer_cmd->callback([&] {
    action = [&] {
      auto classes = classes_from_json(parse_json(read_file(classes_file), classes_file));
      if (q_opt && q_opt != classes.q) throw CLI::ValidationError("--q", "class list is for q = " + std::to_string(classes.q));
      auto table = brauer_table(on_datum(load_library(lib_path), classes.datum), classes);
      std::string text;
      for (Eigen::Index i = 0; i < table.values.rows(); ++i) {
        text += format_row(table.labels[static_cast<std::size_t>(i)]) + " :";
        for (Eigen::Index k = 0; k < table.values.cols(); ++k) text += " [" + table.values(i, k).to_text() + "]";
        text += "\n";
      }
      if (!output.out.empty()) output.format = "json";
      output.emit(to_json(table), text);
    };
  });

  // match
  std::vector<std::string> pins;
  std::size_t cap = default_identification_cap;
  auto* match_cmd = app.add_subcommand("match", "identify classes with an ordinary table and filter");
  match_cmd->add_option("--table", table_file)->required();
  match_cmd->add_option("--classes", classes_file)->required();
  match_cmd->add_option("--btable", btable_file)->required();
  match_cmd->add_option("--pin", pins, "computed=abstract class index or name");
  match_cmd->add_option("--cap", cap);
  match_cmd->add_option("--out", output.out);
  match_cmd->callback([&] {
    action = [&] {
      auto table = abstract_table_from_json(parse_json(read_file(table_file), table_file));
      auto classes = classes_from_json(parse_json(read_file(classes_file), classes_file));
      auto brauer = brauer_table_from_json(parse_json(read_file(btable_file), btable_file));
      auto report = run_match(classes, table, brauer, parse_pins(pins, table), cap);
      if (!output.out.empty()) output.format = "json";
      output.emit(to_json(report, table), report_text(report));
    };
  });

  // pipeline
  std::string config_file;
  PipelineConfig pcfg;
  auto* pipe_cmd = app.add_subcommand("pipeline", "classes, Brauer table and matching in one run");
  pipe_cmd->add_option("--config", config_file, "JSON config; paths are relative to it");
  pcfg.datum.add(pipe_cmd);
  pipe_cmd->add_option("--q", pcfg.q);
  pipe_cmd->add_option("--p", pcfg.p);
  pipe_cmd->add_option("--lib", pcfg.library)->envname("LIECHAR_LIB");
  pipe_cmd->add_option("--table", pcfg.table);
  pipe_cmd->add_option("--out-dir", pcfg.out_dir);
  pipe_cmd->add_option("--pin", pcfg.pins);
  pipe_cmd->add_option("--cap", pcfg.cap);
  pipe_cmd->callback([&] {
    action = [&] {
      PipelineConfig c = config_file.empty() ? pcfg : read_config(config_file);
      if (c.q < 2) throw CLI::ValidationError("--q", "required");
      if (c.p == 0) c.p = smallest_prime_factor(c.q);
      if (power_exponent(c.q, c.p) < 1) throw CLI::ValidationError("--q", "must be a power of p");
      if (c.library.empty()) throw CLI::ValidationError("--lib", "required");
      if (!fs::exists(c.library)) throw CLI::ValidationError("--lib", c.library + " does not exist");
      if (!c.table.empty() && !fs::exists(c.table)) throw CLI::ValidationError("--table", c.table + " does not exist");
      const fs::path out = c.out_dir;
      auto datum = c.datum.datum();
      auto lib = on_datum(load_library(c.library), datum);
      auto classes = semisimple_classes(datum, c.q, c.p);
      write_file(out / "classes.json", dump_json(to_json(classes)));
      auto brauer = brauer_table(lib, classes);
      write_file(out / "btable.json", dump_json(to_json(brauer)));
      std::string text = "classes " + std::to_string(classes.classes.size()) + "\nbrauer rows " +
                         std::to_string(brauer.labels.size()) + "\n";
      if (!c.table.empty()) {
        // Identical to the stepwise route: match reads the written artifacts.
        auto table = abstract_table_from_json(parse_json(read_file(c.table), c.table));
        auto reloaded = classes_from_json(parse_json(read_file(out / "classes.json"), "classes.json"));
        auto rebrauer = brauer_table_from_json(parse_json(read_file(out / "btable.json"), "btable.json"));
        auto report = run_match(reloaded, table, rebrauer, parse_pins(c.pins, table), c.cap);
        write_file(out / "report.json", dump_json(to_json(report, table)));
        text += report_text(report);
      }
      std::cout << text;
    };
  });

  // roundtrip
  std::string artifact;
  bool check = false;
  auto* rt_cmd = app.add_subcommand("roundtrip", "canonical re-serialization of an artifact");
  rt_cmd->add_option("file", artifact)->required()->check(CLI::ExistingFile);
  rt_cmd->add_flag("--check", check, "fail unless the file is already canonical");
  rt_cmd->add_option("--out", output.out);
  rt_cmd->callback([&] {
    action = [&] {
      const std::string text = read_file(artifact);
      const std::string canonical = canonical_form(text, artifact);
      if (check && canonical != text) throw Error(ErrorCode::ParseError, artifact + " is not in canonical form");
      output.emit(canonical);
    };
  });

  try {
    app.parse(argc, argv);
    set_thread_count(threads);
    action();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
