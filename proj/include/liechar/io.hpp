#pragma once

#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "liechar/brauer.hpp"
#include "liechar/table_matching.hpp"

namespace liechar {

using Json = nlohmann::json;

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

/// Throws ParseError with line and column of the first offending byte.
Json parse_json(const std::string& text, const std::string& source);
/// Two-space indentation, sorted keys, trailing newline.
std::string dump_json(const Json& j);

Json to_json(const RootDatum& datum);
DatumPtr datum_from_json(const Json& j);

/// [n, {"exponent": "coefficient", ...}] over the canonical basis.
Json to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const Json& j);

/// Numbers when they fit in 64 bits, decimal strings otherwise.
Json to_json(const BigInt& x);
BigInt bigint_from_json(const Json& j);

/// Library entry text:
///   # datum D4            (or "# cartan 2,-1;-1,2" for nonstandard numbering)
///   # p 3
///   # highest 0,1,0,2
///   0,1,0,2 : 1           (dominant weights, lexicographically descending)
std::string serialize_library_entry(const DominantCharacter& character, std::int64_t p);

struct LibraryEntry {
  DatumPtr datum;
  std::int64_t p = 0;
  DominantCharacter character;
};

/// Throws ParseError naming the line, column and offending key.
LibraryEntry parse_library_entry(const std::string& text, const std::string& source);

/// The files listed in a directory's index.txt, else all its *.txt files,
/// or a single file. All entries must agree on datum and characteristic.
CharacterLibrary load_library(const std::filesystem::path& path);
/// One file per entry, named by the highest weight (0_1_0_2.txt), plus
/// index.txt listing them.
void save_library(const CharacterLibrary& library, const std::filesystem::path& dir);

Json to_json(const ClassList& classes);
/// Classes are re-sorted by (order, rep) and all indices remapped.
ClassList classes_from_json(const Json& j);

Json to_json(const BrauerTable& table);
BrauerTable brauer_table_from_json(const Json& j);

Json to_json(const AbstractTable& table);
/// Throws SchemaError or InconsistentPowerMap.
AbstractTable abstract_table_from_json(const Json& j);

struct MatchReport {
  std::size_t candidates = 0;
  std::vector<Identification> identifications;
  FilterResult filter;
};

Json to_json(const MatchReport& report, const AbstractTable& table);

/// Parses any artifact (library entry, classes, Brauer table, abstract
/// table) and returns its canonical serialization.
std::string canonical_form(const std::string& text, const std::string& source);

}  // namespace liechar
