#pragma once

// JSON catalog of matrix groups shared by the orbit, base and inequality
// suites.
//
// [
//   { "label": "GL(2,3)", "p": 3, "dim": 2, "kind": "linear",
//     "generators": [ [[2,0],[0,1]], [2,1,2,0] ],
//     "construct": {"op": "wreath", "of": "GL(2,3)", "k": 2},
//     "metadata": {"order": 48, "solvable": true, "fitting_order": 8,
//                  "frattini_order": 2, "expected_checks": ["..."]} }
// ]
//
// Matrices are row-major, either nested rows or flat; entries are reduced
// mod p. "kind": "affine" means the entry describes HV for the linear group
// H given by the generators. "construct" builds H from earlier entries
// ("wreath" with "of" and "k", or "direct_sum" with "of": [a, b]) instead of
// listing generators.

#include "chardeg/finite_group.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace chardeg {

/// Malformed catalog; the message starts with the offending position.
class CatalogError : public InputError {
public:
  using InputError::InputError;
};

struct Construct {
  std::string op;                  // "wreath" or "direct_sum"
  std::vector<std::string> of;
  unsigned k = 0;
};

struct CatalogEntry {
  std::string position;  // "entries[3]"
  std::string label;
  unsigned p = 0;
  unsigned dim = 0;
  bool affine = false;
  std::vector<FpMatrix> generators;
  std::optional<Construct> construct;
  GroupMetadata metadata;
};

namespace detail {

using nlohmann::json;

inline CatalogError catalog_error(const std::string &where, const std::string &what) {
  return CatalogError(where + ": " + what);
}

inline const json &require(const json &obj, const char *key, const std::string &where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw catalog_error(where, std::string("missing field \"") + key + "\"");
  return *it;
}

inline long long as_integer(const json &v, const std::string &where) {
  if (!v.is_number_integer()) throw catalog_error(where, "expected an integer, got " + v.dump());
  return v.get<long long>();
}

// Orders may exceed 64 bits, so decimal strings are accepted too.
inline BigNat as_natural(const json &v, const std::string &where) {
  if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0))
    return BigNat(v.get<unsigned long long>());
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) return BigNat(s);
  }
  throw catalog_error(where, "expected a non-negative integer, got " + v.dump());
}

inline FpMatrix parse_matrix(const json &m, unsigned p, unsigned dim, const std::string &where) {
  if (!m.is_array()) throw catalog_error(where, "expected a matrix (array)");
  std::vector<long long> entries;
  if (!m.empty() && m[0].is_array()) {
    if (m.size() != dim)
      throw catalog_error(where, "expected " + std::to_string(dim) + " rows, got " + std::to_string(m.size()));
    for (std::size_t r = 0; r < m.size(); ++r) {
      const std::string row_where = where + "[" + std::to_string(r) + "]";
      if (!m[r].is_array() || m[r].size() != dim)
        throw catalog_error(row_where, "expected a row of " + std::to_string(dim) + " integers");
      for (std::size_t c = 0; c < dim; ++c)
        entries.push_back(as_integer(m[r][c], row_where + "[" + std::to_string(c) + "]"));
    }
  } else {
    if (m.size() != dim * dim)
      throw catalog_error(where, "expected " + std::to_string(dim * dim) + " entries, got " +
                                     std::to_string(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
      entries.push_back(as_integer(m[i], where + "[" + std::to_string(i) + "]"));
  }
  return FpMatrix::from_entries(p, dim, entries);
}

inline GroupMetadata parse_metadata(const json &m, const std::string &where) {
  GroupMetadata meta;
  if (!m.is_object()) throw catalog_error(where, "expected an object");
  for (const auto &[key, value] : m.items()) {
    const std::string at = where + "." + key;
    if (key == "order") meta.claimed_order = as_natural(value, at);
    else if (key == "fitting_order") meta.fitting_order = as_natural(value, at);
    else if (key == "frattini_order") meta.frattini_order = as_natural(value, at);
    else if (key == "solvable") {
      if (!value.is_boolean()) throw catalog_error(at, "expected true or false");
      meta.solvable = value.get<bool>();
    } else if (key == "expected_checks") {
      if (!value.is_array()) throw catalog_error(at, "expected an array of strings");
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (!value[i].is_string()) throw catalog_error(at + "[" + std::to_string(i) + "]", "expected a string");
        meta.expected_checks.push_back(value[i].get<std::string>());
      }
    } else if (key != "note") {
      throw catalog_error(at, "unknown metadata field");
    }
  }
  return meta;
}

inline Construct parse_construct(const json &c, const std::string &where) {
  if (!c.is_object()) throw catalog_error(where, "expected an object");
  Construct out;
  const json &op = require(c, "op", where);
  if (!op.is_string()) throw catalog_error(where + ".op", "expected a string");
  out.op = op.get<std::string>();
  const json &of = require(c, "of", where);
  if (out.op == "wreath") {
    if (!of.is_string()) throw catalog_error(where + ".of", "expected a label");
    out.of.push_back(of.get<std::string>());
    const long long k = as_integer(require(c, "k", where), where + ".k");
    if (k < 1 || k > 8) throw catalog_error(where + ".k", "must lie in 1..8");
    out.k = static_cast<unsigned>(k);
  } else if (out.op == "direct_sum") {
    if (!of.is_array() || of.size() != 2) throw catalog_error(where + ".of", "expected two labels");
    for (std::size_t i = 0; i < 2; ++i) {
      if (!of[i].is_string()) throw catalog_error(where + ".of[" + std::to_string(i) + "]", "expected a label");
      out.of.push_back(of[i].get<std::string>());
    }
  } else {
    throw catalog_error(where + ".op", "unknown construction \"" + out.op + "\"");
  }
  return out;
}

} // namespace detail

inline std::vector<CatalogEntry> parse_catalog(const std::string &text) {
  using detail::catalog_error;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw CatalogError(std::string("catalog: ") + e.what());
  }
  if (!doc.is_array()) throw CatalogError("catalog: top level must be an array of entries");
  std::vector<CatalogEntry> entries;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string where = "entries[" + std::to_string(i) + "]";
    const auto &e = doc[i];
    if (!e.is_object()) throw catalog_error(where, "expected an object");
    CatalogEntry entry;
    entry.position = where;
    const auto &label = detail::require(e, "label", where);
    if (!label.is_string() || label.get<std::string>().empty())
      throw catalog_error(where + ".label", "expected a non-empty string");
    entry.label = label.get<std::string>();
    for (const auto &other : entries)
      if (other.label == entry.label) throw catalog_error(where + ".label", "duplicate label " + entry.label);

    const long long p = detail::as_integer(detail::require(e, "p", where), where + ".p");
    if (p < 2 || p > 251 || !is_prime(static_cast<std::uint64_t>(p)))
      throw catalog_error(where + ".p", "must be a prime <= 251");
    const long long dim = detail::as_integer(detail::require(e, "dim", where), where + ".dim");
    if (dim < 1 || dim > 8) throw catalog_error(where + ".dim", "must lie in 1..8");
    entry.p = static_cast<unsigned>(p);
    entry.dim = static_cast<unsigned>(dim);

    if (auto it = e.find("kind"); it != e.end()) {
      if (*it == "affine") entry.affine = true;
      else if (*it != "linear") throw catalog_error(where + ".kind", "expected \"linear\" or \"affine\"");
    }
    if (auto it = e.find("generators"); it != e.end()) {
      if (!it->is_array()) throw catalog_error(where + ".generators", "expected an array of matrices");
      for (std::size_t g = 0; g < it->size(); ++g)
        entry.generators.push_back(detail::parse_matrix(
            (*it)[g], entry.p, entry.dim, where + ".generators[" + std::to_string(g) + "]"));
    }
    if (auto it = e.find("construct"); it != e.end()) {
      if (!entry.generators.empty())
        throw catalog_error(where + ".construct", "give either generators or a construction, not both");
      entry.construct = detail::parse_construct(*it, where + ".construct");
    }
    if (auto it = e.find("metadata"); it != e.end())
      entry.metadata = detail::parse_metadata(*it, where + ".metadata");
    entry.metadata.label = entry.label;
    for (const auto &[key, value] : e.items())
      if (key != "label" && key != "p" && key != "dim" && key != "kind" && key != "generators" &&
          key != "construct" && key != "metadata" && key != "note")
        throw catalog_error(where + "." + key, "unknown field");
    entries.push_back(std::move(entry));
  }
  return entries;
}

enum class EntryStatus { Ready, AwaitingGenerators, Error };

struct CatalogGroup {
  CatalogEntry entry;
  EntryStatus status = EntryStatus::Error;
  std::string message;               // error or gating reason
  std::optional<MatGroup> linear;    // G, or H for affine entries
  std::optional<FiniteGroupTable> table;

  const std::string &label() const { return entry.label; }
  const GroupMetadata &metadata() const { return entry.metadata; }
};

/// Closes every entry. Entry-level problems (claimed order mismatch, cap
/// exceeded, unknown construction source) mark the entry as an error and the
/// remaining entries are still built.
inline std::vector<CatalogGroup> build_catalog(const std::vector<CatalogEntry> &entries,
                                               std::size_t cap = kDefaultElementCap) {
  std::vector<CatalogGroup> out;
  auto find_ready = [&](const std::string &label) -> const MatGroup * {
    for (const auto &g : out)
      if (g.label() == label && g.status == EntryStatus::Ready) return &*g.linear;
    return nullptr;
  };
  for (const auto &entry : entries) {
    CatalogGroup g;
    g.entry = entry;
    try {
      if (entry.generators.empty() && !entry.construct && !entry.metadata.expected_checks.empty()) {
        g.status = EntryStatus::AwaitingGenerators;
        g.message = "no generators supplied";
        out.push_back(std::move(g));
        continue;
      }
      MatGroup H;
      if (entry.construct) {
        std::vector<const MatGroup *> sources;
        for (const auto &label : entry.construct->of) {
          const MatGroup *src = find_ready(label);
          if (!src) throw InputError("construction source \"" + label + "\" is not an earlier usable entry");
          sources.push_back(src);
        }
        H = entry.construct->op == "wreath" ? wreath(*sources[0], entry.construct->k, cap)
                                            : direct_sum(*sources[0], *sources[1], cap);
        if (H.p() != entry.p || H.dim() != entry.dim)
          throw InputError("construction yields p = " + std::to_string(H.p()) + ", dim = " +
                           std::to_string(H.dim()) + ", entry declares p = " + std::to_string(entry.p) +
                           ", dim = " + std::to_string(entry.dim));
      } else {
        H = close(entry.p, entry.dim, entry.generators, cap);
      }
      FiniteGroupTable T = entry.affine ? affine_group(H, cap) : as_table(H, cap);
      T.metadata() = entry.metadata;
      if (entry.metadata.claimed_order && *entry.metadata.claimed_order != T.order())
        throw InputError("claimed order " + entry.metadata.claimed_order->str() +
                         " but the generated group has order " + std::to_string(T.order()));
      H.metadata() = entry.metadata;
      g.linear = std::move(H);
      g.table = std::move(T);
      g.status = EntryStatus::Ready;
    } catch (const std::exception &e) {
      g.status = EntryStatus::Error;
      g.message = entry.position + " (" + entry.label + "): " + e.what();
    }
    out.push_back(std::move(g));
  }
  return out;
}

inline std::vector<CatalogGroup> ingest_catalog(const std::string &path,
                                                std::size_t cap = kDefaultElementCap) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return build_catalog(parse_catalog(buffer.str()), cap);
}

} // namespace chardeg
