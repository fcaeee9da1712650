#ifndef MAHLER_CATALOG_HPP
#define MAHLER_CATALOG_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mahler/laurent.hpp"
#include "mahler/surgery.hpp"

namespace mahler {

// A registered example polynomial: either a link polynomial with surgery
// metadata or a plain polynomial, with reference measure and provenance.
struct CatalogEntry {
  std::string key;
  std::variant<LinkPoly, LaurentPoly> poly;
  std::optional<double> reference_measure;
  double reference_tol = 0.0;
  std::optional<SurgeryFamily> family;   // explicit Delta_{l(q)} when known
  std::optional<LaurentPoly> sublink;    // Delta_{l'} for Torres condition 2
  std::string source;
  std::string notes;
  std::string schematic;  // coefficient grid, for transcription checking
  bool linking_inferred = false;

  const LaurentPoly& polynomial() const;
  const LinkPoly* link() const;
};

class UnknownKeyError : public std::runtime_error {
public:
  UnknownKeyError(const std::string& what, std::string suggestion)
      : std::runtime_error(what), suggestion_(std::move(suggestion)) {}
  const std::string& suggestion() const { return suggestion_; }

private:
  std::string suggestion_;
};

// Lookup by key or alias (case-insensitive, '^'/'_' insensitive). Unknown
// keys throw UnknownKeyError carrying the closest registered key.
const CatalogEntry& catalog_get(const std::string& key);

// All entries in registration order.
const std::vector<CatalogEntry>& catalog_entries();

struct CatalogLine {
  std::string key;
  std::string source;
  std::string summary;
};

std::vector<CatalogLine> catalog_list();

}  // namespace mahler

#endif
