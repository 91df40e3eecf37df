#pragma once

#include <string>
#include <vector>

#include "pitop/category.hpp"
#include "pitop/diagram.hpp"
#include "pitop/hopf.hpp"
#include "pitop/surgery.hpp"

namespace pitop {

/// Malformed input; the message carries the source name and, where known, line and column.
struct ParseError : DomainError {
  using DomainError::DomainError;
};

/// Inverse of CycloNum::str: "1/2 - 3*zeta4^1 + zeta4^3".
CycloNum parse_cyclo(const std::string& text);

/// Exponent k with x = zeta_N^k; throws DomainError when x is not a power of zeta_N.
long zeta_exponent(const CycloNum& x, long N);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// Ribbon tuple plus the D sign. Groups are written as a description string when they have
/// one ("cyclic:3", "product:2x2") and as a multiplication table otherwise.
struct CategoryFile {
  std::string name;
  RibbonTuple tuple;
  int dsign = 1;
  friend bool operator==(const CategoryFile&, const CategoryFile&) = default;
};
CategoryFile parse_category_toml(const std::string& text, const std::string& source = "<string>");
CategoryFile parse_category_json(const std::string& text, const std::string& source = "<string>");
std::string write_category_toml(const CategoryFile& f);
/// Dispatches on the extension (.json, otherwise TOML).
CategoryFile load_category_file(const std::string& path);
ThinCategory category_of(const CategoryFile& f);

Diagram parse_diagram_json(const std::string& text, const std::string& source = "<string>");
std::string write_diagram_json(const Diagram& d);

/// Surgery presentation with the framings and labels of its surgery components,
/// stored redundantly so that a file can be checked against its diagram.
struct SurgeryFile {
  SurgeryPresentation presentation;
  std::vector<int> framings;
  std::vector<int> labels;
};
SurgeryFile surgery_file(const SurgeryPresentation& p, const FiniteGroup& g);
/// The stored framings and labels agree with the traced diagram.
Report check_surgery_file(const SurgeryFile& f, const FiniteGroup& g);
SurgeryFile parse_surgery_json(const std::string& text, const std::string& source = "<string>");
std::string write_surgery_json(const SurgeryFile& f);

/// Hopf algebra with an optional R-matrix and ribbon element (empty when absent).
struct HopfFile {
  HopfAlgebraData hopf;
  Vec R;
  Vec v;
};
HopfFile parse_hopf_json(const std::string& text, const std::string& source = "<string>");
std::string write_hopf_json(const HopfFile& f);

}  // namespace pitop
