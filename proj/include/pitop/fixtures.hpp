#pragma once

#include <string>
#include <vector>

#include "pitop/io.hpp"

namespace pitop {

/// Symmetric group on three letters, elements as permutations in lexicographic order.
FiniteGroup symmetric_group_s3();
/// Quaternion group; element 2u + s is (-1)^s times the unit u in (1, i, j, k).
FiniteGroup quaternion_group();

/// c(x, y) = zeta_n^(xy), theta(x) = zeta_n^(x^2) on Z/n over Q(zeta_n).
RibbonTuple cyclic_bicharacter_tuple(int n);
/// Tuples pulled back along the abelianization of S3 (sign) and Q8 (onto Z/2 x Z/2).
RibbonTuple s3_abelianization_tuple();
RibbonTuple q8_abelianization_tuple();

struct NamedDiagram {
  std::string name;
  Diagram diagram;
};
/// Unknot, Hopf link and right-handed trefoil, labelled over Z/3 with label 1.
std::vector<NamedDiagram> fixture_diagrams();

/// The category every surgery fixture is written against (cyclic bicharacter tuple, n = 3).
ThinCategory fixture_surgery_category();

/// Group algebra of Z/2 with its nontrivial R-matrix and ribbon element g.
HopfFile k_z2_hopf_file();
/// Sweedler's algebra with the R-matrix of parameter 1.
HopfFile h4_hopf_file();

struct FixtureFile {
  std::string file;
  std::string kind;  // category, diagram, surgery, hopf
  std::string text;
};
std::vector<FixtureFile> fixture_corpus();
/// Writes the corpus into `dir`; returns the file names.
std::vector<std::string> write_fixtures(const std::string& dir);

std::vector<CategoryFile> fixture_categories();
std::vector<SurgeryFile> fixture_surgeries();

}  // namespace pitop
