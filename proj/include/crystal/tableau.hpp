#pragma once

// Semistandard Young tableaux with the signature-rule crystal operators.

#include <optional>
#include <string>
#include <vector>

#include "crystal/cartan.hpp"
#include "crystal/crystal_graph.hpp"

namespace crystal {

struct Tableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  // Rows weakly increasing, columns strictly increasing, entries in 1..max_entry.
  bool is_semistandard(int max_entry) const;
  // Row notation, e.g. "(11/2)".
  std::string to_string() const;

  bool operator==(const Tableau&) const = default;
  auto operator<=>(const Tableau&) const = default;
};

// Row i filled with i.
Tableau highest_weight_tableau(const Partition& shape);

// Content in the epsilon basis (n+1 entries) converted to the omega basis.
Weight weight_tab(const Tableau& t, int n);

std::optional<Tableau> f_tab(const Tableau& t, int i);
std::optional<Tableau> e_tab(const Tableau& t, int i);
int epsilon_tab(const Tableau& t, int i);
int phi_tab(const Tableau& t, int i);

// All SSYT of the shape with entries <= n+1, in lexicographic order of the
// row-reading sequence.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, int n);

// Number of SSYT of the shape with content mu. Throws DomainError when the
// sizes differ.
std::uint64_t kostka(const Partition& shape, const std::vector<int>& mu);

struct TableauGraph {
  CrystalGraph graph;
  std::vector<Tableau> elements;
};

// Crystal graph generated from the highest-weight tableau by f_tab.
TableauGraph generate_tableau_crystal(const RootDatum& d, const Partition& shape);

// Shape lambda(w) with trailing zero rows dropped.
Partition shape_of_weight(const RootDatum& d, const Weight& w);

}  // namespace crystal
