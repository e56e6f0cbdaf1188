#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ribbonroots/descent.hpp"
#include "ribbonroots/roots.hpp"
#include "ribbonroots/shapes.hpp"

namespace ribbonroots {

using json = nlohmann::json;

json to_json(const Partition& p);
json to_json(const SkewShape& s);  // {"outer":[...],"inner":[...]}
json to_json(const DescentSet& I);  // sorted array
json to_json(const NewtonForm& nf);  // {"alphas":[...],"coeffs":["27",...]}
json to_json(const Cell& c);         // [row, col]

Partition partition_from_json(const json& j);
SkewShape shape_from_json(const json& j);
DescentSet descent_set_from_json(const json& j);
NewtonForm newton_form_from_json(const json& j);

/// {"set","alphas","coeffs","trivial_num","trivial_den","monomial"}; every coefficient is a
/// decimal string ("a" or "a/b").
json descent_report(const DescentSet& I);

/// "3,5" -> {3,5}; "" -> {}. Throws DomainError on anything else.
DescentSet parse_descent_set(std::string_view text);
/// "5,5,4" or a JSON array.
Partition parse_partition(std::string_view text);
/// "1:1,1:2,2:1"; 1-based row:col pairs.
std::vector<Cell> parse_cells(std::string_view text);
std::string format_cells(const std::vector<Cell>& cells);

struct PlotRoot {
    std::complex<double> z;
    bool modulus_ok = true;
    bool real_part_ok = true;
};

/// Roots of d_I with their verdicts against |z| <= m and Re(z) >= -1.
std::vector<PlotRoot> plot_roots(const RootBoundsVerdict& verdict, int m);

/// Columns re,im,modulus,shifted_modulus,modulus_ok,real_part_ok where
/// shifted_modulus = |z - (m - 1)| (|t + 1| in the excitation-factor variable t = z - m).
std::string roots_csv(const std::vector<PlotRoot>& roots, int m);

/// The admissible region {|z| <= m} ∩ {Re z >= -1} shaded, unit grid, axes, one dot per root.
std::string roots_svg(const std::vector<PlotRoot>& roots, int m);

}  // namespace ribbonroots
