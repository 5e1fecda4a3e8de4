#pragma once

#include "griemlab/chart.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace griemlab {

/// A zoo entry name with its parameter map.
struct ZooSpec {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
};

struct ZooEntryInfo {
  std::string name;
  std::string summary;
  nlohmann::json defaults;
};

/// Entries:
///   flat_kahler           n (even)                  R^n, g = delta, F = sum dx_{2i-1} ^ dx_{2i}
///   s2_round              r                         stereographic chart of the round sphere
///   s6_nearly_kahler      -                         stereographic chart of S^6 in Im O, A_p X = p x X
///   weighted_product      factors, lambda           blocks sqrt(lambda_j) J_j, Q = (+) lambda_j Id
///   conformal_hermitian_r4  u                       g = exp(2u) delta, standard J
///   sasakian_r3           -                         eta = (dz - y dx)/2, xi = 2 d_z
///   product_contact       factors, lambda, s        R^s x (weighted) Hermitian factor
///   eisenhart_r3          f12, f13, f23             g = delta, F_ij = f_ij
///   para_flat             n, lambda, contact, u     neutral blocks, A^2 = Q = (+) lambda_j Id
///   perturbed_kahler_r4   eps                       weak almost Hermitian, not nearly Kaehler
///   twisted_product_r4    -                         Q spectrum {1, 4}, eigen-distributions not involutive
/// Factor names for products: flat2, flat4, s2, s6.
std::vector<ZooEntryInfo> zoo_catalog();

/// Throws ParseError for unknown entries or invalid parameters.
ChartManifold build_zoo(const ZooSpec& spec);

/// "name?key=value&key=a,b" with numbers, booleans, strings and comma lists.
ZooSpec parse_zoo_spec(std::string_view text);

}  // namespace griemlab
