#pragma once

#include "griemlab/chart.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

namespace griemlab {

/// Build a manifold from a spec document:
///
///   {"zoo": "weighted_product", "params": {"factors": ["s6", "s2"], "lambda": [1, 4]}}
///
///   {"custom": {
///      "dim": 3,
///      "g": [["1", 0, 0], [null, "1", 0], [null, null, "1"]],
///      "F": [[0, "0", "0"], [null, 0, "x1"], [null, null, 0]],
///      "eta": [...], "xi": [...],              optional, expressions
///      "kind": "generic",                     generic | weak-hermitian | weak-contact | weak-f | para
///      "domain": 10 or {"lo": [...], "hi": [...]},
///      "sample": 1 or {"lo": [...], "hi": [...]},
///      "torsion": "zero",                     zero | nearly-kahler | chern | bismut | eisenhart | contact
///      "coordinates": ["x", "y", "z"]         optional, defaults to x1..xn
///   }}
///
/// Matrix entries are expression strings or numbers. Only the upper triangle
/// (with the diagonal) is read; g is mirrored and F is negated across it.
ChartManifold manifold_from_json(const nlohmann::json& doc);

/// Either "zoo:name?k=v&..." or a path to a JSON spec file.
ChartManifold load_manifold(std::string_view spec_or_path);

}  // namespace griemlab
