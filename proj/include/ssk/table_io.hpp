#pragma once

// Serialization of coefficient tables (TSV and versioned JSON), the
// positivity map of the (sigma, tau) plane (TSV and SVG), and the
// unipotent-class tagging of blow-up tables. All output is deterministic
// byte-for-byte for a fixed input: numbers print in shortest round-trip
// form, map order is the lexicographic signature order, and the SVG carries
// no timestamps or external references.

#include <string>

#include "ssk/kernel.hpp"

namespace ssk::table_io {

// Header m_1..m_n, re, im; one row per table entry.
std::string to_tsv(const kernel::CoefficientTable& table);

// {"schema": 1, "n": .., "sigma": {"re","im"}, "tau": {..}, "cutoff": ..,
//  "entries": [{"m": [..], "re": .., "im": ..} ..]}
std::string to_json(const kernel::CoefficientTable& table);

// As to_tsv / to_json with a per-entry unipotent class column ("Z(j)" or
// "tail") relative to the given alpha.
std::string blowup_to_tsv(const kernel::CoefficientTable& table, int alpha);
std::string blowup_to_json(const kernel::CoefficientTable& table, int alpha);

// The signatures with labels in [-M, M] that die in every directional
// limit: class column is always "tail".
std::string tail_report_tsv(int n, int alpha, long M);

struct PosmapGrid {
    int n = 1;
    double sigma_min = -4.0, sigma_max = 2.0;
    double tau_min = -5.0, tau_max = 5.0;
    double step = 0.25;   // samples sit at min + (i + 1/2) step: never on integers
};

// Columns sigma, tau, class; sigma-major ascending.
std::string posmap_tsv(const PosmapGrid& grid);

// One 12x12 px rect per grid cell, tau increasing upward. Fill colors:
//   positive-definite #2166ac, negative-definite #b2182b,
//   indefinite #f7f7f7, semi-definite #5aae61, on-integer-locus #999999.
std::string posmap_svg(const PosmapGrid& grid);

} // namespace ssk::table_io
