#pragma once

// Canonical text forms of a Series3: JSON (with run metadata) and CSV.
// Coefficients are decimal strings; terms are sorted by (q, z, u).

#include <string>

#include "pbwchar/series.hpp"

namespace pbwchar {

struct SeriesDocument {
  int level = 1;
  std::string method;
  Series3 series{0};
};

std::string to_json(const SeriesDocument& doc);
/// Throws SeriesError on malformed input.
SeriesDocument from_json(const std::string& text);

/// Header line "q,z,u,c" followed by one line per term.
std::string to_csv(const Series3& s);

}  // namespace pbwchar
