#pragma once

// Text output helpers: full-precision number formatting, CSV tables and
// file writes that surface the operating-system error verbatim.

#include <filesystem>
#include <string>
#include <vector>

#include "manakov/joint_spectrum.hpp"
#include "manakov/monodromy.hpp"

namespace manakov {

/// Shortest-form decimal with 17 significant digits ("%.17g").
std::string format_double(double v);

/// Columns x, y, irrep, residual.
std::string spectrum_csv(const std::vector<JointEigenvalue>& entries);

/// Columns x, y (or the given second-column name).
std::string lattice_csv(const JointLattice& lattice, const std::string& second_column = "y");

/// Writes the whole string; throws std::runtime_error carrying the path and
/// strerror text on failure. Parent directories are created.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace manakov
