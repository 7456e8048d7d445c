#include "manakov/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace manakov {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string spectrum_csv(const std::vector<JointEigenvalue>& entries) {
  std::string out = "x,y,irrep,residual\n";
  for (const auto& e : entries) {
    out += format_double(e.x);
    out += ',';
    out += format_double(e.y);
    out += ',';
    out += e.irrep.name();
    out += ',';
    out += format_double(e.residual);
    out += '\n';
  }
  return out;
}

std::string lattice_csv(const JointLattice& lattice, const std::string& second_column) {
  std::string out = "x," + second_column + "\n";
  for (const auto& p : lattice.points) out += format_double(p.x()) + ',' + format_double(p.y()) + '\n';
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw std::runtime_error(path.parent_path().string() + ": " + ec.message());
  }
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error(path.string() + ": " + std::strerror(errno));
  const std::size_t written = std::fwrite(text.data(), 1, text.size(), f);
  const int err = written == text.size() ? 0 : errno;
  if (std::fclose(f) != 0 || err != 0)
    throw std::runtime_error(path.string() + ": " + std::strerror(err ? err : errno));
}

}  // namespace manakov
