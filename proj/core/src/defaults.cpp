#include "wdp/defaults.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "wdp/surface_io.hpp"

namespace wdp {

namespace {

bool is_path(const std::string& selector) {
  return selector.find('/') != std::string::npos ||
         selector.find('.') != std::string::npos;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::optional<std::string> resolve(const std::string& name,
                                   const std::string& extension,
                                   const std::map<std::string, std::string>& builtin) {
  if (const char* dir = std::getenv("WDP_SURFACE_DIR")) {
    if (auto text = read_file(std::string(dir) + "/" + name + extension)) {
      return text;
    }
  }
  const auto it = builtin.find(name);
  if (it != builtin.end()) return it->second;
  return std::nullopt;
}

}  // namespace

const std::vector<std::string>& builtin_surface_names() {
  static const std::vector<std::string> names{"s15", "s12", "s64", "s82",
                                              "s45", "s81", "s117"};
  return names;
}

SurfaceModel load_surface(const std::string& selector) {
  std::optional<std::string> text;
  if (is_path(selector)) {
    text = read_file(selector);
    if (!text) {
      throw std::invalid_argument("cannot read surface file " + selector);
    }
  } else {
    text = resolve(selector, ".surf", embedded::surface_files());
    if (!text) throw std::invalid_argument("unknown surface " + selector);
  }
  SurfaceModel s = parse_surface(*text);
  s.validate();
  return s;
}

std::optional<CertificateScript> load_certificate(const std::string& selector) {
  std::optional<std::string> text;
  if (is_path(selector)) {
    text = read_file(selector);
    if (!text) {
      throw std::invalid_argument("cannot read certificate file " + selector);
    }
  } else {
    text = resolve(selector, ".cert", embedded::certificate_files());
    if (!text) return std::nullopt;
  }
  return parse_certificate(*text);
}

}  // namespace wdp
