#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wdp/certificate.hpp"
#include "wdp/surface.hpp"

namespace wdp {

namespace embedded {
// Built-in copies of the data/ files, keyed by stem ("s45"). Definitions are
// generated at configure time by EmbedDataFiles.cmake.
const std::map<std::string, std::string>& surface_files();
const std::map<std::string, std::string>& certificate_files();
}  // namespace embedded

// The shipped surfaces in declared order (Case A, Case B, Case C).
const std::vector<std::string>& builtin_surface_names();

// Loads and validates a surface. A selector containing a path separator or
// a '.' is read from disk; a bare name resolves through WDP_SURFACE_DIR
// (when set and the file exists) and then the embedded defaults.
SurfaceModel load_surface(const std::string& selector);

// Companion certificate for a surface name, resolved the same way; absent
// when the surface ships without one.
std::optional<CertificateScript> load_certificate(const std::string& selector);

}  // namespace wdp
