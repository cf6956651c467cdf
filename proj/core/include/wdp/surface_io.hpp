#pragma once

#include <string>

#include "wdp/certificate.hpp"
#include "wdp/surface.hpp"

namespace wdp {

// Text format shared by surface definitions and certificate scripts: INI
// style [section] / [[list entry]] headers with key = value lines, where a
// value is an integer, a "quoted string" (rationals and forms travel as
// strings), or a bracketed array, possibly nested. '#' starts a comment.
// Unknown sections or keys are errors, with the line reported.
SurfaceModel parse_surface(const std::string& text);
CertificateScript parse_certificate(const std::string& text);

std::string serialize_surface(const SurfaceModel& s);
std::string serialize_certificate(const CertificateScript& c);

}  // namespace wdp
