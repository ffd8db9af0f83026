#pragma once

#include <string>

#include "linkhom/omega.hpp"

namespace linkhom {

/// Plain-text certificate format, line oriented for diff-ability:
/// header lines `key value...`, then one block of canonical polynomial text
/// per coordinate. parse(render(cert)) round-trips and re-renders to the
/// identical bytes.
std::string render_certificate(const OmegaCertificate& cert);
OmegaCertificate parse_certificate(const std::string& text);

void write_certificate_file(const OmegaCertificate& cert, const std::string& path);
OmegaCertificate read_certificate_file(const std::string& path);

}  // namespace linkhom
