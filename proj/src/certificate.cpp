#include "linkhom/certificate.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace linkhom {

namespace {

constexpr const char* kMagic = "linkhom-omega-certificate v1";

[[noreturn]] void bad(int lineno, const std::string& what) {
  throw std::invalid_argument("certificate line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

std::string render_certificate(const OmegaCertificate& cert) {
  std::ostringstream out;
  out << kMagic << "\n";
  out << "k " << cert.k << "\n";
  out << "algorithm " << cert.algorithm << "\n";
  out << "rows " << cert.row_labels.size() << "\n";
  for (std::size_t r = 0; r < cert.row_labels.size(); ++r)
    out << "row " << (r + 1) << " " << cert.row_labels[r] << "\n";
  out << "coords " << cert.omega.size() << "\n";
  for (std::size_t c = 0; c < cert.stats.size(); ++c)
    out << "stats " << (c + 1) << " terms " << cert.stats[c].term_count << " degree "
        << cert.stats[c].degree << " content " << cert.stats[c].content << "\n";
  for (std::size_t c = 0; c < cert.omega.size(); ++c) {
    out << "coord " << (c + 1) << "\n";
    out << cert.omega[c].canonical_text();
    out << "end coord\n";
  }
  out << "end certificate\n";
  return out.str();
}

OmegaCertificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++lineno;
    return true;
  };

  if (!next_line() || line != kMagic)
    throw std::invalid_argument("certificate: missing or unknown format line");

  OmegaCertificate cert;
  std::size_t n_rows = 0, n_coords = 0;
  if (!next_line() || sscanf(line.c_str(), "k %d", &cert.k) != 1) bad(lineno, "expected 'k <n>'");
  if (!next_line() || line.rfind("algorithm ", 0) != 0) bad(lineno, "expected 'algorithm <name>'");
  cert.algorithm = line.substr(10);
  if (!next_line() || sscanf(line.c_str(), "rows %zu", &n_rows) != 1) bad(lineno, "expected 'rows <n>'");
  for (std::size_t r = 0; r < n_rows; ++r) {
    if (!next_line()) bad(lineno, "missing row label");
    std::istringstream ls(line);
    std::string key, label;
    std::size_t idx = 0;
    if (!(ls >> key >> idx >> label) || key != "row" || idx != r + 1)
      bad(lineno, "expected 'row " + std::to_string(r + 1) + " <label>'");
    cert.row_labels.push_back(label);
  }
  if (!next_line() || sscanf(line.c_str(), "coords %zu", &n_coords) != 1)
    bad(lineno, "expected 'coords <n>'");
  for (std::size_t c = 0; c < n_coords; ++c) {
    if (!next_line()) bad(lineno, "missing stats line");
    CoordStats st;
    std::istringstream ls(line);
    std::string key, kw_terms, kw_degree, kw_content, content_str;
    std::size_t idx = 0;
    if (!(ls >> key >> idx >> kw_terms >> st.term_count >> kw_degree >> st.degree >>
          kw_content >> content_str) ||
        key != "stats" || idx != c + 1 || kw_terms != "terms" || kw_degree != "degree" ||
        kw_content != "content")
      bad(lineno, "malformed stats line");
    st.content = Int(content_str);
    cert.stats.push_back(st);
  }
  for (std::size_t c = 0; c < n_coords; ++c) {
    if (!next_line() || line != "coord " + std::to_string(c + 1))
      bad(lineno, "expected 'coord " + std::to_string(c + 1) + "'");
    std::string body;
    while (true) {
      if (!next_line()) bad(lineno, "unterminated coord block");
      if (line == "end coord") break;
      body += line;
      body += "\n";
    }
    cert.omega.push_back(Poly::parse_canonical_text(cert.k, body));
  }
  if (!next_line() || line != "end certificate") bad(lineno, "expected 'end certificate'");

  for (std::size_t c = 0; c < n_coords; ++c) {
    PolyMeasure meas = cert.omega[c].measure();
    if (meas.term_count != cert.stats[c].term_count || meas.total_degree != cert.stats[c].degree ||
        meas.content != cert.stats[c].content)
      throw std::invalid_argument("certificate: stats for coord " + std::to_string(c + 1) +
                                  " do not match the polynomial body");
  }
  return cert;
}

void write_certificate_file(const OmegaCertificate& cert, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << render_certificate(cert);
  if (!out) throw std::runtime_error("write failed: " + path);
}

OmegaCertificate read_certificate_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_certificate(buf.str());
}

}  // namespace linkhom
