#include "qconcav/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qconcav {

namespace {

using nlohmann::json;

DensityMatrix from_matrix_json(const json& m) {
  if (!m.contains("re") || !m["re"].is_array())
    throw StateFormatError("state file: matrix needs a \"re\" array");
  const auto& re = m["re"];
  const int dim = static_cast<int>(re.size());
  if (dim < 1) throw StateFormatError("state file: empty matrix");

  const bool has_im = m.contains("im");
  ComplexMatrix out(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (!re[i].is_array() || static_cast<int>(re[i].size()) != dim)
      throw StateFormatError("state file: \"re\" must be a square array of numbers");
    for (int j = 0; j < dim; ++j) {
      double real = re[i][j].get<double>();
      double imag = 0.0;
      if (has_im) {
        const auto& im = m["im"];
        if (!im.is_array() || static_cast<int>(im.size()) != dim ||
            !im[i].is_array() || static_cast<int>(im[i].size()) != dim)
          throw StateFormatError("state file: \"im\" must match the \"re\" shape");
        imag = im[i][j].get<double>();
      }
      out(i, j) = Complex(real, imag);
    }
  }
  try {
    return DensityMatrix(HermitianMatrix(out));
  } catch (const std::exception& e) {
    throw StateFormatError(std::string("state file: matrix is not a density matrix: ") +
                           e.what());
  }
}

}  // namespace

DensityMatrix parse_state_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StateFormatError(std::string("state file: invalid JSON: ") + e.what());
  }
  if (doc.contains("bloch")) {
    const auto& b = doc["bloch"];
    if (!b.is_array() || b.size() != 3)
      throw StateFormatError("state file: \"bloch\" must hold exactly 3 numbers");
    BlochVector w;
    for (int k = 0; k < 3; ++k) w.w[k] = b[k].get<double>();
    try {
      return from_bloch(w);
    } catch (const InvalidBloch& e) {
      throw StateFormatError(std::string("state file: ") + e.what());
    }
  }
  if (doc.contains("matrix")) return from_matrix_json(doc["matrix"]);
  throw StateFormatError("state file: expected a \"bloch\" or \"matrix\" key");
}

DensityMatrix load_state_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StateFormatError("cannot open state file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str());
}

BlochVector parse_bloch_triple(const std::string& text) {
  BlochVector w;
  std::istringstream in(text);
  std::string token;
  int k = 0;
  while (std::getline(in, token, ',')) {
    if (k >= 3) throw std::invalid_argument("bloch triple: expected exactly 3 components");
    std::size_t used = 0;
    w.w[k] = std::stod(token, &used);
    while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
    if (used != token.size())
      throw std::invalid_argument("bloch triple: trailing characters in component");
    ++k;
  }
  if (k != 3) throw std::invalid_argument("bloch triple: expected exactly 3 components");
  return w;
}

}  // namespace qconcav
