#include "cutplane/compression.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "cutplane/errors.hpp"
#include "cutplane/numfmt.hpp"

namespace cutplane {

namespace {
constexpr const char* kMagic = "cutplane-scheme";
constexpr int kFormatVersion = 1;
}  // namespace

CompressionScheme extract_scheme(const LocalizationTrace& trace,
                                 const OracleStrategy& strategy) {
  return {strategy, trace.plane_indices, trace.w_final};
}

Dataset reduced_dataset(const Dataset& dataset,
                        const std::vector<std::size_t>& indices) {
  Dataset out;
  out.dim = dataset.dim;
  std::unordered_set<std::size_t> seen;
  for (std::size_t idx : indices) {
    if (idx >= dataset.size()) throw IndexOutOfRange(idx, dataset.size());
    if (seen.insert(idx).second) out.points.push_back(dataset.points[idx]);
  }
  return out;
}

Vec replay(const Dataset& dataset, const CompressionScheme& scheme) {
  Dataset reduced = reduced_dataset(dataset, scheme.indices);
  return localize(reduced, scheme.strategy).w_final;
}

double generalization_report(std::size_t n_total, std::size_t n_compressed,
                             std::size_t errors) {
  if (n_compressed >= n_total)
    throw DegenerateDenominator(n_total, n_compressed);
  double denom = static_cast<double>(n_total - n_compressed);
  return static_cast<double>(errors) / denom + std::sqrt(1.0 / denom);
}

void serialize_scheme(const CompressionScheme& scheme, std::ostream& out) {
  out << kMagic << ' ' << kFormatVersion << '\n';
  out << "strategy " << strategy_name(scheme.strategy.kind) << ' '
      << scheme.strategy.seed << '\n';
  out << "planes " << scheme.indices.size() << '\n';
  for (std::size_t idx : scheme.indices) out << idx << '\n';
  out << "predictor " << scheme.predictor.size();
  for (double v : scheme.predictor) out << ' ' << format_double(v);
  out << '\n';
}

CompressionScheme parse_scheme(std::istream& in) {
  CompressionScheme scheme;
  std::string magic, token;
  int version = 0;
  if (!(in >> magic >> version) || magic != kMagic || version != kFormatVersion)
    throw ParseError("not a scheme file (bad header)");
  std::uint64_t seed = 0;
  if (!(in >> token) || token != "strategy" || !(in >> token))
    throw ParseError("missing strategy line");
  scheme.strategy.kind = parse_strategy(token);
  if (!(in >> seed)) throw ParseError("missing strategy seed");
  scheme.strategy.seed = seed;
  std::size_t n_planes = 0;
  if (!(in >> token) || token != "planes" || !(in >> n_planes))
    throw ParseError("missing planes count");
  scheme.indices.resize(n_planes);
  for (std::size_t i = 0; i < n_planes; ++i)
    if (!(in >> scheme.indices[i]))
      throw ParseError("missing plane index " + std::to_string(i));
  std::size_t dim = 0;
  if (!(in >> token) || token != "predictor" || !(in >> dim))
    throw ParseError("missing predictor line");
  scheme.predictor.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(in >> token))
      throw ParseError("missing predictor coordinate " + std::to_string(i));
    scheme.predictor[i] = parse_double_strict(token);
  }
  return scheme;
}

void save_scheme(const CompressionScheme& scheme, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DatasetUnavailable(path);
  serialize_scheme(scheme, out);
}

CompressionScheme load_scheme(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatasetUnavailable(path);
  return parse_scheme(in);
}

}  // namespace cutplane
