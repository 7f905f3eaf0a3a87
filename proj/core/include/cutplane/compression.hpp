#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "cutplane/dataset.hpp"
#include "cutplane/perceptron.hpp"

namespace cutplane {

// Sample compression scheme induced by a localization run: the picked
// cutting-plane indices (in pick order) plus the strategy that picked them
// are enough to reconstruct the predictor from the reduced dataset alone.
struct CompressionScheme {
  OracleStrategy strategy;
  std::vector<std::size_t> indices;
  Vec predictor;
};

CompressionScheme extract_scheme(const LocalizationTrace& trace,
                                 const OracleStrategy& strategy);

// Sub-dataset holding only the points named by `indices`, deduplicated,
// first-occurrence order preserved.
Dataset reduced_dataset(const Dataset& dataset,
                        const std::vector<std::size_t>& indices);

// Reruns the full localization on the reduced dataset. For deterministic
// strategies (all three kinds here) the result equals the original
// predictor bit for bit.
Vec replay(const Dataset& dataset, const CompressionScheme& scheme);

// errors / (n - |S|) + sqrt(1 / (n - |S|)). An indicative generalization
// bound, not a certified one: the constant in front of the square root is 1
// and the confidence term is dropped.
double generalization_report(std::size_t n_total, std::size_t n_compressed,
                             std::size_t errors);

// Text round-trip. Floats use shortest round-trip decimal encoding, so
// serialize -> parse reproduces the scheme bit for bit.
void serialize_scheme(const CompressionScheme& scheme, std::ostream& out);
CompressionScheme parse_scheme(std::istream& in);
void save_scheme(const CompressionScheme& scheme, const std::string& path);
CompressionScheme load_scheme(const std::string& path);

}  // namespace cutplane
