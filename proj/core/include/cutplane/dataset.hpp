#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "cutplane/linalg.hpp"

namespace cutplane {

// One training example. The label is -1 or +1 and the feature vector is
// nonzero; both are enforced at every ingestion point.
struct LabeledPoint {
  Vec x;
  int y = 1;
};

// Ordered collection of labeled points sharing one dimension. Ordering is
// significant: indices into `points` identify examples everywhere else.
struct Dataset {
  std::size_t dim = 0;
  std::vector<LabeledPoint> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

// Unlabeled pool for active learning. Same validation rules as Dataset.
struct Pool {
  std::size_t dim = 0;
  std::vector<Vec> points;

  std::size_t size() const { return points.size(); }
};

// Validates and appends one example: finite coordinates, nonzero vector,
// label in {-1, +1}, dimension equal to dataset.dim (which is set by the
// first point when the dataset is empty).
void add_point(Dataset& dataset, Vec x, int y);

// The constraint direction contributed by a labeled point: y * x.
Vec signed_point(const LabeledPoint& p);

// Dense format: one line per point, `dim` numeric feature fields followed by
// one label field in {-1, +1}, separated by commas. No header line. See
// docs/formats.md for the grammar.
Dataset load_dense_csv(std::istream& in);
Dataset load_dense_csv_file(const std::string& path);

// Sparse format: one line per point, the label first, then one-based
// index:value pairs separated by whitespace. Omitted coordinates are zero.
// The dimension is the largest index seen unless `dim` is given (nonzero).
// See docs/formats.md for the grammar.
Dataset load_sparse(std::istream& in, std::size_t dim = 0);
Dataset load_sparse_file(const std::string& path, std::size_t dim = 0);

// Drops labels, preserving order.
Pool to_pool(const Dataset& dataset);

}  // namespace cutplane
