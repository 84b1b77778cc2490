#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace treex {

/// Columnar point cloud: xyz coordinates in meters plus optional intensity
/// and named per-point attribute channels (e.g. "instance_id").
struct PointCloud {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> z;
  /// Reflectance intensity in [0, 65535]; empty when absent.
  std::vector<float> intensity;
  std::map<std::string, std::vector<std::int64_t>> int_channels;
  std::map<std::string, std::vector<double>> float_channels;

  std::size_t size() const { return x.size(); }
  bool empty() const { return x.empty(); }
  bool has_intensity() const { return !intensity.empty(); }

  void reserve(std::size_t n);
  void push_back(double px, double py, double pz);

  std::array<double, 3> point(std::size_t i) const { return {x[i], y[i], z[i]}; }

  /// minx, miny, minz, maxx, maxy, maxz. Cloud must be non-empty.
  std::array<double, 6> bounds() const;

  /// Checks channel lengths, finite coordinates and the intensity range.
  /// Throws ValidationError naming the first offending point.
  void validate() const;

  /// New cloud holding the selected points (all channels carried along).
  PointCloud gather(std::span<const std::uint32_t> indices) const;
};

}  // namespace treex
