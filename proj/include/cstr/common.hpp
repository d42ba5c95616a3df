#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cstr {

using Index = Eigen::Index;
using Shape = std::vector<Index>;

template <class S>
using VecX = Eigen::Array<S, Eigen::Dynamic, 1>;

// Row-major matrices throughout; tensor storage is a row-major flattening of
// the shape extents.
template <class S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class S>
using MatMap = Eigen::Map<MatX<S>>;
template <class S>
using CMatMap = Eigen::Map<const MatX<S>>;

inline Index numel(const Shape& s) {
  Index n = 1;
  for (Index d : s) n *= d;
  return n;
}

inline std::string shape_str(const Shape& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ']';
  return os.str();
}

namespace detail {

inline void check(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

inline void check_domain(bool ok, const std::string& msg) {
  if (!ok) throw std::domain_error(msg);
}

}  // namespace detail

// Continuous point (y, x) for bilinear sampling.
struct Point2 {
  double y = 0.0;
  double x = 0.0;
};

// Integer pixel location (y, x).
struct Pixel {
  Index y = 0;
  Index x = 0;
};

inline Index flat_index(const Shape& s, std::initializer_list<Index> idx) {
  Index f = 0;
  std::size_t i = 0;
  for (Index v : idx) {
    f = f * s[i] + v;
    ++i;
  }
  return f;
}

}  // namespace cstr
