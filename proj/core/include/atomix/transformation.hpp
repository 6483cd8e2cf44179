#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "atomix/state_set.hpp"

namespace atomix {

/// A total self-map of {0..n-1}, stored as its image list. Products are in
/// diagrammatic order: `f.then(g)` maps q to g(f(q)).
class Transformation {
 public:
  Transformation() = default;
  explicit Transformation(std::vector<State> images);

  static Transformation identity(std::size_t n);
  static Transformation constant(std::size_t n, State value);

  std::size_t degree() const noexcept { return images_.size(); }
  State operator()(State q) const { return images_[q]; }
  std::span<const State> images() const noexcept { return images_; }

  Transformation then(const Transformation& g) const;

  /// Size of the image.
  std::size_t rank() const;
  bool is_permutation() const { return rank() == degree(); }

  /// Image of a subset under the map.
  StateSet apply(const StateSet& set) const;

  /// "[1,2,0]".
  std::string to_string() const;

  friend bool operator==(const Transformation&, const Transformation&) = default;
  friend auto operator<=>(const Transformation&, const Transformation&) = default;

 private:
  std::vector<State> images_;
};

std::size_t rank(const Transformation& t);

}  // namespace atomix

template <>
struct std::hash<atomix::Transformation> {
  std::size_t operator()(const atomix::Transformation& t) const noexcept {
    std::size_t h = t.degree();
    for (auto q : t.images()) h = h * 1000003U ^ q;
    return h;
  }
};
