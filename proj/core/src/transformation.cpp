#include "atomix/transformation.hpp"

#include <numeric>

#include "atomix/error.hpp"

namespace atomix {

Transformation::Transformation(std::vector<State> images) : images_(std::move(images)) {
  for (State q : images_)
    if (q >= images_.size())
      raise(ErrorKind::IndexOutOfRange, "image " + std::to_string(q) + " outside degree " +
                                            std::to_string(images_.size()));
}

Transformation Transformation::identity(std::size_t n) {
  std::vector<State> images(n);
  std::iota(images.begin(), images.end(), State{0});
  return Transformation(std::move(images));
}

Transformation Transformation::constant(std::size_t n, State value) {
  return Transformation(std::vector<State>(n, value));
}

Transformation Transformation::then(const Transformation& g) const {
  if (g.degree() != degree()) raise(ErrorKind::Domain, "composing transformations of different degree");
  Transformation out;
  out.images_.resize(images_.size());
  for (std::size_t q = 0; q < images_.size(); ++q) out.images_[q] = g.images_[images_[q]];
  return out;
}

std::size_t Transformation::rank() const {
  std::vector<bool> hit(images_.size(), false);
  std::size_t r = 0;
  for (State q : images_) {
    if (!hit[q]) {
      hit[q] = true;
      ++r;
    }
  }
  return r;
}

StateSet Transformation::apply(const StateSet& set) const {
  StateSet out(degree());
  for (State q : set.members()) out.insert(images_[q]);
  return out;
}

std::string Transformation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(images_[i]);
  }
  return out + "]";
}

std::size_t rank(const Transformation& t) { return t.rank(); }

}  // namespace atomix
