#include "wfm/vectcat.hpp"

#include "wfm/errors.hpp"

namespace wfm {

TensorFunctor compose(TensorFunctor outer, TensorFunctor inner) {
  return {outer.carrier_dim * inner.carrier_dim};
}

CarrierNat::CarrierNat(TensorFunctor source, TensorFunctor target, RatMatrix mat)
    : source_(source), target_(target), mat_(std::move(mat)) {
  if (mat_.rows() != target_.carrier_dim || mat_.cols() != source_.carrier_dim)
    throw ShapeMismatch("carrier matrix is " + std::to_string(mat_.rows()) + "x" +
                        std::to_string(mat_.cols()) + ", functors need " +
                        std::to_string(target_.carrier_dim) + "x" +
                        std::to_string(source_.carrier_dim));
}

CarrierNat CarrierNat::identity(TensorFunctor f) {
  return {f, f, RatMatrix::identity(f.carrier_dim)};
}

RatMatrix component_at(const CarrierNat& t, VectObj x) {
  return kron(t.mat(), RatMatrix::identity(x.dim));
}

CarrierNat operator*(const CarrierNat& after, const CarrierNat& before) {
  if (after.source() != before.target())
    throw ShapeMismatch("vertical composite of non-composable transformations");
  return {before.source(), after.target(), after.mat() * before.mat()};
}

CarrierNat horizontal(const CarrierNat& outer, const CarrierNat& inner) {
  return {compose(outer.source(), inner.source()), compose(outer.target(), inner.target()),
          kron(outer.mat(), inner.mat())};
}

CarrierNat whisker_left(TensorFunctor f, const CarrierNat& t) {
  return horizontal(CarrierNat::identity(f), t);
}

CarrierNat whisker_right(const CarrierNat& t, TensorFunctor f) {
  return horizontal(t, CarrierNat::identity(f));
}

}  // namespace wfm
