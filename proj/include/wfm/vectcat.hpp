#pragma once

#include <cstddef>

#include "wfm/ratmat.hpp"

namespace wfm {

/// Object of the base category: a rational vector space of dimension `dim`.
struct VectObj {
  std::size_t dim = 0;
};

/// The endofunctor X ↦ C ⊗ X for a carrier C of dimension carrier_dim.
/// The identity functor has carrier dimension 1.
struct TensorFunctor {
  std::size_t carrier_dim = 1;
  friend bool operator==(const TensorFunctor&, const TensorFunctor&) = default;
};

/// G∘F: carrier G ⊗ F, with G the outer tensor factor.
TensorFunctor compose(TensorFunctor outer, TensorFunctor inner);

/// Natural transformation between tensoring functors given by one carrier
/// matrix (target.carrier_dim × source.carrier_dim). Its component at X is
/// mat ⊗ I_X, so naturality holds by construction.
class CarrierNat {
 public:
  CarrierNat(TensorFunctor source, TensorFunctor target, RatMatrix mat);

  static CarrierNat identity(TensorFunctor f);

  TensorFunctor source() const { return source_; }
  TensorFunctor target() const { return target_; }
  const RatMatrix& mat() const { return mat_; }

  friend bool operator==(const CarrierNat&, const CarrierNat&) = default;

 private:
  TensorFunctor source_;
  TensorFunctor target_;
  RatMatrix mat_;
};

RatMatrix component_at(const CarrierNat& t, VectObj x);

/// Vertical composite after·before.
CarrierNat operator*(const CarrierNat& after, const CarrierNat& before);

/// Horizontal composite s t : S∘T → S'∘T'.
CarrierNat horizontal(const CarrierNat& outer, const CarrierNat& inner);

/// F t, with matrix I_F ⊗ t.
CarrierNat whisker_left(TensorFunctor f, const CarrierNat& t);
/// t F, with matrix t ⊗ I_F.
CarrierNat whisker_right(const CarrierNat& t, TensorFunctor f);

}  // namespace wfm
