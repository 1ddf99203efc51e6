#pragma once

#include <stdexcept>
#include <string>

namespace tsfem {

// VmsGls and Gls are one scheme: the adjoint-weighted (GLS) and subscale (VMS)
// constructions coincide for linear elements, so both names map to one kernel.
enum class Method {
  Galerkin = 0,
  Supg = 1,
  VmsGls = 2,
  Gls = VmsGls,
  Asu = 3,
  RdSupg = 4,
  RdVms = 5,
};

enum class TauMode { Approx, Exact1D };
enum class OmegaHatMode { Approx, Exact1D };

struct MethodOptions {
  Method method = Method::Galerkin;
  TauMode tau_mode = TauMode::Approx;
  OmegaHatMode omega_hat_mode = OmegaHatMode::Approx;
  bool limiter = false;
};

// limiter defaults on in 2D/3D and off in 1D
inline MethodOptions default_options(Method m, int dim) {
  MethodOptions o;
  o.method = m;
  o.limiter = dim >= 2;
  return o;
}

inline bool is_rd(Method m) { return m == Method::RdSupg || m == Method::RdVms; }

inline std::string method_name(Method m) {
  switch (m) {
    case Method::Galerkin: return "galerkin";
    case Method::Supg: return "supg";
    case Method::VmsGls: return "vms";
    case Method::Asu: return "asu";
    case Method::RdSupg: return "rd-supg";
    case Method::RdVms: return "rd-vms";
  }
  return "?";
}

inline Method method_from_name(const std::string& s) {
  if (s == "galerkin") return Method::Galerkin;
  if (s == "supg") return Method::Supg;
  if (s == "vms" || s == "gls" || s == "vms-gls") return Method::VmsGls;
  if (s == "asu") return Method::Asu;
  if (s == "rd-supg") return Method::RdSupg;
  if (s == "rd-vms") return Method::RdVms;
  throw std::invalid_argument("unknown method: " + s);
}

}  // namespace tsfem
