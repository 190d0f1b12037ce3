#pragma once

#include "pdmsusy/expr.hpp"

#include <optional>
#include <string_view>

namespace pdmsusy {

/// von Roos ordering triple; alpha + beta + gamma = -1.
struct OrderingParameters {
  double alpha = 0.0;
  double beta = -1.0;
  double gamma = 0.0;

  /// Builds the triple with beta = -1 - alpha - gamma.
  static OrderingParameters from_alpha_gamma(double alpha, double gamma);

  /// Throws InvalidArgument unless |alpha + beta + gamma + 1| <= 1e-12.
  void validate() const;
};

enum class NamedOrdering { bdd, bastard, zk, likuhn };

/// BenDaniel-Duke (0,-1,0), Bastard (-1,0,0), Zhu-Kroemer (-1/2,0,-1/2),
/// Li-Kuhn (0,-1/2,-1/2).
OrderingParameters named_ordering(NamedOrdering name);

std::optional<NamedOrdering> parse_ordering_name(std::string_view name);
std::string_view ordering_name(NamedOrdering name);

struct Interval {
  double lo = -12.0;
  double hi = 12.0;

  bool contains(double z) const noexcept { return z >= lo && z <= hi; }
  double length() const noexcept { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

inline constexpr Interval kDefaultDomain{-12.0, 12.0};
inline constexpr std::size_t kDefaultMassScanPoints = 1024;

struct MassSample {
  double m;
  double dm;
  double d2m;
};

/// Dimensionless mass M(z) (units of m0) on a closed interval, together with
/// its exact first and second derivatives.
///
/// Construction scans `scan_points` equally spaced points (endpoints
/// included) and throws NonPositiveMass at the first point where M <= 0 or
/// M cannot be evaluated.
class MassProfile {
 public:
  explicit MassProfile(Expression m, Interval domain = kDefaultDomain,
                       std::size_t scan_points = kDefaultMassScanPoints);

  /// M == 1 on the given domain.
  static MassProfile constant_unit(Interval domain = kDefaultDomain);

  const Expression& m() const noexcept { return m_; }
  const Expression& dm() const noexcept { return dm_; }
  const Expression& d2m() const noexcept { return d2m_; }
  const Interval& domain() const noexcept { return domain_; }

  /// M^{-1/2} and its first two exact derivatives.
  const Expression& inv_sqrt() const noexcept { return q_; }
  const Expression& d_inv_sqrt() const noexcept { return dq_; }
  const Expression& d2_inv_sqrt() const noexcept { return d2q_; }
  /// M^{1/2}.
  const Expression& sqrt_m() const noexcept { return sqrt_m_; }

 private:
  Expression m_, dm_, d2m_;
  Expression q_, dq_, d2q_;
  Expression sqrt_m_;
  Interval domain_;
};

/// M, M', M'' at z; DomainError outside the profile domain.
MassSample mass_at(const MassProfile& p, double z);

/// The rational-square family M(z) = [(a + z^2) / (1 + z^2)]^2 with
/// massShapeParameter a. M -> 1 in the tails and M(0) = a^2.
Expression rational_square_mass(double a);

/// U_{alpha gamma} = -((alpha+gamma)/2) M''/M^2 + (alpha gamma + alpha + gamma) M'^2/M^3.
Expression modification_term(const MassProfile& p, const OrderingParameters& o);

struct EffectivePotential {
  Expression v0;
  Expression u;
  OrderingParameters ordering;

  Expression veff() const { return v0 + u; }
  double operator()(double z) const { return v0.evaluate(z) + u.evaluate(z); }
};

/// Bundles V0 with the ordering's modification term. V0 is probed on the
/// profile's scan points so evaluation failures surface here as DomainError.
EffectivePotential effective_potential(const Expression& v0, const MassProfile& p,
                                       const OrderingParameters& o);

}  // namespace pdmsusy
