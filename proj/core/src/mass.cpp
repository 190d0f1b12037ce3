#include "pdmsusy/mass.hpp"

#include "pdmsusy/errors.hpp"

#include <cmath>

namespace pdmsusy {

OrderingParameters OrderingParameters::from_alpha_gamma(double alpha, double gamma) {
  return {alpha, -1.0 - alpha - gamma, gamma};
}

void OrderingParameters::validate() const {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma))
    throw InvalidArgument("ordering parameters must be finite");
  if (std::abs(alpha + beta + gamma + 1.0) > 1e-12)
    throw InvalidArgument("ordering parameters must satisfy alpha + beta + gamma = -1");
}

OrderingParameters named_ordering(NamedOrdering name) {
  switch (name) {
    case NamedOrdering::bdd:
      return {0.0, -1.0, 0.0};
    case NamedOrdering::bastard:
      return {-1.0, 0.0, 0.0};
    case NamedOrdering::zk:
      return {-0.5, 0.0, -0.5};
    case NamedOrdering::likuhn:
      return {0.0, -0.5, -0.5};
  }
  return {};
}

std::optional<NamedOrdering> parse_ordering_name(std::string_view name) {
  if (name == "bdd") return NamedOrdering::bdd;
  if (name == "bastard") return NamedOrdering::bastard;
  if (name == "zk") return NamedOrdering::zk;
  if (name == "likuhn") return NamedOrdering::likuhn;
  return std::nullopt;
}

std::string_view ordering_name(NamedOrdering name) {
  switch (name) {
    case NamedOrdering::bdd:
      return "bdd";
    case NamedOrdering::bastard:
      return "bastard";
    case NamedOrdering::zk:
      return "zk";
    case NamedOrdering::likuhn:
      return "likuhn";
  }
  return {};
}

MassProfile::MassProfile(Expression m, Interval domain, std::size_t scan_points)
    : m_(std::move(m)), domain_(domain) {
  if (!(domain_.lo < domain_.hi) || !std::isfinite(domain_.lo) || !std::isfinite(domain_.hi))
    throw InvalidArgument("mass profile domain must be a finite interval with lo < hi");
  if (scan_points < 2) throw InvalidArgument("mass positivity scan needs at least 2 points");

  const double step = domain_.length() / static_cast<double>(scan_points - 1);
  for (std::size_t i = 0; i < scan_points; ++i) {
    const double z = (i + 1 == scan_points) ? domain_.hi : domain_.lo + step * i;
    double value = 0.0;
    try {
      value = m_.evaluate(z);
    } catch (const DomainError&) {
      throw NonPositiveMass(z);
    }
    if (!(value > 0.0)) throw NonPositiveMass(z);
  }

  dm_ = differentiate(m_);
  d2m_ = differentiate(dm_);
  q_ = pow(m_, -0.5);
  dq_ = differentiate(q_);
  d2q_ = differentiate(dq_);
  sqrt_m_ = sqrt(m_);
}

MassProfile MassProfile::constant_unit(Interval domain) {
  return MassProfile(Expression::constant(1.0), domain);
}

MassSample mass_at(const MassProfile& p, double z) {
  if (!p.domain().contains(z)) throw DomainError(z, "outside the mass profile domain");
  return {p.m().evaluate(z), p.dm().evaluate(z), p.d2m().evaluate(z)};
}

Expression rational_square_mass(double a) {
  const Expression z2 = pow(Expression::variable(), 2.0);
  return pow((a + z2) / (1.0 + z2), 2.0);
}

Expression modification_term(const MassProfile& p, const OrderingParameters& o) {
  const double half_sum = 0.5 * (o.alpha + o.gamma);
  const double cross = o.alpha * o.gamma + o.alpha + o.gamma;
  return (-half_sum) * (p.d2m() / pow(p.m(), 2.0)) + cross * (pow(p.dm(), 2.0) / pow(p.m(), 3.0));
}

EffectivePotential effective_potential(const Expression& v0, const MassProfile& p,
                                       const OrderingParameters& o) {
  o.validate();
  const Interval d = p.domain();
  const std::size_t n = kDefaultMassScanPoints;
  for (std::size_t i = 0; i < n; ++i) {
    const double z = (i + 1 == n) ? d.hi : d.lo + d.length() / (n - 1) * i;
    (void)v0.evaluate(z);
  }
  return {v0, modification_term(p, o), o};
}

}  // namespace pdmsusy
