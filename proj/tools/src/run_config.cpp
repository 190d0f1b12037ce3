#include "run_config.hpp"

#include <charconv>
#include <string_view>

namespace pdmsusy::cli {

namespace {

double parse_real(std::string_view text, const std::string& what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw InputError("invalid " + what + ": '" + std::string(text) + "'");
  return v;
}

}  // namespace

Interval parse_domain(const std::string& text) {
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw InputError("domain must be MIN:MAX, got '" + text + "'");
  const std::string_view view(text);
  const double lo = parse_real(view.substr(0, colon), "domain minimum");
  const double hi = parse_real(view.substr(colon + 1), "domain maximum");
  if (!(lo < hi)) throw InputError("domain minimum must be below the maximum");
  return {lo, hi};
}

MassProfile resolve_mass(const RunConfig& cfg) {
  if (cfg.mass) return MassProfile(parse(*cfg.mass), cfg.domain);
  if (cfg.a) return MassProfile(rational_square_mass(*cfg.a), cfg.domain);
  throw InputError("a mass profile is required (--mass EXPR or --a VALUE)");
}

OrderingParameters resolve_ordering(const RunConfig& cfg) {
  if (cfg.alpha.has_value() != cfg.gamma.has_value())
    throw InputError("--alpha and --gamma must be given together");
  if (cfg.alpha) {
    if (cfg.ordering) throw InputError("--ordering conflicts with --alpha/--gamma");
    const auto o = OrderingParameters::from_alpha_gamma(*cfg.alpha, *cfg.gamma);
    o.validate();
    return o;
  }
  const std::string name = cfg.ordering.value_or("zk");
  const auto named = parse_ordering_name(name);
  if (!named) throw InputError("unknown ordering '" + name + "' (bdd, bastard, zk, likuhn)");
  return named_ordering(*named);
}

std::size_t resolve_points(const RunConfig& cfg, std::size_t fallback) {
  const std::size_t n = cfg.points.value_or(fallback);
  if (n < 3) throw InputError("--points must be at least 3");
  return n;
}

}  // namespace pdmsusy::cli
