#include "qaffine/qalgebra/generators.hpp"

#include <charconv>

#include "qaffine/error.hpp"

namespace qaffine {

std::string Generator::label() const {
  const std::string i = std::to_string(index);
  switch (kind) {
    case GenKind::Ep: return "E+" + i;
    case GenKind::Em: return "E-" + i;
    case GenKind::K: return "K" + i;
    case GenKind::Kinv: return "K" + i + "^-1";
    case GenKind::H: return "H" + i;
    case GenKind::D: return "D";
  }
  return "?";
}

Generator Generator::parse(std::string_view text) {
  if (text == "D") return d();
  auto bad = [&] { return Error("bad-generator", "cannot parse generator label '" + std::string(text) + "'"); };
  Generator g;
  std::string_view rest;
  if (text.starts_with("E+")) {
    g.kind = GenKind::Ep;
    rest = text.substr(2);
  } else if (text.starts_with("E-")) {
    g.kind = GenKind::Em;
    rest = text.substr(2);
  } else if (text.starts_with("H")) {
    g.kind = GenKind::H;
    rest = text.substr(1);
  } else if (text.starts_with("K")) {
    g.kind = GenKind::K;
    rest = text.substr(1);
    if (rest.ends_with("^-1")) {
      g.kind = GenKind::Kinv;
      rest.remove_suffix(3);
    }
  } else {
    throw bad();
  }
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), g.index);
  if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size() || g.index < 0) throw bad();
  return g;
}

std::vector<Generator> chevalley_generators(const CartanData& c) {
  std::vector<Generator> out;
  for (int i = 0; i < c.nodes(); ++i) {
    out.push_back(Generator::ep(i));
    out.push_back(Generator::em(i));
    out.push_back(Generator::k(i));
    out.push_back(Generator::kinv(i));
  }
  return out;
}

GradationSpec GradationSpec::homogeneous(const CartanData& c) {
  GradationSpec g{"homogeneous", std::vector<mpq_class>(static_cast<std::size_t>(c.nodes()), 0)};
  g.s[0] = 1;
  return g;
}

GradationSpec GradationSpec::principal(const CartanData& c) {
  return {"principal", std::vector<mpq_class>(static_cast<std::size_t>(c.nodes()), 1)};
}

GradationSpec GradationSpec::spin(const CartanData& c) {
  GradationSpec g{"spin", {}};
  for (int di : c.d) g.s.emplace_back(1, di);
  for (auto& v : g.s) v.canonicalize();
  return g;
}

GradationSpec GradationSpec::named(std::string_view name, const CartanData& c) {
  if (name == "homogeneous") return homogeneous(c);
  if (name == "principal") return principal(c);
  if (name == "spin") return spin(c);
  throw Error("bad-gradation", "unknown gradation '" + std::string(name) + "'");
}

GradationSpec GradationSpec::negated() const {
  GradationSpec g = *this;
  g.name = "-" + name;
  for (auto& v : g.s) v = -v;
  return g;
}

}  // namespace qaffine
