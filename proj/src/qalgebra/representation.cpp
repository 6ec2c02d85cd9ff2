#include "qaffine/qalgebra/representation.hpp"

#include "qaffine/error.hpp"

namespace qaffine {

namespace {

template <class R>
auto& pick(R& rho, const Generator& g) {
  if (g.kind == GenKind::D) throw Error("bad-generator", "D acts only through the gradation twist");
  auto* list = &rho.k;
  switch (g.kind) {
    case GenKind::Ep: list = &rho.ep; break;
    case GenKind::Em: list = &rho.em; break;
    case GenKind::K: list = &rho.k; break;
    case GenKind::Kinv: list = &rho.kinv; break;
    case GenKind::H: list = &rho.h; break;
    case GenKind::D: break;
  }
  if (g.index < 0 || static_cast<std::size_t>(g.index) >= list->size()) {
    throw Error("bad-generator", "generator " + g.label() + " is not defined in " + rho.name);
  }
  return (*list)[static_cast<std::size_t>(g.index)];
}

}  // namespace

const Mat& Representation::matrix(const Generator& g) const { return pick(*this, g); }
Mat& Representation::matrix(const Generator& g) { return pick(*this, g); }

}  // namespace qaffine
