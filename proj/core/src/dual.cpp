#include "weakhopf/dual.hpp"

namespace weakhopf {

Space dual_space(const Space& space) {
  std::vector<std::string> labels;
  labels.reserve(space.dim());
  for (std::size_t i = 0; i < space.dim(); ++i) labels.push_back("p_" + space.label(i));
  return Space::basis(space.field(), std::move(labels));
}

WeakHopf dual_weak_hopf(const WeakHopf& wh) {
  const Space d = dual_space(wh.space());
  const Space dd = tensor_space(d, d);
  const Space k = Space::scalars(wh.field());
  LinMap mult = wh.comult().transpose(dd, d);
  Vector unit(d, wh.counit().transpose(k, d).column(0).coords());
  LinMap comult = wh.mult().transpose(d, dd);
  LinMap counit = LinMap::functional(Vector(d, wh.unit().coords()));
  LinMap antipode = wh.antipode().transpose(d, d);
  return WeakHopf::unchecked(d, std::move(mult), std::move(unit), std::move(comult), std::move(counit),
                             std::move(antipode));
}

}  // namespace weakhopf
