#pragma once

#include <memory>

#include "cubics/chartable.hpp"
#include "cubics/motives.hpp"
#include "cubics/rootsys.hpp"

namespace cubics {

/// Shared immutable state for one process: validated tables, the generated
/// and matched Weyl group, and the memoized class builders. The group is
/// cached on disk when CUBICS_CACHE_DIR is set.
class Context {
 public:
  static Context& get();

  const CharacterTable& e6() const { return e6_; }
  const CharacterTable& gtable() const { return gtable_; }
  const Lattice& lattice() const { return lat_; }
  const RootSet& roots() const { return roots_; }
  const LineSet& lines() const { return lines_; }
  const WeylGroup& weyl() const { return weyl_; }
  Motives& motives() { return *motives_; }

 private:
  Context();

  CharacterTable e6_;
  CharacterTable gtable_;
  Lattice lat_;
  RootSet roots_;
  LineSet lines_;
  WeylGroup weyl_;
  std::unique_ptr<Motives> motives_;
};

}  // namespace cubics
