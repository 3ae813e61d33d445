#include "cubics/context.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace cubics {

Context& Context::get() {
  static Context ctx;
  return ctx;
}

Context::Context() {
  e6_ = derive_class_sizes(load_e6_table());
  gtable_ = derive_class_sizes(load_z2s3s3_table());
  lat_ = build_lattice();
  roots_ = enumerate_roots(lat_);
  lines_ = enumerate_lines(lat_);

  const char* cache_dir = std::getenv("CUBICS_CACHE_DIR");
  std::string cache_path;
  if (cache_dir && *cache_dir) {
    std::ostringstream os;
    os << cache_dir << "/weyl-" << std::hex << roots_fingerprint(roots_) << ".bin";
    cache_path = os.str();
    std::ifstream in(cache_path, std::ios::binary);
    if (in && load_weyl(weyl_, in, lat_, roots_, lines_)) {
      motives_ = std::make_unique<Motives>(e6_, weyl_);
      return;
    }
  }

  weyl_ = generate_weyl(lat_, roots_, lines_, e6_.group_order);
  conjugacy_classes(weyl_);
  match_classes(weyl_, e6_);

  if (!cache_path.empty()) {
    std::ofstream out(cache_path, std::ios::binary | std::ios::trunc);
    if (out) save_weyl(weyl_, out);
  }
  motives_ = std::make_unique<Motives>(e6_, weyl_);
}

}  // namespace cubics
