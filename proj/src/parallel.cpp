#include "extquot/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace extquot {

unsigned resolve_jobs(std::optional<unsigned> requested) {
  if (const char* env = std::getenv("EXTQUOT_JOBS"); env != nullptr && *env != '\0') {
    unsigned value = 0;
    const char* last = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, last, value);
    if (ec == std::errc() && ptr == last && value > 0) return value;
  }
  if (requested && *requested > 0) return *requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace extquot
