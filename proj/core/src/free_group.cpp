#include "lawless/free_group.hpp"

namespace lawless {

FreeBackend::FreeBackend(int rank) : rank_(rank) {
  if (rank < 1) throw InvalidArgument("free group rank must be positive");
  for (int i = 1; i <= rank; ++i) {
    auto g = FreeWord::generator(rank, i);
    generators_.push_back({g.str(), g, false});
  }
}

}  // namespace lawless
