#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>

#include "fk/apoly.hpp"
#include "fk/fk_series.hpp"

namespace fk::cache {

// Directory named by FK_CACHE_DIR, created on demand; nullopt when unset.
std::optional<std::filesystem::path> directory();

// Table seeded from the cache when one is present.
HTable load_htable(std::ostream& log);
// Rewrites the cached table if `table` knows more entries.
void store_htable(const HTable& table, std::ostream& log);

MRecursion recursion(long r, OperatorVariant variant, std::ostream& log);

}  // namespace fk::cache
