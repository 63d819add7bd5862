#pragma once

namespace intrel {

/// Environment variable that overrides the enumeration ceiling.
inline constexpr const char* kEnumLimitEnv = "INTREL_ENUM_LIMIT";
inline constexpr int kDefaultEnumLimit = 5;

/// Largest n for which full sweeps of the relations on [n] are allowed.
/// Starts from INTREL_ENUM_LIMIT when set, otherwise 5.
int enumeration_limit();
void set_enumeration_limit(int n);

/// Throws LimitError naming `what` when n exceeds the ceiling.
void require_enumerable(int n, const char* what);

}  // namespace intrel
