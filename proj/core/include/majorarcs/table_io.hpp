#pragma once
// Binary dump/load of sieved tables so CLI runs can skip re-sieving.
// Format: magic "MALB1", then little-endian u64 {kind, k, limit}, then the
// value array as little-endian i64.

#include <string>

#include "majorarcs/arith.hpp"

namespace majorarcs {

void dump_table(const ArithmeticTable& t, const std::string& path);
ArithmeticTable load_table(const std::string& path);  // throws std::runtime_error on bad magic/truncation

}  // namespace majorarcs
