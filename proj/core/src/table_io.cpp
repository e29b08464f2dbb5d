#include "majorarcs/table_io.hpp"

#include <cstdio>
#include <memory>

namespace majorarcs {

namespace {

constexpr char kMagic[5] = {'M', 'A', 'L', 'B', '1'};

struct FileCloser {
  void operator()(std::FILE* f) const { std::fclose(f); }
};
using File = std::unique_ptr<std::FILE, FileCloser>;

void put_u64(std::FILE* f, uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  if (std::fwrite(b, 1, 8, f) != 8) throw std::runtime_error("table dump: short write");
}

uint64_t get_u64(std::FILE* f) {
  unsigned char b[8];
  if (std::fread(b, 1, 8, f) != 8) throw std::runtime_error("table load: truncated file");
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
  return v;
}

}  // namespace

void dump_table(const ArithmeticTable& t, const std::string& path) {
  File f(std::fopen(path.c_str(), "wb"));
  if (!f) throw std::runtime_error("table dump: cannot open " + path);
  if (std::fwrite(kMagic, 1, 5, f.get()) != 5) throw std::runtime_error("table dump: short write");
  put_u64(f.get(), static_cast<uint64_t>(t.kind));
  put_u64(f.get(), static_cast<uint64_t>(t.k));
  put_u64(f.get(), t.limit);
  for (uint64_t n = 1; n <= t.limit; ++n) put_u64(f.get(), static_cast<uint64_t>(t.values[n]));
}

ArithmeticTable load_table(const std::string& path) {
  File f(std::fopen(path.c_str(), "rb"));
  if (!f) throw std::runtime_error("table load: cannot open " + path);
  char magic[5];
  if (std::fread(magic, 1, 5, f.get()) != 5 || std::memcmp(magic, kMagic, 5) != 0)
    throw std::runtime_error("table load: bad magic in " + path);
  ArithmeticTable t;
  t.kind = static_cast<TableKind>(get_u64(f.get()));
  t.k = static_cast<int>(get_u64(f.get()));
  t.limit = get_u64(f.get());
  if (t.limit == 0) throw std::runtime_error("table load: empty table");
  t.values.assign(t.limit + 1, 0);
  for (uint64_t n = 1; n <= t.limit; ++n) t.values[n] = static_cast<int64_t>(get_u64(f.get()));
  return t;
}

}  // namespace majorarcs
