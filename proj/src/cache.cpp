#include "nfs/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nfs {

namespace {
constexpr const char* kMagic = "nfs-cache 1";
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void save_entry(const std::filesystem::path& file, const CacheEntry& entry) {
  if (entry.key.find('\n') != std::string::npos) throw std::invalid_argument("save_entry: key contains a newline");
  std::error_code ec;
  if (file.has_parent_path()) {
    std::filesystem::create_directories(file.parent_path(), ec);
    if (ec) throw std::runtime_error("cache: cannot create " + file.parent_path().string() + ": " + ec.message());
  }
  const auto tmp = std::filesystem::path(file.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
    std::ostringstream sum;
    sum << std::hex << fnv1a(entry.payload);
    out << kMagic << '\n' << entry.key << '\n' << entry.payload.size() << ' ' << sum.str() << '\n' << entry.payload;
    if (!out) throw std::runtime_error("cache: write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) throw std::runtime_error("cache: cannot rename into " + file.string() + ": " + ec.message());
}

std::optional<CacheEntry> load_entry(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  std::string magic, key, header;
  if (!std::getline(in, magic) || magic != kMagic) return std::nullopt;
  if (!std::getline(in, key) || !std::getline(in, header)) return std::nullopt;
  std::istringstream hs(header);
  std::size_t size = 0;
  std::uint64_t sum = 0;
  if (!(hs >> size >> std::hex >> sum)) return std::nullopt;
  std::string payload(size, '\0');
  if (size > 0 && !in.read(payload.data(), static_cast<std::streamsize>(size))) return std::nullopt;
  if (in.peek() != std::char_traits<char>::eof()) return std::nullopt;
  if (fnv1a(payload) != sum) return std::nullopt;
  return CacheEntry{key, payload};
}

std::string field_cache_key(std::uint32_t p, std::uint32_t e) {
  return "field " + std::to_string(p) + " " + std::to_string(e);
}

std::string serialize_field(const FiniteField& field) {
  std::ostringstream out;
  out << field.characteristic() << ' ' << field.degree() << '\n';
  for (std::size_t i = 0; i < field.modulus().size(); ++i) out << (i ? " " : "") << field.modulus()[i];
  out << '\n';
  for (std::size_t i = 0; i < field.exp_table().size(); ++i) out << (i ? " " : "") << field.exp_table()[i];
  out << '\n';
  return out.str();
}

FiniteField deserialize_field(const std::string& payload) {
  std::istringstream in(payload);
  std::uint32_t p = 0, e = 0;
  if (!(in >> p >> e) || e == 0) throw std::invalid_argument("deserialize_field: bad header");
  std::vector<std::uint32_t> modulus(e);
  for (auto& c : modulus) {
    if (!(in >> c)) throw std::invalid_argument("deserialize_field: bad modulus");
  }
  std::vector<FieldElement> exp;
  std::uint32_t x;
  while (in >> x) exp.push_back(x);
  return FiniteField::from_tables(p, e, std::move(modulus), std::move(exp));
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv("NFS_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

FiniteField load_or_build_field(const std::filesystem::path& dir, std::uint32_t p, std::uint32_t e, bool* hit) {
  const auto file = dir / ("field_" + std::to_string(p) + "_" + std::to_string(e) + ".cache");
  const std::string key = field_cache_key(p, e);
  if (auto entry = load_entry(file); entry && entry->key == key) {
    try {
      FiniteField f = deserialize_field(entry->payload);
      if (f.characteristic() == p && f.degree() == e) {
        if (hit) *hit = true;
        return f;
      }
    } catch (const std::exception&) {
      // fall through to a rebuild
    }
  }
  if (hit) *hit = false;
  FiniteField f = make_field(p, e);
  save_entry(file, {key, serialize_field(f)});
  return f;
}

}  // namespace nfs
