#include "oraclebench/permutation.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "oraclebench/errors.hpp"

namespace oraclebench {

namespace {

void check_bits(unsigned n) {
  if (n < 1 || n > kMaxTableBits)
    throw DomainError("table width n=" + std::to_string(n) + " outside 1.." +
                      std::to_string(kMaxTableBits));
}

std::vector<BasisIndex> invert_table(const FunctionTable& table) {
  std::vector<BasisIndex> inverse(table.domain_size(), table.domain_size());
  for (BasisIndex x = 0; x < table.domain_size(); ++x) {
    const BasisIndex y = table(x);
    if (inverse[y] != table.domain_size())
      throw NotAPermutation("value " + std::to_string(y) + " is the image of both " +
                            std::to_string(inverse[y]) + " and " + std::to_string(x));
    inverse[y] = x;
  }
  return inverse;
}

}  // namespace

FunctionTable::FunctionTable(unsigned n, std::vector<BasisIndex> images)
    : n_(n), images_(std::move(images)) {
  check_bits(n);
  if (images_.size() != domain_size())
    throw DomainError("expected " + std::to_string(domain_size()) + " images, got " +
                      std::to_string(images_.size()));
  for (auto y : images_)
    if (y >= domain_size())
      throw DomainError("image " + std::to_string(y) + " outside Z_" +
                        std::to_string(domain_size()));
}

FunctionTable FunctionTable::constant(unsigned n, BasisIndex value) {
  check_bits(n);
  return FunctionTable(n, std::vector<BasisIndex>(BasisIndex{1} << n, value));
}

bool FunctionTable::is_bijection() const {
  std::vector<bool> seen(domain_size(), false);
  for (auto y : images_) {
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

Permutation::Permutation(unsigned n, std::vector<BasisIndex> images)
    : Permutation(FunctionTable(n, std::move(images))) {}

Permutation::Permutation(const FunctionTable& table)
    : table_(table), inverse_(invert_table(table)) {}

Permutation Permutation::identity(unsigned n) {
  check_bits(n);
  std::vector<BasisIndex> images(BasisIndex{1} << n);
  std::iota(images.begin(), images.end(), BasisIndex{0});
  return Permutation(n, std::move(images));
}

Permutation Permutation::random(unsigned n, std::uint64_t seed) {
  check_bits(n);
  std::vector<BasisIndex> images(BasisIndex{1} << n);
  std::iota(images.begin(), images.end(), BasisIndex{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = images.size() - 1; i > 0; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i);
    std::swap(images[i], images[pick(rng)]);
  }
  return Permutation(n, std::move(images));
}

Permutation Permutation::inverse() const { return Permutation(bits(), inverse_); }

Permutation Permutation::after(const Permutation& first) const {
  if (first.bits() != bits()) throw DomainError("composing permutations of different n");
  std::vector<BasisIndex> images(domain_size());
  for (BasisIndex x = 0; x < domain_size(); ++x) images[x] = (*this)(first(x));
  return Permutation(bits(), std::move(images));
}

Permutation read_permutation(std::istream& in) {
  long long n = 0;
  if (!(in >> n)) throw ParseError("permutation file: missing n on line 1");
  if (n < 1 || n > static_cast<long long>(kMaxTableBits))
    throw ParseError("permutation file: n=" + std::to_string(n) + " outside 1.." +
                     std::to_string(kMaxTableBits));
  const std::size_t size = std::size_t{1} << n;
  std::vector<BasisIndex> images;
  images.reserve(size);
  long long value = 0;
  while (in >> value) {
    if (value < 0 || static_cast<std::size_t>(value) >= size)
      throw ParseError("permutation file: image " + std::to_string(value) +
                       " out of range");
    images.push_back(static_cast<BasisIndex>(value));
  }
  if (!in.eof()) throw ParseError("permutation file: non-numeric token");
  if (images.size() != size)
    throw ParseError("permutation file: expected " + std::to_string(size) +
                     " images, found " + std::to_string(images.size()));
  try {
    return Permutation(static_cast<unsigned>(n), std::move(images));
  } catch (const NotAPermutation& e) {
    throw ParseError(std::string("permutation file: ") + e.what());
  }
}

Permutation load_permutation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open permutation file " + path.string());
  return read_permutation(in);
}

void write_permutation(std::ostream& out, const Permutation& perm) {
  out << perm.bits() << '\n';
  for (BasisIndex x = 0; x < perm.domain_size(); ++x)
    out << (x ? " " : "") << perm(x);
  out << '\n';
}

}  // namespace oraclebench
