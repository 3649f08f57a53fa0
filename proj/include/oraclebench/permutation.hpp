#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "oraclebench/statevector.hpp"

namespace oraclebench {

inline constexpr unsigned kMaxTableBits = 12;

// f : Z_N -> Z_N with N = 2^n, stored as an explicit image table.
// Not necessarily injective; standard and phase oracles accept any table.
class FunctionTable {
 public:
  FunctionTable(unsigned n, std::vector<BasisIndex> images);

  static FunctionTable constant(unsigned n, BasisIndex value);

  unsigned bits() const { return n_; }
  BasisIndex domain_size() const { return BasisIndex{1} << n_; }
  BasisIndex operator()(BasisIndex x) const { return images_[x]; }
  std::span<const BasisIndex> images() const { return images_; }
  bool is_bijection() const;

  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

 private:
  unsigned n_;
  std::vector<BasisIndex> images_;
};

// A bijection on Z_N together with its inverse table.
class Permutation {
 public:
  // Throws NotAPermutation if the table is not a bijection.
  Permutation(unsigned n, std::vector<BasisIndex> images);
  explicit Permutation(const FunctionTable& table);

  static Permutation identity(unsigned n);
  // Seeded Fisher-Yates shuffle.
  static Permutation random(unsigned n, std::uint64_t seed);

  unsigned bits() const { return table_.bits(); }
  BasisIndex domain_size() const { return table_.domain_size(); }
  BasisIndex operator()(BasisIndex x) const { return table_(x); }
  BasisIndex preimage(BasisIndex y) const { return inverse_[y]; }
  std::span<const BasisIndex> images() const { return table_.images(); }
  const FunctionTable& table() const { return table_; }

  Permutation inverse() const;
  // (*this after first)(x) = (*this)(first(x))
  Permutation after(const Permutation& first) const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.table_ == b.table_;
  }

 private:
  FunctionTable table_;
  std::vector<BasisIndex> inverse_;
};

// Text format: line 1 holds n, line 2 holds the N = 2^n images separated
// by spaces. Loading rejects anything that is not a bijection.
Permutation read_permutation(std::istream& in);
Permutation load_permutation(const std::filesystem::path& path);
void write_permutation(std::ostream& out, const Permutation& perm);

}  // namespace oraclebench
