#include "oraclebench/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "oraclebench/errors.hpp"

namespace oraclebench {

namespace {

constexpr double kNormalizationEps = 1e-10;

std::vector<Register> build_registers(
    const std::vector<std::pair<std::string, unsigned>>& regs, unsigned& total) {
  std::vector<Register> out;
  std::set<std::string> seen;
  total = 0;
  for (const auto& [name, width] : regs) {
    if (width < 1) throw LayoutError("register '" + name + "' has zero width");
    if (!seen.insert(name).second)
      throw LayoutError("duplicate register name '" + name + "'");
    total += width;
    out.push_back(Register{name, width, 0});
  }
  if (total > kMaxQubits)
    throw LayoutError("layout needs " + std::to_string(total) +
                      " qubits, more than the supported " +
                      std::to_string(kMaxQubits));
  unsigned shift = total;
  for (auto& r : out) {
    shift -= r.width;
    r.shift = shift;
  }
  return out;
}

void require_normalized(const StateVector& state) {
  const double norm = state.norm_squared();
  if (std::abs(norm - 1.0) > kNormalizationEps)
    throw ContractViolation("measurement on a state with squared norm " +
                            std::to_string(norm));
}

void require_same_width(const Register& a, const Register& b) {
  if (a.width != b.width)
    throw LayoutError("registers '" + a.name + "' and '" + b.name +
                      "' differ in width");
}

void require_distinct(std::string_view a, std::string_view b) {
  if (a == b) throw LayoutError("register '" + std::string(a) + "' used twice");
}

// Bit position (from the LSB of the full index) of qubit `q` of `reg`.
unsigned qubit_position(const RegisterLayout& layout, const QubitRef& ref) {
  const Register& r = layout.at(ref.reg);
  if (ref.qubit >= r.width)
    throw DomainError("qubit " + std::to_string(ref.qubit) +
                      " out of range for register '" + r.name + "'");
  return r.shift + (r.width - 1 - ref.qubit);
}

}  // namespace

void Tolerance::validate() const {
  if (!(exact_eps > 0.0 && exact_eps <= abs_eps && abs_eps < 1e-3))
    throw DomainError("tolerances must satisfy 0 < exact_eps <= abs_eps < 1e-3");
}

RegisterLayout::RegisterLayout(
    std::initializer_list<std::pair<std::string, unsigned>> regs)
    : RegisterLayout(std::vector<std::pair<std::string, unsigned>>(regs)) {}

RegisterLayout::RegisterLayout(std::vector<std::pair<std::string, unsigned>> regs) {
  unsigned total = 0;
  registers_ = build_registers(regs, total);
  total_qubits_ = total;
}

const Register& RegisterLayout::at(std::string_view name) const {
  for (const auto& r : registers_)
    if (r.name == name) return r;
  throw LayoutError("unknown register '" + std::string(name) + "'");
}

bool RegisterLayout::contains(std::string_view name) const {
  return std::any_of(registers_.begin(), registers_.end(),
                     [&](const Register& r) { return r.name == name; });
}

BasisIndex RegisterLayout::encode(const std::map<std::string, BasisIndex>& values) const {
  BasisIndex index = 0;
  for (const auto& [name, value] : values) {
    const Register& r = at(name);
    if (value >= r.dimension())
      throw DomainError("value " + std::to_string(value) +
                        " does not fit register '" + name + "' of width " +
                        std::to_string(r.width));
    index |= value << r.shift;
  }
  return index;
}

BasisIndex RegisterLayout::extract(BasisIndex index, std::string_view name) const {
  const Register& r = at(name);
  return (index >> r.shift) & (r.dimension() - 1);
}

RegisterLayout RegisterLayout::concat(const RegisterLayout& other) const {
  std::vector<std::pair<std::string, unsigned>> regs;
  for (const auto& r : registers_) regs.emplace_back(r.name, r.width);
  for (const auto& r : other.registers_) regs.emplace_back(r.name, r.width);
  return RegisterLayout(std::move(regs));
}

bool operator==(const RegisterLayout& a, const RegisterLayout& b) {
  if (a.registers_.size() != b.registers_.size()) return false;
  for (std::size_t i = 0; i < a.registers_.size(); ++i) {
    if (a.registers_[i].name != b.registers_[i].name ||
        a.registers_[i].width != b.registers_[i].width)
      return false;
  }
  return true;
}

StateVector::StateVector(RegisterLayout layout)
    : layout_(std::move(layout)), amplitudes_(layout_.dimension()) {
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(RegisterLayout layout, std::vector<Amplitude> amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::from_amplitudes(RegisterLayout layout,
                                         std::vector<Amplitude> amplitudes) {
  if (amplitudes.size() != layout.dimension())
    throw LayoutError("expected " + std::to_string(layout.dimension()) +
                      " amplitudes, got " + std::to_string(amplitudes.size()));
  return StateVector(std::move(layout), std::move(amplitudes));
}

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return sum;
}

StateVector prepare_basis(const RegisterLayout& layout,
                          const std::map<std::string, BasisIndex>& values) {
  const BasisIndex index = layout.encode(values);
  StateVector state(layout);
  state[0] = 0.0;
  state[index] = 1.0;
  return state;
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  RegisterLayout layout = a.layout().concat(b.layout());
  std::vector<Amplitude> amps(layout.dimension());
  const std::size_t nb = b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == Amplitude{}) continue;
    for (std::size_t j = 0; j < nb; ++j) amps[i * nb + j] = a[i] * b[j];
  }
  return StateVector::from_amplitudes(std::move(layout), std::move(amps));
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw LayoutError("inner product of mismatched states");
  Amplitude sum{};
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

double max_abs_difference(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw LayoutError("comparing mismatched states");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

RegisterBlocks::RegisterBlocks(const RegisterLayout& layout,
                               std::span<const std::string_view> registers) {
  std::vector<const Register*> regs;
  BasisIndex target_mask = 0;
  unsigned local_bits = 0;
  for (auto name : registers) {
    const Register& r = layout.at(name);
    if (target_mask & r.mask())
      throw LayoutError("register '" + r.name + "' listed twice");
    target_mask |= r.mask();
    local_bits += r.width;
    regs.push_back(&r);
  }

  offsets_.resize(std::size_t{1} << local_bits);
  for (BasisIndex local = 0; local < offsets_.size(); ++local) {
    BasisIndex off = 0;
    unsigned consumed = 0;
    for (auto it = regs.rbegin(); it != regs.rend(); ++it) {
      const Register& r = **it;
      off |= ((local >> consumed) & (r.dimension() - 1)) << r.shift;
      consumed += r.width;
    }
    offsets_[local] = off;
  }

  const unsigned total = layout.total_qubits();
  for (unsigned pos = 0; pos < total;) {
    if (target_mask >> pos & 1) {
      ++pos;
      continue;
    }
    unsigned len = 0;
    while (pos + len < total && !(target_mask >> (pos + len) & 1)) ++len;
    context_runs_.push_back(Run{pos, len});
    context_bits_ += len;
    pos += len;
  }
}

BasisIndex RegisterBlocks::base(std::size_t context) const {
  BasisIndex b = 0;
  for (const auto& run : context_runs_) {
    b |= (static_cast<BasisIndex>(context) & ((BasisIndex{1} << run.length) - 1))
         << run.position;
    context >>= run.length;
  }
  return b;
}

void transform_register_blocks(StateVector& state,
                               std::span<const std::string_view> registers,
                               const std::function<void(std::span<Amplitude>)>& fn) {
  const RegisterBlocks blocks(state.layout(), registers);
  std::vector<Amplitude> buffer(blocks.block_size());
  auto amps = state.amplitudes();
  for (std::size_t c = 0; c < blocks.block_count(); ++c) {
    const BasisIndex base = blocks.base(c);
    for (std::size_t l = 0; l < buffer.size(); ++l)
      buffer[l] = amps[base + blocks.offset(l)];
    fn(buffer);
    for (std::size_t l = 0; l < buffer.size(); ++l)
      amps[base + blocks.offset(l)] = buffer[l];
  }
}

void permute_register_blocks(StateVector& state,
                             std::span<const std::string_view> registers,
                             std::span<const BasisIndex> destination) {
  const RegisterBlocks blocks(state.layout(), registers);
  if (destination.size() != blocks.block_size())
    throw DomainError("permutation table size does not match the registers");
  std::vector<bool> hit(destination.size(), false);
  for (auto d : destination) {
    if (d >= destination.size() || hit[d])
      throw DomainError("register permutation table is not a bijection");
    hit[d] = true;
  }

  std::vector<Amplitude> buffer(blocks.block_size());
  auto amps = state.amplitudes();
  for (std::size_t c = 0; c < blocks.block_count(); ++c) {
    const BasisIndex base = blocks.base(c);
    for (std::size_t l = 0; l < buffer.size(); ++l)
      buffer[l] = amps[base + blocks.offset(l)];
    for (std::size_t l = 0; l < buffer.size(); ++l)
      amps[base + blocks.offset(destination[l])] = buffer[l];
  }
}

void apply_register_diagonal(StateVector& state,
                             std::span<const std::string_view> registers,
                             std::span<const Amplitude> phases) {
  const RegisterBlocks blocks(state.layout(), registers);
  if (phases.size() != blocks.block_size())
    throw DomainError("phase table size does not match the registers");
  auto amps = state.amplitudes();
  for (std::size_t c = 0; c < blocks.block_count(); ++c) {
    const BasisIndex base = blocks.base(c);
    for (std::size_t l = 0; l < phases.size(); ++l)
      amps[base + blocks.offset(l)] *= phases[l];
  }
}

void apply_hadamard(StateVector& state, std::string_view reg, unsigned qubit) {
  const unsigned pos = qubit_position(state.layout(), QubitRef{std::string(reg), qubit});
  const std::size_t stride = std::size_t{1} << pos;
  const double s = (1.0 / std::numbers::sqrt2);
  auto amps = state.amplitudes();
  for (std::size_t hi = 0; hi < amps.size(); hi += 2 * stride) {
    for (std::size_t lo = hi; lo < hi + stride; ++lo) {
      const Amplitude a0 = amps[lo];
      const Amplitude a1 = amps[lo + stride];
      amps[lo] = s * (a0 + a1);
      amps[lo + stride] = s * (a0 - a1);
    }
  }
}

void apply_hadamard_layer(StateVector& state, std::string_view reg) {
  const unsigned width = state.layout().at(reg).width;
  for (unsigned q = 0; q < width; ++q) apply_hadamard(state, reg, q);
}

void apply_qft(StateVector& state, std::string_view reg, bool inverse) {
  const BasisIndex dim = state.layout().at(reg).dimension();
  const double sign = inverse ? -1.0 : 1.0;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  // roots[m] = exp(+-2 pi i m / N), indexed by jk mod N
  std::vector<Amplitude> roots(dim);
  for (BasisIndex m = 0; m < dim; ++m)
    roots[m] = std::polar(scale, sign * 2.0 * std::numbers::pi *
                                     static_cast<double>(m) /
                                     static_cast<double>(dim));
  std::vector<Amplitude> out(dim);
  const std::string_view regs[] = {reg};
  transform_register_blocks(state, regs, [&](std::span<Amplitude> block) {
    for (BasisIndex k = 0; k < dim; ++k) {
      Amplitude sum{};
      for (BasisIndex j = 0; j < dim; ++j)
        sum += roots[(j * k) & (dim - 1)] * block[j];
      out[k] = sum;
    }
    std::copy(out.begin(), out.end(), block.begin());
  });
}

void apply_parity_reflection(StateVector& state, std::string_view reg) {
  const BasisIndex dim = state.layout().at(reg).dimension();
  std::vector<BasisIndex> dest(dim);
  for (BasisIndex j = 0; j < dim; ++j) dest[j] = (dim - j) & (dim - 1);
  const std::string_view regs[] = {reg};
  permute_register_blocks(state, regs, dest);
}

void apply_controlled_swap(StateVector& state, const QubitRef& control,
                           std::string_view reg_a, std::string_view reg_b) {
  const RegisterLayout& layout = state.layout();
  const Register& a = layout.at(reg_a);
  const Register& b = layout.at(reg_b);
  require_distinct(reg_a, reg_b);
  require_same_width(a, b);
  const Register& c = layout.at(control.reg);
  if (control.reg == reg_a || control.reg == reg_b)
    throw LayoutError("control qubit lies inside a swapped register");
  if (control.qubit >= c.width)
    throw DomainError("control qubit out of range for register '" + c.name + "'");

  const unsigned w = a.width;
  const BasisIndex reg_dim = a.dimension();
  const BasisIndex control_bit = BasisIndex{1} << (c.width - 1 - control.qubit);
  std::vector<BasisIndex> dest(c.dimension() * reg_dim * reg_dim);
  for (BasisIndex l = 0; l < dest.size(); ++l) {
    const BasisIndex cv = l >> (2 * w);
    const BasisIndex av = (l >> w) & (reg_dim - 1);
    const BasisIndex bv = l & (reg_dim - 1);
    dest[l] = (cv & control_bit) ? (cv << (2 * w)) | (bv << w) | av : l;
  }
  const std::string_view regs[] = {control.reg, reg_a, reg_b};
  permute_register_blocks(state, regs, dest);
}

void apply_equality_comparator(StateVector& state, std::string_view reg_a,
                               std::string_view reg_b, const QubitRef& flag) {
  const RegisterLayout& layout = state.layout();
  const Register& a = layout.at(reg_a);
  const Register& b = layout.at(reg_b);
  require_distinct(reg_a, reg_b);
  require_same_width(a, b);
  const Register& f = layout.at(flag.reg);
  if (flag.reg == reg_a || flag.reg == reg_b)
    throw LayoutError("flag qubit lies inside a compared register");
  if (flag.qubit >= f.width)
    throw DomainError("flag qubit out of range for register '" + f.name + "'");

  const unsigned w = a.width;
  const BasisIndex reg_dim = a.dimension();
  const BasisIndex flag_bit = BasisIndex{1} << (f.width - 1 - flag.qubit);
  std::vector<BasisIndex> dest(f.dimension() * reg_dim * reg_dim);
  for (BasisIndex l = 0; l < dest.size(); ++l) {
    const BasisIndex av = (l >> w) & (reg_dim - 1);
    const BasisIndex bv = l & (reg_dim - 1);
    dest[l] = av == bv ? l ^ (flag_bit << (2 * w)) : l;
  }
  const std::string_view regs[] = {flag.reg, reg_a, reg_b};
  permute_register_blocks(state, regs, dest);
}

void apply_adder(StateVector& state, std::string_view src, std::string_view dst) {
  const Register& a = state.layout().at(src);
  const Register& b = state.layout().at(dst);
  require_distinct(src, dst);
  require_same_width(a, b);
  const BasisIndex dim = a.dimension();
  std::vector<BasisIndex> dest(dim * dim);
  for (BasisIndex av = 0; av < dim; ++av)
    for (BasisIndex bv = 0; bv < dim; ++bv)
      dest[av * dim + bv] = av * dim + ((av + bv) & (dim - 1));
  const std::string_view regs[] = {src, dst};
  permute_register_blocks(state, regs, dest);
}

void apply_swap(StateVector& state, std::string_view reg_a, std::string_view reg_b) {
  const Register& a = state.layout().at(reg_a);
  const Register& b = state.layout().at(reg_b);
  require_distinct(reg_a, reg_b);
  require_same_width(a, b);
  const BasisIndex dim = a.dimension();
  std::vector<BasisIndex> dest(dim * dim);
  for (BasisIndex av = 0; av < dim; ++av)
    for (BasisIndex bv = 0; bv < dim; ++bv) dest[av * dim + bv] = bv * dim + av;
  const std::string_view regs[] = {reg_a, reg_b};
  permute_register_blocks(state, regs, dest);
}

std::vector<double> register_distribution(const StateVector& state,
                                          std::string_view reg) {
  require_normalized(state);
  const Register& r = state.layout().at(reg);
  std::vector<double> dist(r.dimension(), 0.0);
  const auto amps = state.amplitudes();
  for (BasisIndex i = 0; i < amps.size(); ++i)
    dist[(i >> r.shift) & (r.dimension() - 1)] += std::norm(amps[i]);
  return dist;
}

double measure_probability(const StateVector& state, std::string_view reg,
                           BasisIndex value) {
  const Register& r = state.layout().at(reg);
  if (value >= r.dimension())
    throw DomainError("value " + std::to_string(value) + " out of range for register '" +
                      r.name + "'");
  require_normalized(state);
  double p = 0.0;
  const auto amps = state.amplitudes();
  for (BasisIndex i = 0; i < amps.size(); ++i)
    if (((i >> r.shift) & (r.dimension() - 1)) == value) p += std::norm(amps[i]);
  return p;
}

double uniform_unit(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

MeasurementResult sample_measurement(const StateVector& state, std::string_view reg,
                                     std::uint64_t seed) {
  const auto dist = register_distribution(state, reg);
  const double u = uniform_unit(seed);
  BasisIndex value = 0;
  double cumulative = 0.0;
  for (BasisIndex v = 0; v < dist.size(); ++v) {
    if (dist[v] <= 0.0) continue;
    value = v;  // last outcome with support absorbs rounding at the top end
    cumulative += dist[v];
    if (u < cumulative) break;
  }

  const Register& r = state.layout().at(reg);
  std::vector<Amplitude> amps(state.amplitudes().begin(), state.amplitudes().end());
  const double scale = 1.0 / std::sqrt(dist[value]);
  for (BasisIndex i = 0; i < amps.size(); ++i) {
    if (((i >> r.shift) & (r.dimension() - 1)) == value)
      amps[i] *= scale;
    else
      amps[i] = 0.0;
  }
  return {value, StateVector::from_amplitudes(state.layout(), std::move(amps))};
}

}  // namespace oraclebench
