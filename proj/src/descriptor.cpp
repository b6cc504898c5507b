#include "lendepth/descriptor.hpp"

#include <algorithm>

#include "lendepth/errors.hpp"

namespace lendepth {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Canonical factor order: (family, rank) descending.
bool factor_before(const FactorPower& a, const FactorPower& b) { return a.type > b.type; }

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Characteristic Characteristic::prime(std::uint64_t p) {
  if (!is_prime(p)) throw ValidationError("characteristic " + std::to_string(p) + " is neither 0 nor a prime");
  return Characteristic(p);
}

GroupDescriptor::GroupDescriptor(std::uint64_t u, std::uint64_t z, const std::vector<SimpleType>& factors)
    : u_(u), z_(z) {
  if (u > kMaxSolubleDim || z > kMaxSolubleDim) throw ValidationError("soluble dimension exceeds the cap 2^40");
  for (SimpleType t : factors) add(t, 1);
}

GroupDescriptor GroupDescriptor::power(SimpleType t, std::uint32_t k) {
  GroupDescriptor g;
  if (k > 0) g.add(t, k);
  return g;
}

void GroupDescriptor::add(SimpleType t, std::uint64_t count) {
  require_canonical(t);
  auto it = std::find_if(factors_.begin(), factors_.end(), [&](const FactorPower& f) { return f.type == t; });
  if (it != factors_.end()) {
    count += it->count;
    if (count > kMaxMultiplicity) throw ValidationError("factor multiplicity exceeds the cap 2^20");
    it->count = static_cast<std::uint32_t>(count);
    return;
  }
  if (count > kMaxMultiplicity) throw ValidationError("factor multiplicity exceeds the cap 2^20");
  FactorPower fp{t, static_cast<std::uint32_t>(count)};
  factors_.insert(std::upper_bound(factors_.begin(), factors_.end(), fp, factor_before), fp);
}

std::uint64_t GroupDescriptor::dim() const {
  std::uint64_t d = u_ + z_;
  for (const auto& f : factors_) d += f.count * dim_simple(f.type);
  return d;
}

std::uint64_t GroupDescriptor::factor_count() const noexcept {
  std::uint64_t n = 0;
  for (const auto& f : factors_) n += f.count;
  return n;
}

std::uint64_t GroupDescriptor::semisimple_rank() const noexcept {
  std::uint64_t n = 0;
  for (const auto& f : factors_) n += std::uint64_t{f.count} * f.type.rank;
  return n;
}

std::optional<SimpleType> GroupDescriptor::as_simple() const {
  if (u_ == 0 && z_ == 0 && factors_.size() == 1 && factors_[0].count == 1) return factors_[0].type;
  return std::nullopt;
}

std::optional<FactorPower> GroupDescriptor::as_pure_power() const {
  if (u_ == 0 && z_ == 0 && factors_.size() == 1) return factors_[0];
  return std::nullopt;
}

std::uint32_t GroupDescriptor::multiplicity(SimpleType t) const noexcept {
  for (const auto& f : factors_)
    if (f.type == t) return f.count;
  return 0;
}

GroupDescriptor GroupDescriptor::with_unipotent(std::uint64_t u) const {
  GroupDescriptor g = *this;
  if (u > kMaxSolubleDim) throw ValidationError("soluble dimension exceeds the cap 2^40");
  g.u_ = u;
  return g;
}

GroupDescriptor GroupDescriptor::with_torus(std::uint64_t z) const {
  GroupDescriptor g = *this;
  if (z > kMaxSolubleDim) throw ValidationError("soluble dimension exceeds the cap 2^40");
  g.z_ = z;
  return g;
}

GroupDescriptor GroupDescriptor::plus_factor(SimpleType t, std::uint32_t count) const {
  GroupDescriptor g = *this;
  if (count > 0) g.add(t, count);
  return g;
}

GroupDescriptor GroupDescriptor::minus_factor(SimpleType t) const {
  GroupDescriptor g = *this;
  auto it = std::find_if(g.factors_.begin(), g.factors_.end(), [&](const FactorPower& f) { return f.type == t; });
  if (it == g.factors_.end()) throw ValidationError("descriptor has no factor " + t.name());
  if (--it->count == 0) g.factors_.erase(it);
  return g;
}

GroupDescriptor GroupDescriptor::semisimple_quotient() const {
  GroupDescriptor g;
  g.factors_ = factors_;
  return g;
}

GroupDescriptor operator+(const GroupDescriptor& a, const GroupDescriptor& b) {
  GroupDescriptor g(a.u_ + b.u_, a.z_ + b.z_);
  g.factors_ = a.factors_;
  for (const auto& f : b.factors_) g.add(f.type, f.count);
  return g;
}

std::string GroupDescriptor::render() const {
  if (is_trivial()) return "1";
  std::string out;
  auto term = [&](const std::string& s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  if (u_ > 0) term("U" + std::to_string(u_));
  for (const auto& f : factors_) term(f.count == 1 ? f.type.name() : f.type.name() + "^" + std::to_string(f.count));
  if (z_ > 0) term("T" + std::to_string(z_));
  return out;
}

bool descriptor_less(const GroupDescriptor& a, const GroupDescriptor& b) {
  if (a.unipotent_dim() != b.unipotent_dim()) return a.unipotent_dim() < b.unipotent_dim();
  if (a.torus_dim() != b.torus_dim()) return a.torus_dim() < b.torus_dim();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end(),
                                      [](const FactorPower& x, const FactorPower& y) {
                                        if (x.type != y.type) return x.type < y.type;
                                        return x.count < y.count;
                                      });
}

}  // namespace lendepth
