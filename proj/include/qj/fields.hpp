#pragma once

// Finite fields F_p and F_{p^k} = F_p[t]/(m(t)).
//
// Fields are interned: there is exactly one Field object per (p, k), and its
// modulus is the smallest monic irreducible of degree k when coefficient
// vectors are read as base-p integers (c_0 least significant). Field objects
// live for the lifetime of the process, so elements carry a plain pointer.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qj/error.hpp"

namespace qj {

inline constexpr int kMaxExtensionDegree = 24;

class Fe;

class Field {
 public:
  /// The prime field F_p. Requires p prime, 5 <= p < 2^30.
  static const Field& prime(std::uint32_t p);
  /// F_{p^k} with the canonical modulus. k == 1 returns the prime field.
  static const Field& extension(std::uint32_t p, int k);

  std::uint32_t p() const { return p_; }
  int degree() const { return k_; }
  bool is_prime() const { return k_ == 1; }
  /// Monic modulus, low coefficient first, size degree()+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  const Field& prime_field() const { return Field::prime(p_); }

  /// Number of elements as a double (only used for budgets / diagnostics).
  double approx_size() const;
  /// p^k when it fits in 64 bits, 0 otherwise.
  std::uint64_t size_or_zero() const;

  Fe zero() const;
  Fe one() const;
  Fe from_int(std::int64_t v) const;
  /// The generator t of F_p[t]/(m).
  Fe gen() const;
  /// The element whose coefficient vector is the base-p expansion of index.
  Fe element_at(std::uint64_t index) const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  // Embedding caches, filled lazily by embed()/restrict_to().
  struct EmbeddingData {
    std::vector<std::uint32_t> gen_image;  // image of t in the larger field
    // Row-reduced system used to pull elements back: rows = larger degree,
    // cols = this degree. Stored as (pivot column per row, reduced rows).
    std::vector<std::vector<std::uint32_t>> pullback;
  };
  const EmbeddingData* cached_embedding(const Field& target) const;
  const EmbeddingData& store_embedding(const Field& target, EmbeddingData data) const;

 private:
  Field(std::uint32_t p, int k, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  int k_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> neg_modulus_;

  mutable std::mutex cache_mutex_;
  mutable std::map<const Field*, std::unique_ptr<EmbeddingData>> embeddings_;

  friend class Fe;
};

/// Element of a finite field. Value type; all operations are pure.
class Fe {
 public:
  Fe() = default;
  explicit Fe(const Field& f) : field_(&f) {}
  static Fe from_coeffs(const Field& f, std::span<const std::uint32_t> c);

  const Field& field() const { return *field_; }
  const Field* field_ptr() const { return field_; }
  bool valid() const { return field_ != nullptr; }

  std::uint32_t coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  std::span<const std::uint32_t> coeffs() const {
    return {c_.data(), static_cast<std::size_t>(field_->degree())};
  }

  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in the prime subfield.
  bool is_prime_subfield() const;

  Fe operator+(const Fe& o) const;
  Fe operator-(const Fe& o) const;
  Fe operator-() const;
  Fe operator*(const Fe& o) const;
  Fe operator/(const Fe& o) const;
  Fe& operator+=(const Fe& o) { return *this = *this + o; }
  Fe& operator-=(const Fe& o) { return *this = *this - o; }
  Fe& operator*=(const Fe& o) { return *this = *this * o; }

  Fe inv() const;
  Fe pow(std::uint64_t e) const;
  /// x -> x^p.
  Fe frobenius() const;
  /// Smallest d with x^{p^d} = x, i.e. the degree of F_p(x) over F_p.
  int algebraic_degree() const;

  /// Throws FieldMismatch when fields differ.
  bool operator==(const Fe& o) const;
  bool operator!=(const Fe& o) const { return !(*this == o); }
  /// Lexicographic order on (c_0, c_1, ...); fields must match.
  std::strong_ordering lex_compare(const Fe& o) const;

  /// `p^k:[c0,c1,...]`
  std::string to_string() const;
  static Fe parse(std::string_view text);

 private:
  void check_same(const Fe& o) const;

  const Field* field_ = nullptr;
  std::array<std::uint32_t, kMaxExtensionDegree> c_{};
};

/// Embeds a into target. Prime-subfield elements embed trivially; otherwise
/// the canonical embedding of F_{p^d} is used (image of t = smallest root of
/// the modulus of F_{p^d} in target). Throws FieldMismatch if impossible.
Fe embed(const Fe& a, const Field& target);

/// Pulls a back into the subfield `sub` along the canonical embedding, or
/// returns nothing if a does not lie in its image.
bool try_restrict(const Fe& a, const Field& sub, Fe& out);

/// True iff p is prime (trial division).
bool is_prime(std::uint64_t p);

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace qj
