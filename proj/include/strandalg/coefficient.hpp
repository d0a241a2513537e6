#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace strandalg {

using BigInt = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

class Coefficient;

enum class ModelKind { Equicharacteristic, Mixed };

// A truncated model of a regular local ring with regular system of
// parameters s_1..s_n.
//
// Equicharacteristic: k[s_1..s_n] modulo monomials of degree > D, k = F_p or
// Q. Mixed: s_1 = p, and the ring is Z/p^{D+1}[s_2..s_n] modulo p^a s^b with
// a + |b| > D.
class CoefficientModel {
 public:
  static CoefficientModel equicharacteristic(std::uint64_t characteristic,
                                             std::vector<std::string> names,
                                             std::size_t degree_cap);
  static CoefficientModel mixed(std::uint64_t prime,
                                std::vector<std::string> names,
                                std::size_t degree_cap);

  ModelKind kind() const noexcept { return data_->kind; }
  // p for F_p and for the mixed model, 0 for Q.
  std::uint64_t characteristic() const noexcept { return data_->characteristic; }
  std::size_t generator_count() const noexcept { return data_->names.size(); }
  const std::vector<std::string>& names() const noexcept { return data_->names; }
  std::size_t degree_cap() const noexcept { return data_->degree_cap; }
  // Number of polynomial variables: n, or n - 1 in the mixed model.
  std::size_t variable_count() const noexcept;

  CoefficientModel with_degree_cap(std::size_t degree_cap) const;

  Coefficient zero() const;
  Coefficient one() const;
  Coefficient constant(const Scalar& value) const;
  // s_i for 0-based i.
  Coefficient generator(std::size_t i) const;
  std::optional<std::size_t> find_generator(const std::string& name) const;

  // Modulus applied to the coefficient of a monomial of total degree
  // `degree`; nullopt means no reduction (rationals).
  std::optional<BigInt> modulus(std::size_t degree) const;

  friend bool operator==(const CoefficientModel& lhs, const CoefficientModel& rhs);

 private:
  struct Data {
    ModelKind kind;
    std::uint64_t characteristic;
    std::vector<std::string> names;
    std::size_t degree_cap;
  };
  explicit CoefficientModel(Data data);

  std::shared_ptr<const Data> data_;
};

using Monomial = std::vector<std::uint16_t>;

// Element of a CoefficientModel: a map from monomials in the polynomial
// variables to scalars, with no zero entries and all truncations applied.
class Coefficient {
 public:
  explicit Coefficient(CoefficientModel model);

  const CoefficientModel& model() const noexcept { return model_; }
  const std::map<Monomial, Scalar>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  // Constant is the coefficient of the empty monomial. In the mixed model it
  // is still an element of Z/p^{D+1}.
  Scalar constant_term() const;
  bool is_constant() const;

  // Adds value * monomial, applying truncation.
  void add_term(const Monomial& m, const Scalar& value);

  // The part of the element not divisible by s_j: drops monomials containing
  // s_j, or (mixed, j = 0) reduces every coefficient to its p-adic digit.
  Coefficient without_generator(std::size_t j) const;
  // (r0, r1) with *this = r0 + s_i * r1 and r0 free of s_i. In the mixed
  // model with i = 0, r0 has coefficients in {0, ..., p-1}.
  std::pair<Coefficient, Coefficient> split_generator(std::size_t i) const;

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& other);
  Coefficient& operator-=(const Coefficient& other);
  friend Coefficient operator+(Coefficient lhs, const Coefficient& rhs) {
    return lhs += rhs;
  }
  friend Coefficient operator-(Coefficient lhs, const Coefficient& rhs) {
    return lhs -= rhs;
  }
  friend Coefficient operator*(const Coefficient& lhs, const Coefficient& rhs);

  friend bool operator==(const Coefficient& lhs, const Coefficient& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

  std::string to_string() const;

 private:
  CoefficientModel model_;
  std::map<Monomial, Scalar> terms_;
};

std::string scalar_to_string(const Scalar& s);

}  // namespace strandalg
