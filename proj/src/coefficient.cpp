#include "strandalg/coefficient.hpp"

#include <numeric>

#include "strandalg/errors.hpp"

namespace strandalg {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::size_t degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::size_t{0});
}

void check_names(const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw InputError("empty generator name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) {
        throw InputError("duplicate generator name '" + names[i] + "'");
      }
    }
  }
}

}  // namespace

CoefficientModel::CoefficientModel(Data data)
    : data_(std::make_shared<const Data>(std::move(data))) {}

CoefficientModel CoefficientModel::equicharacteristic(
    std::uint64_t characteristic, std::vector<std::string> names,
    std::size_t degree_cap) {
  if (characteristic != 0 && !is_prime(characteristic)) {
    throw InputError("characteristic must be 0 or a prime");
  }
  check_names(names);
  return CoefficientModel(
      Data{ModelKind::Equicharacteristic, characteristic, std::move(names), degree_cap});
}

CoefficientModel CoefficientModel::mixed(std::uint64_t prime,
                                         std::vector<std::string> names,
                                         std::size_t degree_cap) {
  if (!is_prime(prime)) throw InputError("mixed model needs a prime");
  if (names.empty()) {
    throw InputError("mixed model needs at least the generator standing for p");
  }
  check_names(names);
  return CoefficientModel(Data{ModelKind::Mixed, prime, std::move(names), degree_cap});
}

std::size_t CoefficientModel::variable_count() const noexcept {
  return kind() == ModelKind::Mixed ? generator_count() - 1 : generator_count();
}

CoefficientModel CoefficientModel::with_degree_cap(std::size_t degree_cap) const {
  Data d = *data_;
  d.degree_cap = degree_cap;
  return CoefficientModel(std::move(d));
}

Coefficient CoefficientModel::zero() const { return Coefficient(*this); }

Coefficient CoefficientModel::one() const { return constant(1); }

Coefficient CoefficientModel::constant(const Scalar& value) const {
  Coefficient c(*this);
  c.add_term(Monomial(variable_count(), 0), value);
  return c;
}

Coefficient CoefficientModel::generator(std::size_t i) const {
  if (i >= generator_count()) throw PreconditionError("generator index out of range");
  if (kind() == ModelKind::Mixed && i == 0) {
    return constant(Scalar(characteristic()));
  }
  const std::size_t var = kind() == ModelKind::Mixed ? i - 1 : i;
  Monomial m(variable_count(), 0);
  m[var] = 1;
  Coefficient c(*this);
  c.add_term(m, 1);
  return c;
}

std::optional<std::size_t> CoefficientModel::find_generator(
    const std::string& name) const {
  for (std::size_t i = 0; i < names().size(); ++i) {
    if (names()[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<BigInt> CoefficientModel::modulus(std::size_t degree) const {
  if (kind() == ModelKind::Equicharacteristic) {
    if (characteristic() == 0) return std::nullopt;
    return BigInt(characteristic());
  }
  if (degree > degree_cap()) return BigInt(1);
  return boost::multiprecision::pow(BigInt(characteristic()),
                                    static_cast<unsigned>(degree_cap() + 1 - degree));
}

bool operator==(const CoefficientModel& lhs, const CoefficientModel& rhs) {
  if (lhs.data_ == rhs.data_) return true;
  return lhs.kind() == rhs.kind() &&
         lhs.characteristic() == rhs.characteristic() &&
         lhs.names() == rhs.names() && lhs.degree_cap() == rhs.degree_cap();
}

Coefficient::Coefficient(CoefficientModel model) : model_(std::move(model)) {}

Scalar Coefficient::constant_term() const {
  auto it = terms_.find(Monomial(model_.variable_count(), 0));
  return it == terms_.end() ? Scalar(0) : it->second;
}

bool Coefficient::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && degree(terms_.begin()->first) == 0);
}

void Coefficient::add_term(const Monomial& m, const Scalar& value) {
  if (m.size() != model_.variable_count()) {
    throw PreconditionError("monomial has the wrong number of variables");
  }
  const std::size_t deg = degree(m);
  if (deg > model_.degree_cap()) return;
  Scalar sum = value;
  auto it = terms_.find(m);
  if (it != terms_.end()) sum += it->second;
  if (auto mod = model_.modulus(deg)) {
    if (denominator(sum) != 1) {
      throw PreconditionError("non-integral scalar in a modular coefficient ring");
    }
    BigInt r = numerator(sum) % *mod;
    if (r < 0) r += *mod;
    sum = Scalar(r);
  }
  if (sum == 0) {
    if (it != terms_.end()) terms_.erase(it);
  } else if (it != terms_.end()) {
    it->second = sum;
  } else {
    terms_.emplace(m, sum);
  }
}

std::pair<Coefficient, Coefficient> Coefficient::split_generator(std::size_t i) const {
  if (i >= model_.generator_count()) {
    throw PreconditionError("generator index out of range");
  }
  Coefficient r0(model_);
  Coefficient r1(model_);
  if (model_.kind() == ModelKind::Mixed && i == 0) {
    const BigInt p(model_.characteristic());
    for (const auto& [m, c] : terms_) {
      const BigInt value = numerator(c);
      const BigInt digit = value % p;
      r0.add_term(m, Scalar(digit));
      r1.add_term(m, Scalar((value - digit) / p));
    }
    return {std::move(r0), std::move(r1)};
  }
  const std::size_t var = model_.kind() == ModelKind::Mixed ? i - 1 : i;
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) {
      r0.add_term(m, c);
    } else {
      Monomial lowered = m;
      --lowered[var];
      r1.add_term(lowered, c);
    }
  }
  return {std::move(r0), std::move(r1)};
}

Coefficient Coefficient::without_generator(std::size_t j) const {
  return split_generator(j).first;
}

Coefficient Coefficient::operator-() const {
  Coefficient out(model_);
  for (const auto& [m, c] : terms_) out.add_term(m, -c);
  return out;
}

Coefficient& Coefficient::operator+=(const Coefficient& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Coefficient operator*(const Coefficient& lhs, const Coefficient& rhs) {
  if (!(lhs.model_ == rhs.model_)) {
    throw PreconditionError("coefficients from different models");
  }
  Coefficient out(lhs.model_);
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) {
      Monomial m(ml.size());
      for (std::size_t k = 0; k < m.size(); ++k) {
        m[k] = static_cast<std::uint16_t>(ml[k] + mr[k]);
      }
      out.add_term(m, cl * cr);
    }
  }
  return out;
}

std::string scalar_to_string(const Scalar& s) {
  if (denominator(s) == 1) return numerator(s).str();
  return numerator(s).str() + "/" + denominator(s).str();
}

std::string Coefficient::to_string() const {
  if (terms_.empty()) return "0";
  const std::size_t offset = model_.kind() == ModelKind::Mixed ? 1 : 0;
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar value = c;
    if (!first) {
      if (value < 0) {
        out += " - ";
        value = -value;
      } else {
        out += " + ";
      }
    }
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += model_.names()[k + offset];
      if (m[k] > 1) mono += "^" + std::to_string(m[k]);
    }
    if (mono.empty()) {
      out += scalar_to_string(value);
    } else if (value == 1) {
      out += mono;
    } else if (value == -1) {
      out += "-" + mono;
    } else {
      out += scalar_to_string(value) + "*" + mono;
    }
  }
  return out;
}

}  // namespace strandalg
