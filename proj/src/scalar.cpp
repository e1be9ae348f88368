#include "hopf/scalar.hpp"

#include <charconv>
#include <limits>
#include <sstream>

namespace hopf {

namespace {

using u128 = unsigned __int128;

u128 abs128(__int128 v) { return v < 0 ? u128(-(v + 1)) + 1 : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

mpz_class mpz_from_i128(__int128 v) {
  u128 mag = abs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class r = (hi << 64) + lo;
  return v < 0 ? mpz_class(-r) : r;
}

std::uint64_t mod_reduce(std::int64_t v, std::uint64_t p) {
  auto m = static_cast<std::int64_t>(p);
  std::int64_t r = v % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

std::uint64_t mod_reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_class m(static_cast<unsigned long>(p));
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r.get_ui();
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(p));
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return mod_reduce(t, p);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31))
    throw std::invalid_argument("prime modulus out of range: " + std::to_string(p));
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) {
    std::uint64_t p = 0;
    auto body = text.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc{} || ptr != body.data() + body.size())
      throw std::invalid_argument("bad field descriptor: " + std::string(text));
    return prime(p);
  }
  throw std::invalid_argument("bad field descriptor: " + std::string(text));
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(modulus_);
}

Scalar::Scalar(Field field, std::int64_t value) : field_(field) {
  if (field.is_rational()) {
    num_ = value;
  } else {
    num_ = static_cast<std::int64_t>(mod_reduce(value, field.modulus()));
  }
}

Scalar::Scalar(Field field, std::int64_t num, std::int64_t den) : field_(field) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (field.is_rational()) {
    *this = from_i128(field, num, den);
  } else {
    std::uint64_t p = field.modulus();
    std::uint64_t n = mod_reduce(num, p);
    std::uint64_t d = mod_reduce(den, p);
    num_ = static_cast<std::int64_t>((n * mod_inverse(d, p)) % p);
  }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    mpq_class q = value;
    q.canonicalize();
    assign_mpq(std::move(q));
  } else {
    std::uint64_t p = field.modulus();
    std::uint64_t n = mod_reduce(value.get_num(), p);
    std::uint64_t d = mod_reduce(value.get_den(), p);
    if (d == 0)
      throw std::domain_error("denominator vanishes in F_" + std::to_string(p));
    num_ = static_cast<std::int64_t>((n * mod_inverse(d, p)) % p);
  }
}

void Scalar::assign_mpq(mpq_class q) {
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(std::move(q));
  }
}

Scalar Scalar::from_i128(Field f, __int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Scalar s;
  s.field_ = f;
  if (num == 0) return s;
  u128 g = gcd128(abs128(num), u128(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  if (fits64(num) && fits64(den)) {
    s.num_ = static_cast<std::int64_t>(num);
    s.den_ = static_cast<std::int64_t>(den);
  } else {
    mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
    s.big_ = std::make_shared<const mpq_class>(std::move(q));
  }
  return s;
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Scalar Scalar::parse(Field field, std::string_view text) {
  std::string s(text);
  auto mod_pos = s.find(" mod ");
  if (mod_pos != std::string::npos) {
    Field declared = Field::prime(std::stoull(s.substr(mod_pos + 5)));
    if (declared != field)
      throw FieldMismatch("scalar '" + s + "' does not belong to " + field.name());
    return Scalar(field, mpq_class(s.substr(0, mod_pos)));
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad scalar literal: " + s);
  q.canonicalize();
  return Scalar(field, q);
}

std::string Scalar::to_string() const {
  if (!field_.is_rational())
    return std::to_string(num_) + " mod " + std::to_string(field_.modulus());
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Scalar Scalar::convert(Field target) const {
  if (target == field_) return *this;
  if (!field_.is_rational())
    throw FieldMismatch("cannot convert " + field_.name() + " to " + target.name());
  return Scalar(target, to_mpq());
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldMismatch("mixed fields: " + field_.name() + " and " + o.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (!field_.is_rational()) {
    if (num_ != 0) r.num_ = static_cast<std::int64_t>(field_.modulus()) - num_;
    return r;
  }
  if (big_) {
    r.assign_mpq(-*big_);
  } else if (num_ == std::numeric_limits<std::int64_t>::min()) {
    r.assign_mpq(-to_mpq());
  } else {
    r.num_ = -num_;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (!field_.is_rational()) {
    Scalar r = *this;
    r.num_ = static_cast<std::int64_t>(
        mod_inverse(static_cast<std::uint64_t>(num_), field_.modulus()));
    return r;
  }
  if (big_) {
    Scalar r;
    r.field_ = field_;
    r.assign_mpq(1 / *big_);
    return r;
  }
  return from_i128(field_, den_, num_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  if (!a.field_.is_rational()) {
    Scalar r = a;
    std::uint64_t s = static_cast<std::uint64_t>(a.num_) + static_cast<std::uint64_t>(b.num_);
    if (s >= a.field_.modulus()) s -= a.field_.modulus();
    r.num_ = static_cast<std::int64_t>(s);
    return r;
  }
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s)) {
        Scalar r = a;
        r.num_ = s;
        return r;
      }
    }
    return Scalar::from_i128(a.field_,
                             static_cast<__int128>(a.num_) * b.den_ +
                                 static_cast<__int128>(b.num_) * a.den_,
                             static_cast<__int128>(a.den_) * b.den_);
  }
  Scalar r;
  r.field_ = a.field_;
  r.assign_mpq(a.to_mpq() + b.to_mpq());
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  if (!a.field_.is_rational()) {
    Scalar r = a;
    r.num_ = static_cast<std::int64_t>(
        (static_cast<std::uint64_t>(a.num_) * static_cast<std::uint64_t>(b.num_)) %
        a.field_.modulus());
    return r;
  }
  if (a.is_zero() || b.is_zero()) return Scalar::zero(a.field_);
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t m;
      if (!__builtin_mul_overflow(a.num_, b.num_, &m)) {
        Scalar r = a;
        r.num_ = m;
        return r;
      }
    }
    return Scalar::from_i128(a.field_, static_cast<__int128>(a.num_) * b.num_,
                             static_cast<__int128>(a.den_) * b.den_);
  }
  Scalar r;
  r.field_ = a.field_;
  r.assign_mpq(a.to_mpq() * b.to_mpq());
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;  // canonical forms differ
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace hopf
