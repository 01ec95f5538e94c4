#include "lawvere/extnum.hpp"

#include <cctype>

#include "lawvere/error.hpp"

namespace lawvere {

ExtNN::ExtNN(mpq_class q) : q_(std::move(q)), inf_(false) {
  q_.canonicalize();
  if (q_ < 0) {
    throw Error("negative-value", "value must be nonnegative: " + q_.get_str(),
                {{"value", q_.get_str()}});
  }
}

ExtNN ExtNN::infinity() {
  ExtNN x;
  x.inf_ = true;
  return x;
}

ExtNN ExtNN::fraction(long num, long den) {
  if (den == 0) throw Error("zero-denominator", "denominator must be nonzero");
  if (num < 0 || den < 0) {
    throw Error("negative-value", "fraction must be nonnegative");
  }
  return ExtNN(mpq_class(num, den));
}

std::optional<ExtNN> ExtNN::parse(std::string_view text) {
  if (text == "inf") return infinity();
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!digits(text)) return std::nullopt;
    mpz_class n{std::string(text)};
    return ExtNN(mpq_class{n});
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  if (!digits(num) || !digits(den)) return std::nullopt;
  mpz_class d{std::string(den)};
  if (d == 0) return std::nullopt;
  mpz_class n{std::string(num)};
  mpq_class q{n};
  q /= mpq_class{d};
  return ExtNN(std::move(q));
}

std::string ExtNN::str() const {
  if (inf_) return "inf";
  return q_.get_str();
}

ExtNN operator+(const ExtNN& a, const ExtNN& b) {
  if (a.inf_ || b.inf_) return ExtNN::infinity();
  return ExtNN(mpq_class(a.q_ + b.q_));
}

ExtNN hom(const ExtNN& a, const ExtNN& b) {
  if (b.is_infinite()) {
    // inf - inf = 0; inf - a = inf for finite a.
    return a.is_infinite() ? ExtNN() : ExtNN::infinity();
  }
  if (a.is_infinite()) return ExtNN();  // a - inf = -inf, truncated to 0
  mpq_class d = b.finite_value() - a.finite_value();
  return d > 0 ? ExtNN(d) : ExtNN();
}

ExtNN absdiff(const ExtNN& a, const ExtNN& b) {
  return max(hom(a, b), hom(b, a));
}

}  // namespace lawvere
