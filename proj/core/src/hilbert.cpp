#include "plastic/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace plastic {

namespace {

Rational square(const Rational& r) { return r * r; }

/// Enclosure of u^2 for u in [lo, hi].
CertifiedInterval square(const CertifiedInterval& u) {
  if (u.lo.sign() <= 0 && u.hi.sign() >= 0) return {Rational{}, max(square(u.lo), square(u.hi))};
  const Rational a = square(u.lo);
  const Rational b = square(u.hi);
  return {min(a, b), max(a, b)};
}

Rational coordinate(const BallVector& v, std::size_t k) { return k < v.size() ? v[k] : Rational{}; }

}  // namespace

CertifiedInterval certified_sqrt(const Rational& r, int digits) {
  if (r.sign() < 0) throw std::invalid_argument("certified_sqrt of a negative number");
  if (digits < 1) throw std::invalid_argument("certified_sqrt: precision must be at least one digit");
  const mpz_class p = r.numerator();
  const mpz_class q = r.denominator();
  if (mpz_perfect_square_p(p.get_mpz_t()) != 0 && mpz_perfect_square_p(q.get_mpz_t()) != 0) {
    const Rational root(mpz_class(sqrt(p)), mpz_class(sqrt(q)));
    return {root, root};
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // floor(sqrt(floor(z))) == floor(sqrt(z)) for z >= 0.
  const mpz_class z = (p * scale * scale) / q;
  const mpz_class s = sqrt(z);
  return {Rational(s, scale), Rational(mpz_class(s + 1), scale)};
}

Rational squared_norm(const BallVector& v) {
  Rational total;
  for (const auto& c : v) total += c * c;
  return total;
}

ShiftPairResult shift_pair(const BallVector& x, const BallVector& y, int precision) {
  const Rational nx = squared_norm(x);
  const Rational ny = squared_norm(y);
  if (nx > Rational(1) || ny > Rational(1)) throw std::invalid_argument("sample vector outside the unit ball");
  ShiftPairResult out;
  const std::size_t dims = std::max(x.size(), y.size());
  for (std::size_t k = 0; k < dims; ++k) out.before += square(coordinate(x, k) - coordinate(y, k));
  const CertifiedInterval rx = certified_sqrt(Rational(1) - nx, precision);
  const CertifiedInterval ry = certified_sqrt(Rational(1) - ny, precision);
  const CertifiedInterval gap = square(CertifiedInterval{rx.lo - ry.hi, rx.hi - ry.lo});
  out.after = {out.before + gap.lo, out.before + gap.hi};
  out.noncontractive = out.after.lo >= out.before;
  out.expanding = out.after.lo > out.before;
  return out;
}

HilbertShiftReport hilbert_shift_demo(const std::vector<BallVector>& sample, int precision) {
  if (precision < 1) throw std::invalid_argument("precision must be at least one digit");
  HilbertShiftReport report;
  report.precision = precision;
  report.all_noncontractive = true;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      ShiftPairResult r = shift_pair(sample[i], sample[j], precision);
      r.first = i;
      r.second = j;
      report.all_noncontractive = report.all_noncontractive && r.noncontractive;
      report.pairs.push_back(std::move(r));
    }
  }
  report.witness = shift_pair(BallVector{}, BallVector{Rational(1)}, precision);
  return report;
}

}  // namespace plastic
