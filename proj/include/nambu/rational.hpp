#ifndef NAMBU_RATIONAL_HPP
#define NAMBU_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "nambu/errors.hpp"

namespace nambu {

/// Exact rational scalar. All kernel arithmetic is exact; doubles appear
/// only at evaluation boundaries.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q" into an exact rational.
Rat parse_rat(const std::string& text);

std::string rat_str(const Rat& r);

/// Element of Q(i). Carrier for every coefficient and frequency in the
/// expression kernel; the imaginary part implements sin/cos via complex
/// exponentials.
struct GaussRat {
  Rat re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(const Rat& r) : re(r), im(0) {}
  GaussRat(long r) : re(r), im(0) {}
  GaussRat(const Rat& r, const Rat& i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat conj() const { return GaussRat(re, Rat(-im)); }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return GaussRat(Rat(a.re + b.re), Rat(a.im + b.im));
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return GaussRat(Rat(a.re - b.re), Rat(a.im - b.im));
  }
  friend GaussRat operator-(const GaussRat& a) {
    return GaussRat(Rat(-a.re), Rat(-a.im));
  }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return GaussRat(Rat(a.re * b.re - a.im * b.im),
                    Rat(a.re * b.im + a.im * b.re));
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    Rat n2 = b.re * b.re + b.im * b.im;
    if (n2 == 0) throw Error("division by zero (GaussRat)");
    return GaussRat(Rat((a.re * b.re + a.im * b.im) / n2),
                    Rat((a.im * b.re - a.re * b.im) / n2));
  }
  GaussRat& operator+=(const GaussRat& b) { return *this = *this + b; }
  GaussRat& operator-=(const GaussRat& b) { return *this = *this - b; }
  GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) {
    return !(a == b);
  }
};

/// Total order used only for canonical term ordering.
int compare(const Rat& a, const Rat& b);
int compare(const GaussRat& a, const GaussRat& b);

inline GaussRat gauss_i() { return GaussRat(Rat(0), Rat(1)); }

std::string gauss_str(const GaussRat& g);

}  // namespace nambu

#endif
