#include "latpoly/numeric.hpp"

#include <stdexcept>

namespace latpoly {

Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

std::string int_str(const Int& n) { return n.get_str(); }

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }

Rat rat_max(const Rat& a, const Rat& b) { return a > b ? a : b; }

long long to_ll(const Int& n) {
  if (!n.fits_slong_p()) throw std::overflow_error("integer too large: " + n.get_str());
  return static_cast<long long>(n.get_si());
}

}  // namespace latpoly
