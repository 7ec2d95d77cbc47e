#include "ringkit/monomial.hpp"

namespace ringkit {

namespace {

int cmp_lex(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

// Graded reverse lex: higher total degree wins; on ties the smaller exponent
// in the last differing position wins.
int cmp_grevlex(const Monomial& a, const Monomial& b) {
  unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.arity(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

// grevlex restricted to the positions selected by `mask` (all if empty).
int cmp_grevlex_masked(const Monomial& a, const Monomial& b,
                       const std::vector<char>& mask, char want) {
  unsigned da = 0, db = 0;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (mask[i] == want) {
      da += a[i];
      db += b[i];
    }
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.arity(); i-- > 0;) {
    if (mask[i] == want && a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  require(a.arity() == b.arity(), "monomial arity mismatch");
  switch (ord.kind) {
    case MonomialOrder::Kind::Lex:
      return cmp_lex(a, b);
    case MonomialOrder::Kind::Grevlex:
      return cmp_grevlex(a, b);
    case MonomialOrder::Kind::Block: {
      require(ord.first_block.size() == a.arity(),
              "block order mask arity mismatch");
      int c = cmp_grevlex_masked(a, b, ord.first_block, 1);
      if (c != 0) return c;
      return cmp_grevlex_masked(a, b, ord.first_block, 0);
    }
  }
  return 0;
}

}  // namespace ringkit
