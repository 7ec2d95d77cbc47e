// Times the batch kernels in both execution modes and checks that the
// outputs agree. Run from anywhere; prints one line per workload.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "ringkit/groebner.hpp"
#include "ringkit/kernels.hpp"
#include "ringkit/parser.hpp"
#include "ringkit/ring.hpp"

using namespace ringkit;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

Polynomial random_poly(std::mt19937_64& rng, const RingPtr& R, unsigned maxdeg,
                       unsigned terms) {
  std::size_t n = R->vars().size();
  std::vector<Term> soup;
  for (unsigned t = 0; t < terms; ++t) {
    std::vector<unsigned> e(n, 0);
    unsigned budget = rng() % (maxdeg + 1);
    for (unsigned d = 0; d < budget; ++d) e[rng() % n]++;
    long c = static_cast<long>(rng() % 200) - 100;
    if (c == 0) c = 1;
    soup.push_back(Term{Coeff::of(R->field(), c), Monomial(std::move(e))});
  }
  return Polynomial::make(R->id(), n, std::move(soup), R->order());
}

struct Timing {
  double serial_ms = 0;
  double parallel_ms = 0;
  bool agree = true;
};

void report(const std::string& name, const Timing& t) {
  std::printf("%-18s serial %9.2f ms   parallel %9.2f ms   x%.2f   %s\n",
              name.c_str(), t.serial_ms, t.parallel_ms,
              t.parallel_ms > 0 ? t.serial_ms / t.parallel_ms : 0.0,
              t.agree ? "outputs agree" : "OUTPUTS DIFFER");
}

}  // namespace

int main() {
  auto R = RingPresentation::make({"x", "y", "z", "w"}, FieldDesc{101}, {});
  std::mt19937_64 rng(0xbe7c4);

  // workload 1: many independent normal forms against a fixed basis
  std::vector<Polynomial> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(random_poly(rng, R, 3, 4));
  GroebnerBasis gb = buchberger(gens, R->order(), ExecMode::Serial);
  std::vector<Polynomial> batch;
  for (int i = 0; i < 400; ++i) batch.push_back(random_poly(rng, R, 6, 8));
  {
    Timing t;
    auto t0 = std::chrono::steady_clock::now();
    auto s = normal_form_batch(batch, gb.elems, gb.order, ExecMode::Serial);
    t.serial_ms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto p = normal_form_batch(batch, gb.elems, gb.order, ExecMode::Parallel);
    t.parallel_ms = ms_since(t0);
    t.agree = s == p;
    report("normal_form_batch", t);
  }

  // workload 2: a full basis computation
  std::vector<Polynomial> hard;
  for (int i = 0; i < 5; ++i) hard.push_back(random_poly(rng, R, 4, 5));
  {
    Timing t;
    auto t0 = std::chrono::steady_clock::now();
    GroebnerBasis s = buchberger(hard, R->order(), ExecMode::Serial);
    t.serial_ms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    GroebnerBasis p = buchberger(hard, R->order(), ExecMode::Parallel);
    t.parallel_ms = ms_since(t0);
    t.agree = s.elems == p.elems;
    report("buchberger", t);
  }

  // workload 3: all 3x3 minors of a 7x7 polynomial matrix
  std::vector<std::vector<Polynomial>> m(7);
  for (auto& row : m)
    for (int j = 0; j < 7; ++j) row.push_back(random_poly(rng, R, 2, 3));
  {
    Timing t;
    auto t0 = std::chrono::steady_clock::now();
    auto s = minor_dets(m, 3, R->order(), R->field(), R->id(),
                        R->vars().size(), ExecMode::Serial);
    t.serial_ms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto p = minor_dets(m, 3, R->order(), R->field(), R->id(),
                        R->vars().size(), ExecMode::Parallel);
    t.parallel_ms = ms_since(t0);
    t.agree = s == p;
    report("minor_dets", t);
  }
  return 0;
}
