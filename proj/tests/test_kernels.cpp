#include <doctest.h>

#include <random>
#include <vector>

#include "paracon/simd/kernels.hpp"
#include "paracon/truth_table.hpp"

using namespace paracon;
using namespace paracon::simd;

namespace {

std::vector<Word> random_words(std::mt19937_64& rng, std::size_t n, double density = 0.5) {
  std::vector<Word> out(n);
  for (auto& w : out) {
    w = rng();
    if (density < 0.1) w &= rng() & rng() & rng();
  }
  return out;
}

// Restores the detected backend when a test forces one.
struct BackendGuard {
  Backend saved = active_backend();
  ~BackendGuard() { select_backend(saved); }
};

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar backend is always available") {
    CHECK(backend_available(Backend::Scalar));
    CHECK(kernels_for(Backend::Scalar) == &scalar_kernels());
    CHECK(backend_name(Backend::Scalar) == "scalar");
    CHECK(backend_name(Backend::Avx2) == "avx2");
  }

  TEST_CASE("selecting an unavailable backend is refused") {
    BackendGuard guard;
    if (!backend_available(Backend::Avx2)) {
      CHECK_FALSE(select_backend(Backend::Avx2));
      CHECK(kernels_for(Backend::Avx2) == nullptr);
    }
    CHECK(select_backend(Backend::Scalar));
    CHECK(active_backend() == Backend::Scalar);
  }

  TEST_CASE("avx2 kernels agree with the scalar reference") {
    const KernelTable* wide = kernels_for(Backend::Avx2);
    if (wide == nullptr) {
      MESSAGE("avx2 backend unavailable on this machine; equivalence not exercised");
      return;
    }
    const KernelTable& ref = scalar_kernels();
    std::mt19937_64 rng(2024);
    for (std::size_t n : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 33, 64, 100, 257, 1024}) {
      for (int rep = 0; rep < 20; ++rep) {
        const auto a = random_words(rng, n, rep % 3 == 0 ? 0.01 : 0.5);
        auto b = random_words(rng, n, rep % 2 == 0 ? 0.01 : 0.5);
        if (rep % 5 == 0) b = a;  // a & ~b empty
        std::vector<Word> x(n), y(n);

        ref.and_words(x, a, b);
        wide->and_words(y, a, b);
        CHECK(x == y);
        ref.or_words(x, a, b);
        wide->or_words(y, a, b);
        CHECK(x == y);
        ref.implies_words(x, a, b);
        wide->implies_words(y, a, b);
        CHECK(x == y);
        ref.not_words(x, a);
        wide->not_words(y, a);
        CHECK(x == y);
        CHECK(ref.any_set(a) == wide->any_set(a));
        CHECK(ref.any_and_not(a, b) == wide->any_and_not(a, b));
        CHECK(ref.popcount(a) == wide->popcount(a));

        // In-place aliasing of dst with an operand.
        x = a;
        y = a;
        ref.and_words(x, x, b);
        wide->and_words(y, y, b);
        CHECK(x == y);
      }
    }
  }

  TEST_CASE("any kernels on all-zero inputs") {
    for (const KernelTable* k : {&scalar_kernels(), kernels_for(Backend::Avx2)}) {
      if (k == nullptr) continue;
      std::vector<Word> zero(37, 0), ones(37, ~Word{0});
      CHECK_FALSE(k->any_set(zero));
      CHECK(k->any_set(ones));
      CHECK_FALSE(k->any_and_not(ones, ones));
      CHECK(k->any_and_not(ones, zero));
      CHECK(k->popcount(ones) == 37 * 64);
      std::vector<Word> last(37, 0);
      last.back() = 1;
      CHECK(k->any_set(last));
    }
  }
}

TEST_SUITE("truth_table") {
  TEST_CASE("variable patterns") {
    const auto t0 = TruthTable::variable(3, 0);
    const auto t2 = TruthTable::variable(3, 2);
    for (std::uint64_t k = 0; k < 8; ++k) {
      CHECK(t0.test(k) == bool(k & 1));
      CHECK(t2.test(k) == bool(k & 4));
    }
    const auto wide = TruthTable::variable(8, 7);
    CHECK(wide.count() == 128);
    CHECK_FALSE(wide.test(127));
    CHECK(wide.test(128));
  }

  TEST_CASE("tail bits stay clear") {
    const auto t = ~TruthTable::constant(2, false);
    CHECK(t.count() == 4);
    CHECK(t.words()[0] == 0xF);
  }

  TEST_CASE("tables match evaluation on both backends") {
    const VariableOrder order({"p", "q", "r", "s", "t", "u", "w"});
    const Formula f = parse("(p -> q) & ~(r | s) | (t -> u & ~w)");
    for (Backend b : {Backend::Scalar, Backend::Avx2}) {
      if (!backend_available(b)) continue;
      const Backend saved = active_backend();
      select_backend(b);
      const auto t = TruthTable::of(f, order);
      for (std::uint64_t k = 0; k < 128; ++k) {
        const bool p = k & 1, q = k & 2, r = k & 4, s = k & 8, tt = k & 16, u = k & 32, w = k & 64;
        CHECK(t.test(k) == (((!p || q) && !(r || s)) || (!tt || (u && !w))));
      }
      select_backend(saved);
    }
  }

  TEST_CASE("missing variable and width cap") {
    const VariableOrder order({"p"});
    CHECK_THROWS_AS(TruthTable::of(parse("q"), order), std::invalid_argument);
    std::set<std::string> many;
    for (int i = 0; i < 21; ++i) many.insert("x" + std::to_string(i));
    CHECK_THROWS_AS(TruthTable::of(parse("x0"), VariableOrder(many)), CapExceeded);
  }

  TEST_CASE("subsumption and first_set") {
    const VariableOrder order({"p", "q"});
    const auto pq = TruthTable::of(parse("p & q"), order);
    const auto p = TruthTable::of(parse("p"), order);
    CHECK(pq.subsumed_by(p));
    CHECK_FALSE(p.subsumed_by(pq));
    CHECK(pq.first_set() == 3u);
    CHECK_FALSE(TruthTable::of(parse("p & ~p"), order).first_set().has_value());
  }
}
