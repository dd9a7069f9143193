#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <thread>
#include <vector>

#include "leoq/sequences.hpp"

using namespace leoq;

namespace {

std::vector<BigInt> bigs(std::initializer_list<long long> values) {
  return {values.begin(), values.end()};
}

const SequenceFamily kFib1{SequenceKind::Fibonacci, 1};
const SequenceFamily kLucas1{SequenceKind::Lucas, 1};
const SequenceFamily kLeo1{SequenceKind::Leonardo, 1};
const SequenceFamily kLL1{SequenceKind::LucasLeonardo, 1};
const SequenceFamily kFrancois{SequenceKind::Francois, 1};

std::vector<SequenceFamily> all_families(int p_max) {
  std::vector<SequenceFamily> out;
  for (int p = 1; p <= p_max; ++p) {
    out.emplace_back(SequenceKind::Fibonacci, p);
    out.emplace_back(SequenceKind::Lucas, p);
    out.emplace_back(SequenceKind::Leonardo, p);
    out.emplace_back(SequenceKind::LucasLeonardo, p);
  }
  out.push_back(kFrancois);
  return out;
}

}  // namespace

TEST_CASE("family construction validates order") {
  CHECK_THROWS_AS(SequenceFamily(SequenceKind::Fibonacci, 0), std::domain_error);
  CHECK_THROWS_AS(SequenceFamily(SequenceKind::Leonardo, -3), std::domain_error);
  CHECK_THROWS_AS(SequenceFamily(SequenceKind::Francois, 2), std::domain_error);
  CHECK_NOTHROW(SequenceFamily(SequenceKind::Francois, 1));
  CHECK(family_from_name("lucas-leonardo", 2).kind() == SequenceKind::LucasLeonardo);
  CHECK_THROWS_AS(family_from_name("tribonacci", 1), std::domain_error);
}

TEST_CASE("initial values and small terms") {
  CHECK(term(kLL1, 0) == 3);  // p^2 + p + 1 at p = 1
  CHECK(term(kFib1, 0) == 0);
  CHECK(term(kLL1, 4) == 13);
  CHECK(term(kFrancois, 3) == 6);
  CHECK(terms(kLL1, 0, 7) == bigs({3, 1, 5, 7, 13, 21, 35, 57}));
  CHECK(terms(kLeo1, 0, 5) == bigs({1, 1, 3, 5, 9, 15}));
  CHECK(terms(kFib1, 0, 0) == bigs({0}));
  CHECK(terms({SequenceKind::Lucas, 2}, 0, 4) == bigs({3, 1, 1, 4, 5}));
  CHECK(terms(kFrancois, 0, 7) == bigs({2, 1, 4, 6, 11, 18, 30, 49}));
  CHECK(terms({SequenceKind::LucasLeonardo, 4}, 0, 8) ==
        bigs({21, 1, 1, 1, 1, 26, 31, 36, 41}));

  CHECK_THROWS_AS(term(kFib1, -1), std::domain_error);
  CHECK_THROWS_AS(terms(kFib1, 3, 2), std::domain_error);
  CHECK_THROWS_AS(terms(kFib1, -1, 2), std::domain_error);
}

TEST_CASE("terms grow past every fixed-width type") {
  // F_300 has 63 digits; exactness is the whole point.
  const BigInt f300 = term(kFib1, 300);
  CHECK(f300.str() == "222232244629420445529739893461909967206666939096499764990979600");
}

TEST_CASE("term_mod equals exact term reduced, without big intermediates") {
  for (const auto& family : all_families(6)) {
    for (std::uint64_t q : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
      for (std::int64_t n = 0; n <= 200; ++n) {
        const BigInt expected = term(family, n) % q;
        CHECK(term_mod(family, n, q) == expected.convert_to<std::uint64_t>());
      }
    }
  }
}

TEST_CASE("term_mod frozen examples and errors") {
  CHECK(term_mod(kFib1, 7, 3) == 1);
  CHECK(term_mod(kFib1, 0, 7) == 0);
  CHECK(term_mod(kLL1, 4, 5) == 3);
  CHECK_THROWS_AS(term_mod(kFib1, 3, 4), std::domain_error);
  CHECK_THROWS_AS(term_mod(kFib1, 3, 9), std::domain_error);
  CHECK_THROWS_AS(term_mod(kFib1, 3, 2), std::domain_error);
  CHECK_THROWS_AS(term_mod(kFib1, -1, 3), std::domain_error);
}

TEST_CASE("pisano periods match the known cycles") {
  const auto p3 = pisano_period(3);
  CHECK(p3.length == 8);
  CHECK(p3.cycle == std::vector<std::uint64_t>{0, 1, 1, 2, 0, 2, 2, 1});

  const auto p5 = pisano_period(5);
  CHECK(p5.length == 20);
  CHECK(p5.cycle == std::vector<std::uint64_t>{0, 1, 1, 2, 3, 0, 3, 3, 1, 4,
                                               0, 4, 4, 3, 2, 0, 2, 2, 4, 1});

  const auto p7 = pisano_period(7);
  CHECK(p7.length == 16);
  CHECK(p7.cycle ==
        std::vector<std::uint64_t>{0, 1, 1, 2, 3, 5, 1, 6, 0, 6, 6, 5, 4, 2, 6, 1});

  CHECK(pisano_period(2).length == 3);
  CHECK_THROWS_AS(pisano_period(1), std::domain_error);
  CHECK_THROWS_AS(pisano_period(0), std::domain_error);
}

TEST_CASE("pisano cycle reproduced by term_mod over two full periods") {
  for (std::uint64_t q : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    const auto pi = pisano_period(q);
    for (std::uint64_t n = 0; n < 2 * pi.length; ++n) {
      CHECK(term_mod(kFib1, static_cast<std::int64_t>(n), q) == pi.cycle[n % pi.length]);
    }
  }
}

TEST_CASE("sequence_period_mod finds the minimal period") {
  const auto fib3 = sequence_period_mod(kFib1, 3);
  CHECK(fib3.length == 8);
  CHECK(fib3.cycle == pisano_period(3).cycle);

  const auto ll3 = sequence_period_mod(kLL1, 3);
  CHECK(ll3.length == 8);
  CHECK(ll3.cycle == std::vector<std::uint64_t>{0, 1, 2, 1, 1, 0, 2, 0});

  const auto ll5 = sequence_period_mod(kLL1, 5);
  CHECK(ll5.length == 4);
  CHECK(ll5.cycle == std::vector<std::uint64_t>{3, 1, 0, 2});
  CHECK(20 % ll5.length == 0);  // divides the Pisano period of 5

  CHECK(sequence_period_mod(kLL1, 7).length == 16);

  const auto fr3 = sequence_period_mod(kFrancois, 3);
  CHECK(fr3.length == 8);
  CHECK(fr3.cycle == std::vector<std::uint64_t>{2, 1, 1, 0, 2, 0, 0, 1});
  CHECK(8 % fr3.length == 0);

  CHECK(sequence_period_mod(kFrancois, 5).length == 20);
  CHECK_THROWS_AS(sequence_period_mod(kFib1, 9), std::domain_error);
}

TEST_CASE("sequence_period_mod cycle matches term_mod for all families") {
  for (const auto& family : all_families(3)) {
    for (std::uint64_t q : {3ULL, 5ULL, 7ULL}) {
      const auto period = sequence_period_mod(family, q);
      REQUIRE(period.length == period.cycle.size());
      for (std::uint64_t n = 0; n < 2 * period.length; ++n) {
        CHECK(term_mod(family, static_cast<std::int64_t>(n), q) ==
              period.cycle[n % period.length]);
      }
      // minimality: no proper divisor of the length is a period
      for (std::uint64_t d = 1; d < period.length; ++d) {
        if (period.length % d != 0) continue;
        bool is_period = true;
        for (std::uint64_t n = 0; n + d < period.length && is_period; ++n) {
          is_period = period.cycle[n] == period.cycle[n + d];
        }
        CHECK_FALSE(is_period);
      }
    }
  }
}

TEST_CASE("inter-sequence relations hold on the full desk grid") {
  for (int p = 1; p <= 6; ++p) {
    const SequenceFamily fib{SequenceKind::Fibonacci, p};
    const SequenceFamily lucas{SequenceKind::Lucas, p};
    const SequenceFamily leonardo{SequenceKind::Leonardo, p};
    const SequenceFamily lucleo{SequenceKind::LucasLeonardo, p};
    for (std::int64_t n = 0; n <= 300; ++n) {
      CHECK(term(leonardo, n) == (p + 1) * term(fib, n + 1) - p);
      CHECK(term(leonardo, n) == term(lucas, n + p + 1) - term(fib, n + p + 1) - p);
      CHECK(term(lucleo, n) == (p + 1) * term(lucas, n) - p);
      if (n >= 1) {
        CHECK(term(lucleo, n) == (p + 1) * term(leonardo, n) - p * term(leonardo, n - 1));
      }
      if (n > 2 * p) {
        CHECK(term(lucleo, n) ==
              term(lucleo, n - 1) + term(lucleo, n - p) - term(lucleo, n - 2 * p - 1));
      }
    }
  }
  for (std::int64_t n = 0; n <= 300; ++n) {
    CHECK(term(kLL1, n) == 2 * term(kLucas1, n) - 1);
    CHECK(term(kFrancois, n) == term(kLucas1, n) + term(kFib1, n + 1) - 1);
  }
}

TEST_CASE("classical helper identities feeding the norm derivations") {
  for (std::int64_t n = 0; n <= 200; ++n) {
    const BigInt Ln = term(kLucas1, n), Ln1 = term(kLucas1, n + 1), Ln2 = term(kLucas1, n + 2);
    const BigInt Fn = term(kFib1, n), Fn1 = term(kFib1, n + 1), Fn2 = term(kFib1, n + 2);
    CHECK(Ln * Ln + Ln1 * Ln1 == 5 * term(kFib1, 2 * n + 1));
    CHECK(Fn * Fn + Fn1 * Fn1 == term(kFib1, 2 * n + 1));
    CHECK(Fn + term(kFib1, n + 4) == 3 * Fn2);
    CHECK(Ln * Fn1 == term(kFib1, 2 * n + 1) + (n % 2 == 0 ? 1 : -1));
    CHECK(Ln + Ln2 == 5 * Fn1);
    CHECK(Fn + Fn2 == Ln1);
  }
}

TEST_CASE("summation identities") {
  for (int p = 1; p <= 6; ++p) {
    const SequenceFamily fib{SequenceKind::Fibonacci, p};
    const SequenceFamily lucas{SequenceKind::Lucas, p};
    BigInt running = 0;
    for (std::int64_t n = 0; n <= 200; ++n) {
      running += term(fib, n);
      CHECK(running == term(fib, n + p + 1) - term(fib, p));
    }
    for (std::int64_t n = p; n <= 200; ++n) {
      BigInt conv = 0;
      for (std::int64_t t = 1; t <= p; ++t) conv += term(lucas, n - t) * term(fib, t);
      CHECK(conv == term(lucas, n + p) - term(fib, p + 1) * term(lucas, n));
    }
  }
}

TEST_CASE("concurrent evaluation returns identical results") {
  std::vector<BigInt> a, b;
  std::thread t1([&a] { a = terms(SequenceFamily{SequenceKind::LucasLeonardo, 3}, 0, 400); });
  std::thread t2([&b] { b = terms(SequenceFamily{SequenceKind::LucasLeonardo, 3}, 0, 400); });
  t1.join();
  t2.join();
  CHECK(a == b);
}
