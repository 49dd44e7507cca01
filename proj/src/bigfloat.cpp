#include "lemoine/bigfloat.hpp"

namespace lemoine {

namespace {

thread_local mpfr_prec_t g_context_prec = 128;

// mpfr keeps lazily built caches and pools; release them at teardown.
struct MpfrCacheCleanup {
  ~MpfrCacheCleanup() {
    mpfr_free_cache();
    mpfr_free_pool();
    mpfr_mp_memory_cleanup();
  }
};
thread_local MpfrCacheCleanup g_mpfr_cleanup;

}  // namespace

mpfr_prec_t BigFloat::context_precision() {
  (void)g_mpfr_cleanup;  // force construction so the cache is freed at exit
  return g_context_prec;
}

void BigFloat::set_context_precision(mpfr_prec_t bits) {
  if (bits < kMinPrec) fail(ErrorCode::InvalidArgument, "bigfloat precision must be >= 64 bits");
  g_context_prec = bits;
}

BigFloat BigFloat::ratio(long num, long den) {
  if (den == 0) fail(ErrorCode::NonFinite, "ratio with zero denominator");
  BigFloat n(num), d(den);
  return n / d;
}

}  // namespace lemoine
