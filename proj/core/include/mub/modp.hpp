#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mub {

int64_t mod_pow(int64_t base, int64_t exp, int64_t m);
int64_t mod_inv(int64_t a, int64_t p);
bool is_prime(int64_t p);

/// Rank of a Z_p vector in lexicographic order (first coordinate most
/// significant). The same ordering is used for field-element coefficient
/// vectors, frame row/column labels and plane point encodings.
int64_t lex_rank(std::span<const int32_t> v, int64_t p);
std::vector<int32_t> from_lex_rank(int64_t r, int len, int64_t p);

int32_t dot_mod(std::span<const int32_t> a, std::span<const int32_t> b, int64_t p);

/// Dense row-major matrix over Z_p; entries are kept in [0, p).
struct MatZp {
  int64_t p = 2;
  int rows = 0;
  int cols = 0;
  std::vector<int32_t> a;

  static MatZp zero(int64_t p, int rows, int cols);
  static MatZp identity(int64_t p, int n);

  int32_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  int32_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  std::span<const int32_t> row(int r) const {
    return {a.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)};
  }

  bool operator==(const MatZp&) const = default;
};

/// In-place reduced row echelon form; returns the rank.
int rref_in_place(MatZp& m);
int rank_of(MatZp m);
int32_t det_mod(MatZp m);
bool is_nonsingular(const MatZp& m);
MatZp mat_mul(const MatZp& a, const MatZp& b);
MatZp mat_inverse(const MatZp& m);
MatZp transpose(const MatZp& m);
MatZp stack_rows(const MatZp& top, const MatZp& bottom);

}  // namespace mub
