#pragma once

// Dense square matrices over O_n, i.e. M_k(O_n). Indices are 0-based in the
// API; diagnostics report 1-based coordinates.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuntz/algebra.hpp"

namespace cuntz {

struct Coordinate {
  unsigned row;  // 1-based
  unsigned col;  // 1-based
  auto operator<=>(const Coordinate&) const = default;
};

/// Verdict of an entrywise check, with the first failing entry when false.
struct MatrixVerdict {
  bool ok = true;
  std::optional<Coordinate> first_failure;
  explicit operator bool() const noexcept { return ok; }
};

enum class MatrixKind { isometry, unitary, selfadjoint };

template <CoefficientField S>
class OpMatrix {
 public:
  using Elem = Element<S>;

  OpMatrix(unsigned size, unsigned rank) : size_(size), rank_(rank), entries_(size * size, Elem(rank)) {
    if (size < 1) throw InvalidArgument("matrix size must be at least 1");
  }

  static OpMatrix identity(unsigned size, unsigned rank) {
    OpMatrix out(size, rank);
    for (unsigned i = 0; i < size; ++i) out(i, i) = Elem::one(rank);
    return out;
  }

  static OpMatrix diagonal(const std::vector<Elem>& diag) {
    if (diag.empty()) throw InvalidArgument("diagonal: no entries");
    OpMatrix out(static_cast<unsigned>(diag.size()), diag.front().rank());
    for (unsigned i = 0; i < diag.size(); ++i) out.set(i, i, diag[i]);
    return out;
  }

  /// Build from rows; every row must have as many entries as there are rows.
  static OpMatrix from_rows(const std::vector<std::vector<Elem>>& rows) {
    if (rows.empty()) throw InvalidArgument("from_rows: no rows");
    OpMatrix out(static_cast<unsigned>(rows.size()), rows.front().front().rank());
    for (unsigned i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw DimensionMismatch("from_rows: matrix is not square");
      for (unsigned j = 0; j < rows.size(); ++j) out.set(i, j, rows[i][j]);
    }
    return out;
  }

  unsigned size() const noexcept { return size_; }
  unsigned rank() const noexcept { return rank_; }

  Elem& operator()(unsigned i, unsigned j) { return entries_[i * size_ + j]; }
  const Elem& operator()(unsigned i, unsigned j) const { return entries_[i * size_ + j]; }

  void set(unsigned i, unsigned j, Elem value) {
    if (value.rank() != rank_) throw RankMismatch("matrix entry has the wrong Cuntz rank");
    (*this)(i, j) = std::move(value);
  }

  std::vector<Elem> row(unsigned i) const {
    return {entries_.begin() + i * size_, entries_.begin() + (i + 1) * size_};
  }

  OpMatrix adjoint() const {
    OpMatrix out(size_, rank_);
    for (unsigned i = 0; i < size_; ++i)
      for (unsigned j = 0; j < size_; ++j) out(j, i) = (*this)(i, j).adjoint();
    return out;
  }

  OpMatrix operator-() const {
    OpMatrix out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
  }

  OpMatrix& operator+=(const OpMatrix& o) {
    require_shape(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }

  OpMatrix& operator-=(const OpMatrix& o) {
    require_shape(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }

  OpMatrix& operator*=(const S& c) {
    for (auto& e : entries_) e *= c;
    return *this;
  }

  friend OpMatrix operator+(OpMatrix a, const OpMatrix& b) { return a += b; }
  friend OpMatrix operator-(OpMatrix a, const OpMatrix& b) { return a -= b; }
  friend OpMatrix operator*(OpMatrix a, const S& c) { return a *= c; }
  friend OpMatrix operator*(const S& c, OpMatrix a) { return a *= c; }

  friend OpMatrix operator*(const OpMatrix& a, const OpMatrix& b) {
    a.require_shape(b);
    OpMatrix out(a.size_, a.rank_);
    for (unsigned i = 0; i < a.size_; ++i)
      for (unsigned p = 0; p < a.size_; ++p) {
        const Elem& lhs = a(i, p);
        if (lhs.empty()) continue;
        for (unsigned j = 0; j < a.size_; ++j) {
          const Elem& rhs = b(p, j);
          if (rhs.empty()) continue;
          out(i, j) += lhs * rhs;
        }
      }
    return out;
  }

  OpMatrix pow(unsigned k) const {
    OpMatrix out = identity(size_, rank_);
    for (unsigned i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  /// Entrywise equality in O_n, row-major, stopping at the first difference.
  MatrixVerdict compare(const OpMatrix& o) const {
    require_shape(o);
    for (unsigned i = 0; i < size_; ++i)
      for (unsigned j = 0; j < size_; ++j)
        if (!(*this)(i, j).equals(o(i, j))) return {false, Coordinate{i + 1, j + 1}};
    return {};
  }

  bool equals(const OpMatrix& o) const { return compare(o).ok; }

  MatrixVerdict check(MatrixKind kind) const {
    const OpMatrix id = identity(size_, rank_);
    switch (kind) {
      case MatrixKind::isometry:
        return (adjoint() * *this).compare(id);
      case MatrixKind::unitary: {
        if (auto v = (adjoint() * *this).compare(id); !v) return v;
        return (*this * adjoint()).compare(id);
      }
      case MatrixKind::selfadjoint:
        return compare(adjoint());
    }
    return {};
  }

  bool is(MatrixKind kind) const { return check(kind).ok; }

 private:
  void require_shape(const OpMatrix& o) const {
    if (o.size_ != size_)
      throw DimensionMismatch("matrix size mismatch: " + std::to_string(size_) + " vs " + std::to_string(o.size_));
    if (o.rank_ != rank_)
      throw RankMismatch("matrix rank mismatch: " + std::to_string(rank_) + " vs " + std::to_string(o.rank_));
  }

  unsigned size_;
  unsigned rank_;
  std::vector<Elem> entries_;
};

/// Ad(U)(A) = U A U^*.
template <CoefficientField S>
OpMatrix<S> ad_unitary(const OpMatrix<S>& U, const OpMatrix<S>& A) {
  return U * A * U.adjoint();
}

}  // namespace cuntz
