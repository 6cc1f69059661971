#pragma once

// Uniform 1D grid with spectral derivative operators.
//
// Periodic grids use the complex DFT; points are x_min + k dx, k = 1..n, over
// the half-open interval (x_min, x_max]. Hard-wall grids use the sine basis
// (DST-I) on the n interior nodes of [x_min, x_max], dx = (x_max - x_min)/(n+1).
//
// Two-body fields are stored row-major as psi[i1 * n + i2].

#include <complex>
#include <cstddef>
#include <memory>
#include <mutex>
#include <new>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "collider/units_config.hpp"

namespace collider {

using Complex = std::complex<double>;

/// 64-byte aligned allocator so every field satisfies FFTW's SIMD alignment.
template <class T>
struct AlignedAllocator {
  using value_type = T;
  static constexpr std::align_val_t kAlign{64};

  AlignedAllocator() = default;
  template <class U>
  AlignedAllocator(const AlignedAllocator<U>&) noexcept {}

  T* allocate(std::size_t n) {
    return static_cast<T*>(::operator new(n * sizeof(T), kAlign));
  }
  void deallocate(T* p, std::size_t) noexcept { ::operator delete(p, kAlign); }

  template <class U>
  bool operator==(const AlignedAllocator<U>&) const noexcept { return true; }
};

using Field = std::vector<Complex, AlignedAllocator<Complex>>;
using RealField = std::vector<double>;

class SpatialGrid {
 public:
  explicit SpatialGrid(const GridSpec& spec);
  ~SpatialGrid();
  SpatialGrid(const SpatialGrid&) = delete;
  SpatialGrid& operator=(const SpatialGrid&) = delete;

  const GridSpec& spec() const noexcept { return spec_; }
  Boundary boundary() const noexcept { return spec_.boundary; }
  std::size_t size() const noexcept { return spec_.n; }
  double dx() const noexcept { return dx_; }
  std::span<const double> points() const noexcept { return points_; }
  /// Mode wavenumbers in transform order (DFT order, or m pi / L for sine modes).
  std::span<const double> wavenumbers() const noexcept { return k_; }

  /// Quadrature sum f(x_k) dx.
  double integrate(std::span<const double> f) const;

  /// Spectral d^2 f / dx^2.
  Field second_derivative(std::span<const Complex> f) const;

  /// transform^-1 [ exp(-i (k^2/2) dt_eff) transform[f] ]. Imaginary dt_eff
  /// gives the imaginary-time (diffusive) factor.
  Field apply_kinetic_factor(std::span<const Complex> f, Complex dt_eff) const;

  /// Multiply the spectral coefficients of a length-n field by `multiplier`
  /// (indexed like wavenumbers()) in place.
  void spectral_multiply(std::span<Complex> f, std::span<const Complex> multiplier) const;

  /// For an n x n field: psi_hat(k1,k2) *= m(k1) m(k2), in place.
  void spectral_multiply_2d(std::span<Complex> psi, std::span<const Complex> multiplier) const;

  /// For an n x n field: psi_hat(k1,k2) *= m(k1) + m(k2), in place.
  void spectral_multiply_2d_sum(std::span<Complex> psi, std::span<const double> multiplier) const;

  /// Unnormalized forward transform of an n x n field, in place. The squared
  /// norm satisfies sum |psi|^2 = spectral_scale_2d() * sum |psi_hat|^2.
  void forward_2d(std::span<Complex> psi) const;
  double spectral_scale_2d() const noexcept;

  /// exp(-i (k^2/2) dt_eff) for every mode.
  std::vector<Complex> kinetic_factor(Complex dt_eff) const;

  /// Dense matrix of -(1/2) d^2/dx^2 in the point basis (symmetric). Built once.
  const Eigen::MatrixXd& kinetic_matrix() const;

  /// Index of the mirror image -x_i, or npos when the grid has no mirror point.
  std::size_t mirror_index(std::size_t i) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  struct Plans;

  void transform_1d(Complex* data, bool forward) const;
  void transform_2d(Complex* data, bool forward) const;
  double inverse_scale_1d() const noexcept;

  GridSpec spec_;
  double dx_;
  std::vector<double> points_;
  std::vector<double> k_;
  std::unique_ptr<Plans> plans_;
  mutable std::once_flag kinetic_once_;
  mutable Eigen::MatrixXd kinetic_;
};

using GridPtr = std::shared_ptr<const SpatialGrid>;

/// Planner rigor for the n x n transforms of grids built afterwards. Estimate
/// plans are deterministic; patient plans are measured (about 1.5x faster at
/// n = 675) and only reproducible bit for bit when the wisdom is shared.
enum class FftPlanning { Estimate, Patient };
void set_fft_planning(FftPlanning mode);
FftPlanning fft_planning();
/// Accumulated planner wisdom; both return false on failure.
bool import_fft_wisdom(const std::string& path);
bool export_fft_wisdom(const std::string& path);

/// Validates the spec and prepares transform plans.
GridPtr build_grid(const GridSpec& spec);

}  // namespace collider
