#include "transform.h"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace frds {
namespace {

struct PlanPair {
  fftw_plan forward;
  fftw_plan backward;
};

// One ESTIMATE|UNALIGNED plan pair per grid size, created lazily under a
// lock. fftw_execute_dft on user buffers is thread-safe, plan creation is
// not.
PlanPair plans_for(int n) {
  static std::mutex mu;
  static std::map<int, PlanPair> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<cplx> scratch(static_cast<std::size_t>(n) * n);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  PlanPair p{
      fftw_plan_dft_2d(n, n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED),
      fftw_plan_dft_2d(n, n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED),
  };
  if (!p.forward || !p.backward) throw ComputationError("fftw plan creation failed");
  cache.emplace(n, p);
  return p;
}

void execute(fftw_plan plan, std::vector<cplx>& inout) {
  auto* buf = reinterpret_cast<fftw_complex*>(inout.data());
  fftw_execute_dft(plan, buf, buf);
}

}  // namespace

SpectralField forward_transform(const PhysicalField& f) {
  if (!f.finite()) throw ComputationError("forward transform: non-finite input field");
  const int n = f.grid.n();
  std::vector<cplx> buf(f.values.begin(), f.values.end());
  execute(plans_for(n).forward, buf);
  const double scale = 1.0 / (static_cast<double>(n) * n);
  for (cplx& c : buf) c *= scale;
  return SpectralField(f.grid, std::move(buf));
}

std::vector<cplx> inverse_transform_complex(const SpectralField& s) {
  std::vector<cplx> buf(s.coeffs);
  execute(plans_for(s.grid.n()).backward, buf);
  return buf;
}

PhysicalField inverse_transform(const SpectralField& s, double imag_tol) {
  std::vector<cplx> buf = inverse_transform_complex(s);
  double worst = 0.0;
  for (const cplx& c : buf) worst = std::max(worst, std::abs(c.imag()));
  if (worst > imag_tol)
    throw ComputationError("inverse transform: imaginary residue " + std::to_string(worst) +
                           " exceeds tolerance (conjugate symmetry broken)");
  std::vector<double> out(buf.size());
  for (std::size_t i = 0; i < buf.size(); ++i) out[i] = buf[i].real();
  return PhysicalField(s.grid, std::move(out));
}

}  // namespace frds
