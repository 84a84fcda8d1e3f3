// Copyright 2026 The Polystate Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POLYSTATE_MANDEL_HPP
#define POLYSTATE_MANDEL_HPP

// Photon-number statistics. The parameter used here is the Fano-type ratio
// M_Q = Var(n) / <n>, so M_Q = 1 is Poissonian. The conventional Mandel Q is
// M_Q - 1 and is reported separately under that name.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "polystate/cyclic.hpp"
#include "polystate/errors.hpp"
#include "polystate/fock.hpp"
#include "polystate/gaussian.hpp"

namespace polystate {

/// Mean photon numbers below this make M_Q undefined.
inline constexpr double kMandelMinMean = 1e-14;

inline double mandel(const FockVector& state) {
  const PhotonMoments mom = photon_moments(state.normalized());
  if (!(mom.mean > kMandelMinMean)) {
    throw std::domain_error("mandel: parameter undefined for <n> = 0");
  }
  return (mom.second - mom.mean * mom.mean) / mom.mean;
}

enum class PhotonStatistics { subpoissonian, poissonian, superpoissonian };

inline const char* to_string(PhotonStatistics s) noexcept {
  switch (s) {
    case PhotonStatistics::subpoissonian:
      return "subpoissonian";
    case PhotonStatistics::poissonian:
      return "poissonian";
    default:
      return "superpoissonian";
  }
}

inline PhotonStatistics classify(double m_q, double tol = 1e-9) {
  if (m_q < 1.0 - tol) return PhotonStatistics::subpoissonian;
  if (m_q > 1.0 + tol) return PhotonStatistics::superpoissonian;
  return PhotonStatistics::poissonian;
}

struct MandelReport {
  double mean = 0.0;
  double variance = 0.0;
  double m_q = 0.0;
  double conventional_q = 0.0;  // M_Q - 1
  PhotonStatistics label = PhotonStatistics::poissonian;
};

inline MandelReport mandel_report(const FockVector& state, double tol = 1e-9) {
  const PhotonMoments mom = photon_moments(state.normalized());
  MandelReport r;
  r.mean = mom.mean;
  r.variance = mom.second - mom.mean * mom.mean;
  r.m_q = mandel(state);
  r.conventional_q = r.m_q - 1.0;
  r.label = classify(r.m_q, tol);
  return r;
}

// ---------------------------------------------------------------------------
// Parameter scan over b for the C_2 Gaussian states

struct MandelScanSpec {
  Complex a{0.5, 0.0};
  int lambda = 2;
  double b_min = -3.0;
  double b_max = 3.0;
  int points = 41;
  int n_max = 128;
};

struct MandelScanPoint {
  double b_re = 0.0;
  double b_im = 0.0;
  /// NaN where the state does not exist (b = 0, or an empty class).
  double m_q = std::numeric_limits<double>::quiet_NaN();
  double tail_mass = 0.0;
  bool valid = false;
};

struct MandelScanResult {
  MandelScanSpec spec;
  /// Row-major with b_re fastest.
  std::vector<MandelScanPoint> points;
  int valid_count = 0;
  int subpoissonian_count = 0;
  MandelScanPoint minimum;
  double max_tail_mass = 0.0;
};

inline MandelScanResult mandel_scan(const MandelScanSpec& spec) {
  if (spec.points < 2) {
    throw std::domain_error("mandel_scan: need at least 2 points per axis");
  }
  if (spec.lambda != 1 && spec.lambda != 2) {
    throw std::domain_error("mandel_scan: lambda must be 1 or 2");
  }
  MandelScanResult out;
  out.spec = spec;
  out.points.reserve(static_cast<std::size_t>(spec.points) * spec.points);
  const double span = spec.b_max - spec.b_min;
  for (int j = 0; j < spec.points; ++j) {
    for (int i = 0; i < spec.points; ++i) {
      MandelScanPoint pt;
      pt.b_re = spec.b_min + span * i / (spec.points - 1);
      pt.b_im = spec.b_min + span * j / (spec.points - 1);
      const GaussianParams params{spec.a, {pt.b_re, pt.b_im}};
      if (params.b != Complex{}) {
        try {
          const CyclicState psi =
              cyclic_gaussian(params, {2, spec.lambda}, spec.n_max, Method::erasure);
          pt.m_q = mandel(psi.state);
          pt.tail_mass = psi.state.tail_mass();
          pt.valid = true;
        } catch (const EmptyRepresentation&) {
        } catch (const std::domain_error&) {
        }
      }
      if (pt.valid) {
        ++out.valid_count;
        if (classify(pt.m_q) == PhotonStatistics::subpoissonian) {
          ++out.subpoissonian_count;
        }
        if (!out.minimum.valid || pt.m_q < out.minimum.m_q) {
          out.minimum = pt;
        }
        out.max_tail_mass = std::max(out.max_tail_mass, pt.tail_mass);
      }
      out.points.push_back(pt);
    }
  }
  return out;
}

}  // namespace polystate

#endif  // POLYSTATE_MANDEL_HPP
