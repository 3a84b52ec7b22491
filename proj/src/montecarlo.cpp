#include "montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "power.hpp"
#include "selection.hpp"

namespace dstas {
namespace {

// Trials are processed in fixed-size blocks and block results merged in block
// order, so every metric is bit-identical regardless of worker count.
constexpr long long kBlockSize = 1 << 16;

template <typename BlockFn>
void for_blocks(long long trials, int workers, BlockFn&& fn) {
  const long long nblocks = (trials + kBlockSize - 1) / kBlockSize;
  int n = workers > 0 ? workers
                      : static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  n = static_cast<int>(std::min<long long>(n, nblocks));
  std::atomic<long long> next{0};
  auto body = [&] {
    for (;;) {
      const long long b = next.fetch_add(1);
      if (b >= nblocks) return;
      const long long lo = b * kBlockSize;
      const long long hi = std::min(trials, lo + kBlockSize);
      fn(b, lo, hi);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
}

struct Moments {
  double sum = 0.0;
  double sumsq = 0.0;
  void add(double v) {
    sum += v;
    sumsq += v * v;
  }
  void merge(const Moments& o) {
    sum += o.sum;
    sumsq += o.sumsq;
  }
};

struct MeanStderr {
  double mean = 0.0;
  double se = 0.0;
};

MeanStderr finish(const Moments& m, long long n) {
  MeanStderr r;
  r.mean = m.sum / n;
  if (n > 1) {
    double var = std::max(0.0, (m.sumsq - n * r.mean * r.mean) / (n - 1));
    r.se = std::sqrt(var / n);
  }
  return r;
}

struct BlockAccum {
  Moments mi, interf, gain_s, gain_p;
  long long outage_count = 0;
};

SelectionOutcome select(const SimConfig& cfg, const GainSample& sample) {
  if (cfg.strategy == Strategy::ratio) return ratio_select(sample);
  return difference_select(sample, cfg.delta);
}

// Phase 1 of the simulated-statistics AIC rule: estimate E(gain_p) of the
// selected antenna over an independent stream of draws.
MeanStderr phase1_mean_gain_p(const SimConfig& cfg, const GainStream& stream) {
  const long long n1 = std::max<long long>(100000, cfg.trials / 10);
  const int m = cfg.params.num_antennas;
  std::vector<Moments> blocks((n1 + kBlockSize - 1) / kBlockSize);
  for_blocks(n1, cfg.workers, [&](long long b, long long lo, long long hi) {
    Moments acc;
    GainSample s;
    s.gains_s.resize(m);
    s.gains_p.resize(m);
    for (long long t = lo; t < hi; ++t) {
      for (int i = 0; i < m; ++i) {
        s.gains_s[i] = stream.exponential(cfg.params.mean_gain_s, t, i,
                                          GainStream::kPhaseOneData);
        s.gains_p[i] = stream.exponential(cfg.params.mean_gain_p, t, i,
                                          GainStream::kPhaseOneInterference);
      }
      acc.add(select(cfg, s).gain_p);
    }
    blocks[b] = acc;
  });
  Moments all;
  for (const auto& m2 : blocks) all.merge(m2);
  return finish(all, n1);
}

}  // namespace

void SimConfig::validate() const {
  params.validate();
  constraints.validate();
  if (trials < 1 || trials > 1000000000LL) {
    throw std::invalid_argument("SimConfig: trials must be in [1, 1e9]");
  }
  if (strategy == Strategy::difference && !(delta >= 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("SimConfig: delta must be in [0, 1]");
  }
  if (policy == PowerPolicy::fixed && !(fixed_power > 0.0)) {
    throw std::invalid_argument("SimConfig: fixed_power must be > 0");
  }
  if (!(r0 > 0.0) || !std::isfinite(r0)) {
    throw std::invalid_argument("SimConfig: r0 must be finite and > 0");
  }
}

SimReport run_sim(const SimConfig& cfg) {
  cfg.validate();
  const GainStream stream(cfg.seed);
  SimReport rep;

  double scalar_power = 0.0;
  bool per_trial_power = false;
  switch (cfg.policy) {
    case PowerPolicy::fixed:
      scalar_power = cfg.fixed_power;
      break;
    case PowerPolicy::statistical_aic:
      if (cfg.strategy == Strategy::difference) {
        scalar_power = statistical_power(cfg.params, cfg.constraints, cfg.delta).p_s;
      } else {
        const MeanStderr est = phase1_mean_gain_p(cfg, stream);
        rep.phase1_mean = est.mean;
        rep.phase1_stderr = est.se;
        scalar_power = std::min(cfg.constraints.interference_limit / est.mean,
                                cfg.constraints.p_max);
      }
      break;
    case PowerPolicy::instantaneous_pic:
      per_trial_power = true;
      break;
  }

  const int m = cfg.params.num_antennas;
  const double n0 = cfg.params.noise_power;
  const double p_max = cfg.constraints.p_max;
  const double limit = cfg.constraints.interference_limit;
  std::vector<BlockAccum> blocks((cfg.trials + kBlockSize - 1) / kBlockSize);
  for_blocks(cfg.trials, cfg.workers, [&](long long b, long long lo, long long hi) {
    BlockAccum acc;
    GainSample s;
    s.gains_s.resize(m);
    s.gains_p.resize(m);
    for (long long t = lo; t < hi; ++t) {
      for (int i = 0; i < m; ++i) {
        s.gains_s[i] =
            stream.exponential(cfg.params.mean_gain_s, t, i, GainStream::kData);
        s.gains_p[i] = stream.exponential(cfg.params.mean_gain_p, t, i,
                                          GainStream::kInterference);
      }
      const SelectionOutcome sel = select(cfg, s);
      double p = scalar_power;
      double interf;
      if (per_trial_power) {
        const double cap = limit / sel.gain_p;
        if (cap < p_max) {
          p = cap;
          interf = limit;  // p * gain_p == limit by construction
        } else {
          p = p_max;
          interf = p * sel.gain_p;
        }
      } else {
        interf = p * sel.gain_p;
      }
      const double rate = std::log2(1.0 + p * sel.gain_s / n0);
      acc.mi.add(rate);
      acc.interf.add(interf);
      acc.gain_s.add(sel.gain_s);
      acc.gain_p.add(sel.gain_p);
      if (rate <= cfg.r0) ++acc.outage_count;
    }
    blocks[b] = acc;
  });

  BlockAccum all;
  for (const auto& b : blocks) {
    all.mi.merge(b.mi);
    all.interf.merge(b.interf);
    all.gain_s.merge(b.gain_s);
    all.gain_p.merge(b.gain_p);
    all.outage_count += b.outage_count;
  }
  const long long n = cfg.trials;
  auto put = [&](const Moments& m2, double& mean, double& se) {
    const MeanStderr r = finish(m2, n);
    mean = r.mean;
    se = r.se;
  };
  put(all.mi, rep.mean_mi, rep.mean_mi_stderr);
  put(all.interf, rep.mean_interference, rep.mean_interference_stderr);
  put(all.gain_s, rep.mean_selected_gain_s, rep.mean_selected_gain_s_stderr);
  put(all.gain_p, rep.mean_selected_gain_p, rep.mean_selected_gain_p_stderr);
  rep.outage = static_cast<double>(all.outage_count) / n;
  if (n > 1) {
    rep.outage_stderr =
        std::sqrt(rep.outage * (1.0 - rep.outage) / (n - 1));
  }
  rep.trials_used = n;
  rep.power_used =
      per_trial_power ? std::numeric_limits<double>::quiet_NaN() : scalar_power;
  return rep;
}

std::vector<double> empirical_cdf(const SimConfig& cfg, Link link,
                                  const std::vector<double>& x_grid) {
  cfg.validate();
  if (!std::is_sorted(x_grid.begin(), x_grid.end())) {
    throw std::invalid_argument("empirical_cdf: x_grid must be sorted ascending");
  }
  if (x_grid.empty()) return {};
  const GainStream stream(cfg.seed);
  const int m = cfg.params.num_antennas;
  const std::size_t g = x_grid.size();
  std::vector<std::vector<long long>> blocks(
      (cfg.trials + kBlockSize - 1) / kBlockSize);
  for_blocks(cfg.trials, cfg.workers, [&](long long b, long long lo, long long hi) {
    std::vector<long long> hist(g + 1, 0);
    GainSample s;
    s.gains_s.resize(m);
    s.gains_p.resize(m);
    for (long long t = lo; t < hi; ++t) {
      for (int i = 0; i < m; ++i) {
        s.gains_s[i] =
            stream.exponential(cfg.params.mean_gain_s, t, i, GainStream::kData);
        s.gains_p[i] = stream.exponential(cfg.params.mean_gain_p, t, i,
                                          GainStream::kInterference);
      }
      const SelectionOutcome sel = select(cfg, s);
      const double v = link == Link::data ? sel.gain_s : sel.gain_p;
      const std::size_t idx =
          std::lower_bound(x_grid.begin(), x_grid.end(), v) - x_grid.begin();
      ++hist[idx];
    }
    blocks[b] = std::move(hist);
  });
  std::vector<long long> hist(g + 1, 0);
  for (const auto& h : blocks) {
    for (std::size_t i = 0; i <= g; ++i) hist[i] += h[i];
  }
  std::vector<double> cdf(g);
  long long running = 0;
  for (std::size_t i = 0; i < g; ++i) {
    running += hist[i];
    cdf[i] = static_cast<double>(running) / cfg.trials;
  }
  return cdf;
}

}  // namespace dstas
