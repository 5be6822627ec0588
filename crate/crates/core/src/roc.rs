//! ROC curves, AUC, and two between-curve discrimination measures:
//! ABROCA (`∫ |tpr_a − tpr_b| dfpr`) and RBROCA, its Product-logic
//! counterpart (`∫ 1 − min/max dfpr`).
//!
//! Curves are piecewise linear in fpr. Both measures are integrated exactly
//! on the union of the two curves' breakpoints; RBROCA uses the closed form
//! of `∫ (l0 + kl·t) / (h0 + kh·t) dt` on each piece.

use std::cmp::Ordering;

use serde::Serialize;
use thiserror::Error;

use crate::logic::TruthValue;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RocError {
    #[error("scores and labels differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("ROC needs at least one positive and one negative label")]
    SingleClass,
    #[error("score at position {0} is not finite")]
    NonFiniteScore(usize),
    #[error("invalid curve: {0}")]
    InvalidCurve(&'static str),
}

/// A monotone curve of `(fpr, tpr)` points covering `fpr ∈ [0, 1]`.
///
/// Points are sorted by fpr; several points may share an fpr (a vertical
/// step), in which case their tpr is non-decreasing.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RocCurve {
    points: Vec<(f64, f64)>,
}

impl RocCurve {
    /// Validates an explicit curve. The first point must have fpr 0 and the
    /// last fpr 1; curves built from scores additionally start at `(0, 0)`
    /// and end at `(1, 1)`.
    pub fn from_points(points: Vec<(f64, f64)>) -> Result<Self, RocError> {
        if points.len() < 2 {
            return Err(RocError::InvalidCurve("fewer than two points"));
        }
        for &(f, t) in &points {
            if !(0.0..=1.0).contains(&f) || !(0.0..=1.0).contains(&t) {
                return Err(RocError::InvalidCurve("coordinate outside [0, 1]"));
            }
        }
        for w in points.windows(2) {
            if w[1].0 < w[0].0 {
                return Err(RocError::InvalidCurve("fpr is not sorted"));
            }
            if w[1].1 < w[0].1 {
                return Err(RocError::InvalidCurve("tpr decreases"));
            }
        }
        if points[0].0 != 0.0 || points[points.len() - 1].0 != 1.0 {
            return Err(RocError::InvalidCurve("fpr must span [0, 1]"));
        }
        Ok(RocCurve { points })
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    /// Diagonal `tpr = fpr`.
    pub fn diagonal() -> Self {
        RocCurve {
            points: vec![(0.0, 0.0), (1.0, 1.0)],
        }
    }

    /// tpr just to the right of `x` (the top of a vertical step at `x`).
    fn right_value(&self, x: f64) -> f64 {
        let k = self.points.partition_point(|p| p.0 <= x);
        let (f0, t0) = self.points[k - 1];
        if f0 == x || k == self.points.len() {
            return t0;
        }
        let (f1, t1) = self.points[k];
        t0 + (t1 - t0) * (x - f0) / (f1 - f0)
    }

    /// tpr just to the left of `x` (the bottom of a vertical step at `x`).
    fn left_value(&self, x: f64) -> f64 {
        let k = self.points.partition_point(|p| p.0 < x);
        let (f1, t1) = self.points[k];
        if f1 == x || k == 0 {
            return t1;
        }
        let (f0, t0) = self.points[k - 1];
        t0 + (t1 - t0) * (x - f0) / (f1 - f0)
    }
}

/// Threshold sweep from the highest score down. Tied scores move together
/// as one step.
pub fn roc_from_scores(scores: &[f64], labels: &[bool]) -> Result<RocCurve, RocError> {
    if scores.len() != labels.len() {
        return Err(RocError::LengthMismatch(scores.len(), labels.len()));
    }
    if let Some(i) = scores.iter().position(|s| !s.is_finite()) {
        return Err(RocError::NonFiniteScore(i));
    }
    let positives = labels.iter().filter(|&&l| l).count();
    let negatives = labels.len() - positives;
    if positives == 0 || negatives == 0 {
        return Err(RocError::SingleClass);
    }
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].partial_cmp(&scores[a]).unwrap_or(Ordering::Equal));

    let mut points = Vec::with_capacity(scores.len() + 1);
    points.push((0.0, 0.0));
    let (mut tp, mut fp) = (0usize, 0usize);
    let mut i = 0;
    while i < order.len() {
        let threshold = scores[order[i]];
        while i < order.len() && scores[order[i]] == threshold {
            if labels[order[i]] {
                tp += 1;
            } else {
                fp += 1;
            }
            i += 1;
        }
        points.push((fp as f64 / negatives as f64, tp as f64 / positives as f64));
    }
    Ok(RocCurve { points })
}

/// Trapezoidal area under the curve.
pub fn auc(curve: &RocCurve) -> TruthValue {
    let area: f64 = curve
        .points
        .windows(2)
        .map(|w| (w[1].0 - w[0].0) * (w[0].1 + w[1].1) / 2.0)
        .sum();
    TruthValue::saturate(area)
}

/// Area between the curves, `∫₀¹ |tpr_a − tpr_b| dfpr`.
pub fn abroca(a: &RocCurve, b: &RocCurve) -> TruthValue {
    TruthValue::saturate(between(a, b).0)
}

/// Relative between-ROC area, `∫₀¹ 1 − min{tpr_a, tpr_b}/max{tpr_a, tpr_b} dfpr`,
/// with the integrand 0 where both rates are 0.
pub fn rbroca(a: &RocCurve, b: &RocCurve) -> TruthValue {
    TruthValue::saturate(between(a, b).1)
}

/// Both between-curve integrals in one pass over the merged breakpoints.
pub fn between(a: &RocCurve, b: &RocCurve) -> (f64, f64) {
    let mut grid: Vec<f64> = a.points.iter().chain(&b.points).map(|p| p.0).collect();
    grid.sort_by(|x, y| x.partial_cmp(y).unwrap());
    grid.dedup();

    let (mut abs_area, mut rel_area) = (0.0, 0.0);
    for w in grid.windows(2) {
        let (x0, x1) = (w[0], w[1]);
        let len = x1 - x0;
        let (a0, a1) = (a.right_value(x0), a.left_value(x1));
        let (b0, b1) = (b.right_value(x0), b.left_value(x1));
        let (d0, d1) = (a0 - b0, a1 - b1);
        if d0 * d1 < 0.0 {
            let cut = len * d0 / (d0 - d1);
            let mid = a0 + (a1 - a0) * cut / len;
            for (l, pa, pb) in [(cut, (a0, mid), (b0, mid)), (len - cut, (mid, a1), (mid, b1))] {
                let (x, y) = piece(l, pa, pb);
                abs_area += x;
                rel_area += y;
            }
        } else {
            let (x, y) = piece(len, (a0, a1), (b0, b1));
            abs_area += x;
            rel_area += y;
        }
    }
    (abs_area, rel_area)
}

/// Integrals over one linear piece on which the curves do not cross.
fn piece(len: f64, a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    if len <= 0.0 {
        return (0.0, 0.0);
    }
    let abs_area = len * ((a.0 - b.0).abs() + (a.1 - b.1).abs()) / 2.0;
    let (lo, hi) = if a.0 + a.1 <= b.0 + b.1 { (a, b) } else { (b, a) };
    let ratio = ratio_integral(len, lo, hi).clamp(0.0, len);
    (abs_area, len - ratio)
}

/// `∫₀ᴸ lo(t) / hi(t) dt` for linear `lo ≤ hi`, with `0/0 := 1`.
fn ratio_integral(len: f64, lo: (f64, f64), hi: (f64, f64)) -> f64 {
    let (l0, l1) = lo;
    let (h0, h1) = hi;
    if (l0 == h0 && l1 == h1) || (h0 <= 0.0 && h1 <= 0.0) {
        return len;
    }
    if h0 <= 0.0 {
        // lo(0) = hi(0) = 0: the ratio is constant along the piece.
        return len * l1 / h1;
    }
    let kl = (l1 - l0) / len;
    let kh = (h1 - h0) / len;
    let x = kh * len / h0;
    if x.abs() <= 0.5 {
        // Expand 1 / (1 + x·t/L) as a geometric series.
        let mut sum = 0.0;
        let mut pow = 1.0;
        for n in 0..200 {
            let n = n as f64;
            let term = pow * (l0 * len / (n + 1.0) + kl * len * len / (n + 2.0));
            sum += term;
            if term.abs() < 1e-18 * sum.abs().max(1e-300) {
                break;
            }
            pow *= -x;
        }
        sum / h0
    } else {
        let alpha = kl / kh;
        let beta = l0 - alpha * h0;
        alpha * len + beta / kh * (h1 / h0).ln()
    }
}

/// Which synthetic score generator to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    /// negatives `U^c`, positives `U`
    First,
    /// negatives `U^c`, positives `1 − U^c`
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SynthConfig {
    pub c: f64,
    pub n: usize,
    pub seed: u64,
}

pub const C_RANGE: (f64, f64) = (1.0, 32.0);
pub const DEFAULT_SAMPLES: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SynthError {
    #[error("shape exponent c = {0} is outside [1, 32]")]
    BadExponent(f64),
    #[error("need at least 2 samples, got {0}")]
    TooFewSamples(usize),
    #[error(transparent)]
    Roc(#[from] RocError),
}

impl SynthConfig {
    pub fn new(c: f64, n: usize, seed: u64) -> Result<Self, SynthError> {
        if !(C_RANGE.0..=C_RANGE.1).contains(&c) {
            return Err(SynthError::BadExponent(c));
        }
        if n < 2 {
            return Err(SynthError::TooFewSamples(n));
        }
        Ok(SynthConfig { c, n, seed })
    }
}

/// Labels drawn equiprobably, then one uniform draw per sample shaped by the
/// family formula. Each family reads its own stream of a generator keyed by
/// `seed`, and `c` does not affect the draws, so sweeping `c` with a fixed
/// seed reuses the same labels and uniforms.
pub fn synth_predictions(config: &SynthConfig, family: Family) -> (Vec<f64>, Vec<bool>) {
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(match family {
        Family::First => 1,
        Family::Second => 2,
    });
    let labels: Vec<bool> = (0..config.n).map(|_| rng.random::<bool>()).collect();
    let scores = labels
        .iter()
        .map(|&y| {
            let u: f64 = rng.random();
            match (family, y) {
                (_, false) => u.powf(config.c),
                (Family::First, true) => u,
                (Family::Second, true) => 1.0 - u.powf(config.c),
            }
        })
        .collect();
    (scores, labels)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub c: f64,
    pub min_auc: f64,
    pub auc_diff: f64,
    pub abroca: f64,
    pub rbroca: f64,
    pub one_minus_min_auc: f64,
}

/// `steps` exponents spaced geometrically from `c_min` to `c_max`.
pub fn c_grid(c_min: f64, c_max: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => vec![],
        1 => vec![c_min],
        _ => {
            let ratio = (c_max / c_min).ln() / (steps - 1) as f64;
            (0..steps)
                .map(|i| {
                    if i == steps - 1 {
                        c_max
                    } else {
                        c_min * (ratio * i as f64).exp()
                    }
                })
                .collect()
        }
    }
}

pub fn sweep_row(config: &SynthConfig) -> Result<SweepRow, SynthError> {
    let (s1, y1) = synth_predictions(config, Family::First);
    let (s2, y2) = synth_predictions(config, Family::Second);
    let r1 = roc_from_scores(&s1, &y1)?;
    let r2 = roc_from_scores(&s2, &y2)?;
    let (auc1, auc2) = (auc(&r1).get(), auc(&r2).get());
    let (abs_area, rel_area) = between(&r1, &r2);
    let min_auc = auc1.min(auc2);
    Ok(SweepRow {
        c: config.c,
        min_auc,
        auc_diff: (auc1 - auc2).abs(),
        abroca: abs_area.clamp(0.0, 1.0),
        rbroca: rel_area.clamp(0.0, 1.0),
        one_minus_min_auc: 1.0 - min_auc,
    })
}

/// One row per exponent, all sharing `seed`. Rows are computed on scoped
/// threads and returned in input order.
pub fn sweep_experiment(c_values: &[f64], n: usize, seed: u64) -> Result<Vec<SweepRow>, SynthError> {
    let configs = c_values
        .iter()
        .map(|&c| SynthConfig::new(c, n, seed))
        .collect::<Result<Vec<_>, _>>()?;
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .clamp(1, configs.len().max(1));
    let chunk = configs.len().div_ceil(workers).max(1);
    std::thread::scope(|scope| {
        let handles: Vec<_> = configs
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(sweep_row).collect::<Vec<_>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(points: &[(f64, f64)]) -> RocCurve {
        RocCurve::from_points(points.to_vec()).unwrap()
    }

    #[test]
    fn hand_sweep() {
        let r = roc_from_scores(&[0.9, 0.8, 0.3, 0.2], &[true, true, false, false]).unwrap();
        assert_eq!(
            r.points(),
            &[(0.0, 0.0), (0.0, 0.5), (0.0, 1.0), (0.5, 1.0), (1.0, 1.0)]
        );
        assert_eq!(auc(&r).get(), 1.0);
    }

    #[test]
    fn tied_scores_give_the_diagonal() {
        let r = roc_from_scores(&[0.4; 6], &[true, false, true, false, false, true]).unwrap();
        assert_eq!(r.points(), &[(0.0, 0.0), (1.0, 1.0)]);
        assert_eq!(auc(&r).get(), 0.5);
    }

    #[test]
    fn separating_scores() {
        let r = roc_from_scores(&[0.1, 0.7, 0.2, 0.9], &[false, true, false, true]).unwrap();
        assert!(r.points().contains(&(0.0, 1.0)));
        assert_eq!(auc(&r).get(), 1.0);
    }

    #[test]
    fn roc_errors() {
        assert_eq!(roc_from_scores(&[0.1, 0.2], &[true, true]), Err(RocError::SingleClass));
        assert_eq!(roc_from_scores(&[0.1], &[true, false]), Err(RocError::LengthMismatch(1, 2)));
        assert_eq!(
            roc_from_scores(&[0.1, f64::NAN], &[true, false]),
            Err(RocError::NonFiniteScore(1))
        );
        assert!(RocCurve::from_points(vec![(0.0, 0.5), (1.0, 0.2)]).is_err());
        assert!(RocCurve::from_points(vec![(0.0, 0.0), (0.9, 1.0)]).is_err());
    }

    #[test]
    fn identical_curves() {
        let r = curve(&[(0.0, 0.0), (0.0, 0.3), (0.4, 0.8), (1.0, 1.0)]);
        assert_eq!(abroca(&r, &r).get(), 0.0);
        assert_eq!(rbroca(&r, &r).get(), 0.0);
    }

    #[test]
    fn diagonal_against_constant_one() {
        let step = curve(&[(0.0, 0.0), (0.0, 1.0), (1.0, 1.0)]);
        let d = RocCurve::diagonal();
        assert!((abroca(&d, &step).get() - 0.5).abs() < 1e-12);
        assert!((rbroca(&d, &step).get() - 0.5).abs() < 1e-12);
        assert_eq!(abroca(&d, &step), abroca(&step, &d));
        assert_eq!(rbroca(&d, &step), rbroca(&step, &d));
    }

    #[test]
    fn half_curve_has_constant_relative_gap() {
        let half = curve(&[(0.0, 0.0), (1.0, 0.5)]);
        let d = RocCurve::diagonal();
        assert!((rbroca(&half, &d).get() - 0.5).abs() < 1e-12);
        assert!((abroca(&half, &d).get() - 0.25).abs() < 1e-12);
    }

    #[test]
    fn crossing_curves_split_at_the_intersection() {
        let a = curve(&[(0.0, 0.0), (0.5, 0.8), (1.0, 1.0)]);
        let b = curve(&[(0.0, 0.0), (0.0, 0.4), (1.0, 1.0)]);
        // brute-force midpoint oracle
        let n = 200_000;
        let (mut abs_o, mut rel_o) = (0.0, 0.0);
        for i in 0..n {
            let x = (i as f64 + 0.5) / n as f64;
            let ta = if x < 0.5 { 1.6 * x } else { 0.8 + 0.4 * (x - 0.5) };
            let tb = 0.4 + 0.6 * x;
            abs_o += (ta - tb).abs() / n as f64;
            rel_o += (1.0 - ta.min(tb) / ta.max(tb)) / n as f64;
        }
        assert!((abroca(&a, &b).get() - abs_o).abs() < 1e-8);
        assert!((rbroca(&a, &b).get() - rel_o).abs() < 1e-6);
    }

    #[test]
    fn ratio_integral_branches_agree() {
        // Series and logarithmic forms around the switch point.
        for &(h0, h1) in &[(0.4, 0.59), (0.4, 0.61), (0.2, 0.2), (0.01, 0.9)] {
            let (l0, l1) = (h0 * 0.3, h1 * 0.7);
            let n = 100_000;
            let mut oracle = 0.0;
            for i in 0..n {
                let t = (i as f64 + 0.5) / n as f64;
                oracle += (l0 + (l1 - l0) * t) / (h0 + (h1 - h0) * t) / n as f64;
            }
            let got = ratio_integral(1.0, (l0, l1), (h0, h1));
            assert!((got - oracle).abs() < 1e-8, "{h0} {h1}: {got} vs {oracle}");
        }
    }

    #[test]
    fn synthetic_streams_are_deterministic() {
        let cfg = SynthConfig::new(4.0, 1000, 7).unwrap();
        assert_eq!(
            synth_predictions(&cfg, Family::First),
            synth_predictions(&cfg, Family::First)
        );
        assert_ne!(
            synth_predictions(&cfg, Family::First).1,
            synth_predictions(&cfg, Family::Second).1
        );
        // c does not change the draws, only their shaping.
        let other = SynthConfig::new(8.0, 1000, 7).unwrap();
        assert_eq!(
            synth_predictions(&cfg, Family::First).1,
            synth_predictions(&other, Family::First).1
        );
    }

    #[test]
    fn config_validation() {
        assert!(matches!(SynthConfig::new(0.5, 10, 0), Err(SynthError::BadExponent(_))));
        assert!(matches!(SynthConfig::new(40.0, 10, 0), Err(SynthError::BadExponent(_))));
        assert!(matches!(SynthConfig::new(2.0, 1, 0), Err(SynthError::TooFewSamples(1))));
    }

    #[test]
    fn geometric_grid() {
        let g = c_grid(1.0, 32.0, 6);
        assert_eq!(g.len(), 6);
        for (i, c) in g.iter().enumerate() {
            assert!((c - 2f64.powi(i as i32)).abs() < 1e-12);
        }
        assert_eq!(c_grid(1.0, 32.0, 1), vec![1.0]);
    }

    #[test]
    fn sweep_rows_in_order() {
        let cs = c_grid(1.0, 32.0, 5);
        let rows = sweep_experiment(&cs, 2000, 3).unwrap();
        assert_eq!(rows.len(), 5);
        for (row, c) in rows.iter().zip(&cs) {
            assert_eq!(row.c, *c);
            assert!(row.rbroca + 1e-12 >= row.abroca);
            assert!((row.one_minus_min_auc - (1.0 - row.min_auc)).abs() < 1e-15);
        }
        assert_eq!(rows, sweep_experiment(&cs, 2000, 3).unwrap());
    }
}
