//! Rank correlation and least-squares plumbing shared by the centrality and
//! experiment code.

use crate::error::{NetdimError, Result};

/// Which tau denominator to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize)]
pub enum TauVariant {
    /// `2 (n_p - n_n) / (n (n-1))`: ties count in neither `n_p` nor `n_n`
    /// and are not corrected away, so they shrink |tau|.
    #[default]
    TauA,
    /// Tie-corrected denominator `sqrt((n0 - t_x)(n0 - t_y))`.
    TauB,
}

/// Pair bookkeeping behind both tau variants. All fields are exact integers,
/// so the fast path and the quadratic oracle can be compared before any
/// division happens.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KendallCounts {
    /// Concordant minus discordant pairs.
    pub concordant_minus_discordant: i64,
    /// Pairs tied in x (including pairs tied in both).
    pub tied_x: u64,
    /// Pairs tied in y (including pairs tied in both).
    pub tied_y: u64,
    /// Pairs tied in both.
    pub tied_both: u64,
    /// Total pairs `n (n-1) / 2`.
    pub total_pairs: u64,
}

fn check_series(x: &[f64], y: &[f64]) -> Result<()> {
    if x.len() != y.len() {
        return Err(NetdimError::InvalidArgument(format!(
            "series length mismatch: {} vs {}",
            x.len(),
            y.len()
        )));
    }
    if x.len() < 2 {
        return Err(NetdimError::InvalidArgument(
            "kendall tau needs at least 2 observations".into(),
        ));
    }
    if x.iter().chain(y.iter()).any(|v| v.is_nan()) {
        return Err(NetdimError::InvalidArgument(
            "kendall tau input contains NaN".into(),
        ));
    }
    Ok(())
}

/// Exact pair counts in O(n log n): sort by (x, y), count tie runs, then count
/// y-inversions with a bottom-up merge. Within an x-run the pre-sort orders y
/// ascending, so every counted inversion is a genuinely discordant pair.
pub fn kendall_counts(x: &[f64], y: &[f64]) -> Result<KendallCounts> {
    check_series(x, y)?;
    let n = x.len();
    let mut pairs: Vec<(f64, f64)> = x.iter().copied().zip(y.iter().copied()).collect();
    pairs.sort_by(|a, b| a.partial_cmp(b).expect("NaN rejected above"));

    let run_pairs = |len: u64| len * (len - 1) / 2;

    let mut tied_x = 0u64;
    let mut tied_both = 0u64;
    let mut x_run = 1u64;
    let mut xy_run = 1u64;
    for i in 1..n {
        if pairs[i].0 == pairs[i - 1].0 {
            x_run += 1;
            if pairs[i].1 == pairs[i - 1].1 {
                xy_run += 1;
            } else {
                tied_both += run_pairs(xy_run);
                xy_run = 1;
            }
        } else {
            tied_x += run_pairs(x_run);
            tied_both += run_pairs(xy_run);
            x_run = 1;
            xy_run = 1;
        }
    }
    tied_x += run_pairs(x_run);
    tied_both += run_pairs(xy_run);

    // Merge sort on y counting strict inversions (= discordant pairs).
    let mut keys: Vec<f64> = pairs.iter().map(|p| p.1).collect();
    let mut scratch = vec![0.0f64; n];
    let mut discordant = 0u64;
    let mut width = 1;
    while width < n {
        let mut start = 0;
        while start < n {
            let mid = (start + width).min(n);
            let end = (start + 2 * width).min(n);
            let (mut i, mut j, mut k) = (start, mid, start);
            while i < mid || j < end {
                let take_left = j >= end || (i < mid && keys[i] <= keys[j]);
                if take_left {
                    scratch[k] = keys[i];
                    i += 1;
                } else {
                    discordant += (mid - i) as u64;
                    scratch[k] = keys[j];
                    j += 1;
                }
                k += 1;
            }
            start = end;
        }
        keys.copy_from_slice(&scratch);
        width *= 2;
    }

    let mut tied_y = 0u64;
    let mut y_run = 1u64;
    for i in 1..n {
        if keys[i] == keys[i - 1] {
            y_run += 1;
        } else {
            tied_y += run_pairs(y_run);
            y_run = 1;
        }
    }
    tied_y += run_pairs(y_run);

    let total_pairs = run_pairs(n as u64);
    // concordant + discordant = total - tied_x - tied_y + tied_both
    let concordant_minus_discordant = total_pairs as i64 - tied_x as i64 - tied_y as i64
        + tied_both as i64
        - 2 * discordant as i64;

    Ok(KendallCounts {
        concordant_minus_discordant,
        tied_x,
        tied_y,
        tied_both,
        total_pairs,
    })
}

/// Kendall rank correlation, `2 (n_p - n_n) / (n (n-1))`.
pub fn kendall_tau(x: &[f64], y: &[f64]) -> Result<f64> {
    let counts = kendall_counts(x, y)?;
    Ok(counts.concordant_minus_discordant as f64 / counts.total_pairs as f64)
}

/// Tie-corrected Kendall tau (tau-b). Returns 0 when either series is constant.
pub fn kendall_tau_b(x: &[f64], y: &[f64]) -> Result<f64> {
    let counts = kendall_counts(x, y)?;
    let denom = ((counts.total_pairs - counts.tied_x) as f64
        * (counts.total_pairs - counts.tied_y) as f64)
        .sqrt();
    if denom == 0.0 {
        return Ok(0.0);
    }
    Ok(counts.concordant_minus_discordant as f64 / denom)
}

/// Tau under the requested variant.
pub fn kendall_tau_variant(x: &[f64], y: &[f64], variant: TauVariant) -> Result<f64> {
    match variant {
        TauVariant::TauA => kendall_tau(x, y),
        TauVariant::TauB => kendall_tau_b(x, y),
    }
}

/// Ordinary least squares `y = slope * x + intercept`, single pass over the
/// raw moment sums.
pub fn fit_slope(points: &[(f64, f64)]) -> Result<(f64, f64)> {
    if points.len() < 2 {
        return Err(NetdimError::Degenerate(format!(
            "least-squares fit needs at least 2 points, got {}",
            points.len()
        )));
    }
    let n = points.len() as f64;
    let (mut sx, mut sy, mut sxx, mut sxy) = (0.0, 0.0, 0.0, 0.0);
    for &(x, y) in points {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    let denom = n * sxx - sx * sx;
    if denom <= 0.0 || !denom.is_finite() {
        return Err(NetdimError::Degenerate(
            "least-squares fit needs at least two distinct x values".into(),
        ));
    }
    let slope = (n * sxy - sx * sy) / denom;
    let intercept = (sy - slope * sx) / n;
    Ok((slope, intercept))
}
