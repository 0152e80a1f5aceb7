//! Upper and lower bounds on `n(k, d)`.
//!
//! Every formula is evaluated exactly: binomial sums in checked `u128`
//! arithmetic and the weighted-cover bounds as [`DyadicSum`]s, floored once
//! per branch of any max/min. Nothing passes through floating point.
//!
//! Notation used below: `m = d - k`, `B(r, d)` is the size of the largest
//! binary code of length `d` and diameter `r` (a radius `r/2` Hamming ball
//! for even `r`, `{0,1}` times a radius `(r-1)/2` ball in dimension `d-1`
//! for odd `r`), and `ball(d, r) = sum_{j<=r} C(d, j)`.

use std::fmt;

use serde::Serialize;

use crate::dyadic::DyadicSum;
use crate::error::{domain, Error, Result};
use crate::reference::{self, ExactValue};

/// An exact bound value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct BoundValue(pub u128);

impl BoundValue {
    pub fn get(self) -> u128 {
        self.0
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl PartialEq<u128> for BoundValue {
    fn eq(&self, other: &u128) -> bool {
        self.0 == *other
    }
}

fn overflow() -> Error {
    Error::Overflow("bound arithmetic")
}

fn add(a: u128, b: u128) -> Result<u128> {
    a.checked_add(b).ok_or_else(overflow)
}

fn mul(a: u128, b: u128) -> Result<u128> {
    a.checked_mul(b).ok_or_else(overflow)
}

fn pow2(e: usize) -> Result<u128> {
    if e >= 128 {
        return Err(overflow());
    }
    Ok(1u128 << e)
}

fn signed(x: u128) -> Result<i128> {
    i128::try_from(x).map_err(|_| overflow())
}

fn floor_value(x: DyadicSum) -> Result<BoundValue> {
    let f = x.floor();
    u128::try_from(f)
        .map(BoundValue)
        .map_err(|_| Error::Domain(format!("negative bound {x}")))
}

/// `C(n, r)`, zero when `r > n`.
pub fn binomial(n: usize, r: usize) -> Result<u128> {
    if r > n {
        return Ok(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        // acc * (n - i) / (i + 1) is exact at every step
        let num = mul(acc, (n - i) as u128)?;
        acc = num / (i as u128 + 1);
    }
    Ok(acc)
}

/// `sum_{j=0..=r} C(n, j)`.
pub fn ball_size(n: usize, r: usize) -> Result<u128> {
    (0..=r.min(n)).try_fold(0u128, |acc, j| add(acc, binomial(n, j)?))
}

/// Size of the largest binary code of length `d` with diameter `k`.
pub fn b_config_size(k: usize, d: usize) -> Result<BoundValue> {
    if k > d {
        return Err(domain(format!("diameter {k} exceeds length {d}")));
    }
    let t = k / 2;
    let v = if k % 2 == 0 {
        ball_size(d, t)?
    } else {
        mul(2, ball_size(d - 1, t)?)?
    };
    Ok(BoundValue(v))
}

/// The isodiametric bound for binary codes; same value as [`b_config_size`]
/// with the stricter domain `d > k`.
pub fn kleitman_bound(k: usize, d: usize) -> Result<BoundValue> {
    if d <= k {
        return Err(domain(format!("isodiametric bound needs d > k, got k={k}, d={d}")));
    }
    b_config_size(k, d)
}

/// Size bound for diameter-`k` binary codes not contained in any copy of
/// the extremal configuration.
pub fn stability_bound(k: usize, d: usize) -> Result<BoundValue> {
    if d < k + 2 {
        return Err(domain(format!("stability bound needs d >= k + 2, got k={k}, d={d}")));
    }
    let t = k / 2;
    let full = b_config_size(k, d)?.0;
    let cut = if k % 2 == 0 {
        binomial(d - t - 1, t)?
    } else {
        binomial(d - t - 2, t)?
    };
    Ok(BoundValue(full - cut + 1))
}

fn check_k_d(k: usize, d: usize) -> Result<()> {
    if k == 0 || k > d {
        return Err(domain(format!("need 1 <= k <= d, got k={k}, d={d}")));
    }
    Ok(())
}

fn check_k_below_d(k: usize, d: usize) -> Result<()> {
    if k == 0 || k >= d {
        return Err(domain(format!("need 1 <= k <= d - 1, got k={k}, d={d}")));
    }
    Ok(())
}

/// Product-construction lower bound `prod_{i<k} (floor((d+i)/k) + 1)`.
pub fn alon_lower(k: usize, d: usize) -> Result<BoundValue> {
    check_k_d(k, d)?;
    (0..k)
        .try_fold(1u128, |acc, i| mul(acc, ((d + i) / k) as u128 + 1))
        .map(BoundValue)
}

/// Polynomial-method upper bound `sum_{i<=k} 2^i C(d, i)`.
pub fn alon_upper(k: usize, d: usize) -> Result<BoundValue> {
    check_k_d(k, d)?;
    (0..=k)
        .try_fold(0u128, |acc, i| add(acc, mul(pow2(i)?, binomial(d, i)?)?))
        .map(BoundValue)
}

/// Rank-argument upper bound `1 + sum_{i=1..=k} 2^(i-1) C(d, i)`.
pub fn huang_sudakov_upper(k: usize, d: usize) -> Result<BoundValue> {
    check_k_d(k, d)?;
    (1..=k)
        .try_fold(1u128, |acc, i| add(acc, mul(pow2(i - 1)?, binomial(d, i)?)?))
        .map(BoundValue)
}

/// `min_i 2^(d-i) + ball(d, ceil((k+2i-2)/2))` over all `i >= 1` with
/// `k + 2i - 2 <= d - 1`.
pub fn agkp_upper(k: usize, d: usize) -> Result<BoundValue> {
    check_k_below_d(k, d)?;
    let mut best: Option<u128> = None;
    let mut i = 1;
    while k + 2 * i - 2 < d {
        let r = (k + 2 * i - 2).div_ceil(2);
        let v = add(pow2(d - i)?, ball_size(d, r)?)?;
        best = Some(best.map_or(v, |b| b.min(v)));
        i += 1;
    }
    best.map(BoundValue)
        .ok_or_else(|| domain(format!("no admissible parameter for k={k}, d={d}")))
}

/// `1/2^(j+1) - 1/2^(m-j)`, the weight attached to `B(k + 2j, d)`.
fn coefficient(j: usize, m: usize) -> Result<DyadicSum> {
    DyadicSum::inverse_power_of_two(j as u32 + 1)?
        .checked_sub(DyadicSum::inverse_power_of_two((m - j) as u32)?)
}

fn weighted_b(j: usize, k: usize, d: usize, m: usize) -> Result<DyadicSum> {
    let b = signed(b_config_size(k + 2 * j, d)?.0)?;
    coefficient(j, m)?.checked_mul_int(b)
}

fn pow2_dyadic(e: usize) -> Result<DyadicSum> {
    Ok(DyadicSum::integer(signed(pow2(e)?)?))
}

/// Largest index of the regular range of `g`: `(m-2)/2` for even `m`,
/// `(m-3)/2` for odd `m`. `None` when the range is empty (`m = 1`).
fn last_regular_index(m: usize) -> Option<usize> {
    if m % 2 == 0 {
        Some((m - 2) / 2)
    } else {
        m.checked_sub(3).map(|x| x / 2)
    }
}

/// The index at which `g` attains the main bound.
fn terminal_index(m: usize) -> usize {
    if m % 2 == 0 {
        (m - 2) / 2
    } else {
        (m - 1) / 2
    }
}

/// The weighted-cover bound `g(i)` before flooring.
///
/// For `0 <= i <= last regular index`:
/// `sum_{j<=i} (1/2^(j+1) - 1/2^(m-j)) B(k+2j, d) + 2^(d-i-2) + 2^(k+i)`.
/// When `m` is odd, `i = (m-1)/2` is also accepted and evaluates the closing
/// form `sum_{j<i} (...) B(k+2j, d) + B(k+2i, d)/2^(m-i) + 2^((d+k-1)/2)`.
pub fn g_function(k: usize, d: usize, i: usize) -> Result<DyadicSum> {
    check_k_below_d(k, d)?;
    let m = d - k;
    let regular = last_regular_index(m).is_some_and(|last| i <= last);
    let closing = m % 2 == 1 && i == (m - 1) / 2;
    if regular {
        let mut acc = DyadicSum::ZERO;
        for j in 0..=i {
            acc = acc.checked_add(weighted_b(j, k, d, m)?)?;
        }
        acc.checked_add(pow2_dyadic(d - i - 2)?)?
            .checked_add(pow2_dyadic(k + i)?)
    } else if closing {
        let mut acc = DyadicSum::ZERO;
        for j in 0..i {
            acc = acc.checked_add(weighted_b(j, k, d, m)?)?;
        }
        let last = DyadicSum::integer(signed(b_config_size(k + 2 * i, d)?.0)?)
            .checked_div_pow2((m - i) as u32)?;
        acc.checked_add(last)?
            .checked_add(pow2_dyadic((d + k - 1) / 2)?)
    } else {
        Err(domain(format!("index {i} outside the admissible range for k={k}, d={d}")))
    }
}

/// The main bound read off as a tail of its defining sum: the weighted
/// terms `j >= start` plus the closing terms. `start = 0` gives the full
/// expression.
fn weighted_tail(k: usize, d: usize, start: usize) -> Result<DyadicSum> {
    let m = d - k;
    let mut acc = DyadicSum::ZERO;
    if let Some(last) = last_regular_index(m) {
        for j in start..=last {
            acc = acc.checked_add(weighted_b(j, k, d, m)?)?;
        }
    }
    if m % 2 == 0 {
        acc.checked_add(pow2_dyadic((d + k) / 2)?)
    } else {
        let b = DyadicSum::integer(signed(b_config_size(d - 1, d)?.0)?)
            .checked_div_pow2(((m + 1) / 2) as u32)?;
        acc.checked_add(b)?
            .checked_add(pow2_dyadic((d + k - 1) / 2)?)
    }
}

/// The weighted-cover upper bound, `floor(g(i))` at the optimal index.
pub fn main_upper(k: usize, d: usize) -> Result<BoundValue> {
    check_k_below_d(k, d)?;
    floor_value(g_function(k, d, terminal_index(d - k))?)
}

/// The weighted-cover bound combined with the radius-`k` ball cutoff:
/// `max(ball(d, k), floor(tail from j = 1))`.
pub fn main2_upper(k: usize, d: usize) -> Result<BoundValue> {
    check_k_below_d(k, d)?;
    let ball = BoundValue(ball_size(d, k)?);
    let tail = floor_value(weighted_tail(k, d, 1)?)?;
    Ok(ball.max(tail))
}

/// One candidate of the refined bound for a fixed cutoff `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RefinedTerm {
    pub h: usize,
    /// Bound when a member with at most `h` jokers exists.
    pub covered: BoundValue,
    /// Bound when every member has more than `h` jokers.
    pub uncovered: BoundValue,
}

impl RefinedTerm {
    pub fn value(&self) -> BoundValue {
        self.covered.max(self.uncovered)
    }
}

/// All candidates `h` of the refined bound, in increasing `h`.
pub fn refined_terms(k: usize, d: usize) -> Result<Vec<RefinedTerm>> {
    check_k_below_d(k, d)?;
    let m = d - k;
    let mut out = Vec::new();
    if let Some(last) = last_regular_index(m) {
        for h in 0..=last {
            out.push(RefinedTerm {
                h,
                covered: BoundValue(mul(pow2(h)?, ball_size(d - h, k)?)?),
                uncovered: floor_value(weighted_tail(k, d, h + 1)?)?,
            });
        }
    }
    if m % 2 == 1 {
        let h = (m - 1) / 2;
        out.push(RefinedTerm {
            h,
            covered: BoundValue(mul(pow2(h)?, ball_size((d + k + 1) / 2, k)?)?),
            uncovered: BoundValue(pow2((d + k - 1) / 2)?),
        });
    }
    Ok(out)
}

/// `min_h max(2^h ball(d-h, k), tail from j = h+1)`.
pub fn refined_upper(k: usize, d: usize) -> Result<BoundValue> {
    refined_terms(k, d)?
        .iter()
        .map(RefinedTerm::value)
        .min()
        .ok_or_else(|| domain("empty refinement range"))
}

/// Best refined candidate with `h >= 1`, if any.
pub fn refined_upper_positive_h(k: usize, d: usize) -> Result<Option<BoundValue>> {
    Ok(refined_terms(k, d)?
        .iter()
        .filter(|t| t.h >= 1)
        .map(RefinedTerm::value)
        .min())
}

/// Best lower bound backed by an explicit family built in this crate.
pub fn construction_lower(k: usize, d: usize) -> Result<BoundValue> {
    let mut lo = alon_lower(k, d)?;
    if k + 1 == d {
        lo = lo.max(BoundValue(mul(3, pow2(d - 2)?)?));
    }
    Ok(lo)
}

/// Named entries of a [`BoundReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundName {
    AlonLower,
    AlonUpper,
    HuangSudakov,
    Agkp,
    Main,
    Main2,
    Refined,
    Kleitman,
    Stability,
}

impl BoundName {
    pub const ALL: [BoundName; 9] = [
        BoundName::AlonLower,
        BoundName::AlonUpper,
        BoundName::HuangSudakov,
        BoundName::Agkp,
        BoundName::Main,
        BoundName::Main2,
        BoundName::Refined,
        BoundName::Kleitman,
        BoundName::Stability,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::AlonLower => "alon_lower",
            BoundName::AlonUpper => "alon_upper",
            BoundName::HuangSudakov => "huang_sudakov",
            BoundName::Agkp => "agkp",
            BoundName::Main => "main",
            BoundName::Main2 => "main2",
            BoundName::Refined => "refined",
            BoundName::Kleitman => "kleitman",
            BoundName::Stability => "stability",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            BoundName::AlonLower => "product construction (lower)",
            BoundName::AlonUpper => "polynomial method",
            BoundName::HuangSudakov => "rank argument",
            BoundName::Agkp => "jokers and Hamming balls",
            BoundName::Main => "weighted cover count",
            BoundName::Main2 => "weighted cover count with ball cutoff",
            BoundName::Refined => "weighted cover count, refined cutoff",
            BoundName::Kleitman => "binary diameter-k maximum (not a bound on n)",
            BoundName::Stability => "binary diameter-k stability (not a bound on n)",
        }
    }

    /// Whether the entry bounds `n(k, d)` from above.
    pub fn is_upper(self) -> bool {
        matches!(
            self,
            BoundName::AlonUpper
                | BoundName::HuangSudakov
                | BoundName::Agkp
                | BoundName::Main
                | BoundName::Main2
                | BoundName::Refined
        )
    }
}

/// Every applicable bound for one `(k, d)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub k: usize,
    pub d: usize,
    pub entries: Vec<(BoundName, BoundValue)>,
    pub best_upper: BoundValue,
    pub best_lower: BoundValue,
    pub exact_known: Option<ExactValue>,
}

impl BoundReport {
    pub fn get(&self, name: BoundName) -> Option<BoundValue> {
        self.entries
            .iter()
            .find(|(n, _)| *n == name)
            .map(|&(_, v)| v)
    }

    pub fn is_closed(&self) -> bool {
        self.best_lower == self.best_upper
    }
}

/// Evaluates every applicable bound and aggregates them.
pub fn report(k: usize, d: usize) -> Result<BoundReport> {
    check_k_d(k, d)?;
    let mut entries = Vec::new();
    for name in BoundName::ALL {
        let value = match name {
            BoundName::AlonLower => Some(alon_lower(k, d)?),
            BoundName::AlonUpper => Some(alon_upper(k, d)?),
            BoundName::HuangSudakov => Some(huang_sudakov_upper(k, d)?),
            BoundName::Agkp if k < d => Some(agkp_upper(k, d)?),
            BoundName::Main if k < d => Some(main_upper(k, d)?),
            BoundName::Main2 if k < d => Some(main2_upper(k, d)?),
            BoundName::Refined if k < d => Some(refined_upper(k, d)?),
            BoundName::Kleitman if k < d => Some(kleitman_bound(k, d)?),
            BoundName::Stability if k + 2 <= d => Some(stability_bound(k, d)?),
            _ => None,
        };
        if let Some(v) = value {
            entries.push((name, v));
        }
    }
    let best_upper = entries
        .iter()
        .filter(|(n, _)| n.is_upper())
        .map(|&(_, v)| v)
        .min()
        .expect("at least one upper bound always applies");
    let exact_known = reference::exact_value(k, d);
    let mut best_lower = construction_lower(k, d)?;
    if let Some(e) = exact_known {
        best_lower = best_lower.max(BoundValue(e.value));
    }
    if let Some(v) = reference::search_lower_bound(k, d) {
        best_lower = best_lower.max(BoundValue(v));
    }
    Ok(BoundReport {
        k,
        d,
        entries,
        best_upper,
        best_lower,
        exact_known,
    })
}
