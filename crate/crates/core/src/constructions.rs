//! Explicit families and binary codes that realize the known bounds.

use itertools::Itertools;

use crate::bounds::{b_config_size, ball_size};
use crate::error::{domain, Error, Result};
use crate::family::Family;
use crate::vector::{BinaryVector, JokerVector, Symbol};

/// Generators refuse to materialize more members than this.
pub const MAX_GENERATED: u128 = 1 << 24;

fn guard_size(n: u128) -> Result<()> {
    if n > MAX_GENERATED {
        return Err(Error::Resource(format!(
            "construction would have {n} members (limit {MAX_GENERATED})"
        )));
    }
    Ok(())
}

/// Binary words within distance `t` of `center`, ordered by distance and
/// then by flipped positions.
pub fn hamming_ball(d: usize, t: usize, center: &BinaryVector) -> Result<Vec<BinaryVector>> {
    if center.len() != d {
        return Err(Error::Dimension {
            expected: d,
            found: center.len(),
        });
    }
    if t > d {
        return Err(domain(format!("radius {t} exceeds length {d}")));
    }
    guard_size(ball_size(d, t)?)?;
    let mut out = Vec::new();
    for w in 0..=t {
        for positions in (0..d).combinations(w) {
            let flip = positions.iter().fold(0u128, |acc, &p| acc | 1 << p);
            out.push(BinaryVector::from_bits(d, center.bits() ^ flip)?);
        }
    }
    Ok(out)
}

/// The extremal diameter-`k` binary code: a radius-`k/2` ball around zero
/// for even `k`, `{0,1}` times a radius-`(k-1)/2` ball of length `d - 1`
/// for odd `k`. The free coordinate is the first one.
pub fn b_config(k: usize, d: usize) -> Result<Vec<BinaryVector>> {
    if k > d || d == 0 {
        return Err(domain(format!("need 0 <= k <= d and d >= 1, got k={k}, d={d}")));
    }
    guard_size(b_config_size(k, d)?.0)?;
    let t = k / 2;
    if k % 2 == 0 {
        return hamming_ball(d, t, &BinaryVector::zeros(d)?);
    }
    if d == 1 {
        return Ok(vec![BinaryVector::zeros(1)?, BinaryVector::ones(1)?]);
    }
    let ball = hamming_ball(d - 1, t, &BinaryVector::zeros(d - 1)?)?;
    let bit = |b: u128| BinaryVector::from_bits(1, b).map(JokerVector::from);
    let ball: Vec<JokerVector> = ball.into_iter().map(JokerVector::from).collect();
    cartesian(&[bit(0)?, bit(1)?], &ball)?
        .into_iter()
        .map(BinaryVector::try_from)
        .collect()
}

/// All concatenations `x ++ y`, with `x` varying slowest.
pub fn cartesian(xs: &[JokerVector], ys: &[JokerVector]) -> Result<Vec<JokerVector>> {
    for side in [xs, ys] {
        if let Some(first) = side.first() {
            if let Some(bad) = side.iter().find(|v| v.len() != first.len()) {
                return Err(Error::Dimension {
                    expected: first.len(),
                    found: bad.len(),
                });
            }
        }
    }
    guard_size(xs.len() as u128 * ys.len() as u128)?;
    xs.iter()
        .cartesian_product(ys.iter())
        .map(|(x, y)| x.concat(y))
        .collect()
}

/// The `m + 1` words `1^j 0 *^(m-1-j)` for `j < m`, together with `1^m`.
/// Every two of them are at distance exactly one.
pub fn staircase_code(m: usize) -> Result<Vec<JokerVector>> {
    if m == 0 {
        return Err(domain("staircase length must be at least 1"));
    }
    let mut out = Vec::with_capacity(m + 1);
    for j in 0..m {
        let mut s = vec![Symbol::One; j];
        s.push(Symbol::Zero);
        s.extend(std::iter::repeat(Symbol::Joker).take(m - 1 - j));
        out.push(JokerVector::from_symbols(&s)?);
    }
    out.push(JokerVector::from_symbols(&vec![Symbol::One; m])?);
    Ok(out)
}

/// Product of `k` staircase codes with block lengths `floor((d+i)/k)`,
/// `i = 0..k`, laid out left to right. Two members differ in at most `k`
/// blocks and by exactly one in each, so the family is `k`-neighborly.
pub fn alon_product(k: usize, d: usize) -> Result<Family> {
    if k == 0 || k > d {
        return Err(domain(format!("need 1 <= k <= d, got k={k}, d={d}")));
    }
    guard_size(crate::bounds::alon_lower(k, d)?.0)?;
    let mut members: Vec<JokerVector> = Vec::new();
    for i in 0..k {
        let block = staircase_code((d + i) / k)?;
        members = if members.is_empty() {
            block
        } else {
            cartesian(&members, &block)?
        };
    }
    Family::validated(d, k, members)
}

/// `{11, 10, 0*} x {0,1}^(d-2)`, a `(d-1)`-neighborly family of size
/// `3 * 2^(d-2)`.
pub fn codimension_one_family(d: usize) -> Result<Family> {
    if d < 2 {
        return Err(domain(format!("need d >= 2, got {d}")));
    }
    let head: Vec<JokerVector> = ["11", "10", "0*"]
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_>>()?;
    let members = if d == 2 {
        head
    } else {
        guard_size(3u128 << (d - 2))?;
        let cube: Vec<JokerVector> = BinaryVector::all(d - 2)?.map(JokerVector::from).collect();
        cartesian(&head, &cube)?
    };
    Family::validated(d, d - 1, members)
}

/// Views binary words as joker vectors.
pub fn as_joker_vectors(code: &[BinaryVector]) -> Vec<JokerVector> {
    code.iter().copied().map(JokerVector::from).collect()
}
