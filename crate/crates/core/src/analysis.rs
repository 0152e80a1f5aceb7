//! The weighted cover count.
//!
//! A binary word `v` is covered by a member `u` when they agree off the
//! jokers of `u`. In a valid family every binary word is covered at most
//! once, so each covered word gets the weight `1/2^t`, `t` being the joker
//! count of its cover, and the weights sum to the family size. The
//! [`audit`] function checks every step of the counting argument built on
//! this identity against a concrete family by enumerating `{0,1}^d`.

use std::collections::BTreeMap;
use std::fmt;

use crate::bounds::b_config_size;
use crate::dyadic::DyadicSum;
use crate::error::{domain, Error, Result};
use crate::family::Family;
use crate::vector::{complement, covers_unchecked, BinaryVector, JokerVector};

/// Default cap on `d` for exhaustive enumeration of `{0,1}^d`.
pub const DEFAULT_MAX_DIM: usize = 16;

fn require_validated(family: &Family) -> Result<()> {
    if !family.is_validated() {
        return Err(Error::Precondition(
            "family must be validated as k-neighborly first".into(),
        ));
    }
    Ok(())
}

fn require_dim(d: usize, cap: usize) -> Result<()> {
    if d > cap {
        return Err(Error::Resource(format!(
            "exhaustive enumeration of {{0,1}}^{d} exceeds the cap d <= {cap}"
        )));
    }
    Ok(())
}

/// Two members covering the same binary word.
#[derive(Debug, Clone, Copy)]
struct DoubleCover {
    word: BinaryVector,
    first: JokerVector,
    second: JokerVector,
}

/// For each binary word (indexed by its bits), the covering member.
struct CoverMap {
    d: usize,
    cover: Vec<Option<u32>>,
}

impl CoverMap {
    fn build(family: &Family) -> std::result::Result<Self, DoubleCover> {
        let d = family.d();
        let mut cover = vec![None; 1 << d];
        for (idx, u) in family.members().iter().enumerate() {
            let jokers = u.jokers();
            // enumerate every submask of the joker mask
            let mut sub = jokers;
            loop {
                let word = (u.values() | sub) as usize;
                if let Some(prev) = cover[word] {
                    return Err(DoubleCover {
                        word: BinaryVector::from_bits(d, word as u128).expect("in range"),
                        first: family.members()[prev as usize],
                        second: *u,
                    });
                }
                cover[word] = Some(idx as u32);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & jokers;
            }
        }
        Ok(Self { d, cover })
    }

    fn complement_index(&self, v: usize) -> usize {
        !v & ((1 << self.d) - 1)
    }
}

/// Covered binary words grouped by the joker count of their cover.
#[derive(Debug, Clone)]
pub struct CoverProfile {
    d: usize,
    k: usize,
    family_size: usize,
    joker_count_of: Vec<Option<u8>>,
    classes: BTreeMap<usize, Vec<BinaryVector>>,
    complement_classes: BTreeMap<usize, Vec<BinaryVector>>,
    uncovered: Vec<BinaryVector>,
}

impl CoverProfile {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Words covered by a member with exactly `t` jokers.
    pub fn class(&self, t: usize) -> &[BinaryVector] {
        self.classes.get(&t).map_or(&[], Vec::as_slice)
    }

    /// Complements of the words in [`CoverProfile::class`].
    pub fn complement_class(&self, t: usize) -> &[BinaryVector] {
        self.complement_classes.get(&t).map_or(&[], Vec::as_slice)
    }

    /// Joker counts with a non-empty class.
    pub fn occupied(&self) -> impl Iterator<Item = usize> + '_ {
        self.classes.keys().copied()
    }

    pub fn uncovered(&self) -> &[BinaryVector] {
        &self.uncovered
    }

    /// Joker count of the member covering `v`, if any.
    pub fn cover_joker_count(&self, v: &BinaryVector) -> Option<usize> {
        self.joker_count_of[v.bits() as usize].map(usize::from)
    }

    /// The weight `1/2^t` of `v`, or zero when uncovered.
    pub fn weight_of(&self, v: &BinaryVector) -> DyadicSum {
        self.cover_joker_count(v)
            .map_or(DyadicSum::ZERO, inverse_pow2)
    }

    /// `sum_t |V^(t)| / 2^t`, which equals the family size.
    pub fn weight_sum(&self) -> Result<DyadicSum> {
        let mut acc = DyadicSum::ZERO;
        for (&t, words) in &self.classes {
            acc = acc.checked_add(inverse_pow2(t).checked_mul_int(words.len() as i128)?)?;
        }
        Ok(acc)
    }

    pub fn family_size(&self) -> usize {
        self.family_size
    }
}

fn inverse_pow2(t: usize) -> DyadicSum {
    DyadicSum::inverse_power_of_two(t as u32).expect("joker counts stay below 127")
}

/// Partitions `{0,1}^d` by the joker count of the covering member.
pub fn cover_profile(family: &Family) -> Result<CoverProfile> {
    cover_profile_with_cap(family, DEFAULT_MAX_DIM)
}

pub fn cover_profile_with_cap(family: &Family, max_dim: usize) -> Result<CoverProfile> {
    require_validated(family)?;
    require_dim(family.d(), max_dim)?;
    let map = CoverMap::build(family).map_err(|dc| {
        Error::Precondition(format!(
            "{} is covered by both {} and {}",
            dc.word, dc.first, dc.second
        ))
    })?;
    Ok(profile_from_map(family, &map))
}

fn profile_from_map(family: &Family, map: &CoverMap) -> CoverProfile {
    let d = family.d();
    let joker_count_of: Vec<Option<u8>> = map
        .cover
        .iter()
        .map(|c| c.map(|idx| family.members()[idx as usize].joker_count() as u8))
        .collect();
    let mut classes: BTreeMap<usize, Vec<BinaryVector>> = BTreeMap::new();
    let mut complement_classes: BTreeMap<usize, Vec<BinaryVector>> = BTreeMap::new();
    let mut uncovered = Vec::new();
    for (bits, t) in joker_count_of.iter().enumerate() {
        let v = BinaryVector::from_bits(d, bits as u128).expect("in range");
        match t {
            Some(t) => {
                classes.entry(*t as usize).or_default().push(v);
                complement_classes
                    .entry(*t as usize)
                    .or_default()
                    .push(complement(&v));
            }
            None => uncovered.push(v),
        }
    }
    for words in complement_classes.values_mut() {
        words.sort();
    }
    CoverProfile {
        d,
        k: family.k(),
        family_size: family.len(),
        joker_count_of,
        classes,
        complement_classes,
        uncovered,
    }
}

/// The weight of a single binary word with respect to `family`.
pub fn weight(v: &BinaryVector, family: &Family) -> Result<DyadicSum> {
    require_validated(family)?;
    if v.len() != family.d() {
        return Err(Error::Dimension {
            expected: family.d(),
            found: v.len(),
        });
    }
    Ok(family
        .members()
        .iter()
        .find(|u| covers_unchecked(u, v))
        .map_or(DyadicSum::ZERO, |u| inverse_pow2(u.joker_count())))
}

/// The individual statements checked by [`audit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AuditCheck {
    /// Every binary word has at most one covering member.
    UniqueCover,
    /// For `2i < d - k`, the classes `V^(0..=i)` and their complements are
    /// pairwise disjoint.
    ClassDisjointness,
    /// For `2i < d - k`, `V^(0..=i)` has diameter at most `k + 2i` and
    /// size at most `B(k + 2i, d)`.
    ClassDiameter,
    /// For `2i < d - k`, words in the `i`-th complement class weigh at most
    /// `1/2^(d-k-i)`.
    ComplementWeight,
    /// Words outside the first `i + 1` classes and their complements have
    /// `f(v) + f(!v)` bounded as in the pairing step.
    PairedWeight,
    /// `sum_v f(v) = |family|`.
    WeightIdentity,
}

impl AuditCheck {
    pub const ALL: [AuditCheck; 6] = [
        AuditCheck::UniqueCover,
        AuditCheck::ClassDisjointness,
        AuditCheck::ClassDiameter,
        AuditCheck::ComplementWeight,
        AuditCheck::PairedWeight,
        AuditCheck::WeightIdentity,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AuditCheck::UniqueCover => "unique_cover",
            AuditCheck::ClassDisjointness => "class_disjointness",
            AuditCheck::ClassDiameter => "class_diameter",
            AuditCheck::ComplementWeight => "complement_weight",
            AuditCheck::PairedWeight => "paired_weight",
            AuditCheck::WeightIdentity => "weight_identity",
        }
    }
}

impl fmt::Display for AuditCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    Skipped(String),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

#[derive(Debug, Clone)]
pub struct AuditReport {
    pub d: usize,
    pub k: usize,
    pub family_size: usize,
    pub checks: Vec<(AuditCheck, Verdict)>,
    /// `sum_v f(v)`, when the cover map could be built.
    pub weight_sum: Option<DyadicSum>,
}

impl AuditReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|(_, v)| v.passed())
    }

    pub fn verdict(&self, check: AuditCheck) -> &Verdict {
        &self
            .checks
            .iter()
            .find(|(c, _)| *c == check)
            .expect("every check is reported")
            .1
    }

    pub fn first_failure(&self) -> Option<(AuditCheck, &Verdict)> {
        self.checks
            .iter()
            .find(|(_, v)| !v.passed())
            .map(|(c, v)| (*c, v))
    }
}

/// Exhaustively checks the weighted counting argument on `family`.
pub fn audit(family: &Family) -> Result<AuditReport> {
    audit_with_cap(family, DEFAULT_MAX_DIM)
}

pub fn audit_with_cap(family: &Family, max_dim: usize) -> Result<AuditReport> {
    require_validated(family)?;
    let (d, k) = (family.d(), family.k());
    if d <= k {
        return Err(domain(format!("audit needs k <= d - 1, got k={k}, d={d}")));
    }
    require_dim(d, max_dim)?;

    let mut report = AuditReport {
        d,
        k,
        family_size: family.len(),
        checks: Vec::with_capacity(AuditCheck::ALL.len()),
        weight_sum: None,
    };
    let map = match CoverMap::build(family) {
        Ok(map) => map,
        Err(dc) => {
            report.checks.push((
                AuditCheck::UniqueCover,
                Verdict::Fail(format!(
                    "{} is covered by both {} and {}",
                    dc.word, dc.first, dc.second
                )),
            ));
            for check in &AuditCheck::ALL[1..] {
                report
                    .checks
                    .push((*check, Verdict::Skipped("cover is not unique".into())));
            }
            return Ok(report);
        }
    };
    let profile = profile_from_map(family, &map);
    report.checks.push((AuditCheck::UniqueCover, Verdict::Pass));
    report
        .checks
        .push((AuditCheck::ClassDisjointness, check_disjointness(&profile, &map)));
    report
        .checks
        .push((AuditCheck::ClassDiameter, check_diameter(&profile)?));
    report
        .checks
        .push((AuditCheck::ComplementWeight, check_complement_weight(&profile, &map)?));
    report
        .checks
        .push((AuditCheck::PairedWeight, check_paired_weight(&profile, &map)?));

    let total = (0..1usize << d).try_fold(DyadicSum::ZERO, |acc, bits| {
        let v = BinaryVector::from_bits(d, bits as u128).expect("in range");
        acc.checked_add(profile.weight_of(&v))
    })?;
    report.weight_sum = Some(total);
    let identity = if total == DyadicSum::integer(family.len() as i128) {
        Verdict::Pass
    } else {
        Verdict::Fail(format!("sum of weights is {total}, family has {} members", family.len()))
    };
    report.checks.push((AuditCheck::WeightIdentity, identity));
    Ok(report)
}

/// Indices `i` with `2i < d - k`.
fn admissible(profile: &CoverProfile) -> std::ops::Range<usize> {
    0..(profile.d - profile.k).div_ceil(2)
}

fn check_disjointness(profile: &CoverProfile, map: &CoverMap) -> Verdict {
    let n = 1usize << profile.d;
    let mut owner: Vec<Option<(bool, usize)>> = vec![None; n];
    for i in admissible(profile) {
        // add V^(i) and its complement, then look for a word claimed twice
        for v in profile.class(i) {
            let idx = v.bits() as usize;
            for (word, is_complement) in [(idx, false), (map.complement_index(idx), true)] {
                if let Some((prev_is_complement, prev_t)) = owner[word] {
                    let name = |c: bool, t: usize| {
                        if c {
                            format!("complement class {t}")
                        } else {
                            format!("class {t}")
                        }
                    };
                    return Verdict::Fail(format!(
                        "i={i}: {} lies in {} and {}",
                        BinaryVector::from_bits(profile.d, word as u128).expect("in range"),
                        name(prev_is_complement, prev_t),
                        name(is_complement, i)
                    ));
                }
                owner[word] = Some((is_complement, i));
            }
        }
    }
    Verdict::Pass
}

fn check_diameter(profile: &CoverProfile) -> Result<Verdict> {
    let mut union: Vec<BinaryVector> = Vec::new();
    let mut diameter = 0usize;
    for i in admissible(profile) {
        let limit = profile.k + 2 * i;
        let fresh = profile.class(i);
        for (n, a) in fresh.iter().enumerate() {
            for b in union.iter().chain(&fresh[..n]) {
                let dist = (a.bits() ^ b.bits()).count_ones() as usize;
                diameter = diameter.max(dist);
                if dist > limit {
                    return Ok(Verdict::Fail(format!(
                        "i={i}: {a} and {b} are at distance {dist} > {limit}"
                    )));
                }
            }
        }
        union.extend_from_slice(fresh);
        let cap = b_config_size(limit, profile.d)?.0;
        if union.len() as u128 > cap {
            return Ok(Verdict::Fail(format!(
                "i={i}: classes 0..={i} hold {} words, more than {cap}",
                union.len()
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn check_complement_weight(profile: &CoverProfile, map: &CoverMap) -> Result<Verdict> {
    let (d, k) = (profile.d, profile.k);
    for i in admissible(profile) {
        let limit = DyadicSum::inverse_power_of_two((d - k - i) as u32)?;
        for v in profile.class(i) {
            let w_idx = map.complement_index(v.bits() as usize);
            let w = BinaryVector::from_bits(d, w_idx as u128)?;
            let f = profile.weight_of(&w);
            if f > limit {
                return Ok(Verdict::Fail(format!(
                    "i={i}: {w} in complement class has weight {f} > {limit}"
                )));
            }
        }
    }
    Ok(Verdict::Pass)
}

fn check_paired_weight(profile: &CoverProfile, map: &CoverMap) -> Result<Verdict> {
    let (d, k) = (profile.d, profile.k);
    let m = d - k;
    let mut indices: Vec<(usize, DyadicSum)> = Vec::new();
    let mut i = 0;
    while 2 * i + 1 < m {
        let limit = DyadicSum::inverse_power_of_two((i + 1) as u32)?
            .checked_add(DyadicSum::inverse_power_of_two((m - i - 1) as u32)?)?;
        indices.push((i, limit));
        i += 1;
    }
    if m % 2 == 1 {
        let i = (m - 1) / 2;
        indices.push((i, DyadicSum::inverse_power_of_two(i as u32)?));
    }
    for (i, limit) in indices {
        for bits in 0..1usize << d {
            let v = BinaryVector::from_bits(d, bits as u128)?;
            let w_idx = map.complement_index(bits);
            let w = BinaryVector::from_bits(d, w_idx as u128)?;
            let low = |x: &BinaryVector| profile.cover_joker_count(x).is_some_and(|t| t <= i);
            // v lies in some V^(s) or complement class with s <= i
            if low(&v) || low(&w) {
                continue;
            }
            let total = profile.weight_of(&v).checked_add(profile.weight_of(&w))?;
            if total > limit {
                return Ok(Verdict::Fail(format!(
                    "i={i}: f({v}) + f({w}) = {total} > {limit}"
                )));
            }
        }
    }
    Ok(Verdict::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{alon_product, codimension_one_family};

    #[test]
    fn codimension_one_profile() {
        let f = codimension_one_family(4).unwrap();
        let p = cover_profile(&f).unwrap();
        assert_eq!(p.class(0).len(), 8);
        assert_eq!(p.class(1).len(), 8);
        assert!(p.uncovered().is_empty());
        assert_eq!(p.weight_sum().unwrap(), DyadicSum::integer(12));
        for t in p.occupied() {
            assert_eq!(p.class(t).len(), p.complement_class(t).len());
        }
    }

    #[test]
    fn binary_family_profile() {
        let members = ["0000", "0011", "0101", "1111"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let f = Family::validated(4, 4, members).unwrap();
        let p = cover_profile(&f).unwrap();
        assert_eq!(p.class(0).len(), 4);
        assert_eq!(p.occupied().count(), 1);
        assert_eq!(p.uncovered().len(), 12);
    }

    #[test]
    fn staircase_weights() {
        let f = alon_product(1, 3).unwrap();
        let p = cover_profile(&f).unwrap();
        assert_eq!(p.weight_sum().unwrap(), DyadicSum::integer(4));
    }

    #[test]
    fn single_weights() {
        let f = Family::validated(2, 1, vec!["0*".parse().unwrap(), "10".parse().unwrap()]).unwrap();
        assert_eq!(weight(&"10".parse().unwrap(), &f).unwrap(), DyadicSum::integer(1));
        assert_eq!(
            weight(&"01".parse().unwrap(), &f).unwrap(),
            DyadicSum::inverse_power_of_two(1).unwrap()
        );
        assert_eq!(weight(&"11".parse().unwrap(), &f).unwrap(), DyadicSum::ZERO);
        assert!(weight(&"110".parse().unwrap(), &f).is_err());
    }

    #[test]
    fn requires_validation() {
        let f = Family::new(2, 1, vec!["00".parse().unwrap(), "11".parse().unwrap()]).unwrap();
        assert!(matches!(cover_profile(&f), Err(Error::Precondition(_))));
        assert!(matches!(audit(&f), Err(Error::Precondition(_))));
    }

    #[test]
    fn audit_passes_on_constructions() {
        let r = audit(&codimension_one_family(4).unwrap()).unwrap();
        assert!(r.all_passed(), "{r:?}");
        assert_eq!(r.weight_sum, Some(DyadicSum::integer(12)));
        let r = audit(&alon_product(3, 6).unwrap()).unwrap();
        assert!(r.all_passed(), "{r:?}");
        assert_eq!(r.weight_sum, Some(DyadicSum::integer(27)));
    }

    #[test]
    fn audit_domain() {
        let f = alon_product(3, 3).unwrap();
        assert!(matches!(audit(&f), Err(Error::Domain(_))));
        let f = alon_product(2, 5).unwrap();
        assert!(matches!(audit_with_cap(&f, 4), Err(Error::Resource(_))));
    }

    #[test]
    fn audit_flags_broken_inputs() {
        let fam = |d, k, s: &[&str]| {
            Family::new(d, k, s.iter().map(|x| x.parse().unwrap()).collect())
                .unwrap()
                .force_validated()
        };
        let r = audit(&fam(2, 1, &["0*", "00"])).unwrap();
        assert!(matches!(r.verdict(AuditCheck::UniqueCover), Verdict::Fail(_)));
        assert!(matches!(r.verdict(AuditCheck::WeightIdentity), Verdict::Skipped(_)));
        let r = audit(&fam(2, 1, &["00", "11"])).unwrap();
        assert_eq!(r.first_failure().unwrap().0, AuditCheck::ClassDisjointness);
        let ok = Family::validated(5, 3, ["00000", "11100", "01110"].iter().map(|s| s.parse().unwrap()).collect()).unwrap();
        assert!(audit(&ok).unwrap().all_passed());
    }
}
