//! Families of joker vectors and the pairwise-distance condition.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::vector::{distance_unchecked, JokerVector};

/// A pair of members whose distance lies outside `1..=k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub first: JokerVector,
    pub second: JokerVector,
    pub distance: usize,
}

/// A set of distinct joker vectors of common length `d`, together with the
/// neighborliness parameter `k`.
///
/// A family is *validated* once every pair has been checked to lie at
/// distance `1..=k`; the analysis and search modules only accept validated
/// families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    d: usize,
    k: usize,
    members: Vec<JokerVector>,
    validated: bool,
}

impl Family {
    /// Checks lengths, the range `1 <= k <= d` and distinctness. The
    /// pairwise condition is not checked.
    pub fn new(d: usize, k: usize, members: Vec<JokerVector>) -> Result<Self> {
        if d == 0 || k == 0 || k > d {
            return Err(Error::Domain(format!(
                "need 1 <= k <= d, got k={k}, d={d}"
            )));
        }
        let mut seen = HashSet::with_capacity(members.len());
        for m in &members {
            if m.len() != d {
                return Err(Error::Dimension {
                    expected: d,
                    found: m.len(),
                });
            }
            if !seen.insert(*m) {
                return Err(Error::Duplicate(m.to_string()));
            }
        }
        Ok(Self {
            d,
            k,
            members,
            validated: false,
        })
    }

    /// [`Family::new`] followed by [`Family::validate`].
    pub fn validated(d: usize, k: usize, members: Vec<JokerVector>) -> Result<Self> {
        Self::new(d, k, members)?.validate()
    }

    pub fn validate(mut self) -> Result<Self> {
        if let Some(v) = self.find_violation() {
            return Err(Error::NotNeighborly {
                k: self.k,
                first: v.first.to_string(),
                second: v.second.to_string(),
                distance: v.distance,
            });
        }
        self.validated = true;
        Ok(self)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[JokerVector] {
        &self.members
    }

    pub fn into_members(self) -> Vec<JokerVector> {
        self.members
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    /// The same members reinterpreted with another neighborliness parameter.
    pub fn with_k(&self, k: usize) -> Result<Self> {
        Family::new(self.d, k, self.members.clone())
    }

    /// Members in lexicographic order.
    pub fn sorted(mut self) -> Self {
        self.members.sort();
        self
    }

    #[cfg(test)]
    pub(crate) fn force_validated(mut self) -> Self {
        self.validated = true;
        self
    }

    fn find_violation(&self) -> Option<Violation> {
        for (i, a) in self.members.iter().enumerate() {
            for b in &self.members[i + 1..] {
                let distance = distance_unchecked(a, b);
                if distance == 0 || distance > self.k {
                    return Some(Violation {
                        first: *a,
                        second: *b,
                        distance,
                    });
                }
            }
        }
        None
    }
}

/// Checks the pairwise condition for a family: `Ok(None)` when every pair of
/// members is at distance `1..=k`, otherwise the first violating pair.
pub fn is_k_neighborly(family: &Family) -> Option<Violation> {
    family.find_violation()
}

/// Same check on a bare slice, validating lengths first.
pub fn check_members(d: usize, k: usize, members: &[JokerVector]) -> Result<Option<Violation>> {
    for m in members {
        if m.len() != d {
            return Err(Error::Dimension {
                expected: d,
                found: m.len(),
            });
        }
    }
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            let distance = distance_unchecked(a, b);
            if distance == 0 || distance > k {
                return Ok(Some(Violation {
                    first: *a,
                    second: *b,
                    distance,
                }));
            }
        }
    }
    Ok(None)
}
