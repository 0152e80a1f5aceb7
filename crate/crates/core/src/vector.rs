//! Words over the alphabet `{0, 1, *}` and the binary words they cover.
//!
//! A [`JokerVector`] is stored as a pair of bit masks: `jokers` marks the
//! `*` positions and `values` holds the bits of the remaining positions
//! (always zero under a joker). Position `0` is the leftmost symbol of the
//! textual form.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported word length.
pub const MAX_DIM: usize = 128;

type Mask = u128;

fn full_mask(len: usize) -> Mask {
    if len >= MAX_DIM {
        Mask::MAX
    } else {
        (1 << len) - 1
    }
}

fn check_len(len: usize) -> Result<()> {
    if len == 0 || len > MAX_DIM {
        return Err(Error::Domain(format!(
            "vector length must be in 1..={MAX_DIM}, got {len}"
        )));
    }
    Ok(())
}

fn same_len(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::Dimension {
            expected: a,
            found: b,
        });
    }
    Ok(())
}

/// One coordinate of a [`JokerVector`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Zero,
    One,
    Joker,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::One => '1',
            Symbol::Joker => '*',
        }
    }
}

impl TryFrom<char> for Symbol {
    type Error = Error;

    fn try_from(c: char) -> Result<Self> {
        match c {
            '0' => Ok(Symbol::Zero),
            '1' => Ok(Symbol::One),
            '*' => Ok(Symbol::Joker),
            other => Err(Error::InvalidSymbol(other)),
        }
    }
}

/// A word of length `d` over `{0, 1, *}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct JokerVector {
    len: u8,
    values: Mask,
    jokers: Mask,
}

impl JokerVector {
    pub fn from_symbols(symbols: &[Symbol]) -> Result<Self> {
        check_len(symbols.len())?;
        let mut values = 0;
        let mut jokers = 0;
        for (i, s) in symbols.iter().enumerate() {
            match s {
                Symbol::Zero => {}
                Symbol::One => values |= 1 << i,
                Symbol::Joker => jokers |= 1 << i,
            }
        }
        Ok(Self {
            len: symbols.len() as u8,
            values,
            jokers,
        })
    }

    /// Builds a vector from raw masks. Value bits under a joker are cleared.
    pub fn from_masks(len: usize, values: u128, jokers: u128) -> Result<Self> {
        check_len(len)?;
        let m = full_mask(len);
        if (values | jokers) & !m != 0 {
            return Err(Error::Domain(format!("mask has bits beyond length {len}")));
        }
        Ok(Self {
            len: len as u8,
            values: values & !jokers,
            jokers,
        })
    }

    /// The vector `*^d`.
    pub fn all_jokers(len: usize) -> Result<Self> {
        check_len(len)?;
        Self::from_masks(len, 0, full_mask(len))
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> u128 {
        self.values
    }

    pub fn jokers(&self) -> u128 {
        self.jokers
    }

    pub fn joker_count(&self) -> usize {
        self.jokers.count_ones() as usize
    }

    pub fn is_binary(&self) -> bool {
        self.jokers == 0
    }

    pub fn symbol(&self, i: usize) -> Symbol {
        assert!(i < self.len(), "position {i} out of range");
        if self.jokers >> i & 1 == 1 {
            Symbol::Joker
        } else if self.values >> i & 1 == 1 {
            Symbol::One
        } else {
            Symbol::Zero
        }
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.len()).map(|i| self.symbol(i))
    }

    /// Concatenation `self ++ other`.
    pub fn concat(&self, other: &JokerVector) -> Result<JokerVector> {
        let len = self.len() + other.len();
        check_len(len)?;
        Ok(JokerVector {
            len: len as u8,
            values: self.values | other.values << self.len(),
            jokers: self.jokers | other.jokers << self.len(),
        })
    }

    /// Applies a coordinate permutation followed by a bit flip.
    ///
    /// Symbol `i` moves to position `perm[i]`; afterwards every non-joker
    /// position in `flip` has its bit inverted. Jokers are fixed by both.
    pub fn transform(&self, perm: &[usize], flip: u128) -> Result<JokerVector> {
        same_len(self.len(), perm.len())?;
        let mut values = 0;
        let mut jokers = 0;
        for (i, &p) in perm.iter().enumerate() {
            if p >= self.len() {
                return Err(Error::Domain(format!("permutation target {p} out of range")));
            }
            values |= (self.values >> i & 1) << p;
            jokers |= (self.jokers >> i & 1) << p;
        }
        let flip = flip & full_mask(self.len());
        Ok(JokerVector {
            len: self.len,
            values: (values ^ flip) & !jokers,
            jokers,
        })
    }
}

impl fmt::Display for JokerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.symbols() {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for JokerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "JokerVector({self})")
    }
}

impl FromStr for JokerVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .map(Symbol::try_from)
            .collect::<Result<Vec<_>>>()?;
        Self::from_symbols(&symbols)
    }
}

/// Lexicographic order over `0 < 1 < *`, reading left to right.
impl Ord for JokerVector {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.symbols().cmp(other.symbols()))
    }
}

impl PartialOrd for JokerVector {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A word of length `d` over `{0, 1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryVector {
    len: u8,
    bits: Mask,
}

impl BinaryVector {
    pub fn from_bits(len: usize, bits: u128) -> Result<Self> {
        check_len(len)?;
        if bits & !full_mask(len) != 0 {
            return Err(Error::Domain(format!("bits beyond length {len}")));
        }
        Ok(Self {
            len: len as u8,
            bits,
        })
    }

    pub fn zeros(len: usize) -> Result<Self> {
        Self::from_bits(len, 0)
    }

    pub fn ones(len: usize) -> Result<Self> {
        check_len(len)?;
        Self::from_bits(len, full_mask(len))
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Every binary vector of length `len`, ordered by integer value of the
    /// bit mask. Intended for small `len` only.
    pub fn all(len: usize) -> Result<impl Iterator<Item = BinaryVector>> {
        check_len(len)?;
        if len > 40 {
            return Err(Error::Resource(format!("cannot enumerate 2^{len} vectors")));
        }
        Ok((0..1u128 << len).map(move |bits| BinaryVector {
            len: len as u8,
            bits,
        }))
    }
}

impl From<BinaryVector> for JokerVector {
    fn from(v: BinaryVector) -> Self {
        JokerVector {
            len: v.len,
            values: v.bits,
            jokers: 0,
        }
    }
}

impl TryFrom<JokerVector> for BinaryVector {
    type Error = Error;

    fn try_from(v: JokerVector) -> Result<Self> {
        if v.jokers != 0 {
            return Err(Error::UnexpectedJoker(v.jokers.trailing_zeros() as usize));
        }
        Ok(BinaryVector {
            len: v.len,
            bits: v.values,
        })
    }
}

impl fmt::Display for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.bits >> i & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryVector({self})")
    }
}

impl FromStr for BinaryVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BinaryVector::try_from(s.parse::<JokerVector>()?)
    }
}

/// Number of positions where both words are non-joker and differ.
pub fn hamming_distance(u: &JokerVector, v: &JokerVector) -> Result<usize> {
    same_len(u.len(), v.len())?;
    Ok(distance_unchecked(u, v))
}

#[inline]
pub(crate) fn distance_unchecked(u: &JokerVector, v: &JokerVector) -> usize {
    ((u.values ^ v.values) & !(u.jokers | v.jokers)).count_ones() as usize
}

/// Plain Hamming distance between binary words.
pub fn binary_distance(a: &BinaryVector, b: &BinaryVector) -> Result<usize> {
    same_len(a.len(), b.len())?;
    Ok((a.bits ^ b.bits).count_ones() as usize)
}

/// True iff `v` agrees with `u` on every non-joker position of `u`.
pub fn covers(u: &JokerVector, v: &BinaryVector) -> Result<bool> {
    same_len(u.len(), v.len())?;
    Ok(covers_unchecked(u, v))
}

#[inline]
pub(crate) fn covers_unchecked(u: &JokerVector, v: &BinaryVector) -> bool {
    (u.values ^ v.bits) & !u.jokers == 0
}

/// The bitwise complement `1 - v`.
pub fn complement(v: &BinaryVector) -> BinaryVector {
    BinaryVector {
        len: v.len,
        bits: !v.bits & full_mask(v.len()),
    }
}

/// Coordinate-wise OR.
pub fn join(v: &BinaryVector, u: &BinaryVector) -> Result<BinaryVector> {
    same_len(v.len(), u.len())?;
    Ok(BinaryVector {
        len: v.len,
        bits: v.bits | u.bits,
    })
}

/// All `3^len` joker vectors in lexicographic order (`0 < 1 < *`).
pub fn all_joker_vectors(len: usize) -> Result<Vec<JokerVector>> {
    check_len(len)?;
    if len > 16 {
        return Err(Error::Resource(format!("cannot enumerate 3^{len} vectors")));
    }
    let total = 3usize.pow(len as u32);
    let mut out = Vec::with_capacity(total);
    let mut digits = vec![0u8; len];
    for _ in 0..total {
        let mut values = 0;
        let mut jokers = 0;
        for (i, &dg) in digits.iter().enumerate() {
            match dg {
                1 => values |= 1 << i,
                2 => jokers |= 1 << i,
                _ => {}
            }
        }
        out.push(JokerVector {
            len: len as u8,
            values,
            jokers,
        });
        // the rightmost position varies fastest
        for dg in digits.iter_mut().rev() {
            *dg += 1;
            if *dg < 3 {
                break;
            }
            *dg = 0;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jv(s: &str) -> JokerVector {
        s.parse().unwrap()
    }

    fn bv(s: &str) -> BinaryVector {
        s.parse().unwrap()
    }

    #[test]
    fn distance_ignores_jokers() {
        assert_eq!(hamming_distance(&jv("11**00"), &jv("**10*1")).unwrap(), 1);
        assert_eq!(hamming_distance(&jv("01*"), &jv("01*")).unwrap(), 0);
        assert_eq!(hamming_distance(&jv("000"), &jv("111")).unwrap(), 3);
    }

    #[test]
    fn distance_length_mismatch() {
        assert_eq!(
            hamming_distance(&jv("01"), &jv("010")),
            Err(Error::Dimension {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn cover_relation() {
        assert!(covers(&jv("0*"), &bv("01")).unwrap());
        assert!(!covers(&jv("0*"), &bv("11")).unwrap());
        for v in BinaryVector::all(5).unwrap() {
            assert!(covers(&jv("*****"), &v).unwrap());
        }
        assert!(covers(&jv("0*"), &bv("011")).is_err());
    }

    #[test]
    fn complement_and_join() {
        assert_eq!(complement(&bv("010")), bv("101"));
        assert_eq!(complement(&BinaryVector::zeros(7).unwrap()), BinaryVector::ones(7).unwrap());
        for v in BinaryVector::all(4).unwrap() {
            assert_eq!(complement(&complement(&v)), v);
            assert_eq!(binary_distance(&v, &complement(&v)).unwrap(), 4);
            assert_eq!(join(&v, &v).unwrap(), v);
            assert_eq!(join(&v, &BinaryVector::zeros(4).unwrap()).unwrap(), v);
        }
        assert_eq!(join(&bv("01"), &bv("10")).unwrap(), bv("11"));
        assert!(join(&bv("01"), &bv("100")).is_err());
    }

    #[test]
    fn binary_rejects_jokers() {
        assert_eq!("0*1".parse::<BinaryVector>(), Err(Error::UnexpectedJoker(1)));
        assert_eq!("0x1".parse::<JokerVector>(), Err(Error::InvalidSymbol('x')));
        assert!("".parse::<JokerVector>().is_err());
    }

    #[test]
    fn text_round_trip_and_order() {
        let all = all_joker_vectors(2).unwrap();
        let text: Vec<String> = all.iter().map(|v| v.to_string()).collect();
        assert_eq!(text, ["00", "01", "0*", "10", "11", "1*", "*0", "*1", "**"]);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all);
    }

    #[test]
    fn wide_vectors() {
        let s: String = std::iter::repeat("1*0").take(40).collect::<String>() + "10";
        let v = jv(&s);
        assert_eq!(v.len(), 122);
        assert_eq!(v.to_string(), s);
        assert_eq!(v.joker_count(), 40);
        let w = JokerVector::all_jokers(MAX_DIM).unwrap();
        assert_eq!(w.joker_count(), MAX_DIM);
        assert!(JokerVector::all_jokers(MAX_DIM + 1).is_err());
    }

    #[test]
    fn transform_moves_and_flips() {
        let v = jv("01*");
        let t = v.transform(&[2, 0, 1], 0b111).unwrap();
        // 0 -> pos 2, 1 -> pos 0, * -> pos 1, then flip non-jokers
        assert_eq!(t.to_string(), "0*1");
    }

    #[test]
    fn concat_lengths() {
        assert_eq!(jv("0*").concat(&jv("11")).unwrap(), jv("0*11"));
    }
}
