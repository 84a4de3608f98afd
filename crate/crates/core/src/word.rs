//! Free-group words over generators `x_1 .. x_n`.
//!
//! A letter is a nonzero `i32`: `+i` stands for `x_i`, `-i` for `x_i^{-1}`.
//! Every value carries its alphabet size and binary operations check it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Letter = i32;

/// Sort key for letters: by index, positive before negative.
#[inline]
pub fn letter_key(l: Letter) -> u32 {
    (l.unsigned_abs() << 1) | u32::from(l < 0)
}

/// Append `l` to a reduced buffer, cancelling against its tail.
#[inline]
pub fn push_reduced(buf: &mut Vec<Letter>, l: Letter) {
    if buf.last() == Some(&-l) {
        buf.pop();
    } else {
        buf.push(l);
    }
}

/// Freely reduce a raw letter sequence with a single stack pass.
pub fn reduce_letters(letters: &[Letter]) -> Vec<Letter> {
    let mut out = Vec::with_capacity(letters.len());
    for &l in letters {
        push_reduced(&mut out, l);
    }
    out
}

pub fn invert_letters(letters: &[Letter]) -> Vec<Letter> {
    letters.iter().rev().map(|&l| -l).collect()
}

/// Strip a reduced word down to its cyclically reduced core.
pub fn cyclic_core(reduced: &[Letter]) -> &[Letter] {
    let mut lo = 0;
    let mut hi = reduced.len();
    while hi - lo >= 2 && reduced[lo] == -reduced[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    &reduced[lo..hi]
}

/// Start index of the lexicographically least rotation (two-pointer
/// minimum-expression scan, linear time).
fn least_rotation(keys: &[u32]) -> usize {
    let n = keys.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = keys[(i + k) % n];
        let b = keys[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

fn min_rotation(letters: &[Letter]) -> Vec<Letter> {
    let keys: Vec<u32> = letters.iter().map(|&l| letter_key(l)).collect();
    let k = least_rotation(&keys);
    letters[k..].iter().chain(&letters[..k]).copied().collect()
}

fn cmp_letters(a: &[Letter], b: &[Letter]) -> std::cmp::Ordering {
    a.iter().map(|&l| letter_key(l)).cmp(b.iter().map(|&l| letter_key(l)))
}

/// Canonical representative of the conjugacy class of `w` together with
/// that of `w^{-1}`: the least rotation of either cyclic core.
pub fn canonical_letters(letters: &[Letter]) -> Vec<Letter> {
    let reduced = reduce_letters(letters);
    let core = cyclic_core(&reduced);
    let fwd = min_rotation(core);
    let bwd = min_rotation(&invert_letters(core));
    if cmp_letters(&bwd, &fwd).is_lt() {
        bwd
    } else {
        fwd
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    n: usize,
    letters: Vec<Letter>,
}

impl Word {
    /// Validates every letter against the alphabet; does not reduce.
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        if let Some(&bad) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize > n)
        {
            return Err(Error::MalformedWord {
                index: i64::from(bad),
                n,
            });
        }
        Ok(Word { n, letters })
    }

    pub(crate) fn from_trusted(n: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&l| l != 0 && l.unsigned_abs() as usize <= n));
        Word { n, letters }
    }

    pub fn identity(n: usize) -> Self {
        Word { n, letters: Vec::new() }
    }

    pub fn generator(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        Ok(Word { n, letters: vec![i as Letter] })
    }

    /// The boundary word `x_1 x_2 ... x_n`.
    pub fn boundary(n: usize) -> Self {
        Word { n, letters: (1..=n as Letter).collect() }
    }

    /// `prod_{i in set, increasing} x_i`. Indices are 1-based.
    pub fn subset_product(n: usize, set: &[usize]) -> Self {
        let mut s: Vec<usize> = set.to_vec();
        s.sort_unstable();
        s.dedup();
        Word { n, letters: s.into_iter().map(|i| i as Letter).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn reduce(&self) -> Word {
        Word { n: self.n, letters: reduce_letters(&self.letters) }
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|p| p[0] != -p[1])
    }

    pub fn inverse(&self) -> Word {
        Word { n: self.n, letters: invert_letters(&self.letters) }
    }

    /// Reduced product `self * other`.
    pub fn mul(&self, other: &Word) -> Result<Word> {
        check_size(self.n, other.n)?;
        let mut out = reduce_letters(&self.letters);
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        Ok(Word { n: self.n, letters: out })
    }

    /// Reduced `g * self * g^{-1}`.
    pub fn conjugate_by(&self, g: &Word) -> Result<Word> {
        g.mul(self)?.mul(&g.inverse())
    }

    pub fn cyclic_canonical(&self) -> CyclicWord {
        CyclicWord { n: self.n, letters: canonical_letters(&self.letters) }
    }

    /// Exponent sum of each generator.
    pub fn abelianize(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.n];
        for &l in &self.letters {
            v[l.unsigned_abs() as usize - 1] += if l > 0 { 1 } else { -1 };
        }
        v
    }
}

pub fn check_size(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::SizeMismatch { left, right });
    }
    Ok(())
}

pub fn conjugacy_equal(a: &Word, b: &Word) -> Result<bool> {
    check_size(a.n, b.n)?;
    Ok(a.cyclic_canonical() == b.cyclic_canonical())
}

pub(crate) fn fmt_letters(f: &mut fmt::Formatter<'_>, letters: &[Letter]) -> fmt::Result {
    if letters.is_empty() {
        return write!(f, "1");
    }
    for (k, &l) in letters.iter().enumerate() {
        if k > 0 {
            write!(f, " ")?;
        }
        if l > 0 {
            write!(f, "x{l}")?;
        } else {
            write!(f, "x{}^-1", -l)?;
        }
    }
    Ok(())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(f, &self.letters)
    }
}

/// Free-homotopy class of an unoriented loop: cyclically reduced and minimal
/// over all rotations of the word and of its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CyclicWord {
    n: usize,
    letters: Vec<Letter>,
}

impl CyclicWord {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn to_word(&self) -> Word {
        Word { n: self.n, letters: self.letters.clone() }
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        fmt_letters(f, &self.letters)?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(n: usize, l: &[Letter]) -> Word {
        Word::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(w(3, &[1, 2, -2, 3]).reduce(), w(3, &[1, 3]));
        assert_eq!(w(3, &[]).reduce(), w(3, &[]));
        assert_eq!(w(3, &[1, -1, 1]).reduce(), w(3, &[1]));
    }

    #[test]
    fn malformed_letters_rejected() {
        assert!(matches!(Word::new(3, vec![1, 4]), Err(Error::MalformedWord { index: 4, .. })));
        assert!(Word::new(3, vec![0]).is_err());
    }

    #[test]
    fn canonical_examples() {
        let a = w(3, &[2, 3]).cyclic_canonical();
        assert_eq!(a, w(3, &[3, 2]).cyclic_canonical());
        assert_eq!(a, w(3, &[1, 2, 3, -1]).cyclic_canonical());
        assert_eq!(a, w(3, &[-3, -2]).cyclic_canonical());
        assert_eq!(a.letters(), &[2, 3]);
    }

    #[test]
    fn canonical_prefers_positive_letters() {
        // x1 x2^-1 vs its inverse x2 x1^-1: rotations x1 x2^-1 and x2^-1 x1 / x1^-1 x2 ...
        assert_eq!(w(2, &[2, -1]).cyclic_canonical().letters(), &[1, -2]);
    }

    #[test]
    fn conjugacy_examples() {
        assert!(conjugacy_equal(&w(3, &[1, 2]), &w(3, &[2, 1])).unwrap());
        assert!(!conjugacy_equal(&w(3, &[1, 2]), &w(3, &[1, 3])).unwrap());
        assert!(conjugacy_equal(&w(3, &[1]), &w(2, &[1])).is_err());
    }

    #[test]
    fn abelianize_examples() {
        assert_eq!(w(3, &[1, 2, -1]).abelianize(), vec![0, 1, 0]);
        assert_eq!(w(3, &[1, 2]).abelianize(), vec![1, 1, 0]);
    }

    #[test]
    fn least_rotation_matches_brute_force() {
        let cases: &[&[u32]] = &[&[3, 1, 2, 1, 2], &[1, 1, 1], &[2, 1, 2, 1], &[5], &[4, 2, 4, 2, 3]];
        for keys in cases {
            let k = least_rotation(keys);
            let rot = |s: usize| -> Vec<u32> { keys[s..].iter().chain(&keys[..s]).copied().collect() };
            let best = (0..keys.len()).map(rot).min().unwrap();
            assert_eq!(rot(k), best);
        }
    }

    fn word_strategy(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
        let letter = (1..=n as i32, any::<bool>()).prop_map(|(i, neg)| if neg { -i } else { i });
        proptest::collection::vec(letter, 0..=max_len).prop_map(move |l| Word::new(n, l).unwrap())
    }

    fn pair(max_len: usize) -> impl Strategy<Value = (Word, Word)> {
        (1usize..=8).prop_flat_map(move |n| (word_strategy(n, max_len), word_strategy(n, max_len)))
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent_and_shrinks(w in (1usize..=8).prop_flat_map(|n| word_strategy(n, 40))) {
            let r = w.reduce();
            prop_assert!(r.is_reduced());
            prop_assert!(r.len() <= w.len());
            prop_assert_eq!(r.reduce(), r.clone());
        }

        #[test]
        fn canonical_invariant_under_conjugation_and_inversion((w, g) in pair(40)) {
            let c = w.cyclic_canonical();
            prop_assert_eq!(&c, &w.conjugate_by(&g).unwrap().cyclic_canonical());
            prop_assert_eq!(&c, &w.inverse().cyclic_canonical());
            prop_assert!(conjugacy_equal(&w, &w.conjugate_by(&g).unwrap()).unwrap());
        }

        #[test]
        fn canonical_is_min_over_rotations((w, _g) in pair(16)) {
            let r = w.reduce();
            let core = cyclic_core(r.letters()).to_vec();
            let c = w.cyclic_canonical();
            let inv = invert_letters(&core);
            for s in 0..core.len().max(1) {
                for cand in [&core, &inv] {
                    if cand.is_empty() { continue; }
                    let rot: Vec<Letter> = cand[s..].iter().chain(&cand[..s]).copied().collect();
                    prop_assert!(!cmp_letters(&rot, c.letters()).is_lt());
                }
            }
        }

        #[test]
        fn abelianize_is_class_function((u, v) in pair(40)) {
            let sum: Vec<i64> = u.abelianize().iter().zip(v.abelianize()).map(|(a, b)| a + b).collect();
            prop_assert_eq!(u.mul(&v).unwrap().abelianize(), sum);
            prop_assert_eq!(u.conjugate_by(&v).unwrap().abelianize(), u.abelianize());
        }
    }
}
