//! Mapping classes of the disk with `n` holes, fixing every boundary
//! component pointwise.
//!
//! An element is stored as an automorphism of `F_n = <x_1..x_n>` (images of
//! the generators and of their inverses) together with an integer framing
//! vector recording twists about the inner boundary components, which act
//! trivially on the free group. Half-twists permute holes, so the framing
//! lives in a semidirect product: composing `f` after `g` transports the
//! framing of `g` along the hole permutation of `f`.
//!
//! The framing of a Dehn twist about a curve enclosing the hole set `S` is
//! the indicator vector of `S`; on pure mapping classes the framing therefore
//! equals the multiplicity vector of any positive factorization.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::word::{check_size, invert_letters, push_reduced, CyclicWord, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BraidGen {
    /// Half-twist exchanging holes `i` and `i+1`.
    Half(u16),
    /// Twist about the curve parallel to inner boundary `i`.
    Boundary(u16),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidLetter {
    pub gen: BraidGen,
    pub inverse: bool,
}

impl BraidLetter {
    pub fn half(i: usize, inverse: bool) -> Self {
        BraidLetter { gen: BraidGen::Half(i as u16), inverse }
    }

    pub fn boundary(i: usize, inverse: bool) -> Self {
        BraidLetter { gen: BraidGen::Boundary(i as u16), inverse }
    }

    pub fn inv(self) -> Self {
        BraidLetter { gen: self.gen, inverse: !self.inverse }
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gen {
            BraidGen::Half(i) => write!(f, "s{i}")?,
            BraidGen::Boundary(i) => write!(f, "t{i}")?,
        }
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// A word in half-twists `s_i` and boundary twists `t_i`, read left to right
/// as a group product (the rightmost letter acts first).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord(pub Vec<BraidLetter>);

impl BraidWord {
    pub fn empty() -> Self {
        BraidWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.0
    }

    /// Free reduction of adjacent inverse pairs.
    pub fn reduced(&self) -> BraidWord {
        let mut out: Vec<BraidLetter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord(out)
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        BraidWord(v).reduced()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    /// Drops boundary twists; they are central and fix every curve.
    pub fn without_boundary(&self) -> BraidWord {
        BraidWord(
            self.0
                .iter()
                .copied()
                .filter(|l| matches!(l.gen, BraidGen::Half(_)))
                .collect(),
        )
        .reduced()
    }

    /// Checks every index against a surface with `n` holes.
    pub fn validate(&self, n: usize) -> Result<()> {
        for l in &self.0 {
            match l.gen {
                BraidGen::Half(i) if i == 0 || i as usize >= n => {
                    return Err(Error::IndexOutOfRange { index: i as usize, max: n.saturating_sub(1) })
                }
                BraidGen::Boundary(i) if i == 0 || i as usize > n => {
                    return Err(Error::IndexOutOfRange { index: i as usize, max: n })
                }
                _ => {}
            }
        }
        Ok(())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Accepts `s3 s2^-1 t1`, with or without separating whitespace.
    fn from_str(src: &str) -> Result<Self> {
        let bytes = src.as_bytes();
        let mut i = 0;
        let mut out = Vec::new();
        let bad = |at: usize| Error::InvalidArgument(format!("bad braid word {src:?} at offset {at}"));
        while i < bytes.len() {
            let c = bytes[i];
            if c.is_ascii_whitespace() {
                i += 1;
                continue;
            }
            let boundary = match c {
                b's' => false,
                b't' => true,
                _ => return Err(bad(i)),
            };
            i += 1;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(bad(i));
            }
            let idx: usize = src[start..i].parse().map_err(|_| bad(start))?;
            let mut inverse = false;
            if src[i..].starts_with("^-1") {
                inverse = true;
                i += 3;
            }
            out.push(if boundary {
                BraidLetter::boundary(idx, inverse)
            } else {
                BraidLetter::half(idx, inverse)
            });
        }
        Ok(BraidWord(out))
    }
}

/// Apply the substitution `images` (indexed by generator, 0-based) to a word,
/// reducing as letters are emitted.
pub(crate) fn substitute(fwd: &[Vec<Letter>], letters: &[Letter]) -> Vec<Letter> {
    let mut out = Vec::with_capacity(letters.len() * 2);
    for &l in letters {
        let img = &fwd[l.unsigned_abs() as usize - 1];
        if l > 0 {
            for &m in img {
                push_reduced(&mut out, m);
            }
        } else {
            for &m in img.iter().rev() {
                push_reduced(&mut out, -m);
            }
        }
    }
    out
}

/// Hole permutation read from generator images: `x_i` maps to a conjugate of
/// `x_{perm[i]}` (0-based).
fn permutation_of(fwd: &[Vec<Letter>]) -> Vec<usize> {
    fwd.iter()
        .map(|img| {
            let core = crate::word::cyclic_core(img);
            debug_assert!(core.len() == 1 && core[0] > 0, "generator image not conjugate to a generator");
            core.first().map_or(0, |&l| l.unsigned_abs() as usize - 1)
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct MappingClass {
    n: usize,
    fwd: Arc<Vec<Vec<Letter>>>,
    inv: Arc<Vec<Vec<Letter>>>,
    framing: Vec<i64>,
    perm: Vec<usize>,
    word: BraidWord,
}

impl PartialEq for MappingClass {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.framing == other.framing && self.fwd == other.fwd
    }
}

impl Eq for MappingClass {}

impl Hash for MappingClass {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.framing.hash(state);
        self.fwd.hash(state);
    }
}

impl MappingClass {
    pub fn identity(n: usize) -> Self {
        let gens: Vec<Vec<Letter>> = (1..=n as Letter).map(|i| vec![i]).collect();
        MappingClass {
            n,
            fwd: Arc::new(gens.clone()),
            inv: Arc::new(gens),
            framing: vec![0; n],
            perm: (0..n).collect(),
            word: BraidWord::empty(),
        }
    }

    /// The half-twist `s_i`: `x_i -> x_i x_{i+1} x_i^-1`, `x_{i+1} -> x_i`.
    pub fn half_twist(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
        let a = i as Letter;
        let b = a + 1;
        let mut fwd: Vec<Vec<Letter>> = (1..=n as Letter).map(|k| vec![k]).collect();
        let mut inv = fwd.clone();
        fwd[i - 1] = vec![a, b, -a];
        fwd[i] = vec![a];
        inv[i - 1] = vec![b];
        inv[i] = vec![-b, a, b];
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i - 1, i);
        Ok(MappingClass {
            n,
            fwd: Arc::new(fwd),
            inv: Arc::new(inv),
            framing: vec![0; n],
            perm,
            word: BraidWord(vec![BraidLetter::half(i, false)]),
        })
    }

    /// Twist about the curve parallel to inner boundary `i`.
    pub fn boundary_twist(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, max: n });
        }
        let mut m = MappingClass::identity(n);
        m.framing[i - 1] = 1;
        m.word = BraidWord(vec![BraidLetter::boundary(i, false)]);
        Ok(m)
    }

    pub fn from_letter(n: usize, l: BraidLetter) -> Result<Self> {
        let g = match l.gen {
            BraidGen::Half(i) => MappingClass::half_twist(n, i as usize)?,
            BraidGen::Boundary(i) => MappingClass::boundary_twist(n, i as usize)?,
        };
        Ok(if l.inverse { g.invert() } else { g })
    }

    pub fn from_braid_word(n: usize, w: &BraidWord) -> Result<Self> {
        w.validate(n)?;
        let mut acc = MappingClass::identity(n);
        for &l in w.letters() {
            acc = acc.compose(&MappingClass::from_letter(n, l)?)?;
        }
        Ok(acc)
    }

    /// Dehn twist about the convex curve enclosing `set` (1-based indices).
    ///
    /// Singletons give boundary twists. A consecutive block `a..=b` conjugates
    /// each `x_k`, `k` in the block, by `x_a ... x_b`. Other sets are reduced to
    /// a block by the positive braid that slides the holes of `set` leftwards
    /// onto `min(set)..`, keeping their relative order.
    pub fn convex_twist(n: usize, set: &[usize]) -> Result<Self> {
        let s = normalize_set(n, set)?;
        if s.len() == 1 {
            return MappingClass::boundary_twist(n, s[0]);
        }
        let (a, b) = (s[0], *s.last().unwrap());
        if b - a + 1 == s.len() {
            return Ok(Self::block_twist(n, a, b));
        }
        let g = gather_braid(n, &s)?;
        let block = Self::block_twist(n, a, a + s.len() - 1);
        g.invert().compose(&block)?.compose(&g)
    }

    fn block_twist(n: usize, a: usize, b: usize) -> Self {
        let w: Vec<Letter> = (a as Letter..=b as Letter).collect();
        let wi = invert_letters(&w);
        let mut fwd: Vec<Vec<Letter>> = (1..=n as Letter).map(|k| vec![k]).collect();
        let mut inv = fwd.clone();
        let mut framing = vec![0i64; n];
        for k in a..=b {
            let x = k as Letter;
            fwd[k - 1] = crate::word::reduce_letters(&[w.clone(), vec![x], wi.clone()].concat());
            inv[k - 1] = crate::word::reduce_letters(&[wi.clone(), vec![x], w.clone()].concat());
            framing[k - 1] = 1;
        }
        // (s_a ... s_{b-1})^{b-a+1} followed by the boundary twists of the block
        let mut word = Vec::new();
        for _ in a..=b {
            word.extend((a..b).map(|i| BraidLetter::half(i, false)));
        }
        word.extend((a..=b).map(|i| BraidLetter::boundary(i, false)));
        MappingClass {
            n,
            fwd: Arc::new(fwd),
            inv: Arc::new(inv),
            framing,
            perm: (0..n).collect(),
            word: BraidWord(word),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn framing(&self) -> &[i64] {
        &self.framing
    }

    /// `perm()[i] = j` when hole `i+1` is carried to hole `j+1`.
    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_pure(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn braid_word(&self) -> &BraidWord {
        &self.word
    }

    /// Generator images `x_i -> images()[i-1]`, each freely reduced.
    pub fn images(&self) -> Vec<Word> {
        self.fwd.iter().map(|l| Word::from_trusted(self.n, l.clone())).collect()
    }

    pub(crate) fn fwd_images(&self) -> &[Vec<Letter>] {
        &self.fwd
    }

    /// `self ∘ other`: `other` acts first.
    pub fn compose(&self, other: &MappingClass) -> Result<MappingClass> {
        check_size(self.n, other.n)?;
        let fwd: Vec<Vec<Letter>> = other.fwd.iter().map(|img| substitute(&self.fwd, img)).collect();
        let inv: Vec<Vec<Letter>> = self.inv.iter().map(|img| substitute(&other.inv, img)).collect();
        let mut framing = self.framing.clone();
        for (i, &t) in other.framing.iter().enumerate() {
            framing[self.perm[i]] += t;
        }
        let perm = other.perm.iter().map(|&j| self.perm[j]).collect();
        let out = MappingClass {
            n: self.n,
            fwd: Arc::new(fwd),
            inv: Arc::new(inv),
            framing,
            perm,
            word: self.word.concat(&other.word),
        };
        debug_assert!(out.fixes_boundary_word());
        Ok(out)
    }

    pub fn invert(&self) -> MappingClass {
        let mut framing = vec![0i64; self.n];
        for (i, &j) in self.perm.iter().enumerate() {
            framing[i] = -self.framing[j];
        }
        let mut perm = vec![0usize; self.n];
        for (i, &j) in self.perm.iter().enumerate() {
            perm[j] = i;
        }
        MappingClass {
            n: self.n,
            fwd: Arc::clone(&self.inv),
            inv: Arc::clone(&self.fwd),
            framing,
            perm,
            word: self.word.inverse(),
        }
    }

    /// `self ∘ other ∘ self^-1`.
    pub fn conjugate(&self, other: &MappingClass) -> Result<MappingClass> {
        self.compose(other)?.compose(&self.invert())
    }

    pub fn pow(&self, k: i64) -> MappingClass {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut acc = MappingClass::identity(self.n);
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base).expect("same surface");
        }
        acc
    }

    pub fn equals(&self, other: &MappingClass) -> Result<bool> {
        check_size(self.n, other.n)?;
        Ok(self == other)
    }

    pub fn is_identity(&self) -> bool {
        *self == MappingClass::identity(self.n)
    }

    pub fn apply_word(&self, w: &Word) -> Result<Word> {
        check_size(self.n, w.n())?;
        Ok(Word::from_trusted(self.n, substitute(&self.fwd, w.letters())))
    }

    pub fn fixes_boundary_word(&self) -> bool {
        let delta: Vec<Letter> = (1..=self.n as Letter).collect();
        substitute(&self.fwd, &delta) == delta
    }

    /// Boundary word fixed, each generator image conjugate to the generator
    /// it is carried to, and forward/inverse images consistent.
    pub fn check_invariants(&self) -> bool {
        if !self.fixes_boundary_word() {
            return false;
        }
        let images_ok = self.fwd.iter().enumerate().all(|(i, img)| {
            let core = crate::word::cyclic_core(img);
            core.len() == 1 && core[0] == self.perm[i] as Letter + 1
        });
        let inverse_ok = (1..=self.n as Letter).all(|x| substitute(&self.fwd, &self.inv[x as usize - 1]) == vec![x]);
        images_ok && inverse_ok && permutation_of(&self.fwd) == self.perm
    }
}

impl fmt::Display for MappingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, img) in self.fwd.iter().enumerate() {
            write!(f, "x{} -> ", i + 1)?;
            crate::word::fmt_letters(f, img)?;
            writeln!(f)?;
        }
        write!(f, "framing {:?}", self.framing)
    }
}

/// Sort, dedupe and range-check a 1-based hole set.
pub fn normalize_set(n: usize, set: &[usize]) -> Result<Vec<usize>> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&bad) = s.iter().find(|&&i| i == 0 || i > n) {
        return Err(Error::IndexOutOfRange { index: bad, max: n });
    }
    Ok(s)
}

/// Positive permutation braid carrying the convex curve around `set` to the
/// convex curve around the block `min(set) .. min(set)+|set|-1`.
pub fn gather_braid(n: usize, set: &[usize]) -> Result<MappingClass> {
    let s = normalize_set(n, set)?;
    let mut g = MappingClass::identity(n);
    for (j, &hole) in s.iter().enumerate().skip(1) {
        let target = s[0] + j;
        for p in (target + 1..=hole).rev() {
            g = MappingClass::half_twist(n, p - 1)?.compose(&g)?;
        }
    }
    Ok(g)
}

/// Isotopy class of an essential simple closed curve: the image of the convex
/// curve around `base` under the braid `conjugator`.
#[derive(Debug, Clone)]
pub struct Curve {
    n: usize,
    enclosed: Vec<usize>,
    base: Vec<usize>,
    conjugator: BraidWord,
    map: MappingClass,
    rep: Word,
    class: CyclicWord,
}

impl PartialEq for Curve {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.enclosed == other.enclosed && self.class == other.class
    }
}

impl Eq for Curve {}

impl Hash for Curve {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.enclosed.hash(state);
        self.class.hash(state);
    }
}

impl Curve {
    /// The convex curve around `set`.
    pub fn convex(n: usize, set: &[usize]) -> Result<Curve> {
        let s = normalize_set(n, set)?;
        Ok(Self::build(n, s, MappingClass::identity(n)))
    }

    /// The curve enclosing `enclosed` obtained by moving a convex curve with
    /// the braid `conjugator`. The convex curve moved is the one around the
    /// preimage of `enclosed` under the braid's hole permutation.
    pub fn new(n: usize, enclosed: &[usize], conjugator: &BraidWord) -> Result<Curve> {
        let s = normalize_set(n, enclosed)?;
        let map = MappingClass::from_braid_word(n, &conjugator.without_boundary())?;
        let mut base: Vec<usize> = (1..=n).filter(|&i| s.contains(&(map.perm[i - 1] + 1))).collect();
        base.sort_unstable();
        Ok(Self::build(n, base, map))
    }

    fn build(n: usize, base: Vec<usize>, map: MappingClass) -> Curve {
        let w = Word::subset_product(n, &base);
        let rep = Word::from_trusted(n, substitute(&map.fwd, w.letters()));
        let class = rep.cyclic_canonical();
        let mut enclosed: Vec<usize> = base.iter().map(|&i| map.perm[i - 1] + 1).collect();
        enclosed.sort_unstable();
        let conjugator = map.word.without_boundary();
        Curve { n, enclosed, base, conjugator, map, rep, class }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn enclosed(&self) -> &[usize] {
        &self.enclosed
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn conjugator(&self) -> &BraidWord {
        &self.conjugator
    }

    pub fn conjugator_map(&self) -> &MappingClass {
        &self.map
    }

    /// A based representative of the curve's class.
    pub fn representative(&self) -> &Word {
        &self.rep
    }

    pub fn class(&self) -> &CyclicWord {
        &self.class
    }

    pub fn is_boundary_parallel(&self) -> bool {
        self.enclosed.len() == 1
    }

    pub fn is_outer_parallel(&self) -> bool {
        self.enclosed.len() == self.n
    }

    /// Image of the curve under `f`.
    pub fn apply(&self, f: &MappingClass) -> Result<Curve> {
        check_size(self.n, f.n)?;
        if self.is_boundary_parallel() || self.is_outer_parallel() {
            // these classes are unique per enclosed set; keep the canonical form
            let enclosed: Vec<usize> = self.enclosed.iter().map(|&i| f.perm[i - 1] + 1).collect();
            return Curve::convex(self.n, &enclosed);
        }
        Ok(Self::build(self.n, self.base.clone(), f.compose(&self.map)?))
    }

    /// Positive Dehn twist about this curve.
    pub fn twist(&self) -> MappingClass {
        let inner = MappingClass::convex_twist(self.n, &self.base).expect("base set validated");
        if self.conjugator.is_empty() {
            return inner;
        }
        self.map.conjugate(&inner).expect("same surface")
    }

    pub fn indicator(&self) -> Vec<i64> {
        let mut v = vec![0; self.n];
        for &i in &self.enclosed {
            v[i - 1] = 1;
        }
        v
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set: Vec<String> = self.enclosed.iter().map(|i| i.to_string()).collect();
        write!(f, "tw{{{}", set.join(","))?;
        if !self.conjugator.is_empty() {
            write!(f, "|{}", self.conjugator.to_string().replace(' ', ""))?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[Letter]) -> Word {
        Word::new(n, l.to_vec()).unwrap()
    }

    fn ht(n: usize, i: usize) -> MappingClass {
        MappingClass::half_twist(n, i).unwrap()
    }

    #[test]
    fn half_twist_definition() {
        let s = ht(2, 1);
        assert_eq!(s.images(), vec![w(2, &[1, 2, -1]), w(2, &[1])]);
        assert_eq!(s.framing(), &[0, 0]);
        assert!(s.fixes_boundary_word());
        assert!(s.check_invariants());
        assert!(MappingClass::half_twist(2, 2).is_err());
        assert!(MappingClass::half_twist(2, 0).is_err());
    }

    #[test]
    fn half_twist_squared_on_x2() {
        let s2 = ht(2, 1).compose(&ht(2, 1)).unwrap();
        let expected = w(2, &[2]).conjugate_by(&w(2, &[1, 2])).unwrap();
        assert_eq!(s2.apply_word(&w(2, &[2])).unwrap(), expected);
    }

    #[test]
    fn convex_twist_examples() {
        let t2 = MappingClass::convex_twist(4, &[2]).unwrap();
        assert_eq!(t2.images(), MappingClass::identity(4).images());
        assert_eq!(t2.framing(), &[0, 1, 0, 0]);

        let t12 = MappingClass::convex_twist(3, &[1, 2]).unwrap();
        let c = w(3, &[1, 2]);
        assert_eq!(
            t12.images(),
            vec![w(3, &[1]).conjugate_by(&c).unwrap(), w(3, &[2]).conjugate_by(&c).unwrap(), w(3, &[3])]
        );

        let all = MappingClass::convex_twist(4, &[1, 2, 3, 4]).unwrap();
        let d = Word::boundary(4);
        for (i, img) in all.images().iter().enumerate() {
            assert_eq!(img, &w(4, &[i as Letter + 1]).conjugate_by(&d).unwrap());
        }
        assert!(MappingClass::convex_twist(3, &[]).is_err());
    }

    #[test]
    fn compose_and_invert_basics() {
        let id = MappingClass::identity(3);
        let g = ht(3, 2);
        assert_eq!(id.compose(&g).unwrap(), g);
        let f = MappingClass::convex_twist(3, &[1]).unwrap().compose(&MappingClass::convex_twist(3, &[2]).unwrap()).unwrap();
        assert_eq!(f.framing(), &[1, 1, 0]);
        assert!(ht(3, 1).compose(&ht(3, 1).invert()).unwrap().is_identity());
        assert_eq!(id.invert(), id);
        let inv = MappingClass::convex_twist(3, &[1, 2]).unwrap().invert();
        assert_eq!(inv.images()[0], w(3, &[1]).conjugate_by(&w(3, &[-2, -1])).unwrap());
        assert!(id.compose(&MappingClass::identity(4)).is_err());
    }

    #[test]
    fn equality_sees_framing_and_outer_twist() {
        let t1 = MappingClass::convex_twist(3, &[1]).unwrap();
        assert!(!t1.equals(&MappingClass::identity(3)).unwrap());
        let f = ht(3, 1).compose(&ht(3, 2)).unwrap();
        let outer = MappingClass::convex_twist(3, &[1, 2, 3]).unwrap();
        assert!(!f.equals(&f.compose(&outer).unwrap()).unwrap());
    }

    #[test]
    fn braid_relations() {
        for n in 3..=6 {
            for i in 1..n {
                for j in 1..n {
                    let (a, b) = (ht(n, i), ht(n, j));
                    if i.abs_diff(j) >= 2 {
                        assert_eq!(a.compose(&b).unwrap(), b.compose(&a).unwrap());
                    }
                    if j == i + 1 {
                        let lhs = a.compose(&b).unwrap().compose(&a).unwrap();
                        let rhs = b.compose(&a).unwrap().compose(&b).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn block_twist_is_full_twist_braid() {
        for n in 2..=5 {
            for a in 1..=n {
                for size in 2..=3 {
                    let b = a + size - 1;
                    if b > n {
                        continue;
                    }
                    let mut full = MappingClass::identity(n);
                    for _ in 0..size {
                        for i in a..b {
                            full = full.compose(&ht(n, i)).unwrap();
                        }
                    }
                    for i in a..=b {
                        full = full.compose(&MappingClass::boundary_twist(n, i).unwrap()).unwrap();
                    }
                    let block: Vec<usize> = (a..=b).collect();
                    assert_eq!(full, MappingClass::convex_twist(n, &block).unwrap(), "n={n} block={block:?}");
                }
            }
        }
    }

    #[test]
    fn gather_braid_maps_subset_word_to_block() {
        let n = 6;
        for set in [vec![1, 3], vec![2, 4, 6], vec![1, 2, 5], vec![1, 6]] {
            let g = gather_braid(n, &set).unwrap();
            let block: Vec<usize> = (set[0]..set[0] + set.len()).collect();
            let img = g.apply_word(&Word::subset_product(n, &set)).unwrap();
            assert_eq!(img, Word::subset_product(n, &block));
            assert!(g.braid_word().letters().iter().all(|l| !l.inverse));
        }
    }

    #[test]
    fn convex_twist_framing_and_class() {
        let t = MappingClass::convex_twist(5, &[1, 3, 4]).unwrap();
        assert_eq!(t.framing(), &[1, 0, 1, 1, 0]);
        assert!(t.is_pure());
        assert!(t.check_invariants());
        // the convex curve is fixed by its own twist
        let c = Curve::convex(5, &[1, 3, 4]).unwrap();
        assert_eq!(c.apply(&t).unwrap(), c);
        assert_eq!(c.class().letters(), &[1, 3, 4]);
    }

    #[test]
    fn curve_apply_examples() {
        let c = Curve::convex(3, &[1, 2]).unwrap();
        assert_eq!(c.apply(&MappingClass::identity(3)).unwrap(), c);
        let moved = c.apply(&ht(3, 2)).unwrap();
        assert_eq!(moved.class(), &w(3, &[1, 2, 3, -2]).cyclic_canonical());
        assert_eq!(moved.enclosed(), &[1, 3]);
        assert_eq!(Curve::convex(3, &[2]).unwrap().twist(), MappingClass::convex_twist(3, &[2]).unwrap());
    }

    #[test]
    fn curve_from_conjugator_encloses_requested_set() {
        let b = BraidWord::from_str("s2 s1^-1").unwrap();
        let c = Curve::new(3, &[1, 2], &b).unwrap();
        assert_eq!(c.enclosed(), &[1, 2]);
        let mut ab = c.representative().abelianize();
        ab.iter_mut().for_each(|x| *x = x.abs());
        assert_eq!(ab, vec![1, 1, 0]);
        assert_eq!(c.twist().framing(), &[1, 1, 0]);
    }

    #[test]
    fn braid_word_parse_and_print() {
        let b: BraidWord = "s3 s2^-1".parse().unwrap();
        assert_eq!(b.to_string(), "s3 s2^-1");
        let c: BraidWord = "s2s3^-1t1".parse().unwrap();
        assert_eq!(c.len(), 3);
        assert!("s".parse::<BraidWord>().is_err());
        assert!("x1".parse::<BraidWord>().is_err());
        assert!(b.validate(3).is_err());
        assert!(b.validate(4).is_ok());
    }
}
