//! Positive Dehn-twist factorizations and their multiplicity invariants.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::mcg::{normalize_set, BraidLetter, BraidWord, Curve, MappingClass};
use crate::word::check_size;

/// An ordered product `τ_{c_1} τ_{c_2} ... τ_{c_k}` of positive twists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: usize,
    curves: Vec<Curve>,
}

/// Multiplicities `M_i` (factors enclosing hole `i`) and joint multiplicities
/// `J_{i,j}` (factors enclosing both). Indices are 0-based in storage.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiplicityProfile {
    pub m: Vec<i64>,
    pub j: Vec<Vec<i64>>,
}

impl MultiplicityProfile {
    pub fn zero(n: usize) -> Self {
        MultiplicityProfile { m: vec![0; n], j: vec![vec![0; n]; n] }
    }

    pub fn n(&self) -> usize {
        self.m.len()
    }

    /// Adds one factor enclosing `set` (1-based).
    pub fn add_set(&mut self, set: &[usize]) {
        for &a in set {
            self.m[a - 1] += 1;
            for &b in set {
                if a != b {
                    self.j[a - 1][b - 1] += 1;
                }
            }
        }
    }

    pub fn from_sets<'a>(n: usize, sets: impl IntoIterator<Item = &'a [usize]>) -> Self {
        let mut p = MultiplicityProfile::zero(n);
        for s in sets {
            p.add_set(s);
        }
        p
    }

    /// `M_i` for 1-based `i`.
    pub fn multiplicity(&self, i: usize) -> i64 {
        self.m[i - 1]
    }

    /// `M_{i,j}` for 1-based `i != j`.
    pub fn joint(&self, i: usize, j: usize) -> i64 {
        self.j[i - 1][j - 1]
    }

    /// Nonzero joint multiplicities keyed `"i,j"` with `i < j`.
    pub fn joint_map(&self) -> BTreeMap<String, i64> {
        let mut out = BTreeMap::new();
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.j[i][j] != 0 {
                    out.insert(format!("{},{}", i + 1, j + 1), self.j[i][j]);
                }
            }
        }
        out
    }

    /// `M_i >= J_{i,j} >= 0` and `J` symmetric.
    pub fn is_consistent(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| {
            (0..n).all(|j| i == j || (self.j[i][j] == self.j[j][i] && self.j[i][j] >= 0 && self.m[i] >= self.j[i][j]))
        })
    }
}

impl Factorization {
    pub fn new(n: usize, curves: Vec<Curve>) -> Result<Self> {
        for c in &curves {
            check_size(n, c.n())?;
        }
        Ok(Factorization { n, curves })
    }

    pub fn empty(n: usize) -> Self {
        Factorization { n, curves: Vec::new() }
    }

    /// Factorization by convex curves, one per set.
    pub fn convex(n: usize, sets: &[&[usize]]) -> Result<Self> {
        let curves = sets.iter().map(|s| Curve::convex(n, s)).collect::<Result<Vec<_>>>()?;
        Ok(Factorization { n, curves })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn push(&mut self, c: Curve) -> Result<()> {
        check_size(self.n, c.n())?;
        self.curves.push(c);
        Ok(())
    }

    /// Left-to-right product of the twists.
    pub fn product(&self) -> MappingClass {
        let mut acc = MappingClass::identity(self.n);
        for c in &self.curves {
            acc = acc.compose(&c.twist()).expect("sizes checked at construction");
        }
        acc
    }

    pub fn multiplicity_profile(&self) -> MultiplicityProfile {
        MultiplicityProfile::from_sets(self.n, self.curves.iter().map(|c| c.enclosed()))
    }

    fn check_position(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.curves.len() {
            return Err(Error::PositionOutOfRange { position: i, len: self.curves.len() });
        }
        Ok(())
    }

    /// Replaces factors `i, i+1` (1-based) `(a, b)` by `(b, τ_b^{-1}(a))`.
    pub fn hurwitz_move(&self, i: usize) -> Result<Factorization> {
        self.check_position(i)?;
        let a = &self.curves[i - 1];
        let b = &self.curves[i];
        let moved = a.apply(&b.twist().invert())?;
        let mut curves = self.curves.clone();
        curves[i - 1] = b.clone();
        curves[i] = moved;
        Ok(Factorization { n: self.n, curves })
    }

    /// Replaces factors `i, i+1` (1-based) `(a, b)` by `(τ_a(b), a)`.
    pub fn hurwitz_inverse(&self, i: usize) -> Result<Factorization> {
        self.check_position(i)?;
        let a = &self.curves[i - 1];
        let b = &self.curves[i];
        let moved = b.apply(&a.twist())?;
        let mut curves = self.curves.clone();
        curves[i - 1] = moved;
        curves[i] = a.clone();
        Ok(Factorization { n: self.n, curves })
    }

    /// Every curve replaced by its image under `f`.
    pub fn global_conjugate(&self, f: &MappingClass) -> Result<Factorization> {
        check_size(self.n, f.n())?;
        let curves = self.curves.iter().map(|c| c.apply(f)).collect::<Result<Vec<_>>>()?;
        Ok(Factorization { n: self.n, curves })
    }

    /// Euler characteristic of the Lefschetz fibration built from this
    /// factorization: the page contributes `1 - n`, each 2-handle `+1`.
    pub fn euler_characteristic(&self) -> i64 {
        1 - self.n as i64 + self.curves.len() as i64
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "surface({})", self.n)?;
        for c in &self.curves {
            write!(f, " {c}")?;
        }
        Ok(())
    }
}

/// Disjointness relation: `τ_A τ_B = τ_B τ_A`, checked exactly.
pub fn verify_relation_disjoint(a: &Curve, b: &Curve) -> Result<bool> {
    check_size(a.n(), b.n())?;
    let (ta, tb) = (a.twist(), b.twist());
    Ok(ta.compose(&tb)? == tb.compose(&ta)?)
}

/// Whether the convex curves around `a` and `b` can be drawn disjoint:
/// the sets are nested or separated, and a separated pair does not
/// interleave in the cyclic order of the holes.
pub fn convex_sets_disjoint(a: &[usize], b: &[usize]) -> bool {
    let inter = a.iter().filter(|x| b.contains(x)).count();
    if inter == a.len() || inter == b.len() {
        return true;
    }
    if inter > 0 {
        return false;
    }
    // separated: the holes of b must lie in one gap between consecutive holes of a
    let mut sa = a.to_vec();
    sa.sort_unstable();
    let gap_of = |x: usize| sa.iter().filter(|&&y| y < x).count() % sa.len();
    let first = gap_of(b[0]);
    b.iter().all(|&x| gap_of(x) == first)
}

#[derive(Debug, Clone)]
pub struct LanternWitness {
    pub holds: bool,
    pub ac_curve: Option<Curve>,
    pub words_tried: usize,
}

/// Lantern relation `τ_A τ_B τ_C τ_{A∪B∪C} = τ_{A∪B} τ_{B∪C} τ_{A∪C}` with
/// convex curves everywhere except `A∪C`, whose curve is searched among
/// images of convex curves under half-twist words of length `<= max_len`.
pub fn verify_relation_lantern(n: usize, a: &[usize], b: &[usize], c: &[usize], max_len: usize) -> Result<LanternWitness> {
    let (a, b, c) = (normalize_set(n, a)?, normalize_set(n, b)?, normalize_set(n, c)?);
    let disjoint = |x: &[usize], y: &[usize]| x.iter().all(|i| !y.contains(i));
    if !(disjoint(&a, &b) && disjoint(&b, &c) && disjoint(&a, &c)) {
        return Err(Error::InvalidArgument("lantern sets must be pairwise disjoint".into()));
    }
    let union = |x: &[usize], y: &[usize]| -> Vec<usize> {
        let mut u = [x, y].concat();
        u.sort_unstable();
        u
    };
    let abc = union(&union(&a, &b), &c);
    let ac = union(&a, &c);
    let lhs = Factorization::convex(n, &[&a, &b, &c, &abc])?.product();
    let ab = Curve::convex(n, &union(&a, &b))?.twist();
    let bc = Curve::convex(n, &union(&b, &c))?.twist();
    let prefix = ab.compose(&bc)?;
    let mut tried = 0usize;
    let mut seen = std::collections::HashSet::new();
    for word in half_twist_words(n, max_len) {
        tried += 1;
        let curve = Curve::new(n, &ac, &word)?;
        if !seen.insert(curve.class().clone()) {
            continue;
        }
        if prefix.compose(&curve.twist())? == lhs {
            return Ok(LanternWitness { holds: true, ac_curve: Some(curve), words_tried: tried });
        }
    }
    Ok(LanternWitness { holds: false, ac_curve: None, words_tried: tried })
}

/// All freely reduced words in `s_i^{±1}` (1 <= i < n) of length `<= max_len`,
/// shortest first, then in generator order `s_1, s_1^-1, s_2, ...`.
pub fn half_twist_words(n: usize, max_len: usize) -> Vec<BraidWord> {
    let letters: Vec<BraidLetter> = (1..n)
        .flat_map(|i| [BraidLetter::half(i, false), BraidLetter::half(i, true)])
        .collect();
    let mut out = vec![BraidWord::empty()];
    let mut frontier = vec![BraidWord::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &letters {
                if w.letters().last() == Some(&l.inv()) {
                    continue;
                }
                let mut v = w.letters().to_vec();
                v.push(l);
                next.push(BraidWord(v));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}
