//! Affine representatives of twist pairs and stretch factors.
//!
//! For curves `a, b` intersecting `z` times and filling, `τ_a ↦ [[1, z], [0, 1]]`
//! and `τ_b ↦ [[1, 0], [-z, 1]]` define a representation into `PSL(2, R)`
//! whose trace classifies the Nielsen–Thurston type of the products.
//!
//! [`growth_rate`] is an independent estimator: exponential growth of the
//! cyclically reduced length of iterated images of a curve, computed exactly.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mcg::{Curve, MappingClass};
use crate::word::{cyclic_core, reduce_letters, Letter};

/// Relative tolerance for recovering `z` from a stretch factor.
pub const Z_RECOVERY_TOLERANCE: f64 = 0.02;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct AffineRep {
    pub m: [[i64; 2]; 2],
}

impl AffineRep {
    pub fn new(m: [[i64; 2]; 2]) -> Result<Self> {
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if det != 1 {
            return Err(Error::NotUnimodular(det));
        }
        Ok(AffineRep { m })
    }

    pub fn identity() -> Self {
        AffineRep { m: [[1, 0], [0, 1]] }
    }

    pub fn mul(&self, other: &AffineRep) -> AffineRep {
        let (a, b) = (&self.m, &other.m);
        let mut m = [[0i64; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        AffineRep { m }
    }

    pub fn trace(&self) -> i64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn det(&self) -> i64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NtKind {
    /// Elliptic representative: periodic.
    Periodic,
    /// Parabolic representative: reducible.
    Reducible,
    /// Hyperbolic representative: pseudo-Anosov.
    PseudoAnosov,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NtClass {
    pub kind: NtKind,
    pub stretch: Option<f64>,
}

/// Images of the two twists for intersection number `z`.
pub fn thurston_rep(z: i64) -> Result<(AffineRep, AffineRep)> {
    if z < 0 {
        return Err(Error::InvalidArgument(format!("intersection number must be nonnegative, got {z}")));
    }
    Ok((AffineRep { m: [[1, z], [0, 1]] }, AffineRep { m: [[1, 0], [-z, 1]] }))
}

/// Affine representative of `τ_a τ_b`.
pub fn twist_pair_product(z: i64) -> Result<AffineRep> {
    let (a, b) = thurston_rep(z)?;
    Ok(a.mul(&b))
}

pub fn classify(m: &AffineRep) -> Result<NtClass> {
    if m.det() != 1 {
        return Err(Error::NotUnimodular(m.det()));
    }
    let t = m.trace().unsigned_abs();
    Ok(match t {
        0 | 1 => NtClass { kind: NtKind::Periodic, stretch: None },
        2 => NtClass { kind: NtKind::Reducible, stretch: None },
        _ => {
            let tf = t as f64;
            NtClass { kind: NtKind::PseudoAnosov, stretch: Some((tf + (tf * tf - 4.0).sqrt()) / 2.0) }
        }
    })
}

/// `(z^2 - 2 + z sqrt(z^2 - 4)) / 2`.
pub fn stretch_from_z(z: i64) -> Result<f64> {
    if z < 2 {
        return Err(Error::InvalidArgument(format!("stretch_from_z needs z >= 2, got {z}")));
    }
    let zf = z as f64;
    Ok((zf * zf - 2.0 + zf * (zf * zf - 4.0).sqrt()) / 2.0)
}

/// Inverts [`stretch_from_z`]: `round(sqrt(λ) + 1/sqrt(λ))`, rejected unless
/// the stretch of the rounded value is within [`Z_RECOVERY_TOLERANCE`].
pub fn z_from_stretch(lambda: f64) -> Result<i64> {
    if !lambda.is_finite() || lambda < 1.0 {
        return Err(Error::NotATwistPairStretch(lambda));
    }
    let r = lambda.sqrt();
    let z = (r + 1.0 / r).round() as i64;
    let back = stretch_from_z(z).map_err(|_| Error::NotATwistPairStretch(lambda))?;
    if ((back - lambda) / lambda).abs() > Z_RECOVERY_TOLERANCE {
        return Err(Error::NotATwistPairStretch(lambda));
    }
    Ok(z)
}

/// Explicit words are iterated until they exceed this many letters; beyond
/// that the iteration continues on trigram counts.
pub const EXPLICIT_LIMIT: usize = 1 << 22;

fn image_of(fwd: &[Vec<Letter>], l: Letter) -> Vec<Letter> {
    let img = &fwd[l.unsigned_abs() as usize - 1];
    if l > 0 {
        img.clone()
    } else {
        img.iter().rev().map(|&x| -x).collect()
    }
}

/// Length of the cancellation between the end of `u` and the start of `v`.
fn overlap(u: &[Letter], v: &[Letter]) -> usize {
    u.iter().rev().zip(v).take_while(|(a, b)| **a == -**b).count()
}

/// Letter images of an automorphism in the outer class of `f`, shortened by
/// greedy conjugation. Cyclic lengths of iterates only depend on the outer
/// class, and short images keep cancellation between neighbours bounded.
fn outer_images(f: &MappingClass) -> Vec<Vec<Letter>> {
    let mut imgs: Vec<Vec<Letter>> = f.fwd_images().to_vec();
    let total = |v: &[Vec<Letter>]| v.iter().map(Vec::len).sum::<usize>();
    let n = f.n() as Letter;
    loop {
        let cur = total(&imgs);
        let best = (1..=n)
            .flat_map(|i| [i, -i])
            .map(|c| {
                imgs.iter()
                    .map(|w| {
                        let mut t = vec![-c];
                        t.extend_from_slice(w);
                        t.push(c);
                        reduce_letters(&t)
                    })
                    .collect::<Vec<_>>()
            })
            .min_by_key(|v| total(v));
        match best {
            Some(v) if total(&v) < cur => imgs = v,
            _ => return imgs,
        }
    }
}

type Trigram = (Letter, Letter, Letter);

/// One linear step on cyclic trigram counts.
struct TrigramMap {
    images: BTreeMap<Letter, Vec<Letter>>,
}

impl TrigramMap {
    fn new(fwd: &[Vec<Letter>]) -> Self {
        let n = fwd.len() as Letter;
        let images = (1..=n)
            .flat_map(|i| [i, -i])
            .map(|l| (l, image_of(fwd, l)))
            .collect();
        TrigramMap { images }
    }

    fn cut(&self, a: Letter, b: Letter) -> usize {
        overlap(&self.images[&a], &self.images[&b])
    }

    /// Trimmed image of the middle letter framed by the surviving neighbour
    /// letters, or `None` when cancellation could reach past a whole image.
    /// Validity of every trigram in the support makes each framed piece exact.
    fn piece(&self, (p, a, s): Trigram) -> Option<Vec<Letter>> {
        let (fp, fa, fs) = (&self.images[&p], &self.images[&a], &self.images[&s]);
        let (left, right) = (self.cut(p, a), self.cut(a, s));
        if left + right >= fa.len() || left >= fp.len() || right >= fs.len() {
            return None;
        }
        let mut ext = Vec::with_capacity(fa.len() - left - right + 2);
        ext.push(fp[fp.len() - 1 - left]);
        ext.extend_from_slice(&fa[left..fa.len() - right]);
        ext.push(fs[right]);
        Some(ext)
    }

    fn step(&self, counts: &BTreeMap<Trigram, BigUint>) -> Option<BTreeMap<Trigram, BigUint>> {
        let mut out: BTreeMap<Trigram, BigUint> = BTreeMap::new();
        for (&tri, c) in counts {
            let ext = self.piece(tri)?;
            for w in ext.windows(3) {
                *out.entry((w[0], w[1], w[2])).or_insert_with(BigUint::zero) += c;
            }
        }
        Some(out)
    }
}

fn trigram_counts(cyclic: &[Letter]) -> BTreeMap<Trigram, BigUint> {
    let m = cyclic.len();
    let mut out: BTreeMap<Trigram, BigUint> = BTreeMap::new();
    for i in 0..m {
        let tri = (cyclic[(i + m - 1) % m], cyclic[i], cyclic[(i + 1) % m]);
        *out.entry(tri).or_insert_with(BigUint::zero) += 1u32;
    }
    out
}

fn apply_cyclic(fwd: &[Vec<Letter>], cyclic: &[Letter]) -> Vec<Letter> {
    let img = crate::mcg::substitute(fwd, cyclic);
    cyclic_core(&reduce_letters(&img)).to_vec()
}

/// Exact cyclically reduced lengths of `f^k(seed)` for `k = 0..=iters`.
pub fn growth_lengths(f: &MappingClass, seed: &Curve, iters: usize) -> Result<Vec<BigUint>> {
    if f.n() != seed.n() {
        return Err(Error::SizeMismatch { left: f.n(), right: seed.n() });
    }
    let fwd = outer_images(f);
    let mut word = cyclic_core(seed.representative().letters()).to_vec();
    let mut lengths = vec![BigUint::from(word.len())];
    let mut k = 0;
    while k < iters && word.len() <= EXPLICIT_LIMIT {
        word = apply_cyclic(&fwd, &word);
        if word.is_empty() {
            return Err(Error::Internal("curve annihilated under iteration".into()));
        }
        lengths.push(BigUint::from(word.len()));
        k += 1;
    }
    if k == iters {
        return Ok(lengths);
    }
    let map = TrigramMap::new(&fwd);
    let mut counts = trigram_counts(&word);
    while k < iters {
        counts = map.step(&counts).ok_or_else(|| Error::ResourceLimit {
            what: "bounded-cancellation growth iteration".into(),
            limit: EXPLICIT_LIMIT as u64,
            progress: format!("{k} of {iters} iterations"),
        })?;
        lengths.push(counts.values().sum());
        k += 1;
    }
    Ok(lengths)
}

/// `ℓ(f^iters(seed)) / ℓ(f^{iters-1}(seed))` with `ℓ` the cyclically reduced length.
pub fn growth_rate(f: &MappingClass, seed: &Curve, iters: usize) -> Result<f64> {
    if iters < 2 {
        return Err(Error::InvalidArgument(format!("growth_rate needs iters >= 2, got {iters}")));
    }
    let lengths = growth_lengths(f, seed, iters)?;
    Ok(ratio(&lengths[iters], &lengths[iters - 1]))
}

/// Growth ratio at the last iteration reachable without leaving explicit
/// words, capped at `max_iters`. Used for fingerprints, where a few
/// iterations already separate the possible stretch factors.
pub fn growth_estimate(f: &MappingClass, seed: &Curve, max_iters: usize, max_len: usize) -> Result<f64> {
    if f.n() != seed.n() {
        return Err(Error::SizeMismatch { left: f.n(), right: seed.n() });
    }
    let fwd = outer_images(f);
    let mut word = cyclic_core(seed.representative().letters()).to_vec();
    let (mut prev, mut cur) = (word.len(), word.len());
    for _ in 0..max_iters {
        if word.len() > max_len {
            break;
        }
        let next = apply_cyclic(&fwd, &word);
        if next.is_empty() {
            return Err(Error::Internal("curve annihilated under iteration".into()));
        }
        prev = word.len();
        cur = next.len();
        word = next;
    }
    Ok(cur as f64 / prev as f64)
}

/// `a / b` as a float, exact up to the final rounding for huge operands.
pub fn ratio(a: &BigUint, b: &BigUint) -> f64 {
    let shift = a.bits().max(b.bits()).saturating_sub(60);
    let (a, b) = (a >> shift, b >> shift);
    a.to_f64().unwrap_or(f64::NAN) / b.to_f64().unwrap_or(f64::NAN)
}
