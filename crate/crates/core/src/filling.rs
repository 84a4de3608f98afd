//! Homological invariants of the Lefschetz fibration built from a positive
//! factorization, and the monodromy families it is compared on.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::factorization::{half_twist_words, Factorization};
use crate::mcg::{BraidWord, Curve};
use crate::pa_cert::{growth_estimate, z_from_stretch};

type SecondCurveCache = Mutex<HashMap<(usize, Vec<usize>, Vec<usize>), BraidWord>>;

/// `χ` and `H_1` of the filling. The 2-handles are attached along the factor
/// curves, so `H_1` is `ℤ^n` modulo the curves' homology classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FillingInvariants {
    pub euler: i64,
    pub h1_rank: usize,
    /// Invariant factors greater than one, ascending and dividing each other.
    pub h1_torsion: Vec<BigUint>,
    pub relation_matrix: Vec<Vec<i64>>,
}

/// Diagonal of the Smith normal form of `rows`, without trailing zeros.
/// Pivots are chosen by least magnitude, which keeps entries small.
#[allow(clippy::needless_range_loop)]
pub fn smith_diagonal(rows: &[Vec<i64>]) -> Vec<BigUint> {
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        let pivot = (t..nrows)
            .flat_map(|i| (t..ncols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()));
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..nrows {
                let q = &a[i][t] / &p;
                if !q.is_zero() {
                    for j in t..ncols {
                        let d = &q * &a[t][j];
                        a[i][j] -= d;
                    }
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..ncols {
                let q = &a[t][j] / &p;
                if !q.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        let d = &q * &row[t];
                        row[j] -= d;
                    }
                }
                clean &= a[t][j].is_zero();
            }
            if clean {
                // the pivot must divide the rest of the block
                let bad = (t + 1..nrows)
                    .flat_map(|i| (t + 1..ncols).map(move |j| (i, j)))
                    .find(|&(i, j)| !(&a[i][j] % &p).is_zero());
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..ncols {
                            let v = a[i][j].clone();
                            a[t][j] += v;
                        }
                        continue;
                    }
                }
            }
            // a smaller remainder appeared in the pivot row or column
            let (mi, mj) = (t..nrows)
                .map(|i| (i, t))
                .chain((t..ncols).map(|j| (t, j)))
                .filter(|&(i, j)| !a[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()))
                .expect("pivot is nonzero");
            a.swap(t, mi);
            for row in a.iter_mut() {
                row.swap(t, mj);
            }
        }
        diag.push(a[t][t].magnitude().clone());
        t += 1;
    }
    diag
}

/// `χ(X) = 1 - n + (number of 2-handles)`.
pub fn euler_characteristic(f: &Factorization) -> i64 {
    f.euler_characteristic()
}

pub fn h1(f: &Factorization) -> FillingInvariants {
    let relation_matrix: Vec<Vec<i64>> = f.curves().iter().map(Curve::indicator).collect();
    let diag = smith_diagonal(&relation_matrix);
    FillingInvariants {
        euler: euler_characteristic(f),
        h1_rank: f.n() - diag.len(),
        h1_torsion: diag.into_iter().filter(|d| *d > BigUint::from(1u32)).collect(),
        relation_matrix,
    }
}

/// Equality of `χ`, rank and torsion. The relation matrices may differ.
pub fn compare_invariants(a: &FillingInvariants, b: &FillingInvariants) -> bool {
    a.euler == b.euler && a.h1_rank == b.h1_rank && a.h1_torsion == b.h1_torsion
}

/// Longest conjugator tried when placing the second monodromy curve.
pub const B2_SEARCH_BOUND: usize = 4;
const B2_INTERSECTION: i64 = 4;
const FINGERPRINT_ITERS: usize = 8;
const FINGERPRINT_LEN: usize = 1 << 18;

/// Rough stretch factor of `τ_a τ_b`, read off the growth of `a`.
pub fn pair_stretch_estimate(a: &Curve, b: &Curve) -> Result<f64> {
    let f = a.twist().compose(&b.twist())?;
    growth_estimate(&f, a, FINGERPRINT_ITERS, FINGERPRINT_LEN)
}

/// `z` with `stretch_from_z(z)` matching the pair's growth, 2 for a
/// commuting or non-filling pair whose growth is subexponential, `None` if the
/// growth matches no twist pair.
pub fn pair_intersection_estimate(a: &Curve, b: &Curve) -> Result<Option<i64>> {
    let lambda = pair_stretch_estimate(a, b)?;
    if lambda < 1.5 {
        return Ok(Some(2));
    }
    Ok(z_from_stretch(lambda).ok())
}

/// The second monodromy curve: the shortest conjugate of the convex curve
/// around `b2`, in the order of [`half_twist_words`], whose twist pair with
/// `b1` has stretch factor `7 + 4√3`.
pub fn second_curve(n: usize, b1: &Curve, b2: &[usize]) -> Result<Curve> {
    static CACHE: OnceLock<SecondCurveCache> = OnceLock::new();
    let key = (n, b1.enclosed().to_vec(), b2.to_vec());
    let cache = CACHE.get_or_init(Default::default);
    if let Some(w) = cache.lock().expect("cache poisoned").get(&key) {
        return Curve::new(n, b2, w);
    }
    let convex = Curve::convex(n, b2)?;
    let mut seen = std::collections::HashSet::new();
    for w in half_twist_words(n, B2_SEARCH_BOUND) {
        let c = Curve::new(n, b2, &w)?;
        if c == convex || !seen.insert(c.class().clone()) {
            continue;
        }
        if pair_intersection_estimate(b1, &c)? == Some(B2_INTERSECTION) {
            cache.lock().expect("cache poisoned").insert(key, w);
            return Ok(c);
        }
    }
    Err(Error::ResourceLimit {
        what: "second monodromy curve search".into(),
        limit: B2_SEARCH_BOUND as u64,
        progress: format!("{} conjugates tried", seen.len()),
    })
}

/// Enclosed sets of the two monodromy curves on `D_{n+p+q}`.
pub fn family_sets(n: usize, k: usize, p: usize, q: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    if n == 0 || k == 0 || p == 0 || q == 0 || k > n {
        return Err(Error::InvalidArgument(format!(
            "family needs n,k,p,q >= 1 and k <= n, got n={n} k={k} p={p} q={q}"
        )));
    }
    let b1: Vec<usize> = (k..=n + q).collect();
    let mut b2: Vec<usize> = (1..k + q).collect();
    b2.push(n + q);
    Ok((b1, b2))
}

/// `τ_1^{m_1} ... τ_{n+p+q}^{m_{n+p+q}} τ_{B_1} τ_{B_2}` on `D_{n+p+q}`, with
/// `m` indexed from hole 1. The hole `n+q` lies in both monodromy curves and
/// carries no boundary twist, so `m_{n+q}` must be zero.
pub fn filling_family(n: usize, k: usize, p: usize, q: usize, m: &[u32]) -> Result<Factorization> {
    let (b1, b2) = family_sets(n, k, p, q)?;
    let size = n + p + q;
    if m.len() != size {
        return Err(Error::InvalidArgument(format!("expected {size} exponents, got {}", m.len())));
    }
    if m[n + q - 1] != 0 {
        return Err(Error::InvalidArgument(format!("exponent of hole {} must be 0", n + q)));
    }
    let mut f = Factorization::empty(size);
    for (i, &e) in m.iter().enumerate() {
        let c = Curve::convex(size, &[i + 1])?;
        for _ in 0..e {
            f.push(c.clone())?;
        }
    }
    let c1 = Curve::convex(size, &b1)?;
    let c2 = second_curve(size, &c1, &b2)?;
    f.push(c1)?;
    f.push(c2)?;
    Ok(f)
}

/// The twist-knot family: `q = 1`, exponent 1 at hole `k` and at holes
/// `n+2..=n+p+1`, and `m_i >= 1` elsewhere. `m` lists the exponents of holes
/// `1..=n`; its entry at `k` must be 1.
pub fn twist_knot_family(p: usize, n: usize, k: usize, m: &[u32]) -> Result<Factorization> {
    if m.len() != n {
        return Err(Error::InvalidArgument(format!("expected {n} exponents, got {}", m.len())));
    }
    if k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("k must lie in 1..={n}, got {k}")));
    }
    if m[k - 1] != 1 {
        return Err(Error::InvalidArgument(format!("exponent at hole {k} must be 1")));
    }
    if let Some(i) = m.iter().position(|&e| e == 0) {
        return Err(Error::InvalidArgument(format!("exponent at hole {} must be at least 1", i + 1)));
    }
    let mut full = m.to_vec();
    full.push(0);
    full.extend(std::iter::repeat_n(1, p));
    filling_family(n, k, p, 1, &full)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn det(m: &[Vec<i64>]) -> BigInt {
        // cofactor expansion; only used on tiny matrices
        if m.is_empty() {
            return BigInt::from(1);
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                BigInt::from(s * m[0][j]) * det(&minor)
            })
            .sum()
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        (0..n)
            .flat_map(|last| subsets(last, k - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            }))
            .collect()
    }

    fn gcd(a: BigInt, b: BigInt) -> BigInt {
        if b.is_zero() {
            a.abs()
        } else {
            let r = &a % &b;
            gcd(b, r)
        }
    }

    /// Determinantal divisors: `d_k` is the gcd of all `k×k` minors.
    fn determinantal_divisors(m: &[Vec<i64>]) -> Vec<BigInt> {
        let (r, c) = (m.len(), m[0].len());
        let mut out = Vec::new();
        for k in 1..=r.min(c) {
            let mut g = BigInt::zero();
            for rs in subsets(r, k) {
                for cs in subsets(c, k) {
                    let sub: Vec<Vec<i64>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
                    g = gcd(g, det(&sub));
                }
            }
            if g.is_zero() {
                break;
            }
            out.push(g);
        }
        out
    }

    #[test]
    fn smith_matches_determinantal_divisors() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let r = rng.gen_range(1..=4);
            let c = rng.gen_range(1..=4);
            let m: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-6..=6)).collect()).collect();
            let diag = smith_diagonal(&m);
            let dd = determinantal_divisors(&m);
            assert_eq!(diag.len(), dd.len(), "{m:?}");
            let mut prod = BigInt::from(1);
            for (k, d) in diag.iter().enumerate() {
                if k > 0 {
                    assert!((d % &diag[k - 1]).is_zero(), "divisibility {m:?}");
                }
                prod *= BigInt::from(d.clone());
                assert_eq!(prod, dd[k], "{m:?}");
            }
        }
    }

    #[test]
    fn small_h1_examples() {
        let f = Factorization::convex(2, &[&[1], &[1, 2]]).unwrap();
        let inv = h1(&f);
        assert_eq!((inv.h1_rank, inv.h1_torsion.len()), (0, 0));
        let f = Factorization::convex(1, &[&[1], &[1]]).unwrap();
        assert_eq!((h1(&f).h1_rank, h1(&f).h1_torsion.len()), (0, 0));
        assert_eq!(euler_characteristic(&Factorization::empty(4)), -3);
        assert_eq!(h1(&Factorization::empty(3)).h1_rank, 3);
        let twice = smith_diagonal(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(twice, vec![BigUint::from(1u32), BigUint::from(6u32)]);
    }

    #[test]
    fn d5_rows_have_trivial_h1() {
        let f = Factorization::convex(5, &[&[1], &[2], &[3], &[5], &[2, 3, 4], &[1, 2, 4]]).unwrap();
        let inv = h1(&f);
        assert_eq!(inv.euler, 2);
        assert_eq!(inv.h1_rank, 0);
        assert!(inv.h1_torsion.is_empty());
    }

    #[test]
    fn base_case_pair_has_z_four() {
        let f = filling_family(1, 1, 1, 1, &[0, 0, 0]).unwrap();
        assert_eq!(f.n(), 3);
        assert_eq!(f.len(), 2);
        assert_eq!(f.curves()[0].enclosed(), &[1, 2]);
        assert_eq!(f.curves()[1].enclosed(), &[1, 2]);
        assert_ne!(f.curves()[0], f.curves()[1]);
        assert_eq!(pair_intersection_estimate(&f.curves()[0], &f.curves()[1]).unwrap(), Some(4));
        assert_eq!(euler_characteristic(&f), 0);
    }

    #[test]
    fn d5_instance_sets() {
        let f = filling_family(3, 2, 1, 1, &[1, 1, 1, 0, 1]).unwrap();
        let sets: Vec<&[usize]> = f.curves().iter().map(|c| c.enclosed()).collect();
        assert_eq!(sets, vec![&[1][..], &[2], &[3], &[5], &[2, 3, 4], &[1, 2, 4]]);
        let inv = h1(&f);
        assert_eq!((inv.euler, inv.h1_rank), (2, 0));
    }

    #[test]
    fn twist_knot_instances() {
        let f = twist_knot_family(1, 1, 1, &[1]).unwrap();
        let sets: Vec<&[usize]> = f.curves().iter().map(|c| c.enclosed()).collect();
        assert_eq!(sets, vec![&[1][..], &[3], &[1, 2], &[1, 2]]);
        let f = twist_knot_family(1, 2, 1, &[1, 1]).unwrap();
        assert_eq!(f.n(), 4);
        assert!(twist_knot_family(1, 2, 1, &[1, 0]).is_err());
        assert!(twist_knot_family(1, 2, 2, &[1, 2]).is_err());
    }

    #[test]
    fn parameter_errors() {
        assert!(filling_family(1, 2, 1, 1, &[0; 3]).is_err());
        assert!(filling_family(1, 1, 0, 1, &[0; 2]).is_err());
        assert!(filling_family(1, 1, 1, 1, &[0; 2]).is_err());
        assert!(filling_family(1, 1, 1, 1, &[0, 1, 0]).is_err());
    }
}
