//! Bounded enumeration of positive factorizations of a fixed mapping class.
//!
//! Candidates are curves `g(c_S)` with `c_S` convex and `g` a short
//! half-twist word. Boundary-parallel factors are central, so they sit at
//! the front; the remaining slots are filled depth first and the last slot is
//! solved for by table lookup. Factorizations are compared in the lex normal
//! form of the partially commutative monoid spanned by disjoint curves.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::factorization::{half_twist_words, Factorization, MultiplicityProfile};
use crate::filling::{compare_invariants, h1, pair_intersection_estimate, FillingInvariants};
use crate::mcg::{Curve, MappingClass};
use crate::word::CyclicWord;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Longest half-twist word used to place a candidate curve.
    pub conjugator_bound: usize,
    /// Longest half-twist word tried when matching classes by global conjugation.
    pub dedupe_bound: usize,
    /// Worker threads; 0 means 1.
    pub workers: usize,
    /// Most prefixes the search may visit before giving up.
    pub candidate_ceiling: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { conjugator_bound: 2, dedupe_bound: 2, workers: 1, candidate_ceiling: 20_000_000 }
    }
}

/// Invariants of a factorization under global conjugation: the sorted
/// enclosed sets and the sorted traces `2 - z²` of the twist pairs, `z`
/// estimated from growth (`None` when the growth fits no twist pair).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    pub sets: Vec<Vec<usize>>,
    pub traces: Vec<Option<i64>>,
}

#[derive(Debug, Clone)]
pub struct FactorizationClass {
    pub representative: Factorization,
    pub signature: Signature,
    pub members_found: usize,
    /// Other classes with the same signature that no bounded conjugator
    /// identified with this one.
    pub possibly_equivalent: Vec<usize>,
}

/// Deterministic work counters of one enumeration.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub multisets: usize,
    pub candidate_curves: usize,
    pub prefixes: u64,
    pub factorizations_found: usize,
    pub conjugators: usize,
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    pub classes: Vec<FactorizationClass>,
    /// Index of the class containing the target, if the target was found.
    pub target_class: Option<usize>,
    pub stats: SearchStats,
}

#[derive(Debug, Clone)]
pub struct UniquenessReport {
    pub class_count: usize,
    pub all_invariants_equal: bool,
    pub invariants: Vec<FillingInvariants>,
    pub enumeration: Enumeration,
}

/// All multisets of nonempty subsets of `{1..n}` whose multiplicities and
/// joint multiplicities are exactly `p`, each sorted, in lexicographic order.
pub fn profile_multisets(p: &MultiplicityProfile) -> Vec<Vec<Vec<usize>>> {
    let n = p.n();
    if !p.is_consistent() || p.m.iter().any(|&x| x < 0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut rest = p.clone();
    let mut chosen = Vec::new();
    profile_rec(n, &mut rest, &mut chosen, &mut out);
    out
}

fn profile_rec(n: usize, rest: &mut MultiplicityProfile, chosen: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
    let Some(low) = (0..n).find(|&i| rest.m[i] > 0) else {
        if rest.j.iter().flatten().all(|&x| x == 0) {
            out.push(chosen.clone());
        }
        return;
    };
    // the next set covers `low`; the holes below it are exhausted
    let others: Vec<usize> = (low + 1..n).filter(|&i| rest.m[i] > 0 && rest.j[low][i] > 0).collect();
    let mut set = vec![low];
    extend_set(n, rest, &others, 0, &mut set, chosen, out);
}

/// Grows `set` by holes of `others[from..]` pairwise joined to it, and
/// recurses on every set reached.
fn extend_set(
    n: usize,
    rest: &mut MultiplicityProfile,
    others: &[usize],
    from: usize,
    set: &mut Vec<usize>,
    chosen: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    let as_holes: Vec<usize> = set.iter().map(|&i| i + 1).collect();
    let ordered = chosen.last().is_none_or(|last| last[0] != as_holes[0] || as_holes >= *last);
    if ordered {
        adjust(rest, set, -1);
        if feasible(rest) {
            chosen.push(as_holes);
            profile_rec(n, rest, chosen, out);
            chosen.pop();
        }
        adjust(rest, set, 1);
    }
    for (k, &i) in others.iter().enumerate().skip(from) {
        if set.iter().all(|&j| rest.j[i][j] > 0) {
            set.push(i);
            extend_set(n, rest, others, k + 1, set, chosen, out);
            set.pop();
        }
    }
}

/// No count went negative and no joint count exceeds a multiplicity.
fn feasible(p: &MultiplicityProfile) -> bool {
    (0..p.m.len()).all(|i| p.m[i] >= 0 && p.j[i].iter().enumerate().all(|(j, &x)| x >= 0 && (i == j || x <= p.m[i])))
}

fn adjust(p: &mut MultiplicityProfile, set: &[usize], d: i64) {
    for (a, &i) in set.iter().enumerate() {
        p.m[i] += d;
        for &j in &set[a + 1..] {
            p.j[i][j] += d;
            p.j[j][i] += d;
        }
    }
}

/// Distinct curves enclosing `set` reachable from the convex one by half-twist
/// words of length `<= bound`, keeping the shortest word per class.
pub fn enumerate_curves(n: usize, set: &[usize], bound: usize) -> Result<Vec<Curve>> {
    let convex = Curve::convex(n, set)?;
    if convex.is_boundary_parallel() || convex.is_outer_parallel() {
        return Ok(vec![convex]);
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for w in half_twist_words(n, bound) {
        let c = Curve::new(n, set, &w)?;
        if seen.insert(c.class().clone()) {
            out.push(c);
        }
    }
    Ok(out)
}

/// Sort key of a factor: boundary-parallel factors first.
fn curve_key(c: &Curve) -> (bool, &[usize], &CyclicWord) {
    (!c.is_boundary_parallel(), c.enclosed(), c.class())
}

fn cmp_curves(a: &Curve, b: &Curve) -> Ordering {
    curve_key(a).cmp(&curve_key(b))
}

/// Twists about `a` and `b` commute, i.e. the curves are disjoint.
pub fn curves_commute(a: &Curve, b: &Curve) -> Result<bool> {
    if a.is_boundary_parallel() || b.is_boundary_parallel() || a == b {
        return Ok(true);
    }
    let moved = a.twist().apply_word(b.representative())?;
    Ok(moved.cyclic_canonical() == *b.class())
}

/// Lexicographically least rearrangement of `f` by swaps of adjacent
/// commuting factors.
pub fn commutation_normal_form(f: &Factorization) -> Result<Factorization> {
    let mut rest: Vec<Curve> = f.curves().to_vec();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for i in 0..rest.len() {
            if let Some(b) = best {
                if cmp_curves(&rest[i], &rest[b]) != Ordering::Less {
                    continue;
                }
            }
            let mut free = true;
            for prior in &rest[..i] {
                if !curves_commute(prior, &rest[i])? {
                    free = false;
                    break;
                }
            }
            if free {
                best = Some(i);
            }
        }
        out.push(rest.remove(best.expect("the first factor is always free")));
    }
    Factorization::new(f.n(), out)
}

/// Distinct orderings of a sorted list.
fn distinct_orderings(sorted: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    let mut cur = sorted.to_vec();
    let mut out = vec![cur.clone()];
    loop {
        // next lexicographic permutation
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else { return out };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

struct Pool {
    curves: Vec<Curve>,
    twists: Vec<MappingClass>,
    by_set: BTreeMap<Vec<usize>, Vec<usize>>,
    lookup: HashMap<Vec<usize>, HashMap<MappingClass, usize>>,
    commute: Vec<Vec<bool>>,
}

impl Pool {
    fn new(n: usize, sets: &[Vec<usize>], bound: usize) -> Result<Pool> {
        let mut curves = Vec::new();
        for s in sets {
            curves.extend(enumerate_curves(n, s, bound)?);
        }
        curves.sort_by(cmp_curves);
        let twists: Vec<MappingClass> = curves.par_iter().map(Curve::twist).collect();
        let mut by_set: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        let mut lookup: HashMap<Vec<usize>, HashMap<MappingClass, usize>> = HashMap::new();
        for (i, c) in curves.iter().enumerate() {
            by_set.entry(c.enclosed().to_vec()).or_default().push(i);
            lookup.entry(c.enclosed().to_vec()).or_default().insert(twists[i].clone(), i);
        }
        let commute = (0..curves.len())
            .into_par_iter()
            .map(|i| {
                (0..curves.len())
                    .map(|j| {
                        let t = twists[i].apply_word(curves[j].representative())?;
                        Ok(i == j || curves[i].is_boundary_parallel() || t.cyclic_canonical() == *curves[j].class())
                    })
                    .collect::<Result<Vec<bool>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Pool { curves, twists, by_set, lookup, commute })
    }

    /// Adjacent commuting factors must appear in increasing order.
    fn allowed(&self, prev: Option<usize>, next: usize) -> bool {
        match prev {
            Some(p) => !(self.commute[p][next] && next < p),
            None => true,
        }
    }
}

/// A job: one ordering of the non-boundary sets and one curve for its first slot.
struct Job {
    singletons: Vec<usize>,
    order: Vec<Vec<usize>>,
    first: Option<usize>,
}

fn run_job(pool: &Pool, psi: &MappingClass, job: &Job, out: &mut Vec<Vec<usize>>) -> Result<u64> {
    let mut visited = 0u64;
    let order = &job.order;
    if order.is_empty() {
        if psi.is_identity() && psi.framing().iter().all(|&x| x == 0) {
            out.push(job.singletons.clone());
        }
        return Ok(1);
    }
    let mut stack: Vec<usize> = Vec::new();
    let mut prefix = vec![MappingClass::identity(psi.n())];
    if let Some(first) = job.first {
        stack.push(first);
        prefix.push(pool.twists[first].clone());
    }
    dfs(pool, psi, order, &job.singletons, &mut stack, &mut prefix, out, &mut visited)?;
    Ok(visited)
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    pool: &Pool,
    psi: &MappingClass,
    order: &[Vec<usize>],
    singletons: &[usize],
    stack: &mut Vec<usize>,
    prefix: &mut Vec<MappingClass>,
    out: &mut Vec<Vec<usize>>,
    visited: &mut u64,
) -> Result<()> {
    *visited += 1;
    let slot = stack.len();
    if slot + 1 == order.len() {
        let need = prefix[slot].invert().compose(psi)?;
        if let Some(&c) = pool.lookup.get(&order[slot]).and_then(|m| m.get(&need)) {
            if pool.allowed(stack.last().copied(), c) {
                let mut f = singletons.to_vec();
                f.extend(stack.iter().copied());
                f.push(c);
                out.push(f);
            }
        }
        return Ok(());
    }
    for &c in &pool.by_set[&order[slot]] {
        if !pool.allowed(stack.last().copied(), c) {
            continue;
        }
        let next = prefix[slot].compose(&pool.twists[c])?;
        stack.push(c);
        prefix.push(next);
        dfs(pool, psi, order, singletons, stack, prefix, out, visited)?;
        stack.pop();
        prefix.pop();
    }
    Ok(())
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }

    /// Joins the classes, keeping the smaller root so results do not depend
    /// on the order edges are found in.
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.0[hi] = lo;
    }
}

/// Signature of one factorization.
pub fn signature(f: &Factorization) -> Result<Signature> {
    let mut sets: Vec<Vec<usize>> = f.curves().iter().map(|c| c.enclosed().to_vec()).collect();
    sets.sort();
    let mut traces = Vec::new();
    let cs = f.curves();
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            let z = if curves_commute(&cs[i], &cs[j])? { Some(0) } else { pair_intersection_estimate(&cs[i], &cs[j])? };
            traces.push(z.map(|z| 2 - z * z));
        }
    }
    traces.sort();
    Ok(Signature { sets, traces })
}

fn complexity(f: &Factorization) -> (usize, String) {
    (f.curves().iter().map(|c| c.conjugator().len()).sum(), f.to_string())
}

/// Pure mapping classes tried as global conjugators: pure half-twist words up
/// to `bound` and the twists about candidate curves placed by such words.
fn conjugators(n: usize, bound: usize, pool: &Pool) -> Result<Vec<MappingClass>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for w in half_twist_words(n, bound).iter().skip(1) {
        let g = MappingClass::from_braid_word(n, w)?;
        if g.is_pure() && seen.insert(g.clone()) {
            out.push(g);
        }
    }
    for (c, t) in pool.curves.iter().zip(&pool.twists) {
        if !c.is_boundary_parallel() && c.conjugator().len() <= bound {
            for g in [t.clone(), t.invert()] {
                if seen.insert(g.clone()) {
                    out.push(g);
                }
            }
        }
    }
    Ok(out)
}

fn in_pool(threads: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))
}

/// All positive factorizations of `product(target)` with the target's
/// multiplicity profile and factors within `cfg.conjugator_bound`, grouped
/// into classes up to Hurwitz moves and global conjugation.
pub fn enumerate_factorizations(target: &Factorization, cfg: &SearchConfig) -> Result<Enumeration> {
    if target.is_empty() {
        return Err(Error::InvalidArgument("target factorization is empty".into()));
    }
    in_pool(cfg.workers)?.install(|| enumerate_inner(target, cfg))
}

fn enumerate_inner(target: &Factorization, cfg: &SearchConfig) -> Result<Enumeration> {
    let n = target.n();
    let phi = target.product();
    let multisets = profile_multisets(&target.multiplicity_profile());
    let mut stats = SearchStats { multisets: multisets.len(), ..Default::default() };

    let mut all_sets: Vec<Vec<usize>> = multisets.iter().flatten().cloned().collect();
    all_sets.sort();
    all_sets.dedup();
    let pool = Pool::new(n, &all_sets, cfg.conjugator_bound)?;
    stats.candidate_curves = pool.curves.len();

    let mut jobs = Vec::new();
    let mut psis = Vec::new();
    let mut budget = 0u64;
    for ms in &multisets {
        let (single, other): (Vec<Vec<usize>>, Vec<Vec<usize>>) = ms.iter().cloned().partition(|s| s.len() == 1);
        let singletons: Vec<usize> = single.iter().map(|s| pool.by_set[s][0]).collect();
        let mut psi = MappingClass::identity(n);
        for &s in singletons.iter().rev() {
            psi = pool.twists[s].invert().compose(&psi)?;
        }
        let psi = psi.compose(&phi)?;
        let pi = psis.len();
        psis.push(psi);
        for order in distinct_orderings(&other) {
            let width: u64 = order.iter().rev().skip(1).map(|s| pool.by_set[s].len() as u64).product();
            budget = budget.saturating_add(width);
            if budget > cfg.candidate_ceiling {
                return Err(Error::ResourceLimit {
                    what: "factorization search prefixes".into(),
                    limit: cfg.candidate_ceiling,
                    progress: format!("{budget} prefixes planned over {} candidate curves", pool.curves.len()),
                });
            }
            if order.len() >= 2 {
                for &c in &pool.by_set[&order[0]] {
                    jobs.push((pi, Job { singletons: singletons.clone(), order: order.clone(), first: Some(c) }));
                }
            } else {
                jobs.push((pi, Job { singletons: singletons.clone(), order, first: None }));
            }
        }
    }

    let results: Vec<(u64, Vec<Vec<usize>>)> = jobs
        .par_iter()
        .map(|(pi, job)| {
            let mut out = Vec::new();
            let v = run_job(&pool, &psis[*pi], job, &mut out)?;
            Ok((v, out))
        })
        .collect::<Result<_>>()?;
    stats.prefixes = results.iter().map(|r| r.0).sum();

    let raw: Vec<Factorization> = results
        .into_iter()
        .flat_map(|r| r.1)
        .map(|ix| Factorization::new(n, ix.into_iter().map(|i| pool.curves[i].clone()).collect()))
        .collect::<Result<_>>()?;
    let normal: Vec<Factorization> = raw.par_iter().map(commutation_normal_form).collect::<Result<_>>()?;
    let mut found: Vec<Factorization> = normal;
    found.sort_by_cached_key(complexity);
    found.dedup();
    for f in &found {
        debug_assert!(f.product() == phi);
    }
    stats.factorizations_found = found.len();
    let index: HashMap<&Factorization, usize> = found.iter().enumerate().map(|(i, f)| (f, i)).collect();

    let conj = conjugators(n, cfg.dedupe_bound, &pool)?;
    stats.conjugators = conj.len();
    // edges from Hurwitz moves and global conjugations that stay in the found set
    let edges: Vec<Vec<usize>> = found
        .par_iter()
        .map(|f| {
            let mut e = Vec::new();
            for i in 1..f.len() {
                let g = commutation_normal_form(&f.hurwitz_move(i)?)?;
                e.extend(index.get(&g).copied());
            }
            for g in &conj {
                let h = commutation_normal_form(&f.global_conjugate(g)?)?;
                e.extend(index.get(&h).copied());
            }
            Ok(e)
        })
        .collect::<Result<_>>()?;
    let mut uf = UnionFind((0..found.len()).collect());
    for (i, e) in edges.iter().enumerate() {
        for &j in e {
            uf.union(i, j);
        }
    }

    // components in order of their least member, which is the representative
    let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..found.len() {
        let r = uf.find(i);
        comps.entry(r).or_default().push(i);
    }
    let reps: Vec<usize> = comps.keys().copied().collect();
    let sigs: Vec<Signature> = reps.par_iter().map(|&r| signature(&found[r])).collect::<Result<_>>()?;
    let mut classes: Vec<FactorizationClass> = reps
        .iter()
        .zip(&sigs)
        .map(|(&r, s)| FactorizationClass {
            representative: found[r].clone(),
            signature: s.clone(),
            members_found: comps[&r].len(),
            possibly_equivalent: Vec::new(),
        })
        .collect();

    // same signature, different components: try the conjugator that carries
    // one representative's first non-boundary curve onto the other's
    let mut merged: Vec<Option<usize>> = vec![None; classes.len()];
    for a in 0..classes.len() {
        for b in a + 1..classes.len() {
            if merged[b].is_some() || classes[a].signature != classes[b].signature {
                continue;
            }
            if let Some(_f) = matching_conjugator(&classes[a].representative, &classes[b].representative)? {
                merged[b] = Some(merged[a].unwrap_or(a));
            }
        }
    }
    let mut remap = vec![0; classes.len()];
    let mut kept = Vec::new();
    for (i, c) in classes.iter().enumerate() {
        match merged[i] {
            Some(into) => {
                remap[i] = remap[into];
                let extra = c.members_found;
                let k: &mut FactorizationClass = &mut kept[remap[into]];
                k.members_found += extra;
            }
            None => {
                remap[i] = kept.len();
                kept.push(c.clone());
            }
        }
    }
    classes = kept;
    for a in 0..classes.len() {
        classes[a].possibly_equivalent =
            (0..classes.len()).filter(|&b| b != a && classes[b].signature == classes[a].signature).collect();
    }

    let target_nf = commutation_normal_form(target)?;
    let target_class = index.get(&target_nf).map(|&i| remap[reps.iter().position(|&r| r == uf.find(i)).expect("root")]);
    Ok(Enumeration { classes, target_class, stats })
}

/// A pure mapping class `f` with `f(a) = b` factor by factor, built from the
/// placing braids of the first non-boundary factors, if one exists.
fn matching_conjugator(a: &Factorization, b: &Factorization) -> Result<Option<MappingClass>> {
    let first = |f: &Factorization| f.curves().iter().position(|c| !c.is_boundary_parallel());
    let (Some(i), Some(j)) = (first(a), first(b)) else { return Ok(None) };
    let (ca, cb) = (&a.curves()[i], &b.curves()[j]);
    if ca.base() != cb.base() {
        return Ok(None);
    }
    let f = cb.conjugator_map().compose(&ca.conjugator_map().invert())?;
    if !f.is_pure() {
        return Ok(None);
    }
    let moved = commutation_normal_form(&a.global_conjugate(&f)?)?;
    Ok((moved == commutation_normal_form(b)?).then_some(f))
}

/// Enumerates classes and compares their filling invariants.
pub fn verify_unique_filling(target: &Factorization, cfg: &SearchConfig) -> Result<UniquenessReport> {
    let enumeration = enumerate_factorizations(target, cfg)?;
    let invariants: Vec<FillingInvariants> = enumeration.classes.iter().map(|c| h1(&c.representative)).collect();
    let all_invariants_equal = invariants.windows(2).all(|w| compare_invariants(&w[0], &w[1]));
    Ok(UniquenessReport { class_count: enumeration.classes.len(), all_invariants_equal, invariants, enumeration })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(n: usize, sets: &[&[usize]]) -> MultiplicityProfile {
        MultiplicityProfile::from_sets(n, sets.iter().copied())
    }

    #[test]
    fn base_case_profile_has_one_multiset() {
        let p = profile(3, &[&[1, 2], &[1, 2]]);
        assert_eq!(profile_multisets(&p), vec![vec![vec![1, 2], vec![1, 2]]]);
        let single = profile(4, &[&[1]]);
        assert_eq!(profile_multisets(&single), vec![vec![vec![1]]]);
    }

    #[test]
    fn profile_multisets_brute_force() {
        // every multiset of at most three subsets of {1,2,3} is recovered from its profile
        let subsets: Vec<Vec<usize>> =
            (1u32..8).map(|m| (1..=3).filter(|i| m >> (i - 1) & 1 == 1).collect()).collect();
        let mut all: Vec<Vec<Vec<usize>>> = vec![vec![]];
        for _ in 0..3 {
            let mut next = Vec::new();
            for ms in &all {
                let start = ms.last().map_or(0, |l| subsets.iter().position(|s| s == l).unwrap());
                for s in &subsets[start..] {
                    let mut m = ms.clone();
                    m.push(s.clone());
                    next.push(m);
                }
            }
            all.extend(next.clone());
            all.dedup();
            all = {
                let mut a = all.clone();
                a.sort();
                a.dedup();
                a
            };
        }
        let by_profile = |ms: &Vec<Vec<usize>>| profile(3, &ms.iter().map(|s| s.as_slice()).collect::<Vec<_>>());
        for ms in all.iter().filter(|m| !m.is_empty()) {
            let p = by_profile(ms);
            let got = profile_multisets(&p);
            let mut sorted = ms.clone();
            sorted.sort();
            assert!(got.contains(&sorted), "{ms:?}");
            for g in &got {
                assert_eq!(by_profile(g), p);
            }
        }
    }

    #[test]
    fn curve_enumeration_counts() {
        assert_eq!(enumerate_curves(4, &[2], 3).unwrap().len(), 1);
        assert_eq!(enumerate_curves(3, &[1, 2], 0).unwrap().len(), 1);
        assert!(enumerate_curves(3, &[1, 2], 2).unwrap().len() > 1);
    }

    #[test]
    fn commuting_boundary_twists_form_one_class() {
        let t = Factorization::convex(2, &[&[1], &[2]]).unwrap();
        let e = enumerate_factorizations(&t, &SearchConfig { conjugator_bound: 0, ..Default::default() }).unwrap();
        assert_eq!(e.classes.len(), 1);
        assert_eq!(e.target_class, Some(0));
    }

    #[test]
    fn normal_form_is_order_independent() {
        let a = Factorization::convex(4, &[&[1, 2], &[3, 4], &[2]]).unwrap();
        let b = Factorization::convex(4, &[&[3, 4], &[2], &[1, 2]]).unwrap();
        assert_eq!(commutation_normal_form(&a).unwrap(), commutation_normal_form(&b).unwrap());
        let c = Factorization::convex(3, &[&[2, 3], &[1, 2]]).unwrap();
        assert_eq!(commutation_normal_form(&c).unwrap(), c);
    }

    #[test]
    fn orderings() {
        let v = vec![vec![1], vec![1], vec![2]];
        assert_eq!(distinct_orderings(&v).len(), 3);
    }
}
