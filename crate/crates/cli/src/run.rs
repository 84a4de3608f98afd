//! Command execution and output documents.

use num_to_json::big;
use planar_mcg::archive::FactorizationRecord;
use planar_mcg::factorization::{convex_sets_disjoint, verify_relation_lantern, Factorization, MultiplicityProfile};
use planar_mcg::filling::{family_sets, h1, filling_family, FillingInvariants};
use planar_mcg::pa_cert::{growth_lengths, ratio, stretch_from_z, z_from_stretch};
use planar_mcg::search::{
    curves_commute, enumerate_factorizations, profile_multisets, verify_unique_filling, Enumeration, SearchConfig,
};
use planar_mcg::{Curve, Error};
use serde_json::{json, Map, Value};

use crate::dsl::{Command, Program, TwistExpr};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flags {
    pub bound: usize,
    pub dedupe_bound: usize,
    pub threads: usize,
    pub iters: usize,
    pub seed_set: Option<Vec<usize>>,
    pub ceiling: u64,
}

impl Default for Flags {
    fn default() -> Self {
        Flags { bound: 2, dedupe_bound: 2, threads: 1, iters: 20, seed_set: None, ceiling: 20_000_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Failure {
    Input,
    ResourceLimit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunError {
    pub kind: Failure,
    pub message: String,
}

impl RunError {
    pub fn input(message: impl Into<String>) -> Self {
        RunError { kind: Failure::Input, message: message.into() }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind {
            Failure::Input => 1,
            Failure::ResourceLimit => 2,
        }
    }
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        let kind = match e {
            Error::ResourceLimit { .. } => Failure::ResourceLimit,
            _ => Failure::Input,
        };
        RunError { kind, message: e.to_string() }
    }
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

mod num_to_json {
    use num_bigint::BigUint;
    use serde_json::Value;

    /// A number when it fits in `u64`, a decimal string otherwise.
    pub fn big(v: &BigUint) -> Value {
        match u64::try_from(v) {
            Ok(x) => Value::from(x),
            Err(_) => Value::from(v.to_string()),
        }
    }
}

/// Parses a seed set written `{1,2}` or `1,2`.
pub fn parse_seed_set(text: &str) -> Result<Vec<usize>, RunError> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    inner
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| RunError::input(format!("bad seed set {text:?}"))))
        .collect()
}

fn profile_json(p: &MultiplicityProfile) -> Value {
    json!({ "M": p.m, "J": p.joint_map() })
}

fn factors_json(f: &Factorization) -> Value {
    Value::from(f.curves().iter().map(|c| TwistExpr::from_curve(c).to_string()).collect::<Vec<_>>())
}

fn archive_json(f: &Factorization) -> Value {
    serde_json::to_value(FactorizationRecord::from(f)).expect("records always serialize")
}

fn invariants_json(inv: &FillingInvariants) -> Value {
    json!({
        "euler": inv.euler,
        "h1_rank": inv.h1_rank,
        "h1_torsion": inv.h1_torsion.iter().map(big).collect::<Vec<_>>(),
        "relation_matrix": inv.relation_matrix,
    })
}

fn classes_json(e: &Enumeration) -> Value {
    let classes: Vec<Value> = e
        .classes
        .iter()
        .map(|c| {
            json!({
                "representative": factors_json(&c.representative),
                "archive": archive_json(&c.representative),
                "signature": { "sets": c.signature.sets, "traces": c.signature.traces },
                "members_found": c.members_found,
                "possibly_equivalent": c.possibly_equivalent,
            })
        })
        .collect();
    Value::from(classes)
}

fn stats_json(e: &Enumeration) -> Value {
    let s = &e.stats;
    json!({
        "multisets": s.multisets,
        "candidate_curves": s.candidate_curves,
        "prefixes": s.prefixes,
        "factorizations_found": s.factorizations_found,
        "conjugators": s.conjugators,
    })
}

fn search_config(flags: &Flags) -> SearchConfig {
    SearchConfig {
        conjugator_bound: flags.bound,
        dedupe_bound: flags.dedupe_bound,
        workers: flags.threads,
        candidate_ceiling: flags.ceiling,
    }
}

fn family_program(program: &Program, args: &crate::dsl::FamilyArgs) -> Result<(Factorization, Value), RunError> {
    if !program.monodromy.is_empty() {
        return Err(RunError::input("family builds its own monodromy; remove the twists"));
    }
    let size = args.n + args.p + args.q;
    if program.surface_size != size {
        return Err(RunError::input(format!("family({},{},{},{}) lives on surface({size})", args.n, args.k, args.p, args.q)));
    }
    let m = if args.m.is_empty() {
        (1..=size).map(|i| u32::from(i != args.n + args.q)).collect()
    } else {
        args.m.clone()
    };
    let f = filling_family(args.n, args.k, args.p, args.q, &m)?;
    let (b1, b2) = family_sets(args.n, args.k, args.p, args.q)?;
    let mut expected: Vec<Vec<usize>> = m
        .iter()
        .enumerate()
        .flat_map(|(i, &e)| std::iter::repeat_n(vec![i + 1], e as usize))
        .chain([b1, b2])
        .collect();
    expected.sort();
    let profile = f.multiplicity_profile();
    let found = profile_multisets(&profile).contains(&expected);
    let results = json!({
        "factorization": factors_json(&f),
        "archive": archive_json(&f),
        "profile": profile_json(&profile),
        "expected_multiset_found": found,
        "exponents": m,
    });
    Ok((f, results))
}

/// Runs `program`, returning the output document.
pub fn run(program: &Program, flags: &Flags) -> Result<Value, RunError> {
    let n = program.surface_size;
    let mut f = program.factorization()?;
    let mut counters = Map::new();
    let results = match &program.command {
        Command::Product => {
            let phi = f.product();
            json!({
                "images": phi.images().iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                "framing": phi.framing(),
                "permutation": phi.permutation().iter().map(|i| i + 1).collect::<Vec<_>>(),
                "is_identity": phi.is_identity() && phi.framing().iter().all(|&x| x == 0),
            })
        }
        Command::Mult => profile_json(&f.multiplicity_profile()),
        Command::RelationsCheck => {
            let cs = f.curves();
            let mut pairs = Vec::new();
            let mut consistent = true;
            for i in 0..cs.len() {
                for j in i + 1..cs.len() {
                    let commute = curves_commute(&cs[i], &cs[j])?;
                    let convex = cs[i].conjugator().is_empty() && cs[j].conjugator().is_empty();
                    let expected = convex.then(|| convex_sets_disjoint(cs[i].enclosed(), cs[j].enclosed()));
                    consistent &= expected.is_none_or(|e| e == commute);
                    pairs.push(json!({ "i": i + 1, "j": j + 1, "commute": commute, "disjoint_convex": expected }));
                }
            }
            let lantern = match cs {
                [a, b, c] if pairwise_disjoint(&[a.enclosed(), b.enclosed(), c.enclosed()]) => {
                    let w = verify_relation_lantern(n, a.enclosed(), b.enclosed(), c.enclosed(), flags.bound)?;
                    counters.insert("lantern_words_tried".into(), w.words_tried.into());
                    json!({
                        "holds": w.holds,
                        "ac_curve": w.ac_curve.as_ref().map(|c| TwistExpr::from_curve(c).to_string()),
                    })
                }
                _ => Value::Null,
            };
            json!({ "pairs": pairs, "commutation_consistent": consistent, "lantern": lantern })
        }
        Command::Hurwitz(i) => {
            let g = f.hurwitz_move(*i)?;
            json!({
                "factorization": factors_json(&g),
                "archive": archive_json(&g),
                "product_preserved": g.product() == f.product(),
            })
        }
        Command::Enumerate => {
            let e = enumerate_factorizations(&f, &search_config(flags))?;
            counters = stats_json(&e).as_object().cloned().unwrap_or_default();
            json!({ "class_count": e.classes.len(), "target_class": e.target_class, "classes": classes_json(&e) })
        }
        Command::VerifyUnique => {
            let r = verify_unique_filling(&f, &search_config(flags))?;
            counters = stats_json(&r.enumeration).as_object().cloned().unwrap_or_default();
            json!({
                "class_count": r.class_count,
                "all_invariants_equal": r.all_invariants_equal,
                "invariants": r.invariants.iter().map(invariants_json).collect::<Vec<_>>(),
                "target_class": r.enumeration.target_class,
                "classes": classes_json(&r.enumeration),
            })
        }
        Command::Stretch => {
            let seed = match &flags.seed_set {
                Some(s) => Curve::convex(n, s)?,
                None => f
                    .curves()
                    .iter()
                    .find(|c| !c.is_boundary_parallel() && !c.is_outer_parallel())
                    .cloned()
                    .ok_or_else(|| RunError::input("no essential factor to seed the growth; pass --seed-set"))?,
            };
            if flags.iters < 2 {
                return Err(RunError::input("--iters must be at least 2"));
            }
            let lengths = growth_lengths(&f.product(), &seed, flags.iters)?;
            let r = ratio(&lengths[flags.iters], &lengths[flags.iters - 1]);
            let z = z_from_stretch(r).ok();
            json!({
                "seed": TwistExpr::from_curve(&seed).to_string(),
                "growth_rate": r,
                "lengths": lengths.iter().map(big).collect::<Vec<_>>(),
                "z": z,
                "stretch_from_z": z.and_then(|z| stretch_from_z(z).ok()),
            })
        }
        Command::Invariants => invariants_json(&h1(&f)),
        Command::Family(args) => {
            let (g, results) = family_program(program, args)?;
            f = g;
            results
        }
    };
    let mut doc = Map::new();
    doc.insert("command".into(), program.command.to_string().into());
    doc.insert("surface".into(), n.into());
    doc.insert(
        "inputs".into(),
        json!({
            "program": program.to_string().trim_end(),
            "factors": factors_json(&f),
            "archive": archive_json(&f),
        }),
    );
    doc.insert("results".into(), results);
    doc.insert(
        "bounds_used".into(),
        json!({
            "bound": flags.bound,
            "dedupe_bound": flags.dedupe_bound,
            "iters": flags.iters,
            "seed_set": flags.seed_set,
            "ceiling": flags.ceiling,
        }),
    );
    doc.insert("timing".into(), json!({ "counters": counters }));
    Ok(Value::Object(doc))
}

fn pairwise_disjoint(sets: &[&[usize]]) -> bool {
    sets.iter().enumerate().all(|(i, a)| sets[i + 1..].iter().all(|b| a.iter().all(|x| !b.contains(x))))
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn render_json(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("values always serialize");
    s.push('\n');
    s
}

/// One `path<TAB>value` line per JSON leaf, in key order.
pub fn render_tsv(doc: &Value) -> String {
    fn walk(v: &Value, path: &str, out: &mut String) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    walk(x, &join(path, k), out);
                }
            }
            Value::Array(a) if !a.is_empty() => {
                for (i, x) in a.iter().enumerate() {
                    walk(x, &join(path, &i.to_string()), out);
                }
            }
            Value::String(s) => out.push_str(&format!("{path}\t{s}\n")),
            other => out.push_str(&format!("{path}\t{other}\n")),
        }
    }
    fn join(a: &str, b: &str) -> String {
        if a.is_empty() {
            b.to_string()
        } else {
            format!("{a}.{b}")
        }
    }
    let mut out = String::new();
    walk(doc, "", &mut out);
    out
}

pub fn render(doc: &Value, format: Format) -> String {
    match format {
        Format::Json => render_json(doc),
        Format::Tsv => render_tsv(doc),
    }
}
