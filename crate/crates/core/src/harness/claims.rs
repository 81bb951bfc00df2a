use std::collections::HashSet;
use std::fmt;
use std::time::Instant;

use serde::{Serialize, Serializer};

use super::checks::{
    bt_isomorphism, describe, matrix_witness, te_formulas, three_in_jacobson, two_in_jacobson,
    two_sqrt_ju,
};
use super::corpus::{Corpus, CorpusEntry};
use crate::classes::{check_unit_class, is_division, is_local, UnitPower, UnitTarget};
use crate::constructions::{
    bt, corner, gf, group_ring, group_ring_embedding, poly_quotient, product, quotient,
    subring_closure, trivial_extension, upper_triangular, zmod,
};
use crate::error::{Error, Result};
use crate::expr::{evaluate, evaluate_group, parse, RingExpr};
use crate::limits::Limits;
use crate::ring::FiniteRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
    C11,
    C12,
    C13,
    C14,
    C15,
    C16,
    C17,
    C18,
    C19,
}

use ClaimId::*;

impl ClaimId {
    pub const ALL: [ClaimId; 19] = [
        C1, C2, C3, C4, C5, C6, C7, C8, C9, C10, C11, C12, C13, C14, C15, C16, C17, C18, C19,
    ];

    pub fn code(self) -> &'static str {
        match self {
            C1 => "C1",
            C2 => "C2",
            C3 => "C3",
            C4 => "C4",
            C5 => "C5",
            C6 => "C6",
            C7 => "C7",
            C8 => "C8",
            C9 => "C9",
            C10 => "C10",
            C11 => "C11",
            C12 => "C12",
            C13 => "C13",
            C14 => "C14",
            C15 => "C15",
            C16 => "C16",
            C17 => "C17",
            C18 => "C18",
            C19 => "C19",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            C1 => "sqrt-basic",
            C2 => "quotient-iff",
            C3 => "product-iff",
            C4 => "corner",
            C5 => "unit-closed-subring",
            C6 => "division-char",
            C7 => "local-char",
            C8 => "semisimple-char",
            C9 => "sqrtju-iff",
            C10 => "nilext-iff",
            C11 => "unit-square-sum",
            C12 => "central-sqrtj",
            C13 => "matrix-never",
            C14 => "te-iff",
            C15 => "tri-implies",
            C16 => "bt-iff",
            C17 => "groupring-implies",
            C18 => "two-group",
            C19 => "locally-finite-2group",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            C1 => "U ∩ √J = ∅, √J ∩ Id = {0}, and x^k ∈ √J ⇒ x ∈ √J",
            C2 => "for an ideal I ⊆ J(R): R is 2-√JU iff R/I is",
            C3 => "R1 x R2 is 2-√JU iff R1 and R2 are",
            C4 => "R 2-√JU ⇒ eRe 2-√JU for every nonzero idempotent e",
            C5 => "R 2-√JU ⇒ every unit-closed subring is 2-√JU",
            C6 => "a division ring is 2-√JU iff it has 2 or 3 elements",
            C7 => "a local ring is 2-√JU iff |R/J(R)| ∈ {2, 3}",
            C8 => "a product of fields is 2-√JU iff every factor is F2 or F3",
            C9 => "R is √JU iff R is 2-√JU and 2 ∈ J(R)",
            C10 => "R is 2-√JU iff R[x]/(x^p) is",
            C11 => "R 2-√JU ⇒ u² + v ≠ 1 for all units u, v",
            C12 => "√J ∩ C ⊆ J",
            C13 => "M(2, R) is never 2-√JU",
            C14 => "R is 2-√JU iff T(R, R) is; unit and radical formulas for T(R, R)",
            C15 => "UT(n, R) 2-√JU ⇒ R 2-√JU",
            C16 => "R is 2-√JU iff BT(R) is; R[x, y]/(x², y²) ≅ BT(R) for commutative R",
            C17 => "RG 2-√JU ⇒ R 2-√JU and RH 2-√JU for every subgroup H",
            C18 => "2 ∈ J(R) and G not a 2-group ⇒ RG not 2-√JU",
            C19 => "R 2-√JU, 3 ∈ J(R), G a 2-group ⇒ RG 2-√JU",
        }
    }

    /// The instances the claim is checked on.
    pub fn domain(self) -> &'static str {
        match self {
            C1 => "every corpus ring, all elements, k ∈ {2, 3, 4}",
            C2 => "every corpus ring; I ranges over the ideals generated by one element of J(R), plus J(R)",
            C3 => "unordered corpus pairs (repeats allowed) with |R1|·|R2| ≤ 256",
            C4 => "2-√JU corpus rings, every nonzero idempotent",
            C5 => "2-√JU corpus rings; subrings generated by a single element",
            C6 => "division rings of the corpus plus GF(2, 3) and GF(5, 2)",
            C7 => "local corpus rings",
            C8 => "products of 1 to 3 factors from {Z/2, Z/3, GF(2, 2), Z/5}",
            C9 => "every corpus ring",
            C10 => "corpus rings with |R|^p ≤ 1024, p ∈ {2, 3}",
            C11 => "2-√JU corpus rings, all unit pairs",
            C12 => "every corpus ring",
            C13 => "R ∈ {Z/2, Z/3, Z/4}; the witness rows (1, 1), (1, 0)",
            C14 => "corpus rings with |R|² ≤ 1024 and corpus TE rings; formulas on TE over Z/2, Z/3, Z/4, Z/9, M(2, Z/2)",
            C15 => "corpus UT rings, UT(2, R) for |R|³ ≤ 1024, UT(3, R) for |R|⁶ ≤ 1024",
            C16 => "corpus rings with |R|⁴ ≤ 1024 and corpus BT rings; isomorphism on the commutative ones",
            C17 => "corpus group rings and every subgroup of their group",
            C18 => "GR(Z/4, C3), GR(Z/2, C3), GR(Z/2, S3) and corpus group rings meeting the hypothesis",
            C19 => "GR(Z/9, C2), GR(Z/3, C2), GR(Z/9, C2 x C2) and corpus group rings meeting the hypothesis",
        }
    }

    /// Accepts `C13`, `c13` or the claim name `matrix-never`.
    pub fn parse(text: &str) -> Result<ClaimId> {
        let t = text.trim();
        ClaimId::ALL
            .into_iter()
            .find(|c| c.code().eq_ignore_ascii_case(t) || c.name().eq_ignore_ascii_case(t))
            .ok_or_else(|| Error::UnknownClaim(t.to_string()))
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl Serialize for ClaimId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.code())
    }
}

/// A claim that is not checked, with the reason.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SkippedClaim {
    pub id: &'static str,
    pub reason: &'static str,
}

pub const SKIPPED: [SkippedClaim; 2] = [
    SkippedClaim {
        id: "C-torsion",
        reason: "torsion theorem: concerns infinite torsion groups, outside finite computation",
    },
    SkippedClaim {
        id: "C-powerseries",
        reason: "power-series lemma: R[[t]] and R[[x; α]] are infinite rings",
    },
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub rings: Vec<String>,
    pub holds: bool,
    /// Witness on failure, a short account of what was compared otherwise.
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimResult {
    pub id: ClaimId,
    pub name: &'static str,
    pub statement: &'static str,
    pub domain: &'static str,
    pub passed: bool,
    pub instances: Vec<Instance>,
    pub notes: Vec<String>,
    pub elapsed_ms: f64,
}

impl ClaimResult {
    pub fn failures(&self) -> impl Iterator<Item = &Instance> {
        self.instances.iter().filter(|i| !i.holds)
    }

    pub fn summary(&self) -> String {
        if self.passed {
            format!(
                "no counterexample found over {} instances",
                self.instances.len()
            )
        } else {
            format!(
                "{} counterexamples among {} instances",
                self.failures().count(),
                self.instances.len()
            )
        }
    }
}

struct Ctx<'a> {
    limits: &'a Limits,
    instances: Vec<Instance>,
    notes: Vec<String>,
    unbuilt: Vec<String>,
}

impl Ctx<'_> {
    fn record(&mut self, rings: Vec<String>, holds: bool, detail: String) {
        self.instances.push(Instance {
            rings,
            holds,
            detail,
        });
    }

    /// Derived rings that cannot be built under the limits are noted, not failed.
    fn built<T>(&mut self, what: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(r) => Some(r),
            Err(e) => {
                self.unbuilt.push(format!("{what}: {e}"));
                None
            }
        }
    }

    fn eval(&mut self, text: &str) -> Option<FiniteRing> {
        let r = parse(text)
            .map_err(Error::from)
            .and_then(|e| evaluate(&e, self.limits));
        self.built(text, r)
    }

    fn eval_expr(&mut self, e: &RingExpr) -> Option<FiniteRing> {
        let r = evaluate(e, self.limits);
        self.built(&e.to_string(), r)
    }
}

fn label(r: &FiniteRing) -> String {
    r.label().to_string()
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Evaluates one claim over the corpus and the rings it derives from it.
pub fn run_claim(id: ClaimId, corpus: &Corpus, limits: &Limits) -> ClaimResult {
    let start = Instant::now();
    let mut ctx = Ctx {
        limits,
        instances: Vec::new(),
        notes: Vec::new(),
        unbuilt: Vec::new(),
    };
    let entries = corpus.entries();
    match id {
        C1 => c1(&mut ctx, entries),
        C2 => c2(&mut ctx, entries),
        C3 => c3(&mut ctx, entries),
        C4 => c4(&mut ctx, entries),
        C5 => c5(&mut ctx, entries),
        C6 => c6(&mut ctx, entries),
        C7 => c7(&mut ctx, entries),
        C8 => c8(&mut ctx),
        C9 => c9(&mut ctx, entries),
        C10 => c10(&mut ctx, entries),
        C11 => c11(&mut ctx, entries),
        C12 => c12(&mut ctx, entries),
        C13 => c13(&mut ctx),
        C14 => c14(&mut ctx, entries),
        C15 => c15(&mut ctx, entries),
        C16 => c16(&mut ctx, entries),
        C17 => c17(&mut ctx, entries),
        C18 => c18(&mut ctx, entries),
        C19 => c19(&mut ctx, entries),
    }
    let Ctx {
        instances,
        mut notes,
        unbuilt,
        ..
    } = ctx;
    if !unbuilt.is_empty() {
        notes.push(format!(
            "{} derived rings were not built and are not counted: {}",
            unbuilt.len(),
            unbuilt.join("; ")
        ));
    }
    ClaimResult {
        id,
        name: id.name(),
        statement: id.statement(),
        domain: id.domain(),
        passed: instances.iter().all(|i| i.holds),
        instances,
        notes,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn c1(ctx: &mut Ctx, entries: &[CorpusEntry]) {
    for e in entries {
        let r = &e.ring;
        let sj = r.sqrt_jacobson();
        let unit_in_sj = r.units().iter().find(|&u| sj.contains(u));
        let idem_in_sj = r.idempotents().iter().find(|&x| x != 0 && sj.contains(x));
        let root = (0..r.order()).find_map(|x| {
            let mut p = x;
            (2..=4u32).find_map(|k| {
                p = r.mul(p, x);
                (sj.contains(p) && !sj.contains(x)).then_some((x, k))
            })
        });
        let detail = match (unit_in_sj, idem_in_sj, root) {
            (Some(u), _, _) => format!("unit {u} lies in √J"),
            (_, Some(x), _) => format!("nonzero idempotent {x} lies in √J"),
            (_, _, Some((x, k))) => format!("{x}^{k} ∈ √J but {x} ∉ √J"),
            _ => format!(
                "|U| = {}, |√J| = {}, |Id| = {}",
                r.units().len(),
                sj.len(),
                r.idempotents().len()
            ),
        };
        let holds = unit_in_sj.is_none() && idem_in_sj.is_none() && root.is_none();
        ctx.record(vec![label(r)], holds, detail);
    }
}

fn c2(ctx: &mut Ctx, entries: &[CorpusEntry]) {
    for e in entries {
        let r = &e.ring;
        let v = two_sqrt_ju(r);
        let j = r.jacobson();
        let mut seen = HashSet::new();
        let mut ideals = Vec::new();
        for g in j.iter() {
            let i = r.ideal_closure(&[g]);
            if seen.insert(i.members().to_vec()) {
                let name = if i == *j {
                    format!("({g}) = J(R)")
                } else {
                    format!("({g})")
                };
                ideals.push((name, i));
            }
        }
        if seen.insert(j.members().to_vec()) {
            ideals.push(("J(R)".to_string(), j.clone()));
        }
        for (name, ideal) in ideals {
            let what = format!("{} / {name}", r.label());
            let q = quotient(r, &ideal, ctx.limits).map(|(q, _)| q);
            let Some(q) = ctx.built(&what, q) else {
                continue;
            };
            let w = two_sqrt_ju(&q);
            ctx.record(
                vec![label(r), what],
                v.holds == w.holds,
                format!(
                    "I = {name} of size {}: R {}, R/I {}",
                    ideal.len(),
                    describe(&v),
                    describe(&w)
                ),
            );
        }
    }
}

fn c3(ctx: &mut Ctx, entries: &[CorpusEntry]) {
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[i..] {
            let (a, b) = (&a.ring, &b.ring);
            if a.order() * b.order() > 256 {
                continue;
            }
            let p = product(a, b, ctx.limits);
            let Some(p) = ctx.built(&format!("{} x {}", a.label(), b.label()), p) else {
                continue;
            };
            let (va, vb, vp) = (two_sqrt_ju(a), two_sqrt_ju(b), two_sqrt_ju(&p));
            ctx.record(
                vec![label(&p)],
                vp.holds == (va.holds && vb.holds),
                format!(
                    "product {}; factors {} and {}",
                    describe(&vp),
                    describe(&va),
                    describe(&vb)
                ),
            );
        }
    }
}

fn c4(ctx: &mut Ctx, entries: &[CorpusEntry]) {
    for e in entries {
        let r = &e.ring;
        if !two_sqrt_ju(r).holds {
            continue;
        }
        for idem in r.idempotents().iter().filter(|&x| x != 0) {
            let c = corner(r, idem, ctx.limits).map(|(c, _)| c);
            let Some(c) = ctx.built(&format!("CORNER({}, {idem})", r.label()), c) else {
                continue;
            };
            let v = two_sqrt_ju(&c);
            ctx.record(
                vec![label(r), label(&c)],
                v.holds,
                format!(
                    "e = {idem}, corner of order {}: {}",
                    c.order(),
                    describe(&v)
                ),
            );
        }
    }
}

fn c5(ctx: &mut Ctx, entries: &[CorpusEntry]) {
    for e in entries {
        let r = &e.ring;
        if !two_sqrt_ju(r).holds {
            continue;
        }
        let mut seen = HashSet::new();
        for g in 0..r.order() {
            let s = subring_closure(r, &[g], ctx.limits);
            let Some((s, emb)) = ctx.built(&format!("subring of {} on {g}", r.label()), s) else {
                continue;
            };
            let mut key = emb.clone();
            key.sort_unstable();
            if !seen.insert(key) {
                continue;
            }
            let unit_closed = r.is_unit_closed_subring(&s, &emb);
            let v = two_sqrt_ju(&s);
            let holds = !unit_closed || v.holds;
            let detail = match (unit_closed, v.witness) {
                (false, _) => format!("order {}, not unit-closed", s.order()),
                (true, None) => format!("order {}, unit-closed, 2-√JU", s.order()),
                (true, Some(w)) => format!(
                    "order {}, unit-closed, unit {} of R fails",
                    s.order(),
                    emb[match w {
                        crate::classes::Witness::Element(x) => x,
                        crate::classes::Witness::Pair(x, _) => x,
                    }]
                ),
            };
            ctx.record(
                vec![label(r), format!("subring generated by {g}")],
                holds,
                detail,
            );
        }
    }
}

fn c6(ctx: &mut Ctx, entries: &[CorpusEntry]) {
    let mut rings: Vec<FiniteRing> = entries
        .iter()
        .map(|e| e.ring.clone())
        .filter(|r| is_division(r).holds)
        .collect();
    for (p, k) in [(2, 3), (5, 2)] {
        if let Some(r) = ctx.built(&format!("GF({p}, {k})"), gf(p, k, ctx.limits)) {
            rings.push(r);
        }
    }
    let mut seen = HashSet::new();
    for r in rings.iter().filter(|r| seen.insert(label(r))) {
        let v = two_sqrt_ju(r);
        let small = matches!(r.order(), 2 | 3);
        ctx.record(
            vec![label(r)],
            v.holds == small,
            format!("order {}: {}", r.order(), describe(&v)),
        );
    }
}

fn c7(ctx: &mut Ctx, entries: &[CorpusEntry]) {
    for e in entries.iter().filter(|e| is_local(&e.ring).holds) {
        let r = &e.ring;
        let residue = r.order() / r.jacobson().len();
        let v = two_sqrt_ju(r);
        ctx.record(
            vec![label(r)],
            v.holds == matches!(residue, 2 | 3),
            format!("|R/J| = {residue}: {}", describe(&v)),
        );
    }
}

fn c8(ctx: &mut Ctx) {
    let l = *ctx.limits;
    let fields: Vec<(FiniteRing, bool)> = [
        (zmod(2, &l), true),
        (zmod(3, &l), true),
        (gf(2, 2, &l), false),
        (zmod(5, &l), false),
    ]
    .into_iter()
    .map(|(r, small)| (r.expect("fields of order at most 5"), small))
    .collect();
    let mut multisets: Vec<Vec<usize>> = Vec::new();
    for a in 0..4 {
        multisets.push(vec![a]);
        for b in a..4 {
            multisets.push(vec![a, b]);
            for c in b..4 {
                multisets.push(vec![a, b, c]);
            }
        }
    }
    multisets.sort_by_key(|m| m.len());
    for m in multisets {
        // build right-nested so labels read `A x B x C`
        let mut ring = Ok(fields[*m.last().unwrap()].0.clone());
        for &i in m.iter().rev().skip(1) {
            ring = ring.and_then(|r| product(&fields[i].0, &r, &l));
        }
        let names: Vec<&str> = m.iter().map(|&i| fields[i].0.label()).collect();
        let Some(r) = ctx.built(&names.join(" x "), ring) else {
            continue;
        };
        let expected = m.iter().all(|&i| fields[i].1);
        let v = two_sqrt_ju(&r);
        ctx.record(
            vec![label(&r)],
            v.holds == expected,
            format!("expected 2-√JU: {}; got {}", flag(expected), describe(&v)),
        );
    }
}

fn c9(ctx: &mut Ctx, entries: &[CorpusEntry]) {
    for e in entries {
        let r = &e.ring;
        let sqrt_ju = check_unit_class(r, UnitPower::One, UnitTarget::SqrtJacobson);
        let v = two_sqrt_ju(r);
        let two = two_in_jacobson(r);
        ctx.record(
            vec![label(r)],
            sqrt_ju.holds == (v.holds && two),
            format!(
                "√JU: {}; 2-√JU: {}; 2 ∈ J: {}",
                flag(sqrt_ju.holds),
                flag(v.holds),
                flag(two)
            ),
        );
    }
}

fn c10(ctx: &mut Ctx, entries: &[CorpusEntry]) {
    for p in [2usize, 3] {
        for e in entries {
            let r = &e.ring;
            if r.order().checked_pow(p as u32).is_none_or(|o| o > 1024) {
                continue;
            }
            let mut modulus = vec![0; p];
            modulus.push(r.one());
            let what = format!("NIL({}, {p})", r.label());
            let ext = poly_quotient(r, &modulus, ctx.limits).map(|x| x.with_label(what.clone()));
            let Some(ext) = ctx.built(&what, ext) else {
                continue;
            };
            let (v, w) = (two_sqrt_ju(r), two_sqrt_ju(&ext));
            ctx.record(
                vec![label(r), what],
                v.holds == w.holds,
                format!("R {}, R[x]/(x^{p}) {}", describe(&v), describe(&w)),
            );
        }
    }
}

fn c11(ctx: &mut Ctx, entries: &[CorpusEntry]) {
    for e in entries {
        let r = &e.ring;
        if !two_sqrt_ju(r).holds {
            continue;
        }
        let units = r.units();
        let one = r.one();
        let hit = units.iter().find_map(|u| {
            let sq = r.mul(u, u);
            units.iter().find(|&v| r.add(sq, v) == one).map(|v| (u, v))
        });
        let detail = match hit {
            Some((u, v)) => format!("u = {u}, v = {v} give u² + v = 1"),
            None => format!("{} unit pairs", units.len() * units.len()),
        };
        ctx.record(vec![label(r)], hit.is_none(), detail);
    }
}

fn c12(ctx: &mut Ctx, entries: &[CorpusEntry]) {
    for e in entries {
        let r = &e.ring;
        let central_roots = r.sqrt_jacobson().intersection(r.center());
        let bad = central_roots.iter().find(|&x| !r.jacobson().contains(x));
        let detail = match bad {
            Some(x) => format!("{x} is central and in √J but not in J"),
            None => format!(
                "|√J ∩ C| = {}, |J| = {}",
                central_roots.len(),
                r.jacobson().len()
            ),
        };
        ctx.record(vec![label(r)], bad.is_none(), detail);
    }
}

fn c13(ctx: &mut Ctx) {
    for n in [2, 3, 4] {
        let base = zmod(n, ctx.limits).expect("small modulus");
        let w = match matrix_witness(&base, ctx.limits) {
            Ok(w) => w,
            Err(e) => {
                ctx.unbuilt.push(format!("M(2, Z/{n}): {e}"));
                continue;
            }
        };
        let holds =
            !w.verdict.holds && w.is_unit && w.square_minus_one_is_unit && w.fails_condition;
        let first = w
            .verdict
            .witness
            .map_or("none".to_string(), |x| x.to_string());
        ctx.record(
            vec![w.label.clone()],
            holds,
            format!(
                "A = {} (rows (1, 1), (1, 0)), A² = {}, A² - I = {} is {}a unit; first failing unit {first}",
                w.matrix,
                w.square,
                w.square_minus_one,
                if w.square_minus_one_is_unit { "" } else { "not " }
            ),
        );
    }
}

fn c14(ctx: &mut Ctx, entries: &[CorpusEntry]) {
    let mut pairs: Vec<(FiniteRing, FiniteRing)> = Vec::new();
    for e in entries {
        if e.ring.order() * e.ring.order() <= 1024 {
            let t = trivial_extension(&e.ring, ctx.limits);
            if let Some(t) = ctx.built(&format!("TE({})", e.label()), t) {
                pairs.push((e.ring.clone(), t));
            }
        }
        if let Some(RingExpr::TrivialExt(inner)) = &e.expr {
            if let Some(base) = ctx.eval_expr(inner) {
                pairs.push((base, e.ring.clone()));
            }
        }
    }
    let mut seen = HashSet::new();
    for (r, t) in pairs.iter().filter(|(_, t)| seen.insert(label(t))) {
        let (v, w) = (two_sqrt_ju(r), two_sqrt_ju(t));
        ctx.record(
            vec![label(r), label(t)],
            v.holds == w.holds,
            format!("R {}, T(R, R) {}", describe(&v), describe(&w)),
        );
    }

    let (mut literal, mut root, mut total) = (0, 0, 0);
    for text in ["Z/2", "Z/3", "Z/4", "Z/9", "M(2, Z/2)"] {
        let Some(base) = ctx.eval(text) else { continue };
        let f = match te_formulas(&base, ctx.limits) {
            Ok(f) => f,
            Err(e) => {
                ctx.unbuilt.push(format!("TE({text}): {e}"));
                continue;
            }
        };
        total += 1;
        literal += usize::from(f.sqrt_j_literal);
        root += usize::from(f.sqrt_j_root);
        ctx.record(
            vec![f.label.clone()],
            f.units,
            "U(T) = {(u, n) : u ∈ U(R)}".to_string(),
        );
        ctx.record(
            vec![f.label.clone()],
            f.jacobson,
            "J(T) = {(j, n) : j ∈ J(R)}".to_string(),
        );
        ctx.record(
            vec![f.label.clone()],
            f.sqrt_j_literal || f.sqrt_j_root,
            format!(
                "√J(T) = {{(z, n) : z ∈ J(R)}}: {}; √J(T) = {{(z, n) : z ∈ √J(R)}}: {}",
                if f.sqrt_j_literal { "holds" } else { "fails" },
                if f.sqrt_j_root { "holds" } else { "fails" }
            ),
        );
    }
    ctx.notes.push(format!(
        "√J formula: reading z ∈ √J(R) held on {root} of {total} rings, \
         reading z ∈ J(R) held on {literal} of {total}"
    ));
}

fn c15(ctx: &mut Ctx, entries: &[CorpusEntry]) {
    let mut pairs: Vec<(FiniteRing, FiniteRing)> = Vec::new();
    for e in entries {
        if let Some(RingExpr::UpperTri(m, inner)) = &e.expr {
            if matches!(m, 2 | 3) {
                if let Some(base) = ctx.eval_expr(inner) {
                    pairs.push((base, e.ring.clone()));
                }
            }
        }
        let o = e.ring.order();
        for (m, fits) in [
            (2, o.pow(3) <= 1024),
            (3, o.checked_pow(6).is_some_and(|x| x <= 1024)),
        ] {
            if fits {
                let ut = upper_triangular(m, &e.ring, ctx.limits);
                if let Some(ut) = ctx.built(&format!("UT({m}, {})", e.label()), ut) {
                    pairs.push((e.ring.clone(), ut));
                }
            }
        }
    }
    let mut seen = HashSet::new();
    for (r, ut) in pairs.iter().filter(|(_, t)| seen.insert(label(t))) {
        let (v, w) = (two_sqrt_ju(r), two_sqrt_ju(ut));
        ctx.record(
            vec![label(ut), label(r)],
            !w.holds || v.holds,
            format!("UT {}, R {}", describe(&w), describe(&v)),
        );
    }
}

fn c16(ctx: &mut Ctx, entries: &[CorpusEntry]) {
    let mut pairs: Vec<(FiniteRing, FiniteRing)> = Vec::new();
    for e in entries {
        if e.ring.order().pow(4) <= 1024 {
            let b = bt(&e.ring, ctx.limits);
            if let Some(b) = ctx.built(&format!("BT({})", e.label()), b) {
                pairs.push((e.ring.clone(), b));
            }
        }
        if let Some(RingExpr::Bt(inner)) = &e.expr {
            if let Some(base) = ctx.eval_expr(inner) {
                pairs.push((base, e.ring.clone()));
            }
        }
    }
    let mut seen = HashSet::new();
    for (r, b) in pairs.iter().filter(|(_, b)| seen.insert(label(b))) {
        let (v, w) = (two_sqrt_ju(r), two_sqrt_ju(b));
        ctx.record(
            vec![label(r), label(b)],
            v.holds == w.holds,
            format!("R {}, BT(R) {}", describe(&v), describe(&w)),
        );
    }

    let mut seen = HashSet::new();
    for e in entries {
        let r = &e.ring;
        if r.order().pow(4) > 1024 || !r.is_commutative() || !seen.insert(label(r)) {
            continue;
        }
        match bt_isomorphism(r, ctx.limits) {
            Ok(iso) => ctx.record(
                vec![format!("{}[x, y]/(x², y²)", r.label()), iso.label.clone()],
                iso.holds(),
                match iso.witness {
                    None => format!(
                        "coordinate map is a unital ring isomorphism on {} elements",
                        iso.order
                    ),
                    Some((a, b)) => format!(
                        "map fails at ({a}, {b}): additive {}, multiplicative {}",
                        flag(iso.additive),
                        flag(iso.multiplicative)
                    ),
                },
            ),
            Err(e) => ctx
                .unbuilt
                .push(format!("isomorphism for {}: {e}", r.label())),
        }
    }
}

fn c17(ctx: &mut Ctx, entries: &[CorpusEntry]) {
    for e in entries {
        let Some(RingExpr::GroupRing(inner, gexpr)) = &e.expr else {
            continue;
        };
        let Some(base) = ctx.eval_expr(inner) else {
            continue;
        };
        let group = match evaluate_group(gexpr, ctx.limits) {
            Ok(g) => g,
            Err(err) => {
                ctx.unbuilt.push(format!("{gexpr}: {err}"));
                continue;
            }
        };
        let rg = &e.ring;
        let (vg, vr) = (two_sqrt_ju(rg), two_sqrt_ju(&base));
        ctx.record(
            vec![label(rg), label(&base)],
            !vg.holds || vr.holds,
            format!("RG {}, R {}", describe(&vg), describe(&vr)),
        );
        for h in group.subgroups() {
            let members: Vec<String> = h.iter().map(|x| x.to_string()).collect();
            let name = format!("{{{}}} ≤ {}", members.join(", "), group.label());
            let rh = group
                .subgroup(&h, name.clone())
                .and_then(|sub| group_ring(&base, &sub, ctx.limits));
            let Some(rh) = ctx.built(&format!("GR({}, {name})", base.label()), rh) else {
                continue;
            };
            let emb = group_ring_embedding(base.order(), &h, group.order());
            let hom = (0..rh.order()).all(|a| {
                (0..rh.order()).all(|b| {
                    emb[rh.add(a, b)] == rg.add(emb[a], emb[b])
                        && emb[rh.mul(a, b)] == rg.mul(emb[a], emb[b])
                })
            }) && emb[rh.one()] == rg.one();
            let unit_closed = rg.is_unit_closed_subring(&rh, &emb);
            let vh = two_sqrt_ju(&rh);
            ctx.record(
                vec![label(rg), label(&rh)],
                hom && unit_closed && (!vg.holds || vh.holds),
                format!(
                    "embedding is a unital homomorphism: {}; unit-closed: {}; RH {}",
                    flag(hom),
                    flag(unit_closed),
                    describe(&vh)
                ),
            );
        }
    }
}

/// Corpus group rings `RG` with their base ring and group.
fn group_rings(
    ctx: &mut Ctx,
    entries: &[CorpusEntry],
) -> Vec<(FiniteRing, FiniteRing, crate::constructions::GroupTable)> {
    let mut out = Vec::new();
    for e in entries {
        if let Some(RingExpr::GroupRing(inner, gexpr)) = &e.expr {
            let base = ctx.eval_expr(inner);
            if let (Some(base), Ok(g)) = (base, evaluate_group(gexpr, ctx.limits)) {
                out.push((e.ring.clone(), base, g));
            }
        }
    }
    out
}

fn c18(ctx: &mut Ctx, entries: &[CorpusEntry]) {
    let mut rings: Vec<FiniteRing> = ["GR(Z/4, C3)", "GR(Z/2, C3)", "GR(Z/2, S3)"]
        .iter()
        .filter_map(|t| ctx.eval(t))
        .collect();
    for (rg, base, g) in group_rings(ctx, entries) {
        if two_in_jacobson(&base) && !g.is_two_group() {
            rings.push(rg);
        }
    }
    let mut seen = HashSet::new();
    for rg in rings.iter().filter(|r| seen.insert(label(r))) {
        let v = two_sqrt_ju(rg);
        ctx.record(vec![label(rg)], !v.holds, describe(&v));
    }
}

fn c19(ctx: &mut Ctx, entries: &[CorpusEntry]) {
    let mut rings: Vec<FiniteRing> = ["GR(Z/9, C2)", "GR(Z/3, C2)", "GR(Z/9, C2 x C2)"]
        .iter()
        .filter_map(|t| ctx.eval(t))
        .collect();
    for (rg, base, g) in group_rings(ctx, entries) {
        if g.is_two_group() && three_in_jacobson(&base) && two_sqrt_ju(&base).holds {
            rings.push(rg);
        }
    }
    let mut seen = HashSet::new();
    for rg in rings.iter().filter(|r| seen.insert(label(r))) {
        let v = two_sqrt_ju(rg);
        ctx.record(
            vec![label(rg)],
            v.holds,
            format!("order {}: {}", rg.order(), describe(&v)),
        );
    }
}
