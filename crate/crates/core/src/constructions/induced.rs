//! Rings whose elements are represented by elements of a parent ring:
//! quotients, corners and generated subrings.

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::ring::{ElementSet, FiniteRing, Structure};

const NONE: u32 = u32::MAX;

struct Induced {
    parent: FiniteRing,
    reps: Vec<usize>,
    // parent index -> induced index, NONE outside the image
    to_sub: Vec<u32>,
    one: usize,
}

impl Induced {
    #[inline]
    fn lift(&self, p: usize) -> usize {
        let s = self.to_sub[p];
        debug_assert!(s != NONE, "parent element {p} is outside the induced ring");
        s as usize
    }
}

impl Structure for Induced {
    fn order(&self) -> usize {
        self.reps.len()
    }
    fn one(&self) -> usize {
        self.one
    }
    fn add(&self, a: usize, b: usize) -> usize {
        self.lift(self.parent.add(self.reps[a], self.reps[b]))
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        self.lift(self.parent.mul(self.reps[a], self.reps[b]))
    }
    fn neg(&self, a: usize) -> usize {
        self.lift(self.parent.neg(self.reps[a]))
    }
}

fn check_ideal(r: &FiniteRing, ideal: &ElementSet) -> Result<()> {
    if ideal.ring_order() != r.order() {
        return Err(Error::argument(
            "ideal belongs to a ring of different order",
        ));
    }
    let fail = |what: &str, a: usize, b: usize| {
        Err(Error::argument(format!(
            "not an ideal: {what} fails for ({a}, {b})"
        )))
    };
    if !ideal.contains(0) {
        return fail("0 ∈ I", 0, 0);
    }
    for a in ideal.iter() {
        for b in ideal.iter() {
            if !ideal.contains(r.sub(a, b)) {
                return fail("a - b ∈ I", a, b);
            }
        }
    }
    for x in 0..r.order() {
        for a in ideal.iter() {
            if !ideal.contains(r.mul(x, a)) {
                return fail("r·a ∈ I", x, a);
            }
            if !ideal.contains(r.mul(a, x)) {
                return fail("a·r ∈ I", a, x);
            }
        }
    }
    Ok(())
}

/// `R/I` for a two-sided ideal `I`. Each coset is represented by its smallest
/// member and cosets are numbered in increasing order of representative.
/// Returns the quotient and the projection `R -> R/I` on indices.
pub fn quotient(
    r: &FiniteRing,
    ideal: &ElementSet,
    limits: &Limits,
) -> Result<(FiniteRing, Vec<usize>)> {
    check_ideal(r, ideal)?;
    let n = r.order();
    let mut to_sub = vec![NONE; n];
    let mut reps = Vec::with_capacity(n / ideal.len());
    for x in 0..n {
        if to_sub[x] != NONE {
            continue;
        }
        let k = reps.len() as u32;
        reps.push(x);
        for i in ideal.iter() {
            to_sub[r.add(x, i)] = k;
        }
    }
    let one = to_sub[r.one()] as usize;
    let projection: Vec<usize> = to_sub.iter().map(|&s| s as usize).collect();
    let gens: Vec<String> = ideal.iter().map(|i| i.to_string()).collect();
    let label = format!("QUOT({}, [{}])", r.label(), gens.join(", "));
    let ring = FiniteRing::from_structure(
        label,
        Induced {
            parent: r.clone(),
            reps,
            to_sub,
            one,
        },
        limits,
    )?;
    Ok((ring, projection))
}

fn induced_on(
    r: &FiniteRing,
    members: Vec<usize>,
    one: usize,
    label: String,
    limits: &Limits,
) -> Result<(FiniteRing, Vec<usize>)> {
    let mut to_sub = vec![NONE; r.order()];
    for (i, &m) in members.iter().enumerate() {
        to_sub[m] = i as u32;
    }
    let one = to_sub[one] as usize;
    let ring = FiniteRing::from_structure(
        label,
        Induced {
            parent: r.clone(),
            reps: members.clone(),
            to_sub,
            one,
        },
        limits,
    )?;
    Ok((ring, members))
}

/// Corner ring `eRe` with identity `e`, plus the parent index of each element.
pub fn corner(r: &FiniteRing, e: usize, limits: &Limits) -> Result<(FiniteRing, Vec<usize>)> {
    if e >= r.order() {
        return Err(Error::argument(format!("index {e} out of range")));
    }
    if e == 0 || r.mul(e, e) != e {
        return Err(Error::argument(format!("{e} is not a nonzero idempotent")));
    }
    let mut members: Vec<usize> = (0..r.order()).map(|x| r.mul(r.mul(e, x), e)).collect();
    members.sort_unstable();
    members.dedup();
    let label = format!("CORNER({}, {e})", r.label());
    induced_on(r, members, e, label, limits)
}

/// Smallest subring containing `gens`, `0` and `1`, plus the parent index of
/// each element.
pub fn subring_closure(
    r: &FiniteRing,
    gens: &[usize],
    limits: &Limits,
) -> Result<(FiniteRing, Vec<usize>)> {
    if let Some(&bad) = gens.iter().find(|&&g| g >= r.order()) {
        return Err(Error::argument(format!("index {bad} out of range")));
    }
    let mut mask = vec![false; r.order()];
    let mut members: Vec<usize> = Vec::new();
    let mut queue: Vec<usize> = vec![0, r.one()];
    queue.extend_from_slice(gens);
    let mut processed = 0;
    loop {
        for x in queue.drain(..) {
            if !mask[x] {
                mask[x] = true;
                members.push(x);
            }
        }
        if processed == members.len() {
            break;
        }
        // each new element meets every member (older and newer) once
        while processed < members.len() {
            let a = members[processed];
            processed += 1;
            queue.push(r.neg(a));
            for &b in &members[..processed] {
                queue.push(r.add(a, b));
                queue.push(r.mul(a, b));
                queue.push(r.mul(b, a));
            }
        }
    }
    members.sort_unstable();
    let gen_labels: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    let label = format!("SUBRING({}, [{}])", r.label(), gen_labels.join(", "));
    induced_on(r, members, r.one(), label, limits)
}
