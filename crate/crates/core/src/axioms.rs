//! Ring axiom verification, exhaustive for small rings and seeded sampling
//! of the three-variable axioms above [`EXHAUSTIVE_MAX_ORDER`].

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::ring::FiniteRing;

/// Largest order for which the O(n^3) axioms are checked on every triple.
pub const EXHAUSTIVE_MAX_ORDER: usize = 256;
/// Default seed for sampled checks: the ASCII bytes of "RING".
pub const DEFAULT_SEED: u64 = 0x5249_4E47;
pub const DEFAULT_SAMPLES: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckPolicy {
    /// Exhaustive at order <= 256, sampled above.
    Auto {
        seed: u64,
        samples: u64,
    },
    Exhaustive,
    Sampled {
        seed: u64,
        samples: u64,
    },
}

impl Default for CheckPolicy {
    fn default() -> Self {
        CheckPolicy::Auto {
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Axiom {
    OneNotZero,
    AddIdentity,
    AddInverse,
    AddCommutative,
    AddAssociative,
    MulIdentity,
    MulAssociative,
    LeftDistributive,
    RightDistributive,
}

impl Axiom {
    pub fn description(self) -> &'static str {
        match self {
            Axiom::OneNotZero => "one is distinct from zero",
            Axiom::AddIdentity => "zero is an additive identity",
            Axiom::AddInverse => "every element has an additive inverse",
            Axiom::AddCommutative => "addition is commutative",
            Axiom::AddAssociative => "addition is associative",
            Axiom::MulIdentity => "one is a two-sided multiplicative identity",
            Axiom::MulAssociative => "multiplication is associative",
            Axiom::LeftDistributive => "a(b + c) = ab + ac",
            Axiom::RightDistributive => "(a + b)c = ac + bc",
        }
    }

    fn is_ternary(self) -> bool {
        matches!(
            self,
            Axiom::AddAssociative
                | Axiom::MulAssociative
                | Axiom::LeftDistributive
                | Axiom::RightDistributive
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    /// Elements violating the axiom, in argument order.
    pub witness: Option<Vec<usize>>,
    pub cases_checked: u64,
    pub exhaustive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub label: String,
    pub order: usize,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "axioms for {} (order {})", self.label, self.order)?;
        for c in &self.checks {
            let mode = if c.exhaustive {
                "exhaustive"
            } else {
                "sampled"
            };
            match (&c.witness, c.passed) {
                (_, true) => writeln!(
                    f,
                    "  ok   {} [{mode}, {} cases]",
                    c.axiom.description(),
                    c.cases_checked
                )?,
                (Some(w), false) => {
                    writeln!(f, "  FAIL {} witness {:?}", c.axiom.description(), w)?
                }
                (None, false) => writeln!(f, "  FAIL {}", c.axiom.description())?,
            }
        }
        Ok(())
    }
}

fn ternary_holds(r: &FiniteRing, axiom: Axiom, a: usize, b: usize, c: usize) -> bool {
    match axiom {
        Axiom::AddAssociative => r.add(r.add(a, b), c) == r.add(a, r.add(b, c)),
        Axiom::MulAssociative => r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)),
        Axiom::LeftDistributive => r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)),
        Axiom::RightDistributive => r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c)),
        _ => unreachable!("not a ternary axiom"),
    }
}

fn check_low_arity(r: &FiniteRing, axiom: Axiom) -> AxiomCheck {
    let n = r.order();
    let one = r.one();
    let mut cases = 0u64;
    let mut witness = None;
    match axiom {
        Axiom::OneNotZero => {
            cases = 1;
            if one == r.zero() {
                witness = Some(vec![one]);
            }
        }
        Axiom::AddIdentity => {
            for x in 0..n {
                cases += 1;
                if r.add(0, x) != x || r.add(x, 0) != x {
                    witness = Some(vec![x]);
                    break;
                }
            }
        }
        Axiom::AddInverse => {
            for x in 0..n {
                cases += 1;
                let y = r.neg(x);
                if r.add(x, y) != 0 || r.add(y, x) != 0 {
                    witness = Some(vec![x]);
                    break;
                }
            }
        }
        Axiom::MulIdentity => {
            for x in 0..n {
                cases += 1;
                if r.mul(one, x) != x || r.mul(x, one) != x {
                    witness = Some(vec![x]);
                    break;
                }
            }
        }
        Axiom::AddCommutative => {
            'outer: for a in 0..n {
                for b in 0..n {
                    cases += 1;
                    if r.add(a, b) != r.add(b, a) {
                        witness = Some(vec![a, b]);
                        break 'outer;
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    AxiomCheck {
        axiom,
        passed: witness.is_none(),
        witness,
        cases_checked: cases,
        exhaustive: true,
    }
}

fn check_ternary(r: &FiniteRing, axiom: Axiom, sample: Option<(u64, u64)>) -> AxiomCheck {
    let n = r.order();
    let mut cases = 0u64;
    let mut witness = None;
    match sample {
        None => {
            'outer: for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        cases += 1;
                        if !ternary_holds(r, axiom, a, b, c) {
                            witness = Some(vec![a, b, c]);
                            break 'outer;
                        }
                    }
                }
            }
        }
        Some((seed, samples)) => {
            // One stream per axiom keeps the sampled triples independent of
            // which other axioms were requested.
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (axiom as u64).wrapping_mul(0x9E37));
            for _ in 0..samples {
                let (a, b, c) = (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                );
                cases += 1;
                if !ternary_holds(r, axiom, a, b, c) {
                    witness = Some(vec![a, b, c]);
                    break;
                }
            }
        }
    }
    AxiomCheck {
        axiom,
        passed: witness.is_none(),
        witness,
        cases_checked: cases,
        exhaustive: sample.is_none(),
    }
}

pub const ALL_AXIOMS: [Axiom; 9] = [
    Axiom::OneNotZero,
    Axiom::AddIdentity,
    Axiom::AddInverse,
    Axiom::AddCommutative,
    Axiom::AddAssociative,
    Axiom::MulIdentity,
    Axiom::MulAssociative,
    Axiom::LeftDistributive,
    Axiom::RightDistributive,
];

/// Checks every ring axiom under `policy`. Failures are reported, not raised.
pub fn verify_axioms(r: &FiniteRing, policy: CheckPolicy) -> AxiomReport {
    let sample = match policy {
        CheckPolicy::Exhaustive => None,
        CheckPolicy::Sampled { seed, samples } => Some((seed, samples)),
        CheckPolicy::Auto { seed, samples } => {
            (r.order() > EXHAUSTIVE_MAX_ORDER).then_some((seed, samples))
        }
    };
    let checks = ALL_AXIOMS
        .iter()
        .map(|&axiom| {
            if axiom.is_ternary() {
                check_ternary(r, axiom, sample)
            } else {
                check_low_arity(r, axiom)
            }
        })
        .collect();
    AxiomReport {
        label: r.label().to_string(),
        order: r.order(),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cyclic, group_ring, zmod};
    use crate::limits::Limits;

    #[test]
    fn zmod_passes() {
        let r = zmod(6, &Limits::default()).unwrap();
        let report = verify_axioms(&r, CheckPolicy::default());
        assert!(report.passed(), "{report}");
        assert!(report.checks.iter().all(|c| c.exhaustive));
    }

    #[test]
    fn corrupted_identity_is_caught() {
        let r = zmod(4, &Limits::default()).unwrap();
        let add: Vec<usize> = (0..16).map(|i| r.add(i / 4, i % 4)).collect();
        let mut mul: Vec<usize> = (0..16).map(|i| r.mul(i / 4, i % 4)).collect();
        mul[4 + 1] = 2;
        let bad = FiniteRing::from_tables("bad", 1, add, mul).unwrap();
        let report = verify_axioms(&bad, CheckPolicy::default());
        assert!(!report.passed());
        let fail = report
            .checks
            .iter()
            .find(|c| c.axiom == Axiom::MulIdentity)
            .unwrap();
        assert!(!fail.passed);
        assert_eq!(fail.witness, Some(vec![1]));
    }

    #[test]
    fn group_ring_passes() {
        let l = Limits::default();
        let r = group_ring(&zmod(4, &l).unwrap(), &cyclic(2, &l).unwrap(), &l).unwrap();
        assert_eq!(r.order(), 16);
        assert!(verify_axioms(&r, CheckPolicy::Exhaustive).passed());
    }

    #[test]
    fn sampling_is_reproducible() {
        let l = Limits::default();
        let r = zmod(300, &l).unwrap();
        let a = verify_axioms(&r, CheckPolicy::default());
        assert!(a.passed());
        assert!(a
            .checks
            .iter()
            .any(|c| !c.exhaustive && c.cases_checked == DEFAULT_SAMPLES));
        assert_eq!(a, verify_axioms(&r, CheckPolicy::default()));
    }
}
