//! Ring-class predicates with deterministic witnesses.
//!
//! The six unit conditions all have the shape "for every unit `u`,
//! `u^k - 1` lies in `T`" for `k ∈ {1, 2}` and `T ∈ {N(R), J(R), √J(R)}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::constructions::quotient;
use crate::limits::Limits;
use crate::ring::{ElementSet, FiniteRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RingClass {
    UU,
    UJ,
    TwoUU,
    TwoUJ,
    SqrtJU,
    TwoSqrtJU,
    Division,
    Local,
    Semisimple,
    DedekindFinite,
}

impl RingClass {
    pub const ALL: [RingClass; 10] = [
        RingClass::UU,
        RingClass::UJ,
        RingClass::TwoUU,
        RingClass::TwoUJ,
        RingClass::SqrtJU,
        RingClass::TwoSqrtJU,
        RingClass::Division,
        RingClass::Local,
        RingClass::Semisimple,
        RingClass::DedekindFinite,
    ];

    /// Human-readable name.
    pub fn name(self) -> &'static str {
        match self {
            RingClass::UU => "UU",
            RingClass::UJ => "UJ",
            RingClass::TwoUU => "2-UU",
            RingClass::TwoUJ => "2-UJ",
            RingClass::SqrtJU => "√JU",
            RingClass::TwoSqrtJU => "2-√JU",
            RingClass::Division => "division",
            RingClass::Local => "local",
            RingClass::Semisimple => "semisimple",
            RingClass::DedekindFinite => "dedekind-finite",
        }
    }

    /// Key used in JSON output.
    pub fn key(self) -> &'static str {
        match self {
            RingClass::UU => "UU",
            RingClass::UJ => "UJ",
            RingClass::TwoUU => "2UU",
            RingClass::TwoUJ => "2UJ",
            RingClass::SqrtJU => "sqrtJU",
            RingClass::TwoSqrtJU => "2sqrtJU",
            RingClass::Division => "division",
            RingClass::Local => "local",
            RingClass::Semisimple => "semisimple",
            RingClass::DedekindFinite => "dedekindFinite",
        }
    }

    /// The `(power, target)` pair for the six unit conditions.
    pub fn unit_condition(self) -> Option<(UnitPower, UnitTarget)> {
        use UnitPower::*;
        use UnitTarget::*;
        match self {
            RingClass::UU => Some((One, Nilpotents)),
            RingClass::UJ => Some((One, Jacobson)),
            RingClass::TwoUU => Some((Two, Nilpotents)),
            RingClass::TwoUJ => Some((Two, Jacobson)),
            RingClass::SqrtJU => Some((One, SqrtJacobson)),
            RingClass::TwoSqrtJU => Some((Two, SqrtJacobson)),
            _ => None,
        }
    }
}

impl fmt::Display for RingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitPower {
    One,
    Two,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitTarget {
    Nilpotents,
    Jacobson,
    SqrtJacobson,
}

impl UnitTarget {
    fn set(self, r: &FiniteRing) -> &ElementSet {
        match self {
            UnitTarget::Nilpotents => r.nilpotents(),
            UnitTarget::Jacobson => r.jacobson(),
            UnitTarget::SqrtJacobson => r.sqrt_jacobson(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Element(usize),
    Pair(usize, usize),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Element(x) => write!(f, "{x}"),
            Witness::Pair(a, b) => write!(f, "({a}, {b})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn from_witness(witness: Option<Witness>) -> Verdict {
        Verdict {
            holds: witness.is_none(),
            witness,
        }
    }
}

/// For every unit `u`, is `u^power - 1` in `target`? On failure the witness
/// is the smallest failing unit.
pub fn check_unit_class(r: &FiniteRing, power: UnitPower, target: UnitTarget) -> Verdict {
    let set = target.set(r);
    let one = r.one();
    let failing = r.units().iter().find(|&u| {
        let p = match power {
            UnitPower::One => u,
            UnitPower::Two => r.mul(u, u),
        };
        !set.contains(r.sub(p, one))
    });
    Verdict::from_witness(failing.map(Witness::Element))
}

/// Shorthand for the 2-√JU condition.
pub fn is_two_sqrt_ju(r: &FiniteRing) -> bool {
    check_unit_class(r, UnitPower::Two, UnitTarget::SqrtJacobson).holds
}

/// Every nonzero element is a unit. Witness: smallest nonzero non-unit.
pub fn is_division(r: &FiniteRing) -> Verdict {
    let units = r.units();
    Verdict::from_witness(
        (1..r.order())
            .find(|&x| !units.contains(x))
            .map(Witness::Element),
    )
}

/// `R/J(R)` is a division ring. Witness: smallest element whose image in
/// `R/J(R)` is a nonzero non-unit.
pub fn is_local(r: &FiniteRing) -> Verdict {
    let limits = Limits::default().with_max_order(usize::MAX);
    let (q, proj) = quotient(r, r.jacobson(), &limits).expect("J(R) is an ideal");
    let q_units = q.units();
    let failing = (0..r.order()).find(|&x| proj[x] != 0 && !q_units.contains(proj[x]));
    Verdict::from_witness(failing.map(Witness::Element))
}

/// `J(R) = 0`, which characterizes semisimplicity for finite (hence
/// Artinian) rings. Witness: smallest nonzero element of `J(R)`.
pub fn is_semisimple(r: &FiniteRing) -> Verdict {
    Verdict::from_witness(r.jacobson().iter().find(|&x| x != 0).map(Witness::Element))
}

/// Exhaustive pair scan: `a·b = 1` implies `b·a = 1`. Always true for finite
/// rings. Witness: the first offending pair.
pub fn is_dedekind_finite(r: &FiniteRing) -> Verdict {
    let n = r.order();
    let one = r.one();
    let failing = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| r.mul(a, b) == one && r.mul(b, a) != one);
    Verdict::from_witness(failing.map(|(a, b)| Witness::Pair(a, b)))
}

pub fn verdict(r: &FiniteRing, class: RingClass) -> Verdict {
    if let Some((power, target)) = class.unit_condition() {
        return check_unit_class(r, power, target);
    }
    match class {
        RingClass::Division => is_division(r),
        RingClass::Local => is_local(r),
        RingClass::Semisimple => is_semisimple(r),
        RingClass::DedekindFinite => is_dedekind_finite(r),
        _ => unreachable!(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub label: String,
    pub verdicts: BTreeMap<RingClass, Verdict>,
}

impl ClassReport {
    pub fn holds(&self, class: RingClass) -> bool {
        self.verdicts[&class].holds
    }

    pub fn witness(&self, class: RingClass) -> Option<Witness> {
        self.verdicts[&class].witness
    }

    /// Implications that must hold between verdicts; returns the first
    /// violated one.
    pub fn implication_violation(&self) -> Option<&'static str> {
        use RingClass::*;
        let h = |c| self.holds(c);
        let rules: [(&str, bool); 8] = [
            ("√JU ⇒ 2-√JU", !h(SqrtJU) || h(TwoSqrtJU)),
            ("UU ⇒ √JU", !h(UU) || h(SqrtJU)),
            ("UJ ⇒ √JU", !h(UJ) || h(SqrtJU)),
            ("2-UU ⇒ 2-√JU", !h(TwoUU) || h(TwoSqrtJU)),
            ("2-UJ ⇒ 2-√JU", !h(TwoUJ) || h(TwoSqrtJU)),
            ("division ⇒ local", !h(Division) || h(Local)),
            (
                "local ⇒ (semisimple ⇔ division)",
                !h(Local) || h(Semisimple) == h(Division),
            ),
            ("finite ⇒ dedekind-finite", h(DedekindFinite)),
        ];
        rules.iter().find(|(_, ok)| !ok).map(|(name, _)| *name)
    }
}

pub fn classify(r: &FiniteRing) -> ClassReport {
    ClassReport {
        label: r.label().to_string(),
        verdicts: RingClass::ALL.iter().map(|&c| (c, verdict(r, c))).collect(),
    }
}
