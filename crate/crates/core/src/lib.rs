//! Finite rings given by explicit tables, the constructions used to build
//! them, structural analysis (units, Jacobson radical and its root, nilpotents,
//! idempotents, center) and predicates for the unit-condition ring classes.
//!
//! Rings are usually built from the expression language:
//!
//! ```
//! use finring::{expr, Limits, RingClass};
//!
//! let r = expr::evaluate(&expr::parse("M(2, Z/2)").unwrap(), &Limits::default()).unwrap();
//! assert_eq!(r.order(), 16);
//! assert_eq!(r.units().len(), 6);
//! let report = finring::classify(&r);
//! assert!(!report.holds(RingClass::TwoSqrtJU));
//! ```

pub mod analysis;
pub mod axioms;
pub mod constructions;
pub mod error;
pub mod expr;
pub mod limits;
pub mod ring;

mod classes;
pub mod cli;
pub mod harness;

pub use analysis::{is_ideal, Units};
pub use axioms::{verify_axioms, Axiom, AxiomCheck, AxiomReport, CheckPolicy, DEFAULT_SEED};
pub use classes::{
    check_unit_class, classify, is_dedekind_finite, is_division, is_local, is_semisimple,
    is_two_sqrt_ju, verdict, ClassReport, RingClass, UnitPower, UnitTarget, Verdict, Witness,
};
pub use error::{Error, Result};
pub use limits::Limits;
pub use ring::{ElementSet, FiniteRing, Mode, Structure};
