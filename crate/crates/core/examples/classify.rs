//! Tabulate the ring-class predicates over a list of expressions.
//!
//!     cargo run --example classify -- "Z/8" "GF(4)" "UT(2, Z/3)"

use finring::expr::{evaluate, parse};
use finring::{classify, Limits, RingClass};

const DEFAULT: [&str; 8] = [
    "Z/8",
    "Z/10",
    "GF(2, 2)",
    "TE(Z/3)",
    "UT(2, Z/2)",
    "M(2, Z/2)",
    "GR(Z/2, C2 x C2)",
    "GR(Z/3, C4)",
];

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let exprs: Vec<String> = if args.is_empty() {
        DEFAULT.iter().map(|s| s.to_string()).collect()
    } else {
        args
    };
    print!("{:<20}", "ring");
    for c in RingClass::ALL {
        print!(" {:>6}", short(c));
    }
    println!();
    for text in &exprs {
        let ring = match parse(text)
            .map_err(finring::Error::from)
            .and_then(|e| evaluate(&e, &Limits::default()))
        {
            Ok(r) => r,
            Err(e) => {
                eprintln!("{text}: {e}");
                continue;
            }
        };
        let report = classify(&ring);
        print!("{:<20}", ring.label());
        for c in RingClass::ALL {
            let cell = match report.witness(c) {
                None => "yes".to_string(),
                Some(w) => w.to_string(),
            };
            print!(" {cell:>6}");
        }
        println!();
    }
    println!("(a number is the smallest failing unit or element)");
}

fn short(c: RingClass) -> &'static str {
    match c {
        RingClass::Division => "div",
        RingClass::Semisimple => "ss",
        RingClass::DedekindFinite => "df",
        other => other.name(),
    }
}
